//! Example Coxeter systems given by their nerves.

use crate::coxeter::{CoxeterSystem, Label};
use crate::error::{Error, Result};

pub const CATALOG_NAMES: &[&str] = &[
    "example1(m,m')",
    "complete_bipartite(q,q',m)",
    "gl32_building(m)",
    "petersen(m)",
    "join_of_points(n1,...,nk)",
];

/// A named catalog system.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<u32>,
    pub system: CoxeterSystem,
}

fn check_label(m: u32) -> Result<Label> {
    if m < 2 {
        Err(Error::Invalid(format!("label {m} is below 2")))
    } else {
        Ok(Label::Finite(m))
    }
}

/// Builds a system on named vertices where `edges` get label `m` and every
/// other pair is infinite.
fn graph_system(names: Vec<String>, edges: &[(usize, usize)], labels: &[Label]) -> Result<CoxeterSystem> {
    let n = names.len();
    let mut matrix = vec![vec![Label::Infinite; n]; n];
    for (i, row) in matrix.iter_mut().enumerate() {
        row[i] = Label::Finite(1);
    }
    for (&(a, b), &m) in edges.iter().zip(labels) {
        matrix[a][b] = m;
        matrix[b][a] = m;
    }
    Ok(CoxeterSystem::new(names, matrix)?)
}

/// The five-generator system whose nerve is `K_{3,2}`: `s1,s2,s3` joined to
/// `s4` with label `m` and to `s5` with label `m'`.
pub fn example_one(m: u32, m2: u32) -> CoxeterSystem {
    try_example_one(m, m2).expect("labels must be at least 2")
}

fn try_example_one(m: u32, m2: u32) -> Result<CoxeterSystem> {
    let names = (1..=5).map(|i| format!("s{i}")).collect();
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for i in 0..3 {
        edges.push((i, 3));
        labels.push(check_label(m)?);
        edges.push((i, 4));
        labels.push(check_label(m2)?);
    }
    graph_system(names, &edges, &labels)
}

/// Nerve `K_{q,q'}` with vertices `a1..aq`, `b1..bq'` and all edges labelled `m`.
pub fn complete_bipartite(q: u32, q2: u32, m: u32) -> Result<CoxeterSystem> {
    if q == 0 || q2 == 0 {
        return Err(Error::Invalid("both sides must be nonempty".into()));
    }
    let mut names: Vec<String> = (1..=q).map(|i| format!("a{i}")).collect();
    names.extend((1..=q2).map(|i| format!("b{i}")));
    let q = q as usize;
    let edges: Vec<(usize, usize)> =
        (0..q).flat_map(|i| (0..q2 as usize).map(move |j| (i, q + j))).collect();
    let labels = vec![check_label(m)?; edges.len()];
    graph_system(names, &edges, &labels)
}

/// Petersen graph: outer 5-cycle `o0..o4`, inner pentagram `i0..i4`, spokes `oj—ij`.
pub fn petersen(m: u32) -> Result<CoxeterSystem> {
    let mut names: Vec<String> = (0..5).map(|i| format!("o{i}")).collect();
    names.extend((0..5).map(|i| format!("i{i}")));
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    let labels = vec![check_label(m)?; edges.len()];
    graph_system(names, &edges, &labels)
}

/// Nonzero vectors of `F_2^3`, encoded as bit masks `x + 2y + 4z`, in order 1..=7.
pub fn fano_vector(code: usize) -> [u8; 3] {
    [(code & 1) as u8, ((code >> 1) & 1) as u8, ((code >> 2) & 1) as u8]
}

fn fano_code(v: [u8; 3]) -> usize {
    (v[0] & 1) as usize | (((v[1] & 1) as usize) << 1) | (((v[2] & 1) as usize) << 2)
}

/// Incidence graph of the Fano plane (the building of `GL(3,2)`).
///
/// Generators `p1..p7` are the points `⟨v⟩` with `v` of code 1..7; generators
/// `l1..l7` are the lines `{v : n·v = 0}` whose normal vector `n` has code 1..7.
pub fn gl32_building(m: u32) -> Result<CoxeterSystem> {
    let mut names: Vec<String> = (1..=7).map(|i| format!("p{i}")).collect();
    names.extend((1..=7).map(|i| format!("l{i}")));
    let mut edges = Vec::new();
    for p in 1..=7 {
        for l in 1..=7 {
            let (v, n) = (fano_vector(p), fano_vector(l));
            if (v[0] * n[0] + v[1] * n[1] + v[2] * n[2]) % 2 == 0 {
                edges.push((p - 1, 7 + l - 1));
            }
        }
    }
    let labels = vec![check_label(m)?; edges.len()];
    graph_system(names, &edges, &labels)
}

/// Permutation of the `gl32_building` generators induced by an invertible 3×3
/// matrix over `F_2`: points `v ↦ Mv`, lines `n ↦ M^{-T} n`.
pub fn gl32_permutation(mat: [[u8; 3]; 3]) -> Result<Vec<usize>> {
    let apply = |a: &[[u8; 3]; 3], v: [u8; 3]| {
        let mut out = [0u8; 3];
        for (i, row) in a.iter().enumerate() {
            out[i] = (row[0] * v[0] + row[1] * v[1] + row[2] * v[2]) % 2;
        }
        out
    };
    let images: Vec<usize> = (1..=7).map(|c| fano_code(apply(&mat, fano_vector(c)))).collect();
    if images.contains(&0) {
        return Err(Error::Invalid("matrix is singular over F_2".into()));
    }
    // columns of M^{-1} are the preimages of the unit vectors
    let mut inv = [[0u8; 3]; 3];
    for (j, e) in [[1, 0, 0], [0, 1, 0], [0, 0, 1]].iter().enumerate() {
        let pre = (1..=7).find(|&c| apply(&mat, fano_vector(c)) == *e).expect("invertible");
        let col = fano_vector(pre);
        for i in 0..3 {
            inv[i][j] = col[i];
        }
    }
    let mut inv_t = [[0u8; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            inv_t[i][j] = inv[j][i];
        }
    }
    let mut perm = vec![0usize; 14];
    for c in 1..=7 {
        perm[c - 1] = images[c - 1] - 1;
        perm[7 + c - 1] = 7 + fano_code(apply(&inv_t, fano_vector(c))) - 1;
    }
    Ok(perm)
}

/// Join of `k` discrete point sets: label 2 across sets, infinite within a set.
pub fn join_of_points(sizes: &[u32]) -> Result<CoxeterSystem> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::Invalid("join needs at least one nonempty point set".into()));
    }
    let mut names = Vec::new();
    let mut part = Vec::new();
    for (k, &n) in sizes.iter().enumerate() {
        for j in 1..=n {
            names.push(format!("x{}_{j}", k + 1));
            part.push(k);
        }
    }
    let mut edges = Vec::new();
    for a in 0..names.len() {
        for b in a + 1..names.len() {
            if part[a] != part[b] {
                edges.push((a, b));
            }
        }
    }
    let labels = vec![Label::Finite(2); edges.len()];
    graph_system(names, &edges, &labels)
}

/// Looks a system up by name and numeric parameters.
pub fn catalog(name: &str, params: &[u32]) -> Result<CatalogEntry> {
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::Invalid(format!("{name} takes {k} parameter(s), got {}", params.len())))
        }
    };
    let system = match name {
        "example1" => {
            arity(2)?;
            try_example_one(params[0], params[1])?
        }
        "complete_bipartite" => {
            arity(3)?;
            complete_bipartite(params[0], params[1], params[2])?
        }
        "gl32_building" => {
            arity(1)?;
            gl32_building(params[0])?
        }
        "petersen" => {
            arity(1)?;
            petersen(params[0])?
        }
        "join_of_points" => join_of_points(params)?,
        _ => {
            return Err(Error::Invalid(format!(
                "unknown catalog entry '{name}'; known: {}",
                CATALOG_NAMES.join(", ")
            )))
        }
    };
    Ok(CatalogEntry { name: name.to_string(), params: params.to_vec(), system })
}

/// Parses `name(a,b,...)` (or a bare `name`) and looks it up.
pub fn catalog_from_spec(spec: &str) -> Result<CatalogEntry> {
    let spec = spec.trim();
    let (name, args) = match spec.split_once('(') {
        Some((name, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Invalid(format!("missing ')' in '{spec}'")))?;
            (name.trim(), inner)
        }
        None => (spec, ""),
    };
    let params = args
        .split(',')
        .map(str::trim)
        .filter(|a| !a.is_empty())
        .map(|a| a.parse::<u32>().map_err(|_| Error::Invalid(format!("bad parameter '{a}' in '{spec}'"))))
        .collect::<Result<Vec<_>>>()?;
    catalog(name, &params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::build_nerve;
    use std::sync::Arc;

    fn girth(sys: &CoxeterSystem) -> usize {
        let l = build_nerve(Arc::new(sys.clone()));
        let mut best = usize::MAX;
        for (a, b, _) in l.edges() {
            // shortest cycle through edge ab = 1 + distance from a to b avoiding the edge
            let n = l.vertex_count();
            let mut dist = vec![usize::MAX; n];
            dist[a] = 0;
            let mut queue = std::collections::VecDeque::from([a]);
            while let Some(u) = queue.pop_front() {
                for v in l.neighbours(u) {
                    if (u, v) == (a, b) || dist[v] != usize::MAX {
                        continue;
                    }
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
            if dist[b] != usize::MAX {
                best = best.min(dist[b] + 1);
            }
        }
        best
    }

    #[test]
    fn petersen_shape() {
        let sys = petersen(4).unwrap();
        let l = build_nerve(Arc::new(sys.clone()));
        assert_eq!(sys.rank(), 10);
        assert_eq!(l.edges().len(), 15);
        assert!(l.edges().iter().all(|e| e.2 == Label::Finite(4)));
        assert!((0..10).all(|s| l.neighbours(s).len() == 3));
        assert_eq!(girth(&sys), 5);
    }

    #[test]
    fn heawood_shape() {
        let sys = gl32_building(4).unwrap();
        let l = build_nerve(Arc::new(sys.clone()));
        assert_eq!(sys.rank(), 14);
        assert_eq!(l.edges().len(), 21);
        assert!(l.edges().iter().all(|(a, b, _)| *a < 7 && *b >= 7));
        assert!((0..14).all(|s| l.neighbours(s).len() == 3));
        assert_eq!(girth(&sys), 6);
    }

    #[test]
    fn bipartite_matches_example_one_shape() {
        let sys = complete_bipartite(2, 3, 2).unwrap();
        let l = build_nerve(Arc::new(sys));
        assert_eq!(l.edges().len(), 6);
        assert_eq!(l.stats().dimension, 1);
    }

    #[test]
    fn joins() {
        let sys = join_of_points(&[3, 2, 2]).unwrap();
        let l = build_nerve(Arc::new(sys));
        assert_eq!(l.vertex_count(), 7);
        assert_eq!(l.stats().dimension, 2);
        assert_eq!(l.simplices.iter().filter(|t| t.len() == 3).count(), 12);
    }

    #[test]
    fn spec_strings() {
        assert_eq!(catalog_from_spec("petersen(4)").unwrap().system.rank(), 10);
        assert_eq!(catalog_from_spec(" join_of_points(2, 3) ").unwrap().system.rank(), 5);
        assert!(catalog_from_spec("petersen(1)").is_err());
        assert!(catalog_from_spec("petersen(4,4)").is_err());
        assert!(catalog_from_spec("dodecahedron(4)").is_err());
        assert!(catalog_from_spec("petersen(4").is_err());
    }

    #[test]
    fn unipotent_matrices_act() {
        let a1 = gl32_permutation([[1, 0, 0], [1, 1, 0], [1, 0, 1]]).unwrap();
        let a2 = gl32_permutation([[1, 1, 1], [0, 1, 0], [0, 0, 1]]).unwrap();
        let sys = gl32_building(4).unwrap();
        for perm in [&a1, &a2] {
            for s in 0..14 {
                for t in 0..14 {
                    assert_eq!(sys.label(s, t), sys.label(perm[s], perm[t]));
                }
            }
        }
        assert!(gl32_permutation([[1, 1, 0], [1, 1, 0], [0, 0, 1]]).is_err());
    }
}
