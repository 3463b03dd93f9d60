//! The chamber `K`, the complexes `Y_n` glued from copies of it, and the words
//! `w_{j_{n-1},…,j_k}` indexing their chambers.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::cog::{Report, Scwol};
use crate::coxeter::{word_reduce, CoxeterSystem, GenSet, Word};
use crate::error::{Error, Result};
use crate::nerve::{build_nerve, LabelAut, Witness};

/// A chamber `w_{j_{n-1},…,j_k} K` of `Y_n`: its level `k` and the indices
/// `js = (j_{n-1}, …, j_k)`, empty when `k = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChamberId {
    pub k: usize,
    pub js: Vec<usize>,
}

impl ChamberId {
    pub fn root(n: usize) -> Self {
        Self { k: n, js: Vec::new() }
    }

    /// The unique neighbour one level up.
    pub fn parent(&self) -> Option<Self> {
        let (_, rest) = self.js.split_last()?;
        Some(Self { k: self.k + 1, js: rest.to_vec() })
    }

    pub fn label(&self) -> String {
        let js: Vec<String> = self.js.iter().map(|j| j.to_string()).collect();
        format!("({},({}))", self.k, js.join(","))
    }
}

/// A vertex of `Y_n`: its type and the chambers containing it. A vertex in two
/// chambers lies in the interior mirror of type `mirror`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexInfo {
    pub ty: GenSet,
    pub chambers: Vec<usize>,
    pub mirror: Option<usize>,
}

/// `Y_n` as a union of chambers glued along mirrors, with the poset scwol of
/// its vertices ordered by type inclusion inside each chamber.
#[derive(Debug, Clone)]
pub struct ChamberComplex {
    pub n: usize,
    pub sys: Arc<CoxeterSystem>,
    /// Spherical subsets, `∅` first, ordered by size then mask.
    pub types: Vec<GenSet>,
    pub chambers: Vec<ChamberId>,
    pub chamber_index: HashMap<ChamberId, usize>,
    /// Parent chamber and the type of the shared mirror.
    pub gluing: Vec<Option<(usize, usize)>>,
    pub vertices: Vec<VertexInfo>,
    /// `vertex_of[c][i]` is the vertex of chamber `c` of type `types[i]`.
    pub vertex_of: Vec<Vec<usize>>,
    pub scwol: Arc<Scwol>,
}

/// `α^{j_{n-1},…,j_k} = α_{n-1}^{j_{n-1}} ∘ ⋯ ∘ α_k^{j_k}` for `js` listed from `j_{n-1}`.
pub fn alpha_of(wit: &Witness, n: usize, js: &[usize]) -> LabelAut {
    let rank = wit.alpha1.perm.len();
    js.iter().enumerate().fold(LabelAut::identity(rank), |acc, (i, &j)| acc.compose(&wit.alpha(n - 1 - i).pow(j)))
}

/// All chambers of `Y_n`: the root first, then levels downward, each level in
/// lexicographic order of `js`.
pub fn chamber_ids(wit: &Witness, n: usize) -> Vec<ChamberId> {
    let mut out = vec![ChamberId::root(n)];
    let mut level = vec![Vec::new()];
    for k in (1..n).rev() {
        let mut next = Vec::new();
        for js in &level {
            for j in 0..wit.q(k) {
                let mut v: Vec<usize> = js.clone();
                v.push(j);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|js| ChamberId { k, js: js.clone() }));
        level = next;
    }
    out
}

fn spherical_types(sys: &Arc<CoxeterSystem>) -> Vec<GenSet> {
    let mut types = vec![GenSet::EMPTY];
    types.extend(build_nerve(sys.clone()).simplices);
    types
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn assemble(sys: Arc<CoxeterSystem>, n: usize, chambers: Vec<ChamberId>, gluing: Vec<Option<(usize, usize)>>) -> ChamberComplex {
    let types = spherical_types(&sys);
    let nt = types.len();
    let slots = chambers.len() * nt;
    let mut uf: Vec<usize> = (0..slots).collect();
    for (c, g) in gluing.iter().enumerate() {
        if let Some((p, u)) = *g {
            for (i, t) in types.iter().enumerate() {
                if t.contains(u) {
                    let (a, b) = (find(&mut uf, c * nt + i), find(&mut uf, p * nt + i));
                    // keep the smaller slot as root so roots are least members
                    let (lo, hi) = (a.min(b), a.max(b));
                    uf[hi] = lo;
                }
            }
        }
    }
    // slots are ordered (chamber, type), so least members give the vertex order
    let mut vertex_of_root: HashMap<usize, usize> = HashMap::new();
    let mut vertices: Vec<VertexInfo> = Vec::new();
    let mut vertex_of = vec![vec![0; nt]; chambers.len()];
    for slot in 0..slots {
        let r = find(&mut uf, slot);
        let (c, i) = (slot / nt, slot % nt);
        let v = *vertex_of_root.entry(r).or_insert_with(|| {
            vertices.push(VertexInfo { ty: types[i], chambers: Vec::new(), mirror: None });
            vertices.len() - 1
        });
        vertices[v].chambers.push(c);
        vertex_of[c][i] = v;
    }
    for (c, g) in gluing.iter().enumerate() {
        if let Some((_, u)) = *g {
            for (i, t) in types.iter().enumerate() {
                if t.contains(u) {
                    vertices[vertex_of[c][i]].mirror = Some(u);
                }
            }
        }
    }
    let mut relations = Vec::new();
    for row in &vertex_of {
        for (i, t) in types.iter().enumerate() {
            for (j, t2) in types.iter().enumerate() {
                if t.is_proper_subset(*t2) {
                    relations.push((row[i], row[j]));
                }
            }
        }
    }
    relations.sort_unstable();
    relations.dedup();
    let tags = vertices.iter().map(|v| vec![v.ty]).collect();
    let scwol = Arc::new(Scwol::from_poset(tags, relations));
    let chamber_index = chambers.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    ChamberComplex { n, sys, types, chambers, chamber_index, gluing, vertices, vertex_of, scwol }
}

/// The chamber `K`: one vertex per spherical subset, including `∅`.
pub fn build_chamber(sys: Arc<CoxeterSystem>) -> ChamberComplex {
    assemble(sys, 1, vec![ChamberId::root(1)], vec![None])
}

/// `Y_n`: each chamber below the root is glued to its parent along the mirror
/// of type `α^{js}(s_k)`.
pub fn build_yn(wit: &Witness, sys: Arc<CoxeterSystem>, n: usize) -> Result<ChamberComplex> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    if wit.alpha1.perm.len() != sys.rank() {
        return Err(Error::Invalid("witness and system have different ranks".into()));
    }
    let chambers = chamber_ids(wit, n);
    let index: HashMap<&ChamberId, usize> = chambers.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let gluing = chambers
        .iter()
        .map(|c| c.parent().map(|p| (index[&p], alpha_of(wit, n, &c.js).apply(wit.s(c.k)))))
        .collect();
    Ok(assemble(sys, n, chambers, gluing))
}

impl ChamberComplex {
    pub fn type_index(&self, t: GenSet) -> Option<usize> {
        self.types.binary_search_by_key(&t.order_key(), |x| x.order_key()).ok()
    }

    pub fn vertex(&self, chamber: usize, t: GenSet) -> Option<usize> {
        Some(self.vertex_of[chamber][self.type_index(t)?])
    }

    /// Vertices of the mirror `K_s` of a chamber: those whose type contains `s`.
    pub fn mirror(&self, chamber: usize, s: usize) -> Vec<usize> {
        self.types.iter().enumerate().filter(|(_, t)| t.contains(s)).map(|(i, _)| self.vertex_of[chamber][i]).collect()
    }

    /// Chamber counts by level `1..=n`.
    pub fn level_counts(&self) -> Vec<usize> {
        (1..=self.n).map(|k| self.chambers.iter().filter(|c| c.k == k).count()).collect()
    }

    /// `(child, parent, mirror type)` for every adjacency.
    pub fn dual_graph(&self) -> Vec<(usize, usize, usize)> {
        self.gluing.iter().enumerate().filter_map(|(c, g)| g.map(|(p, u)| (c, p, u))).collect()
    }

    pub fn dual_graph_dot(&self) -> String {
        let mut out = String::from("graph dual {\n");
        for (c, id) in self.chambers.iter().enumerate() {
            out.push_str(&format!("  c{c} [label=\"{}\"];\n", id.label()));
        }
        for (c, p, u) in self.dual_graph() {
            out.push_str(&format!("  c{p} -- c{c} [label=\"{}\"];\n", self.sys.name(u)));
        }
        out.push_str("}\n");
        out
    }

    /// Vertex of type `∅` of each chamber.
    pub fn cone_points(&self) -> Vec<usize> {
        self.vertex_of.iter().map(|row| row[0]).collect()
    }
}

/// Checks that the dual graph is a tree, every vertex lies in at most two
/// chambers, interior mirrors are pairwise disjoint and each chamber has one
/// vertex per spherical type.
pub fn check_structure(y: &ChamberComplex) -> Report {
    let mut r = Report::new();
    let nc = y.chambers.len();
    let edges = y.dual_graph();
    let mut uf: Vec<usize> = (0..nc).collect();
    let mut cycle = false;
    for &(c, p, _) in &edges {
        let (a, b) = (find(&mut uf, c), find(&mut uf, p));
        cycle |= a == b;
        uf[a] = b;
    }
    r.check(!cycle && edges.len() + 1 == nc, "dual graph is a tree", || "dual graph".into(), || {
        format!("{} chambers, {} adjacencies", nc, edges.len())
    });
    for (v, info) in y.vertices.iter().enumerate() {
        r.check(info.chambers.len() <= 2, "at most two chambers per vertex", || format!("vertex {v}"), || {
            format!("in chambers {:?}", info.chambers)
        });
    }
    let mut owner = vec![None; y.vertices.len()];
    for (c, p, u) in edges {
        for v in y.mirror(c, u) {
            if let Some((c2, p2)) = owner[v] {
                r.fail(
                    "interior mirrors disjoint",
                    format!("vertex {v}"),
                    format!("in the mirrors between chambers {c2},{p2} and {c},{p}"),
                );
            }
            owner[v] = Some((c, p));
        }
    }
    for (c, row) in y.vertex_of.iter().enumerate() {
        let mut seen = row.clone();
        seen.sort_unstable();
        seen.dedup();
        r.check(seen.len() == y.types.len(), "one vertex per spherical type", || format!("chamber {c}"), || {
            "two types share a vertex".into()
        });
    }
    r
}

/// `w_{j_{n-1},…,j_k} = w_n α^{j_{n-1}}(s_{n-1}) ⋯ α^{j_{n-1},…,j_k}(s_k)` with
/// `w_n = s_1 ⋯ s_{n-1}`.
pub fn w_word(wit: &Witness, n: usize, k: usize, js: &[usize]) -> Result<Word> {
    if k == 0 || k > n || js.len() != n - k {
        return Err(Error::Invalid(format!("no chamber at level {k} of Y_{n} with indices {js:?}")));
    }
    for (i, &j) in js.iter().enumerate() {
        let level = n - 1 - i;
        if j >= wit.q(level) {
            return Err(Error::Invalid(format!("j_{level} = {j} is not below q_{level} = {}", wit.q(level))));
        }
    }
    let mut w: Word = (1..n).map(|i| wit.s(i)).collect();
    for i in 0..js.len() {
        w.push(alpha_of(wit, n, &js[..=i]).apply(wit.s(n - 1 - i)));
    }
    Ok(w)
}

/// Outcome of the brute-force distinctness check on all chamber words.
#[derive(Debug, Clone, Serialize)]
pub struct DisjointnessReport {
    pub n: usize,
    pub words: Vec<(ChamberId, Word)>,
    pub reduced: Vec<Word>,
    /// Pairs of chamber indices whose words are equal in `W`.
    pub collisions: Vec<(usize, usize)>,
}

impl DisjointnessReport {
    pub fn passed(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// Reduces every `w`-word of `Y_n` to its normal form and compares all pairs.
pub fn verify_disjointness(wit: &Witness, sys: &CoxeterSystem, n: usize, bound: usize) -> Result<DisjointnessReport> {
    let words = chamber_ids(wit, n)
        .into_iter()
        .map(|c| {
            let w = w_word(wit, n, c.k, &c.js)?;
            Ok((c, w))
        })
        .collect::<Result<Vec<_>>>()?;
    let reduced = words.iter().map(|(_, w)| word_reduce(sys, w, bound)).collect::<Result<Vec<_>>>()?;
    let mut collisions = Vec::new();
    for i in 0..reduced.len() {
        for j in i + 1..reduced.len() {
            if reduced[i] == reduced[j] {
                collisions.push((i, j));
            }
        }
    }
    Ok(DisjointnessReport { n, words, reduced, collisions })
}

/// `F^j: Y_{n-1} → Y^j_{n-1} ⊂ Y_n`, moving types by `α_{n-1}^j`.
#[derive(Debug, Clone)]
pub struct SubcomplexIso {
    pub j: usize,
    pub types: LabelAut,
    pub chamber_map: Vec<usize>,
    pub vertex_map: Vec<usize>,
}

/// The `q_{n-1}` embeddings of `Y_{n-1}` into `Y_n`, checked to be injective
/// and to respect types and the scwol.
pub fn subcomplex_isos(wit: &Witness, small: &ChamberComplex, big: &ChamberComplex) -> Result<Vec<SubcomplexIso>> {
    let n = big.n;
    if n < 2 || small.n != n - 1 {
        return Err(Error::Invalid("subcomplex maps go from Y_(n-1) to Y_n".into()));
    }
    let mut out = Vec::new();
    for j in 0..wit.q(n - 1) {
        let alpha = wit.alpha(n - 1).pow(j);
        let chamber_map: Vec<usize> = small
            .chambers
            .iter()
            .map(|c| {
                let mut js = vec![j];
                js.extend(&c.js);
                big.chamber_index[&ChamberId { k: c.k, js }]
            })
            .collect();
        let mut vertex_map = vec![usize::MAX; small.vertices.len()];
        for (c, row) in small.vertex_of.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                let img = big.vertex(chamber_map[c], small.types[i].map(&alpha.perm)).ok_or_else(|| {
                    Error::Invalid(format!("type {} has no spherical image", small.sys.fmt_set(small.types[i])))
                })?;
                if vertex_map[v] != usize::MAX && vertex_map[v] != img {
                    return Err(Error::Invalid(format!("F^{j} is not well defined at vertex {v}")));
                }
                vertex_map[v] = img;
            }
        }
        let mut seen = vertex_map.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != vertex_map.len() {
            return Err(Error::Invalid(format!("F^{j} is not injective")));
        }
        for &(a, b) in &small.scwol.edges {
            if big.scwol.edge_between(vertex_map[a], vertex_map[b]).is_none() {
                return Err(Error::Invalid(format!("F^{j} does not preserve the edge {a} -> {b}")));
            }
        }
        out.push(SubcomplexIso { j, types: alpha, chamber_map, vertex_map });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cog::validate_scwol;
    use crate::nerve::catalog::example_one;

    pub(crate) fn example_witness() -> Witness {
        // α1 = (s1 s3), α2 = (s2 s3)
        Witness::new(0, 1, LabelAut::new(vec![2, 1, 0, 3, 4]), LabelAut::new(vec![0, 2, 1, 3, 4]))
    }

    #[test]
    fn chamber_of_example_one() {
        let sys = Arc::new(example_one(4, 4));
        let k = build_chamber(sys.clone());
        assert_eq!(k.types.len(), 12);
        assert_eq!(k.types[0], GenSet::EMPTY);
        assert_eq!(k.scwol.edge_count(), 11 + 12);
        assert!(validate_scwol(&k.scwol).passed());
        for s in 0..5 {
            for t in s + 1..5 {
                let meet = k.mirror(0, s).iter().any(|v| k.mirror(0, t).contains(v));
                assert_eq!(meet, sys.label(s, t).is_finite());
            }
        }
    }

    #[test]
    fn rank_one_chamber() {
        let sys = Arc::new(CoxeterSystem::parse("generators: s").unwrap());
        let k = build_chamber(sys);
        assert_eq!((k.vertices.len(), k.scwol.edge_count()), (2, 1));
    }

    #[test]
    fn words_for_n_three() {
        let w = example_witness();
        assert_eq!(w_word(&w, 3, 3, &[]).unwrap(), vec![0, 1]);
        assert_eq!(w_word(&w, 3, 2, &[1]).unwrap(), vec![0, 1, 2]);
        assert_eq!(w_word(&w, 3, 1, &[1, 1]).unwrap(), vec![0, 1, 2, 1]);
        assert_eq!(w_word(&w, 1, 1, &[]).unwrap(), Vec::<usize>::new());
        assert!(w_word(&w, 3, 1, &[2, 0]).is_err());
    }

    #[test]
    fn y3_structure() {
        let sys = Arc::new(example_one(4, 4));
        let y = build_yn(&example_witness(), sys, 3).unwrap();
        assert_eq!(y.level_counts(), vec![4, 2, 1]);
        assert!(check_structure(&y).passed());
        assert!(validate_scwol(&y.scwol).passed());
        assert_eq!(y.cone_points().len(), 7);
        // chamber (2,(1)) hangs off the root along s3
        let c = y.chamber_index[&ChamberId { k: 2, js: vec![1] }];
        assert_eq!(y.gluing[c], Some((0, 2)));
    }

    #[test]
    fn subcomplexes_of_y3() {
        let sys = Arc::new(example_one(4, 4));
        let w = example_witness();
        let (y2, y3) = (build_yn(&w, sys.clone(), 2).unwrap(), build_yn(&w, sys, 3).unwrap());
        let isos = subcomplex_isos(&w, &y2, &y3).unwrap();
        assert_eq!(isos.len(), 2);
        assert!(isos[0].types.is_identity());
        let mut image: Vec<ChamberId> = isos[1].chamber_map.iter().map(|&c| y3.chambers[c].clone()).collect();
        image.sort();
        assert_eq!(image, vec![
            ChamberId { k: 1, js: vec![1, 0] },
            ChamberId { k: 1, js: vec![1, 1] },
            ChamberId { k: 2, js: vec![1] },
        ]);
        assert!(isos[1].types.pow(2).is_identity());
    }
}
