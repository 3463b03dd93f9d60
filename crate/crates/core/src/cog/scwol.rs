//! Small categories without loops.

use std::collections::HashMap;

use super::report::Report;
use crate::coxeter::GenSet;

/// A scwol: vertices, edges `a` with endpoints `i(a)`, `t(a)`, and a partial
/// composition `(a, b) ↦ ab` for `i(a) = t(b)`.
///
/// Each vertex carries a tag: a chain of generator sets. Vertices of a chamber
/// complex carry their type as a one-element chain; vertices of a barycentric
/// subdivision carry the types along the chain they represent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scwol {
    pub tags: Vec<Vec<GenSet>>,
    /// `(i(a), t(a))`
    pub edges: Vec<(usize, usize)>,
    comp: HashMap<(usize, usize), usize>,
    into: Vec<Vec<usize>>,
    out_of: Vec<Vec<usize>>,
}

impl Scwol {
    /// Builds a scwol from explicit data. No axioms are checked; use [`validate_scwol`].
    pub fn new(tags: Vec<Vec<GenSet>>, edges: Vec<(usize, usize)>, comp: HashMap<(usize, usize), usize>) -> Self {
        let n = tags.len();
        let mut into = vec![Vec::new(); n];
        let mut out_of = vec![Vec::new(); n];
        for (a, &(i, t)) in edges.iter().enumerate() {
            out_of[i].push(a);
            into[t].push(a);
        }
        Self { tags, edges, comp, into, out_of }
    }

    /// Scwol of a strict partial order given by all of its comparable pairs
    /// `(x, y)` with `x < y`, oriented `x → y`. Composition is forced by endpoints.
    pub fn from_poset(tags: Vec<Vec<GenSet>>, relations: Vec<(usize, usize)>) -> Self {
        let index: HashMap<(usize, usize), usize> = relations.iter().enumerate().map(|(a, &p)| (p, a)).collect();
        let mut out_of = vec![Vec::new(); tags.len()];
        for (a, &(x, _)) in relations.iter().enumerate() {
            out_of[x].push(a);
        }
        let mut comp = HashMap::new();
        for (b, &(x, y)) in relations.iter().enumerate() {
            for &a in &out_of[y] {
                if let Some(&ab) = index.get(&(x, relations[a].1)) {
                    comp.insert((a, b), ab);
                }
            }
        }
        Self::new(tags, relations, comp)
    }

    pub fn vertex_count(&self) -> usize {
        self.tags.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn i(&self, a: usize) -> usize {
        self.edges[a].0
    }

    pub fn t(&self, a: usize) -> usize {
        self.edges[a].1
    }

    /// `ab`, defined when `i(a) = t(b)`.
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.comp.get(&(a, b)).copied()
    }

    /// All composable pairs `(a, b)` with their composite, sorted.
    pub fn composable_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut v: Vec<_> = self.comp.iter().map(|(&(a, b), &ab)| (a, b, ab)).collect();
        v.sort_unstable();
        v
    }

    /// Edges `a` with `t(a) = v`.
    pub fn edges_into(&self, v: usize) -> &[usize] {
        &self.into[v]
    }

    /// Edges `a` with `i(a) = v`.
    pub fn edges_out_of(&self, v: usize) -> &[usize] {
        &self.out_of[v]
    }

    /// The edge with the given endpoints, if unique.
    pub fn edge_between(&self, i: usize, t: usize) -> Option<usize> {
        let mut it = self.out_of[i].iter().copied().filter(|&a| self.edges[a].1 == t);
        let a = it.next()?;
        it.next().is_none().then_some(a)
    }

    /// Whether every pair of vertices is joined by at most one edge.
    pub fn is_poset(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|e| seen.insert(*e))
    }

    /// Replaces the composition table wholesale (used by fault-injection tests).
    pub fn with_composition(mut self, comp: HashMap<(usize, usize), usize>) -> Self {
        self.comp = comp;
        self
    }
}

/// Checks both scwol axioms exhaustively: `i(a) ≠ t(a)`, and a composition
/// `ab` exists exactly when `i(a) = t(b)`, with `i(ab) = i(b)`, `t(ab) = t(a)`
/// and `(ab)c = a(bc)`.
pub fn validate_scwol(x: &Scwol) -> Report {
    let mut r = Report::new();
    for (a, &(i, t)) in x.edges.iter().enumerate() {
        r.check(i != t, "i(a) != t(a)", || format!("edge {a}"), || format!("loop at vertex {i}"));
    }
    for (a, &(ia, _)) in x.edges.iter().enumerate() {
        for &b in x.edges_into(ia) {
            let ab = x.compose(a, b);
            r.check(ab.is_some(), "composition defined", || format!("edges ({a},{b})"), || {
                "i(a) = t(b) but ab is undefined".into()
            });
            if let Some(ab) = ab {
                r.check(
                    x.i(ab) == x.i(b) && x.t(ab) == x.t(a),
                    "i(ab)=i(b), t(ab)=t(a)",
                    || format!("edges ({a},{b})"),
                    || format!("ab = {ab} runs {} -> {}", x.i(ab), x.t(ab)),
                );
            }
        }
    }
    for (a, b, _) in x.composable_pairs() {
        r.check(x.i(a) == x.t(b), "composition defined", || format!("edges ({a},{b})"), || {
            "ab is defined but i(a) != t(b)".into()
        });
    }
    for (a, b, ab) in x.composable_pairs() {
        for &c in x.edges_into(x.i(b)) {
            let (Some(bc), Some(abc1)) = (x.compose(b, c), x.compose(ab, c)) else { continue };
            let abc2 = x.compose(a, bc);
            r.check(abc2 == Some(abc1), "associativity", || format!("edges ({a},{b},{c})"), || {
                format!("(ab)c = {abc1}, a(bc) = {abc2:?}")
            });
        }
    }
    r
}

/// Barycentric subdivision of a poset scwol: vertices are the nonempty chains,
/// with an edge from each chain to each proper nonempty subchain.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub scwol: Scwol,
    /// Members of each chain, in increasing order.
    pub chains: Vec<Vec<usize>>,
    pub chain_index: HashMap<Vec<usize>, usize>,
}

impl Subdivision {
    /// Vertex of the one-element chain `[v]`.
    pub fn vertex(&self, v: usize) -> usize {
        self.chain_index[&vec![v]]
    }
}

/// Subdivides a poset scwol. Chains are listed by length, then lexicographically.
pub fn subdivide(x: &Scwol) -> Subdivision {
    let n = x.vertex_count();
    let mut chains: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut frontier = chains.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for c in &frontier {
            let top = *c.last().expect("nonempty");
            let mut ups: Vec<usize> = x.edges_out_of(top).iter().map(|&a| x.t(a)).collect();
            ups.sort_unstable();
            ups.dedup();
            for u in ups {
                let mut d = c.clone();
                d.push(u);
                next.push(d);
            }
        }
        chains.extend(next.iter().cloned());
        frontier = next;
    }
    chains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let chain_index: HashMap<Vec<usize>, usize> = chains.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    let mut relations = Vec::new();
    for (ci, c) in chains.iter().enumerate() {
        let k = c.len();
        for mask in 1..(1u32 << k) - 1 {
            let sub: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).map(|i| c[i]).collect();
            relations.push((ci, chain_index[&sub]));
        }
    }
    relations.sort_unstable();
    let tags = chains.iter().map(|c| c.iter().flat_map(|&v| x.tags[v].iter().copied()).collect()).collect();
    Subdivision { scwol: Scwol::from_poset(tags, relations), chains, chain_index }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Scwol {
        let tags = vec![vec![GenSet(0)], vec![GenSet(1)], vec![GenSet(3)]];
        Scwol::from_poset(tags, vec![(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn chain_poset_passes() {
        let x = chain3();
        assert_eq!(x.composable_pairs(), vec![(1, 0, 2)]);
        assert!(validate_scwol(&x).passed());
    }

    #[test]
    fn loop_is_flagged() {
        let x = Scwol::new(vec![vec![GenSet(0)]], vec![(0, 0)], HashMap::new());
        let r = validate_scwol(&x);
        assert!(r.has_axiom("i(a) != t(a)"));
    }

    #[test]
    fn missing_composite_is_flagged() {
        let x = chain3().with_composition(HashMap::new());
        assert!(validate_scwol(&x).has_axiom("composition defined"));
        let mut bad = HashMap::new();
        bad.insert((1, 0), 1);
        let x = chain3().with_composition(bad);
        assert!(validate_scwol(&x).has_axiom("i(ab)=i(b), t(ab)=t(a)"));
    }

    #[test]
    fn subdivision_of_chain() {
        let s = subdivide(&chain3());
        // chains of a 3-element total order: 7
        assert_eq!(s.chains.len(), 7);
        // the 3-chain has 6 proper subchains, each 2-chain has 2
        assert_eq!(s.scwol.edge_count(), 6 + 3 * 2);
        assert!(validate_scwol(&s.scwol).passed());
        assert_eq!(s.scwol.tags[s.vertex(0)], vec![GenSet(0)]);
    }
}
