//! The nerve `L`, its label-preserving automorphisms, the nondiscreteness test,
//! witness search and a catalog of example systems.

pub mod automorphisms;
pub mod catalog;
pub mod witness;

use std::sync::Arc;

use serde::Serialize;

use crate::coxeter::{is_spherical, CoxeterSystem, GenSet, Label};

pub use automorphisms::{fixes_star, label_automorphisms, nondiscreteness_check, LabelAut};
pub use catalog::{catalog, catalog_from_spec, CatalogEntry, CATALOG_NAMES};
pub use witness::{find_witnesses, validate_witness, Witness, WitnessSearch};

/// Simplicial complex of nonempty spherical subsets.
#[derive(Debug, Clone)]
pub struct Nerve {
    pub sys: Arc<CoxeterSystem>,
    /// Nonempty spherical subsets ordered by size, then mask.
    pub simplices: Vec<GenSet>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NerveStats {
    pub vertices: usize,
    pub edges: usize,
    pub simplices: usize,
    pub dimension: usize,
}

/// Builds `L` by extending spherical sets one generator at a time; sphericity
/// is inherited by subsets, so this reaches every spherical subset.
pub fn build_nerve(sys: Arc<CoxeterSystem>) -> Nerve {
    let n = sys.rank();
    let mut simplices: Vec<GenSet> = (0..n).map(GenSet::singleton).collect();
    let mut frontier = simplices.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for t in frontier {
            let top = t.max().expect("nonempty");
            for u in top + 1..n {
                if t.iter().all(|x| sys.label(x, u).is_finite()) && is_spherical(&sys, t.with(u)).is_some() {
                    next.push(t.with(u));
                }
            }
        }
        simplices.extend(next.iter().copied());
        frontier = next;
    }
    simplices.sort_by_key(|t| t.order_key());
    Nerve { sys, simplices }
}

impl Nerve {
    pub fn vertex_count(&self) -> usize {
        self.sys.rank()
    }

    pub fn edges(&self) -> Vec<(usize, usize, Label)> {
        self.simplices
            .iter()
            .filter(|t| t.len() == 2)
            .map(|t| {
                let v: Vec<usize> = t.iter().collect();
                (v[0], v[1], self.sys.label(v[0], v[1]))
            })
            .collect()
    }

    pub fn contains(&self, t: GenSet) -> bool {
        self.simplices.binary_search_by_key(&t.order_key(), |x| x.order_key()).is_ok()
    }

    /// Simplices containing `s`.
    pub fn star(&self, s: usize) -> Vec<GenSet> {
        self.simplices.iter().copied().filter(|t| t.contains(s)).collect()
    }

    /// Vertices adjacent to `s`.
    pub fn neighbours(&self, s: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&t| t != s && self.sys.label(s, t).is_finite()).collect()
    }

    /// Graph distance in the 1-skeleton, `None` if disconnected.
    pub fn distance(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.vertex_count();
        let mut dist = vec![usize::MAX; n];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbours(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        (dist[b] != usize::MAX).then_some(dist[b])
    }

    pub fn stats(&self) -> NerveStats {
        NerveStats {
            vertices: self.vertex_count(),
            edges: self.simplices.iter().filter(|t| t.len() == 2).count(),
            simplices: self.simplices.len(),
            dimension: self.simplices.iter().map(|t| t.len()).max().unwrap_or(1) - 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::catalog::example_one;

    #[test]
    fn example_one_nerve() {
        let l = build_nerve(Arc::new(example_one(4, 6)));
        let st = l.stats();
        assert_eq!((st.vertices, st.edges, st.dimension), (5, 6, 1));
        for (s, t, label) in l.edges() {
            assert!(s < 3 && t >= 3);
            assert_eq!(label, Label::Finite(if t == 3 { 4 } else { 6 }));
        }
    }

    #[test]
    fn rank_one_nerve() {
        let sys = CoxeterSystem::parse("generators: s\n").unwrap();
        let l = build_nerve(Arc::new(sys));
        assert_eq!(l.simplices, vec![GenSet::singleton(0)]);
    }

    #[test]
    fn right_angled_bipartite_has_all_mixed_faces() {
        let sys = catalog::complete_bipartite(3, 3, 2).unwrap();
        let l = build_nerve(Arc::new(sys));
        // brute force: a subset is a face iff it is nonempty and spherical
        let mut count = 0;
        for mask in 1u64..64 {
            let t = GenSet(mask);
            let sph = is_spherical(&l.sys, t).is_some();
            assert_eq!(sph, l.contains(t), "{mask:b}");
            count += sph as usize;
        }
        assert_eq!(count, l.simplices.len());
        // labels within a side are infinite, so a face has at most one vertex per side
        assert_eq!(l.stats().dimension, 1);
        assert_eq!(l.stats().edges, 9);
    }
}
