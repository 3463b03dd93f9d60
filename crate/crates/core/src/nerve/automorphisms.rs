//! Label-preserving automorphisms of the nerve.

use serde::Serialize;

use super::Nerve;
use crate::bounds::Bounds;
use crate::coxeter::Label;
use crate::error::{Error, Result};

/// Largest automorphism group the search will materialize.
const GROUP_CAP: usize = 2_000_000;

/// A permutation of the generators preserving every label `m_st`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabelAut {
    pub perm: Vec<usize>,
    pub order: usize,
}

impl LabelAut {
    pub fn new(perm: Vec<usize>) -> Self {
        let order = perm_order(&perm);
        Self { perm, order }
    }

    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n).collect(), order: 1 }
    }

    pub fn apply(&self, s: usize) -> usize {
        self.perm[s]
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LabelAut) -> LabelAut {
        LabelAut::new(other.perm.iter().map(|&s| self.perm[s]).collect())
    }

    pub fn inverse(&self) -> LabelAut {
        let mut inv = vec![0; self.perm.len()];
        for (s, &t) in self.perm.iter().enumerate() {
            inv[t] = s;
        }
        LabelAut { perm: inv, order: self.order }
    }

    pub fn pow(&self, k: usize) -> LabelAut {
        let n = self.perm.len();
        let perm = (0..n).map(|s| (0..k).fold(s, |x, _| self.perm[x])).collect();
        LabelAut::new(perm)
    }

    /// Cycle notation with generator names, e.g. `(s1 s3)`.
    pub fn cycles(&self, names: &[String]) -> String {
        let mut seen = vec![false; self.perm.len()];
        let mut out = String::new();
        for s in 0..self.perm.len() {
            if seen[s] || self.perm[s] == s {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                cyc.push(names[x].as_str());
                x = self.perm[x];
            }
            out.push_str(&format!("({})", cyc.join(" ")));
        }
        if out.is_empty() {
            "1".into()
        } else {
            out
        }
    }
}

fn perm_order(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut order = 1usize;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        order = num_integer::lcm(order, len);
    }
    order
}

/// The full group of label-preserving automorphisms, in lexicographic order of
/// the image tuple (so the identity comes first).
///
/// Backtracking assigns images vertex by vertex. A candidate image must carry
/// the same multiset of labels and agree on labels with every vertex already placed.
pub fn label_automorphisms(l: &Nerve, bounds: &Bounds) -> Result<Vec<LabelAut>> {
    let n = l.vertex_count();
    if n > bounds.aut_vertices {
        return Err(Error::Resource(format!(
            "nerve has {n} vertices; automorphism search is bounded by {}",
            bounds.aut_vertices
        )));
    }
    let sys = &l.sys;
    let signature: Vec<Vec<Label>> = (0..n)
        .map(|s| {
            let mut v: Vec<Label> = (0..n).filter(|&t| t != s).map(|t| sys.label(s, t)).collect();
            v.sort();
            v
        })
        .collect();
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(0, n, sys, &signature, &mut img, &mut used, &mut out)?;
    Ok(out)
}

fn search(
    u: usize,
    n: usize,
    sys: &crate::coxeter::CoxeterSystem,
    sig: &[Vec<Label>],
    img: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<LabelAut>,
) -> Result<()> {
    if u == n {
        if out.len() >= GROUP_CAP {
            return Err(Error::Resource(format!("automorphism group exceeds {GROUP_CAP} elements")));
        }
        out.push(LabelAut::new(img.clone()));
        return Ok(());
    }
    for v in 0..n {
        if used[v] || sig[u] != sig[v] {
            continue;
        }
        if (0..u).all(|w| sys.label(u, w) == sys.label(v, img[w])) {
            img[u] = v;
            used[v] = true;
            search(u + 1, n, sys, sig, img, used, out)?;
            used[v] = false;
            img[u] = usize::MAX;
        }
    }
    Ok(())
}

/// True iff `a` fixes `s` and every simplex containing `s` pointwise, i.e. fixes
/// `s` and all of its neighbours.
pub fn fixes_star(l: &Nerve, a: &LabelAut, s: usize) -> bool {
    a.apply(s) == s && l.neighbours(s).into_iter().all(|t| a.apply(t) == t)
}

/// First pair `(α, s)` with `α ≠ 1` fixing the star of `s`, scanning automorphisms
/// in order and vertices by index.
pub fn nondiscreteness_check(l: &Nerve, auts: &[LabelAut]) -> Option<(LabelAut, usize)> {
    auts.iter()
        .filter(|a| !a.is_identity())
        .find_map(|a| (0..l.vertex_count()).find(|&s| fixes_star(l, a, s)).map(|s| (a.clone(), s)))
}
