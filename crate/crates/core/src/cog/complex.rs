//! Complexes of groups over scwols, simple or twisted.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::report::Report;
use super::scwol::{subdivide, Scwol, Subdivision};
use crate::coxeter::{FiniteGroupTable, GenSet};
use crate::error::{Error, Result};

/// Local groups `G_σ`, monomorphisms `ψ_a: G_{i(a)} → G_{t(a)}` stored as
/// element maps, and twisting elements `g_{a,b} ∈ G_{t(a)}`. Missing twists are
/// the identity.
#[derive(Debug, Clone)]
pub struct ComplexOfGroups {
    pub scwol: Arc<Scwol>,
    pub local: Vec<Arc<FiniteGroupTable>>,
    pub psi: Vec<Vec<u32>>,
    pub twist: HashMap<(usize, usize), u32>,
}

impl ComplexOfGroups {
    pub fn simple(scwol: Arc<Scwol>, local: Vec<Arc<FiniteGroupTable>>, psi: Vec<Vec<u32>>) -> Self {
        Self { scwol, local, psi, twist: HashMap::new() }
    }

    pub fn twist(&self, a: usize, b: usize) -> u32 {
        self.twist.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.twist.values().all(|&g| g == 0)
    }

    pub fn vertex_count(&self) -> usize {
        self.scwol.vertex_count()
    }

    /// Sorted image `ψ_a(G_{i(a)})`.
    pub fn image(&self, a: usize) -> Vec<u32> {
        let mut v = self.psi[a].clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Replaces one twisting element (fault injection).
    pub fn with_twist(mut self, a: usize, b: usize, g: u32) -> Self {
        self.twist.insert((a, b), g);
        self
    }

    pub fn local_orders(&self) -> Vec<usize> {
        self.local.iter().map(|g| g.size()).collect()
    }
}

fn check_edge(c: &ComplexOfGroups, a: usize) -> Report {
    let mut r = Report::new();
    let x = &c.scwol;
    let (src, dst) = (&c.local[x.i(a)], &c.local[x.t(a)]);
    let map = &c.psi[a];
    let shaped = map.len() == src.size() && map.iter().all(|&g| (g as usize) < dst.size());
    r.check(shaped, "psi shape", || format!("edge {a}"), || {
        format!("map of length {} into a group of order {}", map.len(), dst.size())
    });
    if !shaped {
        return r;
    }
    r.check(src.is_hom(dst, map), "psi homomorphism", || format!("edge {a}"), || "not a homomorphism".into());
    let distinct = c.image(a).len();
    r.check(distinct == src.size(), "psi injective", || format!("edge {a}"), || {
        format!("image has {distinct} of {} elements", src.size())
    });
    r
}

fn check_pair(c: &ComplexOfGroups, a: usize, b: usize, ab: usize) -> Report {
    let mut r = Report::new();
    let x = &c.scwol;
    let g = c.twist(a, b);
    let target = &c.local[x.t(a)];
    if g as usize >= target.size() {
        r.fail("twist shape", format!("edges ({a},{b})"), format!("element {g} out of range"));
        return r;
    }
    let src = &c.local[x.i(b)];
    let mid = &c.psi[b];
    let first = (0..src.size() as u32).find(|&y| {
        let lhs = target.conj(g, c.psi[ab][y as usize]);
        let rhs = c.psi[a][mid[y as usize] as usize];
        lhs != rhs
    });
    r.check(first.is_none(), "compatibility", || format!("edges ({a},{b})"), || {
        format!("Ad(g_ab) psi_ab and psi_a psi_b differ on element {}", first.unwrap_or(0))
    });
    for &cc in x.edges_into(x.i(b)) {
        let (Some(bc), Some(_)) = (x.compose(b, cc), x.compose(ab, cc)) else { continue };
        let lhs = target.mul(c.psi[a][c.twist(b, cc) as usize], c.twist(a, bc));
        let rhs = target.mul(g, c.twist(ab, cc));
        r.check(lhs == rhs, "cocycle", || format!("edges ({a},{b},{cc})"), || {
            format!("psi_a(g_bc) g_a,bc = {lhs} but g_ab g_ab,c = {rhs}")
        });
    }
    r
}

/// Exhaustive check of the complex-of-groups axioms: each `ψ_a` an injective
/// homomorphism, `Ad(g_{a,b}) ∘ ψ_{ab} = ψ_a ∘ ψ_b` on every element, and the
/// cocycle condition on every composable triple.
pub fn validate_cog(c: &ComplexOfGroups) -> Report {
    let x = &c.scwol;
    let mut r = Report::new();
    r.check(c.local.len() == x.vertex_count() && c.psi.len() == x.edge_count(), "shape", || "complex".into(), || {
        "one local group per vertex and one map per edge are required".into()
    });
    if !r.passed() {
        return r;
    }
    let edges = (0..x.edge_count()).into_par_iter().map(|a| check_edge(c, a)).reduce(Report::new, merged);
    let edges_ok = edges.passed();
    r.merge(edges);
    if !edges_ok {
        return r;
    }
    let pairs = x.composable_pairs();
    let rest = pairs.par_iter().map(|&(a, b, ab)| check_pair(c, a, b, ab)).reduce(Report::new, merged);
    r.merge(rest);
    r
}

fn merged(mut a: Report, b: Report) -> Report {
    a.merge(b);
    a
}

/// True iff every vertex of type `∅` has trivial local group.
pub fn has_trivial_type0_groups(c: &ComplexOfGroups) -> bool {
    (0..c.vertex_count()).filter(|&v| c.scwol.tags[v] == [GenSet(0)]).all(|v| c.local[v].size() == 1)
}

/// Barycentric subdivision of a simple complex of groups over a poset scwol.
/// The chain `σ_0 < … < σ_k` carries `G_{σ_0}`; the edge to a subchain with
/// least element `σ_j` carries `ψ` of the edge `σ_0 → σ_j`, or the identity.
pub fn subdivide_cog(c: &ComplexOfGroups) -> Result<(ComplexOfGroups, Subdivision)> {
    if !c.scwol.is_poset() || !c.is_simple() {
        return Err(Error::Invalid("subdivision needs a simple complex over a poset".into()));
    }
    let sub = subdivide(&c.scwol);
    let local = sub.chains.iter().map(|ch| c.local[ch[0]].clone()).collect();
    let mut psi = Vec::with_capacity(sub.scwol.edge_count());
    for &(from, to) in &sub.scwol.edges {
        let (x, y) = (sub.chains[from][0], sub.chains[to][0]);
        if x == y {
            psi.push((0..c.local[x].size() as u32).collect());
        } else {
            let a = c.scwol.edge_between(x, y).ok_or_else(|| {
                Error::Invalid(format!("chain members {x} < {y} are not joined by an edge"))
            })?;
            psi.push(c.psi[a].clone());
        }
    }
    Ok((ComplexOfGroups::simple(Arc::new(sub.scwol.clone()), local, psi), sub))
}
