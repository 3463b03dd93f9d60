//! The complex of groups induced on a quotient by an action by simple morphisms.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::action::{quotient_scwol, CogAction, QuotientScwol};
use super::complex::ComplexOfGroups;
use super::morphism::{CogMorphism, MorphismToGroup};
use crate::coxeter::group::DENSE_LIMIT;
use crate::coxeter::FiniteGroupTable;
use crate::error::{Error, Result};

/// Which member of each orbit serves as its lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LiftPolicy {
    Least,
    Greatest,
}

/// The choices behind `H(Z)`: lifts `τ̄`, edge lifts `ā` with `i(ā) = τ̄`
/// for `τ = i(a)`, transporters `h_a` with `h_a.t(ā) = \overline{t(a)}` and
/// `k_σ` with `k_σ.σ = \overline{p(σ)}`. Group elements are the least ones in
/// table order satisfying their equation.
#[derive(Debug, Clone)]
pub struct InducedQuotientData {
    pub policy: LiftPolicy,
    pub group: Arc<FiniteGroupTable>,
    pub quotient: QuotientScwol,
    pub lifts: Vec<usize>,
    pub edge_lifts: Vec<usize>,
    pub h_edge: Vec<u32>,
    pub k_vertex: Vec<u32>,
    /// `Stab_H(τ̄)`, sorted; the identity comes first.
    pub stabilizers: Vec<Vec<u32>>,
    /// `(g, h)` with `h` at position `j` of the stabilizer ↦ element of `H_τ`,
    /// indexed by `g·|Stab| + j`
    pub pair_to_elem: Vec<Vec<u32>>,
    /// element of `H_τ` ↦ `(g, h)` with `h` an element of the acting group
    pub elem_to_pair: Vec<Vec<(u32, u32)>>,
}

impl InducedQuotientData {
    /// The element `(g, h)` of `H_τ`, if `h` stabilizes `τ̄`.
    pub fn pair(&self, tau: usize, g: u32, h: u32) -> Option<u32> {
        let s = &self.stabilizers[tau];
        let j = s.binary_search(&h).ok()?;
        Some(self.pair_to_elem[tau][g as usize * s.len() + j])
    }
}

#[derive(Debug, Clone)]
pub struct InducedQuotient {
    pub hz: Arc<ComplexOfGroups>,
    /// The covering `Λ: G(Y) → H(Z)`.
    pub lambda: CogMorphism,
    pub data: InducedQuotientData,
}

fn least(group: &FiniteGroupTable, pred: impl Fn(u32) -> bool) -> Option<u32> {
    (0..group.size() as u32).find(|&g| pred(g))
}

fn greedy_generators(group: &FiniteGroupTable, members: &[u32]) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut reached = vec![0u32];
    for &h in members {
        if reached.binary_search(&h).is_err() {
            gens.push(h);
            reached = group.closure(&gens);
            reached.sort_unstable();
        }
    }
    gens
}

/// `G_τ̄ ⋊ Stab_H(τ̄)` with `(g, h)(g', h') = (g·φ^h(g'), hh')`.
fn semidirect(
    ca: &CogAction,
    v: usize,
    stab: &[u32],
) -> Result<(FiniteGroupTable, Vec<u32>, Vec<(u32, u32)>)> {
    let g = &ca.cog.local[v];
    let h = &ca.act.group;
    let (ng, ns) = (g.size(), stab.len());
    let n = ng * ns;
    if n > DENSE_LIMIT {
        return Err(Error::Resource(format!(
            "semidirect product of order {n} exceeds the dense table limit {DENSE_LIMIT}"
        )));
    }
    let pos: HashMap<u32, usize> = stab.iter().enumerate().map(|(j, &s)| (s, j)).collect();
    let mult: Vec<Vec<u32>> = (0..n)
        .map(|p| {
            let (g1, j1) = (p / ns, p % ns);
            let twist = &ca.local_isos[stab[j1] as usize][v];
            (0..n)
                .map(|q| {
                    let (g2, j2) = (q / ns, q % ns);
                    let gg = g.mul(g1 as u32, twist[g2]);
                    let hh = pos[&h.mul(stab[j1], stab[j2])];
                    (gg as usize * ns + hh) as u32
                })
                .collect()
        })
        .collect();
    let mut gens: Vec<u32> = g.gens().iter().map(|&x| x * ns as u32).collect();
    gens.extend(greedy_generators(h, stab).into_iter().map(|s| pos[&s] as u32));
    let labels = (0..gens.len()).collect();
    let (table, to_new) = FiniteGroupTable::from_mult(&mult, &gens, labels)?;
    let mut back = vec![(0, 0); n];
    for (p, &e) in to_new.iter().enumerate() {
        back[e as usize] = ((p / ns) as u32, stab[p % ns]);
    }
    Ok((table, to_new, back))
}

/// Builds `H(Z)` over `H\Y` and the covering `Λ: G(Y) → H(Z)`.
pub fn induce_quotient_cog(ca: &CogAction, policy: LiftPolicy) -> Result<InducedQuotient> {
    let act = &*ca.act;
    let group = act.group.clone();
    let y = &*ca.cog.scwol;
    let q = quotient_scwol(act);
    let z = q.scwol.clone();
    let pick = |o: &Vec<usize>| match policy {
        LiftPolicy::Least => o[0],
        LiftPolicy::Greatest => *o.last().expect("orbits are nonempty"),
    };
    let lifts: Vec<usize> = q.vertex_orbits.iter().map(pick).collect();
    let mut edge_lifts = Vec::with_capacity(z.edge_count());
    for (a, orbit) in q.edge_orbits.iter().enumerate() {
        let from = lifts[z.i(a)];
        let mut it = orbit.iter().copied().filter(|&e| y.i(e) == from);
        let first = it.next().ok_or_else(|| Error::Invalid(format!("no lift of quotient edge {a}")))?;
        if it.next().is_some() {
            return Err(Error::Invalid(format!("quotient edge {a} has several lifts at vertex {from}")));
        }
        edge_lifts.push(first);
    }
    let h_edge = (0..z.edge_count())
        .map(|a| {
            let (e, want) = (edge_lifts[a], lifts[z.t(a)]);
            least(&group, |h| act.vertex(h, y.t(e)) == want)
                .ok_or_else(|| Error::Invalid(format!("no transporter for quotient edge {a}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    let k_vertex = (0..y.vertex_count())
        .map(|s| {
            let want = lifts[q.vertex_proj[s]];
            least(&group, |h| act.vertex(h, s) == want)
                .ok_or_else(|| Error::Invalid(format!("no transporter for vertex {s}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    let stabilizers: Vec<Vec<u32>> = lifts.iter().map(|&v| act.stabilizer(v)).collect();

    let mut local = Vec::with_capacity(z.vertex_count());
    let mut pair_to_elem = Vec::with_capacity(z.vertex_count());
    let mut elem_to_pair = Vec::with_capacity(z.vertex_count());
    for (tau, &v) in lifts.iter().enumerate() {
        let (table, fwd, back) = semidirect(ca, v, &stabilizers[tau])?;
        local.push(Arc::new(table));
        pair_to_elem.push(fwd);
        elem_to_pair.push(back);
    }
    let data = InducedQuotientData {
        policy,
        group: group.clone(),
        quotient: q,
        lifts,
        edge_lifts,
        h_edge,
        k_vertex,
        stabilizers,
        pair_to_elem,
        elem_to_pair,
    };
    let pair = |tau: usize, g: u32, h: u32, what: &dyn Fn() -> String| {
        data.pair(tau, g, h).ok_or_else(|| Error::Invalid(format!("{} leaves the stabilizer", what())))
    };

    let mut theta = Vec::with_capacity(z.edge_count());
    for a in 0..z.edge_count() {
        let (i, t) = z.edges[a];
        let e = data.edge_lifts[a];
        let ha = data.h_edge[a];
        let phi = &ca.local_isos[ha as usize][y.t(e)];
        let map = data.elem_to_pair[i]
            .iter()
            .map(|&(g, h)| {
                let g2 = phi[ca.cog.psi[e][g as usize] as usize];
                let h2 = group.mul(group.mul(ha, h), group.inv(ha));
                pair(t, g2, h2, &|| format!("theta of quotient edge {a}"))
            })
            .collect::<Result<Vec<u32>>>()?;
        theta.push(map);
    }
    let mut twist = HashMap::new();
    for (a, b, ab) in z.composable_pairs() {
        let h = group.mul(group.mul(data.h_edge[a], data.h_edge[b]), group.inv(data.h_edge[ab]));
        if h != 0 {
            twist.insert((a, b), pair(z.t(a), 0, h, &|| format!("twist of ({a},{b})"))?);
        }
    }
    let hz = Arc::new(ComplexOfGroups { scwol: z.clone(), local, psi: theta, twist });

    let local_maps = (0..y.vertex_count())
        .map(|s| {
            let tau = data.quotient.vertex_proj[s];
            let phi = &ca.local_isos[data.k_vertex[s] as usize][s];
            phi.iter().map(|&g| pair(tau, g, 0, &|| format!("lambda at vertex {s}"))).collect()
        })
        .collect::<Result<Vec<Vec<u32>>>>()?;
    let edge_elts = (0..y.edge_count())
        .map(|a| {
            let b = data.quotient.edge_proj[a];
            let k = group.mul(data.k_vertex[y.t(a)], group.inv(data.k_vertex[y.i(a)]));
            let h = group.mul(k, group.inv(data.h_edge[b]));
            pair(z.t(b), 0, h, &|| format!("lambda of edge {a}"))
        })
        .collect::<Result<Vec<u32>>>()?;
    let lambda = CogMorphism {
        source: ca.cog.clone(),
        target: hz.clone(),
        vertex_map: data.quotient.vertex_proj.clone(),
        edge_map: data.quotient.edge_proj.clone(),
        local_maps,
        edge_elts,
    };
    Ok(InducedQuotient { hz, lambda, data })
}

/// `Φ: H(Z) → H`, trivial on each `G_τ̄` factor and the inclusion on
/// `Stab_H(τ̄)`, with `φ(b) = h_b`.
pub fn canonical_morphism_to_group(hz: &Arc<ComplexOfGroups>, data: &InducedQuotientData) -> MorphismToGroup {
    MorphismToGroup {
        source: hz.clone(),
        group: data.group.clone(),
        local_maps: data.elem_to_pair.iter().map(|v| v.iter().map(|&(_, h)| h).collect()).collect(),
        edge_elts: data.h_edge.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cog::action::tests::vee_swap;
    use crate::cog::action::{extend_action_to_cog, ScwolAction};
    use crate::cog::complex::tests::{chain_complex, cyclic};
    use crate::cog::complex::validate_cog;
    use crate::cog::morphism::{validate_covering, validate_morphism_to_group};

    fn identity_isos(c: &ComplexOfGroups, copies: usize) -> Vec<Vec<Vec<u32>>> {
        vec![c.local.iter().map(|g| (0..g.size() as u32).collect()).collect(); copies]
    }

    #[test]
    fn trivial_action_reproduces_the_complex() {
        let c = Arc::new(chain_complex());
        let act = Arc::new(ScwolAction::trivial(c.scwol.clone()));
        let ca = extend_action_to_cog(c.clone(), act, identity_isos(&c, 1)).unwrap();
        let iq = induce_quotient_cog(&ca, LiftPolicy::Least).unwrap();
        assert_eq!(iq.hz.local_orders(), c.local_orders());
        assert!(iq.hz.is_simple());
        assert!(validate_cog(&iq.hz).passed());
        let r = validate_covering(&iq.lambda);
        assert!(r.passed(), "{r}");
        let m = canonical_morphism_to_group(&iq.hz, &iq.data);
        assert!(validate_morphism_to_group(&m).passed());
    }

    #[test]
    fn swap_of_a_vee() {
        let act = vee_swap();
        // both tops map into the C2 at the bottom
        let c = Arc::new(ComplexOfGroups::simple(act.scwol.clone(), vec![cyclic(2), cyclic(1), cyclic(1)], vec![
            vec![0],
            vec![0],
        ]));
        assert!(validate_cog(&c).passed());
        let isos = vec![identity_isos(&c, 1)[0].clone(); 2];
        let ca = extend_action_to_cog(c.clone(), Arc::new(act), isos).unwrap();
        for policy in [LiftPolicy::Least, LiftPolicy::Greatest] {
            let iq = induce_quotient_cog(&ca, policy).unwrap();
            // bottom C2 ⋊ C2, top trivial
            assert_eq!(iq.hz.local_orders(), vec![4, 1]);
            assert!(validate_cog(&iq.hz).passed());
            let r = validate_covering(&iq.lambda);
            assert!(r.passed(), "{r}");
            let m = canonical_morphism_to_group(&iq.hz, &iq.data);
            assert!(validate_morphism_to_group(&m).passed());
            // the kernel of each local map is exactly the G factor
            for (tau, pairs) in iq.data.elem_to_pair.iter().enumerate() {
                let kernel = m.local_maps[tau].iter().filter(|&&h| h == 0).count();
                assert_eq!(kernel, pairs.iter().filter(|p| p.1 == 0).count());
                assert_eq!(kernel, ca.cog.local[iq.data.lifts[tau]].size());
            }
        }
    }

    #[test]
    fn broken_edge_element_breaks_the_covering() {
        let act = vee_swap();
        let c = Arc::new(ComplexOfGroups::simple(act.scwol.clone(), vec![cyclic(2), cyclic(1), cyclic(1)], vec![
            vec![0],
            vec![0],
        ]));
        let isos = vec![identity_isos(&c, 1)[0].clone(); 2];
        let ca = extend_action_to_cog(c, Arc::new(act), isos).unwrap();
        let mut iq = induce_quotient_cog(&ca, LiftPolicy::Least).unwrap();
        assert!(validate_covering(&iq.lambda).passed());
        let stab_elt = iq.data.pair(0, 0, 1).unwrap();
        let e = iq.lambda.edge_elts.iter().position(|&x| x != stab_elt).unwrap();
        iq.lambda.edge_elts[e] = stab_elt;
        assert!(!validate_covering(&iq.lambda).passed());
    }
}
