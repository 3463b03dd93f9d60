//! Morphisms of complexes of groups, morphisms to a group, and coverings.

use std::sync::Arc;

use rayon::prelude::*;

use super::complex::ComplexOfGroups;
use super::report::Report;
use crate::coxeter::{left_cosets, FiniteGroupTable};

/// `Φ: G(Y) → H(Z)` over a scwol morphism `f`: local maps `φ_σ: G_σ → H_{f(σ)}`
/// and elements `φ(a) ∈ H_{t(f(a))}`.
#[derive(Debug, Clone)]
pub struct CogMorphism {
    pub source: Arc<ComplexOfGroups>,
    pub target: Arc<ComplexOfGroups>,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
    pub local_maps: Vec<Vec<u32>>,
    pub edge_elts: Vec<u32>,
}

impl CogMorphism {
    pub fn identity(c: Arc<ComplexOfGroups>) -> Self {
        let x = &c.scwol;
        Self {
            vertex_map: (0..x.vertex_count()).collect(),
            edge_map: (0..x.edge_count()).collect(),
            local_maps: c.local.iter().map(|g| (0..g.size() as u32).collect()).collect(),
            edge_elts: vec![0; x.edge_count()],
            source: c.clone(),
            target: c,
        }
    }
}

/// A morphism from a complex of groups to a group viewed as a complex of groups
/// over a single vertex.
#[derive(Debug, Clone)]
pub struct MorphismToGroup {
    pub source: Arc<ComplexOfGroups>,
    pub group: Arc<FiniteGroupTable>,
    pub local_maps: Vec<Vec<u32>>,
    pub edge_elts: Vec<u32>,
}

fn merged(mut a: Report, b: Report) -> Report {
    a.merge(b);
    a
}

fn shape(m: &CogMorphism) -> Report {
    let (src, tgt) = (&m.source.scwol, &m.target.scwol);
    let mut r = Report::new();
    r.check(
        m.vertex_map.len() == src.vertex_count()
            && m.edge_map.len() == src.edge_count()
            && m.local_maps.len() == src.vertex_count()
            && m.edge_elts.len() == src.edge_count()
            && m.vertex_map.iter().all(|&v| v < tgt.vertex_count())
            && m.edge_map.iter().all(|&b| b < tgt.edge_count()),
        "shape",
        || "morphism".into(),
        || "maps do not match the source and target sizes".into(),
    );
    if !r.passed() {
        return r;
    }
    for v in 0..src.vertex_count() {
        let (g, h) = (&m.source.local[v], &m.target.local[m.vertex_map[v]]);
        let map = &m.local_maps[v];
        let ok = map.len() == g.size() && map.iter().all(|&y| (y as usize) < h.size());
        r.check(ok, "shape", || format!("vertex {v}"), || "local map has the wrong size".into());
    }
    for a in 0..src.edge_count() {
        let h = &m.target.local[tgt.t(m.edge_map[a])];
        r.check((m.edge_elts[a] as usize) < h.size(), "shape", || format!("edge {a}"), || {
            "edge element out of range".into()
        });
    }
    r
}

/// Checks that `f` is a scwol morphism, each `φ_σ` is a homomorphism,
/// `Ad(φ(a)) ∘ θ_{f(a)} ∘ φ_{i(a)} = φ_{t(a)} ∘ ψ_a` on every edge, and
/// `φ_{t(a)}(g_{a,b}) φ(ab) = φ(a) θ_{f(a)}(φ(b)) h_{f(a),f(b)}` on every
/// composable pair.
pub fn validate_morphism(m: &CogMorphism) -> Report {
    let mut r = shape(m);
    if !r.passed() {
        return r;
    }
    let (c, d) = (&*m.source, &*m.target);
    let (x, y) = (&c.scwol, &d.scwol);
    for a in 0..x.edge_count() {
        let b = m.edge_map[a];
        r.check(
            y.i(b) == m.vertex_map[x.i(a)] && y.t(b) == m.vertex_map[x.t(a)],
            "scwol morphism",
            || format!("edge {a}"),
            || format!("f(a) = {b} does not join f(i(a)) to f(t(a))"),
        );
    }
    for (a, b, ab) in x.composable_pairs() {
        let got = y.compose(m.edge_map[a], m.edge_map[b]);
        r.check(got == Some(m.edge_map[ab]), "scwol morphism", || format!("edges ({a},{b})"), || {
            format!("f(ab) = {} but f(a)f(b) = {got:?}", m.edge_map[ab])
        });
    }
    if !r.passed() {
        return r;
    }
    for v in 0..x.vertex_count() {
        let ok = c.local[v].is_hom(&d.local[m.vertex_map[v]], &m.local_maps[v]);
        r.check(ok, "local map homomorphism", || format!("vertex {v}"), || "not a homomorphism".into());
    }
    let squares = (0..x.edge_count())
        .into_par_iter()
        .map(|a| {
            let mut r = Report::new();
            let fa = m.edge_map[a];
            let h = &d.local[y.t(fa)];
            let (phi_i, phi_t) = (&m.local_maps[x.i(a)], &m.local_maps[x.t(a)]);
            let bad = (0..c.local[x.i(a)].size()).find(|&g| {
                let lhs = h.conj(m.edge_elts[a], d.psi[fa][phi_i[g] as usize]);
                lhs != phi_t[c.psi[a][g] as usize]
            });
            r.check(bad.is_none(), "square", || format!("edge {a}"), || {
                format!("Ad(phi(a)) theta phi_i(a) and phi_t(a) psi_a differ on element {}", bad.unwrap_or(0))
            });
            r
        })
        .reduce(Report::new, merged);
    r.merge(squares);
    let pairs = x
        .composable_pairs()
        .into_par_iter()
        .map(|(a, b, ab)| {
            let mut r = Report::new();
            let (fa, fb) = (m.edge_map[a], m.edge_map[b]);
            let h = &d.local[y.t(fa)];
            let lhs = h.mul(m.local_maps[x.t(a)][c.twist(a, b) as usize], m.edge_elts[ab]);
            let rhs = h.mul(h.mul(m.edge_elts[a], d.psi[fa][m.edge_elts[b] as usize]), d.twist(fa, fb));
            r.check(lhs == rhs, "composition", || format!("edges ({a},{b})"), || {
                format!("phi_t(a)(g_ab) phi(ab) = {lhs} but phi(a) theta(phi(b)) h = {rhs}")
            });
            r
        })
        .reduce(Report::new, merged);
    r.merge(pairs);
    r
}

fn nondegenerate(m: &CogMorphism) -> Report {
    let mut r = Report::new();
    let (x, y) = (&m.source.scwol, &m.target.scwol);
    for v in 0..x.vertex_count() {
        let mut images: Vec<usize> = x.edges_out_of(v).iter().map(|&a| m.edge_map[a]).collect();
        images.sort_unstable();
        let mut expected = y.edges_out_of(m.vertex_map[v]).to_vec();
        expected.sort_unstable();
        r.check(images == expected, "nondegenerate", || format!("vertex {v}"), || {
            format!("edges leaving {v} map to {images:?}, expected a bijection onto {expected:?}")
        });
    }
    r
}

fn coset_bijection(m: &CogMorphism, sigma: usize) -> Report {
    let mut r = Report::new();
    let (c, d) = (&*m.source, &*m.target);
    let (x, y) = (&c.scwol, &d.scwol);
    let tau = m.vertex_map[sigma];
    let g = &c.local[sigma];
    let h = &d.local[tau];
    let phi = &m.local_maps[sigma];
    for &b in y.edges_into(tau) {
        let (targets, target_id) = left_cosets(h, &d.image(b));
        let mut hits = vec![0usize; targets.len()];
        let fiber: Vec<usize> = x.edges_into(sigma).iter().copied().filter(|&a| m.edge_map[a] == b).collect();
        for &a in &fiber {
            let (sources, _) = left_cosets(g, &c.image(a));
            for (k, coset) in sources.iter().enumerate() {
                let mut ids: Vec<usize> = coset
                    .iter()
                    .map(|&e| target_id[h.mul(phi[e as usize], m.edge_elts[a]) as usize])
                    .collect();
                ids.sort_unstable();
                ids.dedup();
                r.check(ids.len() == 1, "coset map well-defined", || format!("vertex {sigma}, edge {a}"), || {
                    format!("coset {k} lands in {} target cosets", ids.len())
                });
                hits[ids[0]] += 1;
            }
        }
        let doubled = hits.iter().filter(|&&k| k > 1).count();
        let missed = hits.iter().filter(|&&k| k == 0).count();
        r.check(doubled == 0, "coset map injective", || format!("vertex {sigma}, target edge {b}"), || {
            format!("{doubled} target cosets are hit more than once (fiber {fiber:?})")
        });
        r.check(missed == 0, "coset map surjective", || format!("vertex {sigma}, target edge {b}"), || {
            format!("{missed} of {} target cosets are missed (fiber {fiber:?})", hits.len())
        });
    }
    r
}

/// Checks that `m` is a covering: a morphism over a nondegenerate scwol
/// morphism with injective local maps, such that for every source vertex `σ`
/// and target edge `b` into `f(σ)` the map
/// `∐_{a ∈ f⁻¹(b), t(a)=σ} G_σ/ψ_a(G_{i(a)}) → H_{f(σ)}/θ_b(H_{i(b)})`,
/// `g ↦ φ_σ(g)φ(a)`, is a bijection.
pub fn validate_covering(m: &CogMorphism) -> Report {
    let mut r = validate_morphism(m);
    if r.has_axiom("shape") || r.has_axiom("scwol morphism") {
        return r;
    }
    for v in 0..m.source.vertex_count() {
        let mut img = m.local_maps[v].clone();
        img.sort_unstable();
        img.dedup();
        r.check(img.len() == m.local_maps[v].len(), "local map injective", || format!("vertex {v}"), || {
            "local map is not injective".into()
        });
    }
    r.merge(nondegenerate(m));
    let cosets = (0..m.source.vertex_count())
        .into_par_iter()
        .map(|v| coset_bijection(m, v))
        .reduce(Report::new, merged);
    r.merge(cosets);
    r
}

/// Checks `φ_{t(a)} ∘ ψ_a = Ad(φ(a)) ∘ φ_{i(a)}` and
/// `φ_{t(a)}(g_{a,b}) φ(ab) = φ(a) φ(b)`.
pub fn validate_morphism_to_group(m: &MorphismToGroup) -> Report {
    let mut r = Report::new();
    let c = &*m.source;
    let x = &c.scwol;
    let h = &*m.group;
    let ok = m.local_maps.len() == x.vertex_count()
        && m.edge_elts.len() == x.edge_count()
        && m.edge_elts.iter().all(|&e| (e as usize) < h.size());
    r.check(ok, "shape", || "morphism".into(), || "maps do not match the source".into());
    if !ok {
        return r;
    }
    for v in 0..x.vertex_count() {
        let ok = c.local[v].is_hom(h, &m.local_maps[v]);
        r.check(ok, "local map homomorphism", || format!("vertex {v}"), || "not a homomorphism".into());
    }
    if !r.passed() {
        return r;
    }
    for a in 0..x.edge_count() {
        let (phi_i, phi_t) = (&m.local_maps[x.i(a)], &m.local_maps[x.t(a)]);
        let bad = (0..c.local[x.i(a)].size())
            .find(|&g| phi_t[c.psi[a][g] as usize] != h.conj(m.edge_elts[a], phi_i[g]));
        r.check(bad.is_none(), "square", || format!("edge {a}"), || {
            format!("phi_t(a) psi_a and Ad(phi(a)) phi_i(a) differ on element {}", bad.unwrap_or(0))
        });
    }
    for (a, b, ab) in x.composable_pairs() {
        let lhs = h.mul(m.local_maps[x.t(a)][c.twist(a, b) as usize], m.edge_elts[ab]);
        let rhs = h.mul(m.edge_elts[a], m.edge_elts[b]);
        r.check(lhs == rhs, "composition", || format!("edges ({a},{b})"), || {
            format!("phi_t(a)(g_ab) phi(ab) = {lhs} but phi(a) phi(b) = {rhs}")
        });
    }
    r
}
