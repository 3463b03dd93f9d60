//! Group actions on scwols and on complexes of groups.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::complex::{subdivide_cog, ComplexOfGroups};
use super::report::Report;
use super::scwol::{Scwol, Subdivision};
use crate::coxeter::FiniteGroupTable;
use crate::error::{Error, Result};

/// A left action `g.σ`, `g.a` of a finite group on a scwol, stored as one
/// vertex permutation and one edge permutation per group element.
#[derive(Debug, Clone)]
pub struct ScwolAction {
    pub group: Arc<FiniteGroupTable>,
    pub scwol: Arc<Scwol>,
    pub on_vertices: Vec<Vec<usize>>,
    pub on_edges: Vec<Vec<usize>>,
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

impl ScwolAction {
    pub fn trivial(scwol: Arc<Scwol>) -> Self {
        let id_v: Vec<usize> = (0..scwol.vertex_count()).collect();
        let id_e: Vec<usize> = (0..scwol.edge_count()).collect();
        Self { group: Arc::new(FiniteGroupTable::trivial()), on_vertices: vec![id_v], on_edges: vec![id_e], scwol }
    }

    /// Extends the permutations of the generators to every element along its word.
    pub fn from_generators(
        group: Arc<FiniteGroupTable>,
        scwol: Arc<Scwol>,
        gen_vertices: &[Vec<usize>],
        gen_edges: &[Vec<usize>],
    ) -> Self {
        let (nv, ne) = (scwol.vertex_count(), scwol.edge_count());
        let mut on_vertices = Vec::with_capacity(group.size());
        let mut on_edges = Vec::with_capacity(group.size());
        for g in 0..group.size() as u32 {
            let word = group.word(g);
            let mut v: Vec<usize> = (0..nv).collect();
            let mut e: Vec<usize> = (0..ne).collect();
            for &x in &word {
                v = compose(&v, &gen_vertices[x]);
                e = compose(&e, &gen_edges[x]);
            }
            on_vertices.push(v);
            on_edges.push(e);
        }
        Self { group, scwol, on_vertices, on_edges }
    }

    pub fn vertex(&self, g: u32, v: usize) -> usize {
        self.on_vertices[g as usize][v]
    }

    pub fn edge(&self, g: u32, a: usize) -> usize {
        self.on_edges[g as usize][a]
    }

    /// Sorted stabilizer of a vertex.
    pub fn stabilizer(&self, v: usize) -> Vec<u32> {
        (0..self.group.size() as u32).filter(|&g| self.vertex(g, v) == v).collect()
    }

    pub fn vertex_orbit(&self, v: usize) -> Vec<usize> {
        let mut o: Vec<usize> = self.on_vertices.iter().map(|p| p[v]).collect();
        o.sort_unstable();
        o.dedup();
        o
    }
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

/// Checks that the action is a homomorphism into the automorphisms of the
/// scwol, and both conditions for an action: `g.i(a) ≠ t(a)`, and
/// `g.i(a) = i(a)` implies `g.a = a`.
pub fn validate_action(act: &ScwolAction) -> Report {
    let mut r = Report::new();
    let x = &act.scwol;
    let (nv, ne, ng) = (x.vertex_count(), x.edge_count(), act.group.size());
    let shaped = act.on_vertices.len() == ng
        && act.on_edges.len() == ng
        && act.on_vertices.iter().all(|p| is_permutation(p, nv))
        && act.on_edges.iter().all(|p| is_permutation(p, ne));
    r.check(shaped, "shape", || "action".into(), || "each element must permute vertices and edges".into());
    if !shaped {
        return r;
    }
    r.check(
        act.on_vertices[0].iter().enumerate().all(|(v, &w)| v == w)
            && act.on_edges[0].iter().enumerate().all(|(a, &b)| a == b),
        "identity acts trivially",
        || "element 0".into(),
        || "the identity moves something".into(),
    );
    let pairs = x.composable_pairs();
    let per_element = (0..ng as u32)
        .into_par_iter()
        .map(|g| {
            let mut r = Report::new();
            let (pv, pe) = (&act.on_vertices[g as usize], &act.on_edges[g as usize]);
            for gen in 0..act.group.gens().len() {
                let gx = act.group.mul_gen(g, gen) as usize;
                let xg = act.group.gens()[gen] as usize;
                let ok = act.on_vertices[gx] == compose(pv, &act.on_vertices[xg])
                    && act.on_edges[gx] == compose(pe, &act.on_edges[xg]);
                r.check(ok, "homomorphism", || format!("element {g}, generator {gen}"), || {
                    "action of g x differs from action of g after x".into()
                });
            }
            for a in 0..ne {
                let (i, t) = x.edges[a];
                let b = pe[a];
                r.check(x.i(b) == pv[i] && x.t(b) == pv[t], "preserves incidence", || format!("element {g}, edge {a}"), || {
                    format!("g.a = {b} does not join g.i(a) to g.t(a)")
                });
                r.check(pv[i] != t, "g.i(a) != t(a)", || format!("element {g}, edge {a}"), || {
                    format!("g maps i(a) = {i} to t(a) = {t}")
                });
                if pv[i] == i {
                    r.check(b == a, "g.i(a) = i(a) implies g.a = a", || format!("element {g}, edge {a}"), || {
                        format!("g fixes i(a) = {i} but moves a to {b}")
                    });
                }
            }
            for &(a, b, ab) in &pairs {
                r.check(x.compose(pe[a], pe[b]) == Some(pe[ab]), "preserves composition", || {
                    format!("element {g}, edges ({a},{b})")
                }, || "g.(ab) differs from (g.a)(g.b)".into());
            }
            r
        })
        .reduce(Report::new, |mut a, b| {
            a.merge(b);
            a
        });
    r.merge(per_element);
    r
}

/// `H\X` with its projection. Orbits are numbered by their least member, and
/// each quotient vertex carries the tag of that member.
#[derive(Debug, Clone)]
pub struct QuotientScwol {
    pub scwol: Arc<Scwol>,
    pub vertex_proj: Vec<usize>,
    pub edge_proj: Vec<usize>,
    pub vertex_orbits: Vec<Vec<usize>>,
    pub edge_orbits: Vec<Vec<usize>>,
}

fn orbits(n: usize, perms: &[Vec<usize>]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut proj = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for v in 0..n {
        if proj[v] != usize::MAX {
            continue;
        }
        let mut o: Vec<usize> = perms.iter().map(|p| p[v]).collect();
        o.sort_unstable();
        o.dedup();
        for &w in &o {
            proj[w] = orbits.len();
        }
        orbits.push(o);
    }
    (proj, orbits)
}

/// The quotient scwol; composition is induced from composable pairs upstairs.
pub fn quotient_scwol(act: &ScwolAction) -> QuotientScwol {
    let x = &act.scwol;
    let (vertex_proj, vertex_orbits) = orbits(x.vertex_count(), &act.on_vertices);
    let (edge_proj, edge_orbits) = orbits(x.edge_count(), &act.on_edges);
    let tags = vertex_orbits.iter().map(|o| x.tags[o[0]].clone()).collect();
    let edges =
        edge_orbits.iter().map(|o| (vertex_proj[x.i(o[0])], vertex_proj[x.t(o[0])])).collect();
    let mut comp = HashMap::new();
    for (a, b, ab) in x.composable_pairs() {
        comp.insert((edge_proj[a], edge_proj[b]), edge_proj[ab]);
    }
    QuotientScwol { scwol: Arc::new(Scwol::new(tags, edges, comp)), vertex_proj, edge_proj, vertex_orbits, edge_orbits }
}

/// An action on a simple complex of groups by simple morphisms: the scwol
/// action plus isomorphisms `φ^h_σ: G_σ → G_{h.σ}`, stored as `local_isos[h][σ]`.
#[derive(Debug, Clone)]
pub struct CogAction {
    pub cog: Arc<ComplexOfGroups>,
    pub act: Arc<ScwolAction>,
    pub local_isos: Vec<Vec<Vec<u32>>>,
}

/// Checks the scwol action, that each `φ^h_σ` is an isomorphism,
/// `φ^{hx}_σ = φ^h_{x.σ} ∘ φ^x_σ` for every element `h` and generator `x`,
/// `φ^1 = id`, and `ψ_{h.a} ∘ φ^h_{i(a)} = φ^h_{t(a)} ∘ ψ_a` for all `h`, `a`.
pub fn validate_cog_action(ca: &CogAction) -> Report {
    let mut r = validate_action(&ca.act);
    let c = &*ca.cog;
    let act = &*ca.act;
    let x = &c.scwol;
    r.check(c.is_simple(), "source simple", || "complex".into(), || "the complex has nontrivial twists".into());
    r.check(**x == *act.scwol, "same scwol", || "action".into(), || "the action is on a different scwol".into());
    let ng = act.group.size();
    let shaped = ca.local_isos.len() == ng && ca.local_isos.iter().all(|m| m.len() == x.vertex_count());
    r.check(shaped, "shape", || "local isomorphisms".into(), || "one map per element and vertex is required".into());
    if !r.passed() {
        return r;
    }
    let per_element = (0..ng as u32)
        .into_par_iter()
        .map(|h| {
            let mut r = Report::new();
            let isos = &ca.local_isos[h as usize];
            for v in 0..x.vertex_count() {
                let (src, dst) = (&c.local[v], &c.local[act.vertex(h, v)]);
                let map = &isos[v];
                let ok = src.size() == dst.size()
                    && map.len() == src.size()
                    && map.iter().all(|&g| (g as usize) < dst.size())
                    && src.is_hom(dst, map)
                    && {
                        let mut img = map.clone();
                        img.sort_unstable();
                        img.dedup();
                        img.len() == map.len()
                    };
                r.check(ok, "local isomorphism", || format!("element {h}, vertex {v}"), || {
                    "phi^h is not an isomorphism onto the local group at h.v".into()
                });
                if !ok {
                    continue;
                }
                if h == 0 {
                    r.check(map.iter().enumerate().all(|(g, &y)| g as u32 == y), "identity acts trivially", || {
                        format!("vertex {v}")
                    }, || "phi^1 is not the identity".into());
                }
                for gen in 0..act.group.gens().len() {
                    let xg = act.group.gens()[gen];
                    let hx = act.group.mul_gen(h, gen);
                    let after = &isos[act.vertex(xg, v)];
                    let ok = ca.local_isos[xg as usize][v]
                        .iter()
                        .zip(&ca.local_isos[hx as usize][v])
                        .all(|(&y, &z)| after.get(y as usize) == Some(&z));
                    r.check(ok, "composition of local maps", || format!("element {h}, generator {gen}, vertex {v}"), || {
                        "phi^{hx} differs from phi^h after phi^x".into()
                    });
                }
            }
            for a in 0..x.edge_count() {
                let ha = act.edge(h, a);
                let (pi, pt) = (&isos[x.i(a)], &isos[x.t(a)]);
                let bad = (0..c.local[x.i(a)].size()).find(|&g| {
                    c.psi[ha].get(pi[g] as usize).copied() != Some(pt[c.psi[a][g] as usize])
                });
                r.check(bad.is_none(), "simple morphism square", || format!("element {h}, edge {a}"), || {
                    format!("psi_(h.a) phi^h and phi^h psi_a differ on element {}", bad.unwrap_or(0))
                });
            }
            r
        })
        .reduce(Report::new, |mut a, b| {
            a.merge(b);
            a
        });
    r.merge(per_element);
    r
}

/// Packages and validates an action by simple morphisms.
pub fn extend_action_to_cog(
    cog: Arc<ComplexOfGroups>,
    act: Arc<ScwolAction>,
    local_isos: Vec<Vec<Vec<u32>>>,
) -> std::result::Result<CogAction, Report> {
    let ca = CogAction { cog, act, local_isos };
    let r = validate_cog_action(&ca);
    if r.passed() {
        Ok(ca)
    } else {
        Err(r)
    }
}

/// Lifts an action on a poset scwol to its barycentric subdivision, acting on
/// chains elementwise.
pub fn subdivide_action(act: &ScwolAction, sub: &Subdivision) -> Result<ScwolAction> {
    let y = &sub.scwol;
    let mut on_vertices = Vec::with_capacity(act.group.size());
    let mut on_edges = Vec::with_capacity(act.group.size());
    for g in 0..act.group.size() as u32 {
        let verts = sub
            .chains
            .iter()
            .map(|ch| {
                let img: Vec<usize> = ch.iter().map(|&v| act.vertex(g, v)).collect();
                sub.chain_index
                    .get(&img)
                    .copied()
                    .ok_or_else(|| Error::Invalid(format!("element {g} does not map chain {ch:?} to a chain")))
            })
            .collect::<Result<Vec<usize>>>()?;
        let edges = y
            .edges
            .iter()
            .map(|&(i, t)| {
                y.edge_between(verts[i], verts[t])
                    .ok_or_else(|| Error::Invalid(format!("element {g} breaks the subdivision edge {i} -> {t}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        on_vertices.push(verts);
        on_edges.push(edges);
    }
    Ok(ScwolAction { group: act.group.clone(), scwol: Arc::new(y.clone()), on_vertices, on_edges })
}

/// Subdivides both the complex and the action; the chain `C` carries
/// `φ^h_{min C}`. The scwol part need not satisfy the action conditions before
/// subdividing, and the result is validated.
pub fn subdivide_cog_action(
    cog: &ComplexOfGroups,
    act: &ScwolAction,
    local_isos: &[Vec<Vec<u32>>],
) -> Result<(std::result::Result<CogAction, Report>, Subdivision)> {
    let (sc, sub) = subdivide_cog(cog)?;
    let mut sa = subdivide_action(act, &sub)?;
    sa.scwol = sc.scwol.clone();
    let isos = local_isos
        .iter()
        .map(|per| sub.chains.iter().map(|ch| per[ch[0]].clone()).collect())
        .collect();
    Ok((extend_action_to_cog(Arc::new(sc), Arc::new(sa), isos), sub))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::cog::complex::tests::{chain_complex, cyclic};
    use crate::cog::scwol::validate_scwol;
    use crate::coxeter::GenSet;

    /// Two edges `1 → 0` and `2 → 0`.
    pub(crate) fn vee() -> Arc<Scwol> {
        Arc::new(Scwol::from_poset(vec![vec![GenSet(1)], vec![GenSet(0)], vec![GenSet(0)]], vec![(1, 0), (2, 0)]))
    }

    pub(crate) fn vee_swap() -> ScwolAction {
        ScwolAction::from_generators(cyclic(2), vee(), &[vec![0, 2, 1]], &[vec![1, 0]])
    }

    #[test]
    fn trivial_and_swap_pass() {
        let x = vee();
        assert!(validate_action(&ScwolAction::trivial(x)).passed());
        let r = validate_action(&vee_swap());
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn parallel_edges_swapped_fail_condition_two() {
        let x = Arc::new(Scwol::new(vec![vec![GenSet(0)], vec![GenSet(1)]], vec![(0, 1), (0, 1)], HashMap::new()));
        let act = ScwolAction::from_generators(cyclic(2), x, &[vec![0, 1]], &[vec![1, 0]]);
        let r = validate_action(&act);
        assert!(r.has_axiom("g.i(a) = i(a) implies g.a = a"));
    }

    #[test]
    fn swapping_ends_fails_condition_one() {
        let x = Arc::new(Scwol::from_poset(vec![vec![GenSet(0)]; 2], vec![(0, 1)]));
        let act = ScwolAction {
            group: cyclic(2),
            scwol: x,
            on_vertices: vec![vec![0, 1], vec![1, 0]],
            on_edges: vec![vec![0], vec![0]],
        };
        let r = validate_action(&act);
        assert!(r.has_axiom("g.i(a) != t(a)"));
    }

    #[test]
    fn quotient_of_swap() {
        let q = quotient_scwol(&vee_swap());
        assert_eq!(q.scwol.vertex_count(), 2);
        assert_eq!(q.scwol.edge_count(), 1);
        assert!(validate_scwol(&q.scwol).passed());
        let t = quotient_scwol(&ScwolAction::trivial(vee()));
        assert_eq!(*t.scwol, *vee());
    }

    #[test]
    fn free_swap_of_two_chains() {
        let tags = vec![vec![GenSet(0)], vec![GenSet(1)], vec![GenSet(0)], vec![GenSet(1)]];
        let x = Arc::new(Scwol::from_poset(tags, vec![(0, 1), (2, 3)]));
        let act = ScwolAction::from_generators(cyclic(2), x, &[vec![2, 3, 0, 1]], &[vec![1, 0]]);
        assert!(validate_action(&act).passed());
        let q = quotient_scwol(&act);
        assert_eq!((q.scwol.vertex_count(), q.scwol.edge_count()), (2, 1));
    }

    #[test]
    fn trivial_cog_action() {
        let c = Arc::new(chain_complex());
        let act = Arc::new(ScwolAction::trivial(c.scwol.clone()));
        let isos = vec![c.local.iter().map(|g| (0..g.size() as u32).collect()).collect()];
        assert!(extend_action_to_cog(c.clone(), act.clone(), isos).is_ok());
        let mut bad: Vec<Vec<Vec<u32>>> = vec![c.local.iter().map(|g| (0..g.size() as u32).collect()).collect()];
        bad[0][2].swap(1, 2);
        let r = extend_action_to_cog(c, act, bad).unwrap_err();
        assert!(r.has_axiom("local isomorphism") || r.has_axiom("identity acts trivially"));
    }

    #[test]
    fn subdividing_fixes_condition_two() {
        // fixing 2 while swapping its two out-edges is fine once subdivided
        let tags = vec![vec![GenSet(1)], vec![GenSet(2)], vec![GenSet(3)]];
        let x = Arc::new(Scwol::from_poset(tags, vec![(2, 0), (2, 1)]));
        let act = ScwolAction::from_generators(cyclic(2), x.clone(), &[vec![1, 0, 2]], &[vec![1, 0]]);
        assert!(validate_action(&act).has_axiom("g.i(a) = i(a) implies g.a = a"));
        let local = vec![cyclic(1); 3];
        let c = ComplexOfGroups::simple(x, local, vec![vec![0]; 2]);
        let isos = vec![vec![vec![0]; 3]; 2];
        let (ca, sub) = subdivide_cog_action(&c, &act, &isos).unwrap();
        let ca = ca.unwrap();
        assert_eq!(sub.chains.len(), 5);
        assert!(validate_action(&ca.act).passed());
    }
}
