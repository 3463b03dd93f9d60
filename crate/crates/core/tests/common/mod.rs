//! Random small simple complexes of groups carrying a group action.
//!
//! A group `H` of order at most 6 acts on a disjoint union of coset spaces.
//! The simplices form a random `H`-invariant complex on those points, optionally
//! coned off. Its face poset (bigger simplex → face) carries cyclic local groups
//! `C_{d_0} ⊂ C_{d_1} ⊂ ⋯` that grow as simplices shrink, and `h` acts on every
//! local group by multiplication with `ρ(h) = ±1` for a random `ρ: H → {±1}`.

#![allow(dead_code)]

pub mod tits;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use davis_core::cog::{ComplexOfGroups, Scwol, ScwolAction};
use davis_core::coxeter::{left_cosets, FiniteGroupTable, GenSet, Subgroup};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub struct RandomCase {
    pub seed: u64,
    pub label: String,
    pub cog: ComplexOfGroups,
    pub act: ScwolAction,
    pub isos: Vec<Vec<Vec<u32>>>,
}

/// The group generated by permutations, as a table and the permutation behind
/// each table index.
pub fn permutation_group(gens: &[Vec<usize>]) -> (Arc<FiniteGroupTable>, Vec<Vec<usize>>) {
    let deg = gens.first().map_or(1, |g| g.len());
    let id: Vec<usize> = (0..deg).collect();
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
    let mut head = 0;
    while head < elems.len() {
        for g in gens {
            // x ∘ g
            let p: Vec<usize> = g.iter().map(|&i| elems[head][i]).collect();
            if !index.contains_key(&p) {
                index.insert(p.clone(), elems.len());
                elems.push(p);
            }
        }
        head += 1;
    }
    let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&i| a[i]).collect() };
    let mult: Vec<Vec<u32>> = elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&compose(a, b)] as u32).collect())
        .collect();
    let gen_idx: Vec<u32> = gens.iter().map(|g| index[g] as u32).collect();
    let (table, to_new) = FiniteGroupTable::from_mult(&mult, &gen_idx, (0..gens.len()).collect()).unwrap();
    let mut perms = vec![Vec::new(); elems.len()];
    for (old, p) in elems.into_iter().enumerate() {
        perms[to_new[old] as usize] = p;
    }
    (Arc::new(table), perms)
}

fn cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

/// `C1..C6`, `S3` and `C2 × C2` with their names.
pub fn acting_groups() -> Vec<(&'static str, Vec<Vec<usize>>)> {
    vec![
        ("C1", vec![]),
        ("C2", vec![cycle(2)]),
        ("C3", vec![cycle(3)]),
        ("C4", vec![cycle(4)]),
        ("C5", vec![cycle(5)]),
        ("C6", vec![cycle(6)]),
        ("S3", vec![vec![1, 0, 2], cycle(3)]),
        ("C2xC2", vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]]),
    ]
}

fn cyclic(d: usize) -> Arc<FiniteGroupTable> {
    let mult: Vec<Vec<u32>> = (0..d).map(|a| (0..d).map(|b| ((a + b) % d) as u32).collect()).collect();
    let gens: Vec<u32> = if d > 1 { vec![1] } else { vec![] };
    let (t, to_new) = FiniteGroupTable::from_mult(&mult, &gens, (0..gens.len()).collect()).unwrap();
    assert!(to_new.iter().enumerate().all(|(i, &j)| i == j as usize));
    Arc::new(t)
}

/// Every homomorphism `H → {±1}` as a sign per element.
fn signs(h: &FiniteGroupTable) -> Vec<Vec<i64>> {
    let c2 = cyclic(2);
    let k = h.gens().len();
    let mut out = Vec::new();
    for mask in 0..(1u32 << k) {
        let images: Vec<u32> = (0..k).map(|i| (mask >> i) & 1).collect();
        if let Ok(map) = h.extend_to_hom(&c2, &images) {
            let s: Vec<i64> = map.iter().map(|&x| if x == 0 { 1 } else { -1 }).collect();
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out
}

pub fn random_case(seed: u64) -> RandomCase {
    let mut rng = StdRng::seed_from_u64(seed);
    let groups = acting_groups();
    let (name, gens) = &groups[rng.gen_range(0..groups.len())];
    let (h, _) = permutation_group(gens);
    let order = h.size();

    // points: one or two coset spaces H/⟨x⟩, and at least two points
    let mut actions: Vec<Vec<usize>> = vec![Vec::new(); order];
    let mut npoints = 0;
    let spaces = rng.gen_range(1..=2);
    let mut cosets_desc = Vec::new();
    for round in 0..4 {
        if round >= spaces && npoints >= 2 {
            break;
        }
        // half the time a free orbit
        let x = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(0..order as u32) };
        let k = Subgroup::generated_by(h.clone(), vec![x]);
        let (cosets, id) = left_cosets(&h, &k.members);
        if npoints + cosets.len() > 8 && npoints > 0 {
            continue;
        }
        for (g, row) in actions.iter_mut().enumerate() {
            for c in &cosets {
                row.push(npoints + id[h.mul(g as u32, c[0]) as usize]);
            }
        }
        cosets_desc.push(cosets.len());
        npoints += cosets.len();
    }

    // an H-invariant simplicial complex on the points
    let mut simplices: BTreeSet<Vec<usize>> = (0..npoints).map(|p| vec![p]).collect();
    let extra = rng.gen_range(1..=3);
    for _ in 0..extra {
        let size = rng.gen_range(2..=3.min(npoints).max(2));
        let mut pts: Vec<usize> = (0..npoints).collect();
        pts.shuffle(&mut rng);
        let mut s: Vec<usize> = pts.into_iter().take(size).collect();
        s.sort_unstable();
        if s.len() < 2 {
            continue;
        }
        for row in &actions {
            let mut img: Vec<usize> = s.iter().map(|&p| row[p]).collect();
            img.sort_unstable();
            img.dedup();
            for mask in 1u32..(1 << img.len()) {
                let face: Vec<usize> =
                    img.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
                simplices.insert(face);
            }
        }
    }
    let cone = simplices.len() <= 24 && rng.gen_bool(0.3);
    if cone {
        let apex = npoints;
        for row in &mut actions {
            row.push(apex);
        }
        let old: Vec<Vec<usize>> = simplices.iter().cloned().collect();
        simplices.insert(vec![apex]);
        for s in old {
            let mut t = s;
            t.push(apex);
            simplices.insert(t);
        }
    }
    let simplices: Vec<Vec<usize>> = simplices.into_iter().collect();
    let index: HashMap<&Vec<usize>, usize> = simplices.iter().enumerate().map(|(i, s)| (s, i)).collect();

    // face poset, oriented from a simplex to its proper faces
    let is_face = |a: &[usize], b: &[usize]| a.len() < b.len() && a.iter().all(|p| b.contains(p));
    let mut relations = Vec::new();
    for (x, sx) in simplices.iter().enumerate() {
        for (y, sy) in simplices.iter().enumerate() {
            if is_face(sy, sx) {
                relations.push((x, y));
            }
        }
    }
    let tags = simplices.iter().map(|s| vec![GenSet(1 << (s.len() - 1))]).collect();
    let scwol = Arc::new(Scwol::from_poset(tags, relations));

    // cyclic local groups growing toward smaller simplices
    let top = simplices.iter().map(|s| s.len()).max().unwrap();
    let mut chain = vec![rng.gen_range(1..=3usize)];
    while chain.len() < top {
        let last = *chain.last().unwrap();
        let f = *[1, 1, 2, 3].choose(&mut rng).unwrap();
        chain.push(if last * f <= 12 { last * f } else { last });
    }
    // simplex of size k carries C_{chain[top - k]}
    let d_of = |s: &Vec<usize>| chain[top - s.len()];
    let local: Vec<Arc<FiniteGroupTable>> = simplices.iter().map(|s| cyclic(d_of(s))).collect();
    let psi = scwol
        .edges
        .iter()
        .map(|&(i, t)| {
            let (a, b) = (d_of(&simplices[i]), d_of(&simplices[t]));
            (0..a as u32).map(|k| k * (b / a) as u32).collect()
        })
        .collect();
    let cog = ComplexOfGroups::simple(scwol.clone(), local, psi);

    let on_vertices: Vec<Vec<usize>> = actions
        .iter()
        .map(|row| {
            simplices
                .iter()
                .map(|s| {
                    let mut img: Vec<usize> = s.iter().map(|&p| row[p]).collect();
                    img.sort_unstable();
                    index[&img]
                })
                .collect()
        })
        .collect();
    let on_edges = on_vertices
        .iter()
        .map(|verts| {
            scwol.edges.iter().map(|&(i, t)| scwol.edge_between(verts[i], verts[t]).expect("edge image")).collect()
        })
        .collect();
    let act = ScwolAction { group: h.clone(), scwol, on_vertices, on_edges };

    let rhos = signs(&h);
    let rho = rhos[rng.gen_range(0..rhos.len())].clone();
    let isos = (0..order)
        .map(|g| {
            simplices
                .iter()
                .map(|s| {
                    let d = d_of(s) as i64;
                    (0..d).map(|k| (rho[g] * k).rem_euclid(d) as u32).collect()
                })
                .collect()
        })
        .collect();

    let twisted = rho.iter().any(|&r| r < 0);
    let label = format!(
        "seed {seed}: {name} on cosets {cosets_desc:?}{}, {} simplices, groups {chain:?}{}",
        if cone { " + apex" } else { "" },
        simplices.len(),
        if twisted { ", sign twist" } else { "" }
    );
    RandomCase { seed, label, cog, act, isos }
}

/// Subdivides, checks the action, induces `H(Z)` and checks it, the covering
/// `Λ` and the canonical morphism to `H`.
pub fn check_case(case: &RandomCase) -> Result<(), String> {
    use davis_core::cog::{
        canonical_morphism_to_group, induce_quotient_cog, subdivide_cog_action, validate_cog, validate_covering,
        validate_morphism_to_group, LiftPolicy,
    };
    let (ca, _) = subdivide_cog_action(&case.cog, &case.act, &case.isos).map_err(|e| e.to_string())?;
    let ca = ca.map_err(|r| format!("action: {r}"))?;
    for policy in [LiftPolicy::Least, LiftPolicy::Greatest] {
        let iq = induce_quotient_cog(&ca, policy).map_err(|e| e.to_string())?;
        let r = validate_cog(&iq.hz);
        if !r.passed() {
            return Err(format!("H(Z) ({policy:?}): {r}"));
        }
        let r = validate_covering(&iq.lambda);
        if !r.passed() {
            return Err(format!("covering ({policy:?}): {r}"));
        }
        let r = validate_morphism_to_group(&canonical_morphism_to_group(&iq.hz, &iq.data));
        if !r.passed() {
            return Err(format!("morphism to H ({policy:?}): {r}"));
        }
    }
    Ok(())
}
