//! `H_n` acting on `Y_n`, on `G(Y_n)` over the barycentric subdivision, and the
//! resulting fundamental domain and induced complex of groups.

use std::sync::Arc;

use super::wreath::{WreathElement, WreathGroup};
use crate::cog::{
    induce_quotient_cog, quotient_scwol, subdivide_cog_action, CogAction, InducedQuotient, LiftPolicy,
    QuotientScwol, ScwolAction, Subdivision,
};
use crate::coxeter::group::DENSE_LIMIT;
use crate::coxeter::FiniteGroupTable;
use crate::davis::{ChamberComplex, GYn, LocalGroup};
use crate::error::{Error, Result};
use crate::nerve::LabelAut;

/// The action of `H_n` on the (unsubdivided) typed scwol of `Y_n`, with the
/// chamber permutation and type automorphism of every element.
#[derive(Debug, Clone)]
pub struct YnAction {
    pub wreath: WreathGroup,
    pub y: Arc<ChamberComplex>,
    pub table: Arc<FiniteGroupTable>,
    pub elements: Vec<WreathElement>,
    pub on_chambers: Vec<Vec<usize>>,
    pub type_maps: Vec<Vec<LabelAut>>,
    pub typed: ScwolAction,
}

fn chamber_action(w: &WreathGroup, y: &ChamberComplex, h: &WreathElement) -> (Vec<usize>, Vec<LabelAut>) {
    y.chambers
        .iter()
        .map(|c| {
            let (img, types) = w.eval(h, c);
            (y.chamber_index[&img], types)
        })
        .unzip()
}

/// Evaluates every element of `H_n` on `Y_n`. Each vertex is moved through
/// its least chamber, and the image through its other chamber must agree.
pub fn act_on_yn(wreath: WreathGroup, y: Arc<ChamberComplex>, dense_bound: usize) -> Result<YnAction> {
    if y.n != wreath.n {
        return Err(Error::Invalid(format!("H_{} cannot act on Y_{}", wreath.n, y.n)));
    }
    let (table, elements) = wreath.table(dense_bound.min(DENSE_LIMIT))?;
    let x = y.scwol.clone();
    let mut on_chambers = Vec::with_capacity(elements.len());
    let mut type_maps = Vec::with_capacity(elements.len());
    let mut on_vertices = Vec::with_capacity(elements.len());
    let mut on_edges = Vec::with_capacity(elements.len());
    for h in &elements {
        let (chambers, types) = chamber_action(&wreath, &y, h);
        let mut verts = vec![usize::MAX; y.vertices.len()];
        for (c, row) in y.vertex_of.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                let img = y.vertex(chambers[c], y.types[i].map(&types[c].perm)).ok_or_else(|| {
                    Error::Invalid(format!("type {} has no spherical image", y.sys.fmt_set(y.types[i])))
                })?;
                if verts[v] != usize::MAX && verts[v] != img {
                    return Err(Error::Invalid(format!("chambers sharing vertex {v} disagree on its image")));
                }
                verts[v] = img;
            }
        }
        let edges = x
            .edges
            .iter()
            .map(|&(i, t)| {
                x.edge_between(verts[i], verts[t])
                    .ok_or_else(|| Error::Invalid(format!("edge {i} -> {t} has no image")))
            })
            .collect::<Result<Vec<usize>>>()?;
        on_chambers.push(chambers);
        type_maps.push(types);
        on_vertices.push(verts);
        on_edges.push(edges);
    }
    let typed = ScwolAction { group: table.clone(), scwol: x, on_vertices, on_edges };
    Ok(YnAction { wreath, y, table, elements, on_chambers, type_maps, typed })
}

/// Orbits of chambers under the generators only; works for any `n`.
pub fn chamber_orbits(wreath: &WreathGroup, y: &ChamberComplex) -> Vec<Vec<usize>> {
    let gens: Vec<Vec<usize>> = wreath.generators().iter().map(|g| chamber_action(wreath, y, g).0).collect();
    let mut orbit_of = vec![usize::MAX; y.chambers.len()];
    let mut orbits = Vec::new();
    for c in 0..y.chambers.len() {
        if orbit_of[c] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[c] = id;
        let mut members = vec![c];
        let mut head = 0;
        while head < members.len() {
            let d = members[head];
            for g in &gens {
                if orbit_of[g[d]] == usize::MAX {
                    orbit_of[g[d]] = id;
                    members.push(g[d]);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits
}

/// `H_n` acting on `G(Y_n)` over the barycentric subdivision, by
/// `φ^h_σ(t) = α(t)` transported generator by generator.
#[derive(Debug, Clone)]
pub struct GYnAction {
    pub action: CogAction,
    pub sub: Subdivision,
}

pub fn act_on_gyn(gy: &GYn, ya: &YnAction) -> Result<GYnAction> {
    let y = &gy.y;
    let groups = &gy.groups;
    let mut isos = Vec::with_capacity(ya.elements.len());
    for g in 0..ya.elements.len() {
        let mut per = Vec::with_capacity(y.vertices.len());
        for (v, info) in y.vertices.iter().enumerate() {
            let c = info.chambers[0];
            let alpha = &ya.type_maps[g][c];
            let w = ya.typed.on_vertices[g][v];
            let t2 = info.ty.map(&alpha.perm);
            let transport = groups.transport(info.ty, t2, &alpha.perm)?;
            let map = match (gy.local_kind[v], gy.local_kind[w]) {
                (LocalGroup::Full(_), LocalGroup::Full(_)) => transport,
                (LocalGroup::Half(t, s), LocalGroup::Half(_, s2)) if alpha.apply(s) == s2 => {
                    let (from, to) = (groups.require_half(t, s)?, groups.require_half(t2, s2)?);
                    from.embed
                        .iter()
                        .map(|&x| {
                            to.restrict[transport[x as usize] as usize]
                                .ok_or_else(|| Error::Invalid(format!("vertex {v}: half group not preserved")))
                        })
                        .collect::<Result<Vec<u32>>>()?
                }
                (a, b) => {
                    return Err(Error::Invalid(format!("element {g} maps a {a:?} vertex {v} to a {b:?} vertex {w}")))
                }
            };
            per.push(map);
        }
        isos.push(per);
    }
    let (action, sub) = subdivide_cog_action(&gy.cog, &ya.typed, &isos)?;
    let action = action.map_err(|r| Error::Invalid(format!("H_n does not act on G(Y_n):\n{r}")))?;
    Ok(GYnAction { action, sub })
}

/// `Z_n = H_n\Y_n` with the chamber orbits it is assembled from.
#[derive(Debug, Clone)]
pub struct FundamentalDomain {
    pub quotient: QuotientScwol,
    pub chamber_orbits: Vec<Vec<usize>>,
    /// Orbits of the vertices of type `∅`.
    pub cone_orbits: Vec<Vec<usize>>,
}

pub fn fundamental_domain(ya: &YnAction) -> FundamentalDomain {
    let quotient = quotient_scwol(&ya.typed);
    let chamber_orbits = chamber_orbits(&ya.wreath, &ya.y);
    let cones = ya.y.cone_points();
    let mut cone_orbits: Vec<Vec<usize>> = chamber_orbits.iter().map(|o| o.iter().map(|&c| cones[c]).collect()).collect();
    for o in &mut cone_orbits {
        o.sort_unstable();
    }
    FundamentalDomain { quotient, chamber_orbits, cone_orbits }
}

/// `H(Z_n)` and the covering `Λ_n: G(Y_n) → H(Z_n)`.
pub fn induce_hzn(ga: &GYnAction) -> Result<InducedQuotient> {
    induce_quotient_cog(&ga.action, LiftPolicy::Least)
}
