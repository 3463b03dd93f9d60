//! The complexes of groups `G(Y_n)` and the coverings `Φ_n: G(Y_n) → G(Y_1)`.

use std::sync::Arc;

use serde::Serialize;

use super::chamber::ChamberComplex;
use crate::cog::{CogMorphism, ComplexOfGroups};
use crate::coxeter::{FiniteGroupTable, GenSet, SpecialGroups};
use crate::error::{Error, Result};

/// What sits at a vertex of type `T`: `W_T`, or `Half_s(W_T)` on an interior `s`-mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LocalGroup {
    Full(GenSet),
    Half(GenSet, usize),
}

/// How an edge map acts: an inclusion, or `Ad(s)` followed by an inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeMap {
    Inclusion,
    Conjugation(usize),
}

/// `G(Y_n)` with the data needed to map it to `G(Y_1)` and to act on it.
#[derive(Debug, Clone)]
pub struct GYn {
    pub y: Arc<ChamberComplex>,
    pub groups: Arc<SpecialGroups>,
    pub cog: Arc<ComplexOfGroups>,
    pub local_kind: Vec<LocalGroup>,
    pub edge_kind: Vec<EdgeMap>,
}

impl GYn {
    /// The map of a local group into `W_T`: the identity or the half embedding.
    pub fn into_full(&self, v: usize) -> Result<Vec<u32>> {
        embedding(&self.groups, self.local_kind[v])
    }
}

fn embedding(groups: &SpecialGroups, kind: LocalGroup) -> Result<Vec<u32>> {
    match kind {
        LocalGroup::Full(t) => Ok((0..groups.full(t)?.size() as u32).collect()),
        LocalGroup::Half(t, s) => Ok(groups.require_half(t, s)?.embed.clone()),
    }
}

fn local_table(groups: &SpecialGroups, kind: LocalGroup) -> Result<Arc<FiniteGroupTable>> {
    match kind {
        LocalGroup::Full(t) => groups.full(t),
        LocalGroup::Half(t, s) => Ok(groups.require_half(t, s)?.table.clone()),
    }
}

/// Builds `G(Y)` over a chamber complex. Vertices in two chambers carry
/// `Half_s(W_T)`; an edge from a vertex of a single chamber `c` into an
/// interior mirror shared with the parent of `c` carries `Ad(s)`.
pub fn build_gyn(y: Arc<ChamberComplex>, groups: Arc<SpecialGroups>) -> Result<GYn> {
    let x = y.scwol.clone();
    let mut local_kind = Vec::with_capacity(y.vertices.len());
    let mut local = Vec::with_capacity(y.vertices.len());
    for info in &y.vertices {
        let kind = match (info.chambers.len(), info.mirror) {
            (2, Some(s)) => LocalGroup::Half(info.ty, s),
            (1, _) => LocalGroup::Full(info.ty),
            _ => {
                return Err(Error::Invalid(format!(
                    "vertex of type {} lies in {} chambers",
                    groups.system().fmt_set(info.ty),
                    info.chambers.len()
                )))
            }
        };
        local.push(local_table(&groups, kind)?);
        local_kind.push(kind);
    }
    let mut edge_kind = Vec::with_capacity(x.edge_count());
    let mut psi = Vec::with_capacity(x.edge_count());
    for &(i, t) in &x.edges {
        let (from, to) = (&y.vertices[i], &y.vertices[t]);
        let kind = match (local_kind[i], local_kind[t]) {
            (LocalGroup::Full(_), LocalGroup::Half(_, s)) => {
                let c = from.chambers[0];
                let toward_parent = y.gluing[c].map(|(p, _)| to.chambers.contains(&p)).unwrap_or(false);
                if toward_parent {
                    EdgeMap::Conjugation(s)
                } else {
                    EdgeMap::Inclusion
                }
            }
            _ => EdgeMap::Inclusion,
        };
        let (tt, t2) = (from.ty, to.ty);
        let into_full = embedding(&groups, local_kind[i])?;
        let incl = groups.inclusion(tt, t2)?;
        let big = groups.full(t2)?;
        let mut map: Vec<u32> = into_full.iter().map(|&g| incl[g as usize]).collect();
        if let EdgeMap::Conjugation(s) = kind {
            let se = big.gen_by_label(s).expect("s is in T'");
            for g in &mut map {
                *g = big.conj(se, *g);
            }
        }
        if let LocalGroup::Half(_, s) = local_kind[t] {
            let half = groups.require_half(t2, s)?;
            map = map
                .into_iter()
                .map(|g| {
                    half.restrict[g as usize].ok_or_else(|| {
                        Error::Invalid(format!(
                            "edge into Half_{}({}) leaves the subgroup",
                            groups.system().name(s),
                            groups.system().fmt_set(t2)
                        ))
                    })
                })
                .collect::<Result<Vec<u32>>>()?;
        }
        edge_kind.push(kind);
        psi.push(map);
    }
    let cog = Arc::new(ComplexOfGroups::simple(x, local, psi));
    Ok(GYn { y, groups, cog, local_kind, edge_kind })
}

/// `Φ: G(Y) → G(Y_1)` over the map forgetting everything but types: local maps
/// are identities or half embeddings, and `φ(a) = s` on `Ad(s)` edges.
pub fn build_covering_to_gy1(gy: &GYn, gy1: &GYn) -> Result<CogMorphism> {
    let (y, k) = (&gy.y, &gy1.y);
    let vertex_map = y
        .vertices
        .iter()
        .map(|v| k.vertex(0, v.ty).ok_or_else(|| Error::Invalid("type missing from K".into())))
        .collect::<Result<Vec<usize>>>()?;
    let edge_map = y
        .scwol
        .edges
        .iter()
        .map(|&(i, t)| {
            k.scwol
                .edge_between(vertex_map[i], vertex_map[t])
                .ok_or_else(|| Error::Invalid(format!("no edge of K under {i} -> {t}")))
        })
        .collect::<Result<Vec<usize>>>()?;
    let local_maps = (0..y.vertices.len()).map(|v| gy.into_full(v)).collect::<Result<Vec<_>>>()?;
    let edge_elts = y
        .scwol
        .edges
        .iter()
        .zip(&gy.edge_kind)
        .map(|(&(_, t), kind)| match *kind {
            EdgeMap::Inclusion => 0,
            EdgeMap::Conjugation(s) => gy1.cog.local[vertex_map[t]].gen_by_label(s).expect("s is in the type"),
        })
        .collect();
    Ok(CogMorphism { source: gy.cog.clone(), target: gy1.cog.clone(), vertex_map, edge_map, local_maps, edge_elts })
}
