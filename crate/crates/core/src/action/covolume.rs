//! Exact covolumes: from the local groups of `H(Z_n)`, from orbit-stabilizer
//! counts on chambers, and from the series `Σ 1/|H_k|`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::act::chamber_orbits;
use super::wreath::{wreath_order, WreathGroup};
use crate::cog::ComplexOfGroups;
use crate::coxeter::GenSet;
use crate::davis::ChamberComplex;

/// `Σ 1/|G_v|` over the vertices of type `∅`.
pub fn covolume(c: &ComplexOfGroups) -> BigRational {
    (0..c.vertex_count())
        .filter(|&v| c.scwol.tags[v] == [GenSet::EMPTY])
        .map(|v| BigRational::new(BigInt::one(), BigInt::from(c.local[v].size())))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `Σ_{k=1}^n 1/|H_k|`.
pub fn series_value(qs: &[usize], n: usize) -> BigRational {
    (1..=n)
        .map(|k| BigRational::new(BigInt::one(), BigInt::from(wreath_order(&qs[..k - 1]))))
        .fold(BigRational::zero(), |a, b| a + b)
}

fn ratio<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn big<S: Serializer>(r: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// One orbit of cone points: the level of its chambers, the stabilizer order
/// of each member and the orbit size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerVertex {
    pub level: usize,
    #[serde(serialize_with = "big")]
    pub stab_order: BigUint,
    pub orbit: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CovolumeReport {
    pub n: usize,
    /// From the local groups of `H(Z_n)` when it was built, otherwise from
    /// orbit-stabilizer counts.
    #[serde(serialize_with = "ratio")]
    pub direct: BigRational,
    pub direct_source: String,
    #[serde(serialize_with = "ratio")]
    pub series: BigRational,
    pub per_vertex: Vec<PerVertex>,
    pub agree: bool,
    /// Every orbit size times stabilizer order equals `|H_n|`.
    pub orbit_stabilizer_ok: bool,
    /// Orbit sizes add up to the number of chambers.
    pub chamber_count_ok: bool,
    /// `direct` equals `Σ orbit/|H_n|` taken over the table.
    pub direct_matches_table: bool,
}

/// Per-orbit table for the cone points of `Y_n`, computed with generators only.
pub fn cone_point_table(wreath: &WreathGroup, y: &ChamberComplex) -> Vec<PerVertex> {
    chamber_orbits(wreath, y)
        .into_iter()
        .map(|o| PerVertex {
            level: y.chambers[o[0]].k,
            stab_order: &wreath.order / BigUint::from(o.len()),
            orbit: o.len(),
        })
        .collect()
}

/// Assembles the report; `hz` is `H(Z_n)` when it could be built.
pub fn covolume_report(wreath: &WreathGroup, y: &ChamberComplex, hz: Option<&ComplexOfGroups>) -> CovolumeReport {
    let per_vertex = cone_point_table(wreath, y);
    let order = BigInt::from(wreath.order.clone());
    let orbit_stabilizer_ok = per_vertex.iter().all(|p| &p.stab_order * BigUint::from(p.orbit) == wreath.order);
    let chamber_count_ok = per_vertex.iter().map(|p| p.orbit).sum::<usize>() == y.chambers.len();
    let from_table = per_vertex
        .iter()
        .map(|p| BigRational::new(BigInt::from(p.orbit), order.clone()))
        .fold(BigRational::zero(), |a, b| a + b);
    let (direct, direct_source) = match hz {
        Some(c) => (covolume(c), "H(Z_n) local groups".to_string()),
        None => (from_table.clone(), "orbit-stabilizer".to_string()),
    };
    let series = series_value(&wreath.qs, wreath.n);
    CovolumeReport {
        n: wreath.n,
        agree: direct == series,
        direct_matches_table: direct == from_table,
        direct,
        direct_source,
        series,
        per_vertex,
        orbit_stabilizer_ok,
        chamber_count_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn series_partial_sums() {
        let qs = [2, 2, 2, 2];
        assert_eq!(series_value(&qs, 1), r(1, 1));
        assert_eq!(series_value(&qs, 2), r(3, 2));
        assert_eq!(series_value(&qs, 3), r(13, 8));
        assert_eq!(series_value(&qs, 4), r(209, 128));
    }
}
