//! Wreath groups `H_n`, their actions on `Y_n` and `G(Y_n)`, the induced
//! `H(Z_n)` and covolumes.

pub mod act;
pub mod covolume;
pub mod wreath;

use std::sync::Arc;

pub use act::{act_on_gyn, act_on_yn, chamber_orbits, fundamental_domain, induce_hzn, FundamentalDomain, GYnAction, YnAction};
pub use covolume::{cone_point_table, covolume, covolume_report, series_value, CovolumeReport, PerVertex};
pub use wreath::{wreath_group, wreath_order, wreath_order_recursive, WreathElement, WreathGroup};

use crate::bounds::Bounds;
use crate::cog::CogMorphism;
use crate::coxeter::{CoxeterSystem, SpecialGroups};
use crate::davis::{build_chamber, build_covering_to_gy1, build_gyn, build_yn, ChamberComplex, GYn};
use crate::error::Result;
use crate::nerve::Witness;

/// Everything built from a system, a witness and a truncation `n`.
#[derive(Debug, Clone)]
pub struct Construction {
    pub wit: Witness,
    pub n: usize,
    pub bounds: Bounds,
    pub groups: Arc<SpecialGroups>,
    pub y: Arc<ChamberComplex>,
    pub gy: GYn,
    pub gy1: GYn,
}

impl Construction {
    pub fn new(wit: Witness, sys: Arc<CoxeterSystem>, n: usize, bounds: Bounds) -> Result<Self> {
        let groups = Arc::new(SpecialGroups::new(sys.clone(), bounds));
        let y = Arc::new(build_yn(&wit, sys.clone(), n)?);
        let gy = build_gyn(y.clone(), groups.clone())?;
        let gy1 = build_gyn(Arc::new(build_chamber(sys)), groups.clone())?;
        Ok(Self { wit, n, bounds, groups, y, gy, gy1 })
    }

    pub fn sys(&self) -> &Arc<CoxeterSystem> {
        self.groups.system()
    }

    /// `Φ_n: G(Y_n) → G(Y_1)`.
    pub fn phi(&self) -> Result<CogMorphism> {
        build_covering_to_gy1(&self.gy, &self.gy1)
    }

    pub fn wreath(&self) -> WreathGroup {
        wreath_group(&self.wit, self.n)
    }

    pub fn act_on_yn(&self) -> Result<YnAction> {
        act_on_yn(self.wreath(), self.y.clone(), self.bounds.dense_table)
    }

    /// The covolume report, building `H(Z_n)` when `H_n` fits in a table and
    /// falling back to orbit-stabilizer counts otherwise.
    pub fn covolume_report(&self) -> Result<CovolumeReport> {
        let wreath = self.wreath();
        let hz = match self.act_on_yn() {
            Ok(ya) => {
                let ga = act_on_gyn(&self.gy, &ya)?;
                Some(induce_hzn(&ga)?.hz)
            }
            Err(crate::Error::Resource(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(covolume_report(&wreath, &self.y, hz.as_deref()))
    }
}
