//! Memoized special subgroups `W_T` and halvings of one Coxeter system.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::group::{FiniteGroupTable, Subgroup};
use super::halving::halving;
use super::spherical::{is_spherical, SphericalSubset};
use super::system::{CoxeterSystem, GenSet};
use super::todd_coxeter::enumerate_group;
use crate::bounds::Bounds;
use crate::error::{Error, Result};

/// `Half_s(W_T)` as a group in its own right, with its embedding into `W_T`.
#[derive(Debug)]
pub struct HalfGroup {
    pub set: GenSet,
    pub s: usize,
    pub subgroup: Subgroup,
    pub table: Arc<FiniteGroupTable>,
    /// element of `table` -> element of `W_T`
    pub embed: Vec<u32>,
    /// element of `W_T` -> element of `table`, if a member
    pub restrict: Vec<Option<u32>>,
}

/// Lazily enumerated special subgroups of a fixed Coxeter system.
#[derive(Debug)]
pub struct SpecialGroups {
    sys: Arc<CoxeterSystem>,
    bounds: Bounds,
    full: Mutex<HashMap<GenSet, Arc<FiniteGroupTable>>>,
    half: Mutex<HashMap<(GenSet, usize), Option<Arc<HalfGroup>>>>,
}

impl SpecialGroups {
    pub fn new(sys: Arc<CoxeterSystem>, bounds: Bounds) -> Self {
        Self { sys, bounds, full: Mutex::default(), half: Mutex::default() }
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn spherical(&self, t: GenSet) -> Result<SphericalSubset> {
        is_spherical(&self.sys, t).ok_or_else(|| Error::NotSpherical(self.sys.fmt_set(t)))
    }

    /// `W_T`, enumerated on first use.
    pub fn full(&self, t: GenSet) -> Result<Arc<FiniteGroupTable>> {
        if let Some(g) = self.full.lock().expect("lock").get(&t) {
            return Ok(g.clone());
        }
        let sph = self.spherical(t)?;
        let g = Arc::new(enumerate_group(&self.sys, &sph, &self.bounds)?);
        self.full.lock().expect("lock").insert(t, g.clone());
        Ok(g)
    }

    /// `Half_s(W_T)`, or `None` if `W_T` is not halvable along `s`.
    pub fn half(&self, t: GenSet, s: usize) -> Result<Option<Arc<HalfGroup>>> {
        if !t.contains(s) {
            return Err(Error::Invalid(format!("{} is not in {}", self.sys.name(s), self.sys.fmt_set(t))));
        }
        if let Some(h) = self.half.lock().expect("lock").get(&(t, s)) {
            return Ok(h.clone());
        }
        let w = self.full(t)?;
        let result = match halving(&w, s) {
            None => None,
            Some(subgroup) => {
                let labels = (0..subgroup.generators.len()).collect();
                let (table, embed) = subgroup.to_table(labels, true)?;
                let mut restrict = vec![None; w.size()];
                for (i, &g) in embed.iter().enumerate() {
                    restrict[g as usize] = Some(i as u32);
                }
                Some(Arc::new(HalfGroup { set: t, s, subgroup, table: Arc::new(table), embed, restrict }))
            }
        };
        self.half.lock().expect("lock").insert((t, s), result.clone());
        Ok(result)
    }

    /// Like [`Self::half`] but failing with a diagnostic naming `T` and `s`.
    pub fn require_half(&self, t: GenSet, s: usize) -> Result<Arc<HalfGroup>> {
        self.half(t, s)?.ok_or_else(|| Error::NotHalvable {
            set: self.sys.fmt_set(t),
            s: self.sys.name(s).to_string(),
        })
    }

    /// The map `W_T -> W_{T'}` sending each generator `t` to `perm[t]`.
    /// Requires `perm(T) ⊆ T'`.
    pub fn transport(&self, t: GenSet, t2: GenSet, perm: &[usize]) -> Result<Vec<u32>> {
        let a = self.full(t)?;
        let b = self.full(t2)?;
        (0..a.size() as u32)
            .map(|g| {
                let w: Vec<usize> = a.labelled_word(g).into_iter().map(|x| perm[x]).collect();
                b.eval_labelled(&w).ok_or_else(|| {
                    Error::Invalid(format!(
                        "image of {} is not inside {}",
                        self.sys.fmt_set(t),
                        self.sys.fmt_set(t2)
                    ))
                })
            })
            .collect()
    }

    /// Natural inclusion `W_T -> W_{T'}`.
    pub fn inclusion(&self, t: GenSet, t2: GenSet) -> Result<Vec<u32>> {
        let id: Vec<usize> = (0..self.sys.rank()).collect();
        self.transport(t, t2, &id)
    }
}
