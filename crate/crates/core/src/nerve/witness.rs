//! Search for data `(s1, s2, α1, α2)` satisfying the three conditions of the
//! lattice construction.

use serde::Serialize;

use super::automorphisms::{fixes_star, label_automorphisms, LabelAut};
use super::Nerve;
use crate::coxeter::{GenSet, Label, SpecialGroups};
use crate::error::Result;

/// Vertices `s1, s2` with prime-order automorphisms `α1, α2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub s1: usize,
    pub s2: usize,
    pub alpha1: LabelAut,
    pub alpha2: LabelAut,
    pub q1: usize,
    pub q2: usize,
}

impl Witness {
    pub fn new(s1: usize, s2: usize, alpha1: LabelAut, alpha2: LabelAut) -> Self {
        let (q1, q2) = (alpha1.order, alpha2.order);
        Self { s1, s2, alpha1, alpha2, q1, q2 }
    }

    /// `s_k` with `s_k = s1` for odd `k` and `s2` for even `k`.
    pub fn s(&self, k: usize) -> usize {
        if k % 2 == 1 {
            self.s1
        } else {
            self.s2
        }
    }

    /// `α_k`, periodic like [`Self::s`].
    pub fn alpha(&self, k: usize) -> &LabelAut {
        if k % 2 == 1 {
            &self.alpha1
        } else {
            &self.alpha2
        }
    }

    /// `q_k`, periodic like [`Self::s`].
    pub fn q(&self, k: usize) -> usize {
        self.alpha(k).order
    }

    pub fn describe(&self, names: &[String]) -> String {
        format!(
            "s1={} s2={} alpha1={} (q1={}) alpha2={} (q2={})",
            names[self.s1],
            names[self.s2],
            self.alpha1.cycles(names),
            self.q1,
            self.alpha2.cycles(names),
            self.q2
        )
    }
}

/// Result of [`find_witnesses`].
#[derive(Debug, Clone, Serialize)]
pub struct WitnessSearch {
    pub witnesses: Vec<Witness>,
    /// When empty, the last condition that eliminated every candidate.
    pub failure: Option<String>,
    pub automorphism_count: usize,
}

/// True iff every spherical `T ∋ s` is halvable along `s`.
pub fn all_halvable_at(l: &Nerve, groups: &SpecialGroups, s: usize) -> Result<bool> {
    for t in l.star(s) {
        if groups.half(t, s)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Condition (2) at `s` for `α`: every other point of the `⟨α⟩`-orbit of `s` is at label ∞.
pub fn orbit_condition(l: &Nerve, alpha: &LabelAut, s: usize) -> bool {
    let mut t = alpha.apply(s);
    while t != s {
        if l.sys.label(s, t) != Label::Infinite {
            return false;
        }
        t = alpha.apply(t);
    }
    true
}

/// Re-checks all three conditions from first principles.
pub fn validate_witness(l: &Nerve, groups: &SpecialGroups, w: &Witness) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for (i, (s, a, other)) in [(w.s1, &w.alpha1, w.s2), (w.s2, &w.alpha2, w.s1)].into_iter().enumerate() {
        let i = i + 1;
        if !prime(a.order) {
            failures.push(format!("alpha{i} has order {}, not prime", a.order));
        }
        if !fixes_star(l, a, other) {
            failures.push(format!("Condition (1): alpha{i} does not fix the star of s{}", 3 - i));
        }
        if a.apply(s) == s {
            failures.push(format!("Condition (1): alpha{i} fixes s{i}"));
        }
        if !orbit_condition(l, a, s) {
            failures.push(format!("Condition (2): orbit of s{i} contains a vertex at finite label"));
        }
        if !all_halvable_at(l, groups, s)? {
            failures.push(format!("Condition (3): some spherical T containing s{i} is not halvable"));
        }
    }
    Ok(failures)
}

/// All witnesses, in lexicographic order of `(s1, s2, α1 position, α2 position)`
/// where positions index the prime-order automorphisms in search order.
///
/// Every power of an automorphism is itself in the group, so restricting to
/// prime-order elements loses no candidates `α^k`.
pub fn find_witnesses(l: &Nerve, groups: &SpecialGroups) -> Result<WitnessSearch> {
    let auts = label_automorphisms(l, groups.bounds())?;
    let primes: Vec<&LabelAut> = auts.iter().filter(|a| prime(a.order)).collect();
    let n = l.vertex_count();
    let mut halvable = vec![None; n];
    let mut reached = 0u8;
    let mut witnesses = Vec::new();
    for s1 in 0..n {
        for s2 in 0..n {
            if s1 == s2 {
                continue;
            }
            let a1s: Vec<&LabelAut> =
                primes.iter().copied().filter(|a| a.apply(s1) != s1 && fixes_star(l, a, s2)).collect();
            let a2s: Vec<&LabelAut> =
                primes.iter().copied().filter(|a| a.apply(s2) != s2 && fixes_star(l, a, s1)).collect();
            if a1s.is_empty() || a2s.is_empty() {
                continue;
            }
            reached = reached.max(1);
            let a1s: Vec<&LabelAut> = a1s.into_iter().filter(|a| orbit_condition(l, a, s1)).collect();
            let a2s: Vec<&LabelAut> = a2s.into_iter().filter(|a| orbit_condition(l, a, s2)).collect();
            if a1s.is_empty() || a2s.is_empty() {
                continue;
            }
            reached = reached.max(2);
            for s in [s1, s2] {
                if halvable[s].is_none() {
                    halvable[s] = Some(all_halvable_at(l, groups, s)?);
                }
            }
            if halvable[s1] != Some(true) || halvable[s2] != Some(true) {
                continue;
            }
            reached = 3;
            for a1 in &a1s {
                for a2 in &a2s {
                    witnesses.push(Witness::new(s1, s2, (*a1).clone(), (*a2).clone()));
                }
            }
        }
    }
    let failure = witnesses.is_empty().then(|| {
        match reached {
            0 => "Condition (1)",
            1 => "Condition (2)",
            _ => "Condition (3)",
        }
        .to_string()
    });
    Ok(WitnessSearch { witnesses, failure, automorphism_count: auts.len() })
}

/// Spherical sets containing `s` that are not halvable along `s`.
pub fn non_halvable_at(l: &Nerve, groups: &SpecialGroups, s: usize) -> Result<Vec<GenSet>> {
    let mut out = Vec::new();
    for t in l.star(s) {
        if groups.half(t, s)?.is_none() {
            out.push(t);
        }
    }
    Ok(out)
}
