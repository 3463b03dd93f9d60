//! Halvable special subgroups.

use std::sync::Arc;

use super::group::{FiniteGroupTable, Subgroup};

/// `Half_s(W_T)`: the subgroup of `W_T` generated by `t` and `sts` for
/// `t ∈ T \ {s}`, returned iff its index is exactly 2.
///
/// `w_t` must be an enumerated `W_T` whose generator labels are the members of `T`.
pub fn halving(w_t: &Arc<FiniteGroupTable>, s: usize) -> Option<Subgroup> {
    let sh = w_t.gen_by_label(s)?;
    let mut gens = Vec::new();
    for &t in w_t.gen_labels() {
        if t == s {
            continue;
        }
        let th = w_t.gen_by_label(t).expect("label present");
        gens.push(th);
        gens.push(w_t.conj(sh, th));
    }
    let sub = Subgroup::generated_by(w_t.clone(), gens);
    (sub.index_in_parent == 2 && sub.order() * 2 == w_t.size()).then_some(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Bounds;
    use crate::coxeter::spherical::is_spherical;
    use crate::coxeter::system::{CoxeterSystem, GenSet, Label};
    use crate::coxeter::todd_coxeter::enumerate_group;

    fn group(sys: &CoxeterSystem, t: GenSet) -> Arc<FiniteGroupTable> {
        let sph = is_spherical(sys, t).unwrap();
        Arc::new(enumerate_group(sys, &sph, &Bounds::default()).unwrap())
    }

    #[test]
    fn dihedral_law() {
        for m in 2..=10 {
            let sys = CoxeterSystem::from_entries(&["s", "t"], Label::Finite(m), &[]).unwrap();
            let w = group(&sys, sys.all());
            let half = halving(&w, 0);
            if m % 2 == 0 {
                assert_eq!(half.unwrap().order(), m as usize);
            } else {
                assert!(half.is_none(), "m = {m}");
            }
        }
    }

    #[test]
    fn rank_one_halves_to_trivial() {
        let sys = CoxeterSystem::from_entries(&["s"], Label::Infinite, &[]).unwrap();
        let w = group(&sys, sys.all());
        assert_eq!(halving(&w, 0).unwrap().order(), 1);
    }

    #[test]
    fn cosets_of_half() {
        let sys = CoxeterSystem::from_entries(&["s", "t"], Label::Finite(4), &[]).unwrap();
        let w = group(&sys, sys.all());
        let h = halving(&w, 0).unwrap();
        let cs = crate::coxeter::group::subgroup_cosets(&h);
        assert_eq!(cs.len(), 2);
        assert!(cs.iter().all(|c| c.len() == 4));
    }
}
