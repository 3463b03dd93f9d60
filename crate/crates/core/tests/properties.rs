mod common;

use std::sync::Arc;

use common::tits::represent;
use davis_core::action::{wreath_group, wreath_order, wreath_order_recursive};
use davis_core::cog::{subdivide, validate_scwol};
use davis_core::coxeter::{word_length, word_reduce, words_equal, CoxeterSystem, GenSet};
use davis_core::davis::build_yn;
use davis_core::nerve::catalog::{complete_bipartite, example_one};
use davis_core::nerve::{LabelAut, Witness};
use proptest::prelude::*;

fn systems() -> Vec<CoxeterSystem> {
    vec![
        example_one(4, 4),
        example_one(4, 2),
        complete_bipartite(3, 3, 4).unwrap(),
        CoxeterSystem::parse("generators: a b c\nm a b = 4\nm b c = 3\nm a c = 2\n").unwrap(),
        CoxeterSystem::parse("generators: a b c d\nm a b = 3\nm b c = 4\nm c d = 3\n").unwrap(),
    ]
}

fn system_and_words(len: usize) -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (0..systems().len()).prop_flat_map(move |i| {
        let rank = systems()[i].rank();
        (Just(i), prop::collection::vec(0..rank, 0..=len), prop::collection::vec(0..rank, 0..=len))
    })
}

fn witness() -> Witness {
    Witness::new(0, 1, LabelAut::new(vec![2, 1, 0, 3, 4]), LabelAut::new(vec![0, 2, 1, 3, 4]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn word_problem_agrees_with_the_geometric_representation((i, u, v) in system_and_words(7)) {
        let sys = &systems()[i];
        let same = words_equal(sys, &u, &v, 16).unwrap();
        prop_assert_eq!(same, represent(sys, &u) == represent(sys, &v));
    }

    #[test]
    fn inserting_a_relator_keeps_the_element((i, u, _) in system_and_words(6), pos in 0usize..7, s in 0usize..5, t in 0usize..5) {
        let sys = &systems()[i];
        let (s, t) = (s % sys.rank(), t % sys.rank());
        let relator: Vec<usize> = match sys.label(s, t).finite() {
            Some(m) => (0..2 * m as usize).map(|k| if k % 2 == 0 { s } else { t }).collect(),
            None => vec![s, t, t, s],
        };
        let mut v = u.clone();
        let at = pos.min(v.len());
        v.splice(at..at, relator);
        prop_assert!(words_equal(sys, &u, &v, 16).unwrap());
        prop_assert!(represent(sys, &u) == represent(sys, &v));
    }

    #[test]
    fn reduction_is_a_canonical_form((i, u, _) in system_and_words(8)) {
        let sys = &systems()[i];
        let r = word_reduce(sys, &u, 16).unwrap();
        prop_assert!(r.len() <= u.len());
        prop_assert_eq!(r.len() % 2, u.len() % 2);
        prop_assert_eq!(&word_reduce(sys, &r, 16).unwrap(), &r);
        prop_assert_eq!(word_length(sys, &u, 16).unwrap(), r.len());
        prop_assert!(represent(sys, &r) == represent(sys, &u));
        let mut back = u.clone();
        back.extend(u.iter().rev());
        prop_assert!(word_reduce(sys, &back, 16).unwrap().is_empty());
    }

    #[test]
    fn wreath_order_formula_matches_recursion(qs in prop::collection::vec(prop::sample::select(vec![2usize, 3, 5]), 0..4)) {
        prop_assert_eq!(wreath_order(&qs), wreath_order_recursive(&qs));
    }

    #[test]
    fn wreath_action_is_a_homomorphism(
        n in 1usize..=4,
        a in prop::collection::vec(0usize..8, 0..6),
        b in prop::collection::vec(0usize..8, 0..6),
    ) {
        let h = wreath_group(&witness(), n);
        let gens = h.generators();
        let elem = |w: &[usize]| {
            w.iter().filter(|_| !gens.is_empty()).fold(h.identity(), |x, &i| h.mul(&x, &gens[i % gens.len()]))
        };
        let (x, y) = (elem(&a), elem(&b));
        let xy = h.mul(&x, &y);
        let yn = build_yn(&witness(), Arc::new(example_one(4, 4)), n).unwrap();
        for c in &yn.chambers {
            let (cy, ty) = h.eval(&y, c);
            let (cxy, txy) = h.eval(&x, &cy);
            let (direct, tdirect) = h.eval(&xy, c);
            prop_assert_eq!(&direct, &cxy);
            prop_assert_eq!(tdirect, txy.compose(&ty));
        }
    }

    #[test]
    fn label_automorphism_algebra(perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(), k in 0usize..12) {
        let a = LabelAut::new(perm);
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order).is_identity());
        prop_assert_eq!(a.pow(k).compose(&a), a.pow(k + 1));
        let t = GenSet::from_iter([0, 2, 5]);
        prop_assert_eq!(t.map(&a.perm).map(&a.inverse().perm), t);
        prop_assert_eq!(t.map(&a.perm).len(), 3);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_actions_induce_valid_quotients(seed in any::<u64>()) {
        let case = common::random_case(seed);
        prop_assert!(common::check_case(&case).is_ok(), "{}: {:?}", case.label, common::check_case(&case));
    }

    #[test]
    fn subdivided_face_posets_are_scwols(seed in any::<u64>()) {
        let case = common::random_case(seed);
        let x = &case.cog.scwol;
        prop_assert!(validate_scwol(x).passed());
        let sub = subdivide(x);
        prop_assert!(validate_scwol(&sub.scwol).passed());
        prop_assert!(sub.scwol.vertex_count() >= x.vertex_count());
        for v in 0..x.vertex_count() {
            prop_assert_eq!(&sub.chains[sub.vertex(v)], &vec![v]);
        }
    }
}
