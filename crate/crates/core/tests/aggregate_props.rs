mod common;

use common::*;
use proptest::prelude::*;
use stablekernel_core::aggregate::*;
use stablekernel_core::formula::{atoms_of, head_atoms, Formula, Theory};
use stablekernel_core::semantics::*;

fn se(f: &Formula, g: &Formula) -> bool {
    strong_equiv(&single(f.clone()), &single(g.clone()), StrongEqMethod::HereAndThere)
        .unwrap()
        .equivalent
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn compiled_formula_is_classically_equivalent(a in aggregate(4, 4)) {
        let g = compile_aggregate(&a).unwrap();
        let f = Formula::agg(a.clone());
        for x in all_subsets(&[&single(f.clone())]) {
            prop_assert_eq!(sat(&x, &g), agg_sat(&x, &a));
        }
    }

    #[test]
    fn reduct_commutes_with_compilation(a in aggregate(4, 4)) {
        let g = compile_aggregate(&a).unwrap();
        let f = Formula::agg(a);
        let t = single(f.clone());
        for x in all_subsets(&[&t]) {
            let gx = reduct_ferraris(&g, &x);
            let ax = reduct_ferraris(&f, &x);
            for y in all_subsets(&[&t]) {
                prop_assert_eq!(sat(&y, &gx), sat(&y, &ax));
            }
        }
    }

    #[test]
    fn exactly_one_conjunct_fails(a in aggregate(4, 4)) {
        let g = compile_aggregate(&a).unwrap();
        let t = single(Formula::agg(a.clone()));
        for x in all_subsets(&[&t]) {
            let failing = if g.is_top() { 0 } else {
                g.conjuncts().into_iter().filter(|c| !sat(&x, c)).count()
            };
            prop_assert_eq!(failing, usize::from(!agg_sat(&x, &a)));
        }
    }

    #[test]
    fn monotone_forms_are_strongly_equivalent(a in aggregate(3, 4)) {
        let m = classify_monotonicity(&a).unwrap();
        let g = compile_aggregate(&a).unwrap();
        if m.is_monotone() {
            prop_assert!(se(&g, &compile_monotone(&a).unwrap()));
        } else {
            prop_assert_eq!(compile_monotone(&a), Err(stablekernel_core::Error::NotMonotone));
        }
        if m.is_antimonotone() {
            prop_assert!(se(&g, &compile_antimonotone(&a).unwrap()));
        } else {
            prop_assert_eq!(compile_antimonotone(&a), Err(stablekernel_core::Error::NotAntimonotone));
        }
    }

    #[test]
    fn monotonicity_matches_pairwise_definition(a in aggregate(3, 4)) {
        let n = a.len();
        let mut mono = true;
        let mut anti = true;
        for small in 0..1u64 << n {
            for big in 0..1u64 << n {
                if small & big == small {
                    if a.holds_on(small) && !a.holds_on(big) { mono = false; }
                    if a.holds_on(big) && !a.holds_on(small) { anti = false; }
                }
            }
        }
        let m = classify_monotonicity(&a).unwrap();
        prop_assert_eq!((m.is_monotone(), m.is_antimonotone()), (mono, anti));
    }

    #[test]
    fn head_atoms_need_no_compilation(f in formula_with_aggregates(4, 3)) {
        let t = single(f);
        let compiled = compile_theory(&t).unwrap();
        prop_assert_eq!(head_atoms(&t), head_atoms(&compiled));
        prop_assert!(head_atoms(&t).is_subset(&atoms_of(&t)));
    }

    #[test]
    fn aggregates_and_their_compilation_have_the_same_stable_models(
        fs in prop::collection::vec(formula_with_aggregates(4, 2), 1..=3),
    ) {
        let t: Theory = fs.into_iter().collect();
        let compiled = compile_theory(&t).unwrap();
        prop_assert_eq!(
            stable_models(&t, Semantics::Ferraris).unwrap(),
            stable_models(&compiled, Semantics::Ferraris).unwrap()
        );
    }
}
