#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use stablekernel_core::formula::{atoms_of, Atom, Formula, Literal, Theory};
use stablekernel_core::semantics::{subsets_of, Interpretation};
use stablekernel_core::{AggOp, Aggregate, Rel, Weight};

pub const NAMES: [&str; 6] = ["p", "q", "r", "s", "t", "u"];

pub fn atom_f(i: usize) -> Formula {
    Formula::atom(NAMES[i])
}

pub fn leaf(n_atoms: usize) -> BoxedStrategy<Formula> {
    prop_oneof![
        1 => Just(Formula::Bottom),
        6 => (0..n_atoms).prop_map(atom_f),
    ]
    .boxed()
}

/// Aggregate-free formulas over the first `n_atoms` names.
pub fn formula(n_atoms: usize, depth: u32) -> BoxedStrategy<Formula> {
    leaf(n_atoms)
        .prop_recursive(depth, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::implies(l, r)),
                inner.prop_map(Formula::neg),
            ]
        })
        .boxed()
}

pub fn theory(n_atoms: usize, max_formulas: usize, depth: u32) -> BoxedStrategy<Theory> {
    prop::collection::vec(formula(n_atoms, depth), 1..=max_formulas)
        .prop_map(|fs| fs.into_iter().collect())
        .boxed()
}

/// Nested expressions: atoms, `bot`, `top`, `&`, `|`, `not`.
pub fn nested_expr(n_atoms: usize, depth: u32) -> BoxedStrategy<Formula> {
    prop_oneof![
        1 => Just(Formula::Bottom),
        1 => Just(Formula::top()),
        6 => (0..n_atoms).prop_map(atom_f),
    ]
    .prop_recursive(depth, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
            inner.prop_map(Formula::neg),
        ]
    })
    .boxed()
}

pub fn nested_program(n_atoms: usize, max_rules: usize) -> BoxedStrategy<Theory> {
    let rule = (nested_expr(n_atoms, 2), proptest::option::of(nested_expr(n_atoms, 3)))
        .prop_map(|(h, b)| match b {
            Some(b) => Formula::implies(b, h),
            None => h,
        });
    prop::collection::vec(rule, 1..=max_rules)
        .prop_map(|fs| fs.into_iter().collect())
        .boxed()
}

pub fn weight() -> impl Strategy<Value = Weight> {
    (-3i64..=3).prop_map(Weight::from)
}

pub fn op() -> impl Strategy<Value = AggOp> {
    prop::sample::select(AggOp::ALL.to_vec())
}

pub fn rel() -> impl Strategy<Value = Rel> {
    prop::sample::select(Rel::ALL.to_vec())
}

pub fn literal(n_atoms: usize) -> impl Strategy<Value = Literal> {
    (0..n_atoms, any::<bool>()).prop_map(|(i, pos)| {
        let a = Atom::new(NAMES[i]).unwrap();
        if pos {
            Literal::Pos(a)
        } else {
            Literal::Neg(a)
        }
    })
}

/// Aggregates whose elements are arbitrary small formulas.
pub fn aggregate(n_atoms: usize, max_elements: usize) -> BoxedStrategy<Aggregate> {
    (
        op(),
        prop::collection::vec((formula(n_atoms, 2), weight()), 0..=max_elements),
        rel(),
        weight(),
    )
        .prop_map(|(op, elements, rel, bound)| Aggregate::new(op, elements, rel, bound))
        .boxed()
}

/// Aggregates whose elements are literals.
pub fn literal_aggregate(n_atoms: usize, max_elements: usize) -> BoxedStrategy<Aggregate> {
    (
        op(),
        prop::collection::vec((literal(n_atoms), weight()), 0..=max_elements),
        rel(),
        weight(),
    )
        .prop_map(|(op, elements, rel, bound)| {
            let elements = elements.into_iter().map(|(l, w)| (l.to_formula(), w)).collect();
            Aggregate::new(op, elements, rel, bound)
        })
        .boxed()
}

/// Formulas that may contain aggregates, possibly nested.
pub fn formula_with_aggregates(n_atoms: usize, depth: u32) -> BoxedStrategy<Formula> {
    let agg_leaf = (
        op(),
        prop::collection::vec((leaf(n_atoms), weight()), 0..=3),
        rel(),
        weight(),
    )
        .prop_map(|(op, els, rel, bound)| Formula::agg(Aggregate::new(op, els, rel, bound)));
    prop_oneof![3 => leaf(n_atoms), 1 => agg_leaf]
        .prop_recursive(depth, 24, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::and(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::or(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| Formula::implies(l, r)),
                inner.clone().prop_map(Formula::neg),
                (op(), prop::collection::vec((inner, weight()), 0..=2), rel(), weight()).prop_map(
                    |(op, els, rel, bound)| Formula::agg(Aggregate::new(op, els, rel, bound))
                ),
            ]
        })
        .boxed()
}

pub fn vocab(ts: &[&Theory]) -> Vec<Atom> {
    let mut out = BTreeSet::new();
    for t in ts {
        out.extend(atoms_of(t));
    }
    out.into_iter().collect()
}

pub fn all_subsets(ts: &[&Theory]) -> Vec<Interpretation> {
    subsets_of(&vocab(ts)).collect()
}

pub fn single(f: Formula) -> Theory {
    [f].into_iter().collect()
}

/// Reduct written straight from the definition, independent of the library.
pub fn oracle_reduct(f: &Formula, x: &Interpretation) -> Formula {
    fn holds(f: &Formula, x: &Interpretation) -> bool {
        match f {
            Formula::Bottom => false,
            Formula::Atom(a) => x.contains(a),
            Formula::And(l, r) => holds(l, x) && holds(r, x),
            Formula::Or(l, r) => holds(l, x) || holds(r, x),
            Formula::Implies(l, r) => !holds(l, x) || holds(r, x),
            Formula::Agg(_) => panic!("oracle handles aggregate-free formulas only"),
        }
    }
    if !holds(f, x) {
        return Formula::Bottom;
    }
    match f {
        Formula::And(l, r) => Formula::and(oracle_reduct(l, x), oracle_reduct(r, x)),
        Formula::Or(l, r) => Formula::or(oracle_reduct(l, x), oracle_reduct(r, x)),
        Formula::Implies(l, r) => Formula::implies(oracle_reduct(l, x), oracle_reduct(r, x)),
        other => other.clone(),
    }
}

/// Stable models by brute force over every subset of the vocabulary.
pub fn oracle_stable(t: &Theory) -> Vec<Interpretation> {
    use stablekernel_core::semantics::sat_theory;
    let vocab: Vec<Atom> = atoms_of(t).into_iter().collect();
    let mut out: Vec<Interpretation> = subsets_of(&vocab)
        .filter(|x| {
            let r: Theory = t.iter().map(|f| oracle_reduct(f, x)).collect();
            sat_theory(x, &r) && !subsets_of(&x.iter().cloned().collect::<Vec<_>>())
                .any(|y| y != *x && sat_theory(&y, &r))
        })
        .collect();
    out.sort();
    out
}
