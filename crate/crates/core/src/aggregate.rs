//! Aggregates `op⟨{F1=w1, …, Fn=wn}⟩ ≺ N`: evaluation, monotonicity, and
//! compilation into propositional formulas.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::formula::{Formula, Theory};
use crate::semantics::{sat, Valuation};
use crate::weight::{ExtendedValue, Weight};

/// Largest number of elements an aggregate may have before the `2^n`
/// subset scans refuse to run.
pub const DEFAULT_MAX_ELEMENTS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AggOp {
    Sum,
    Count,
    Min,
    Max,
    Product,
}

impl AggOp {
    pub const ALL: [AggOp; 5] = [AggOp::Sum, AggOp::Count, AggOp::Min, AggOp::Max, AggOp::Product];

    /// Keyword used by the text format.
    pub fn keyword(self) -> &'static str {
        match self {
            AggOp::Sum => "sum",
            AggOp::Count => "count",
            AggOp::Min => "min",
            AggOp::Max => "max",
            AggOp::Product => "times",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rel {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
    Ne,
}

impl Rel {
    pub const ALL: [Rel; 6] = [Rel::Le, Rel::Lt, Rel::Ge, Rel::Gt, Rel::Eq, Rel::Ne];

    pub fn holds(self, value: &ExtendedValue, bound: &Weight) -> bool {
        let ord = value.cmp_weight(bound);
        match self {
            Rel::Le => ord != Ordering::Greater,
            Rel::Lt => ord == Ordering::Less,
            Rel::Ge => ord != Ordering::Less,
            Rel::Gt => ord == Ordering::Greater,
            Rel::Eq => ord == Ordering::Equal,
            Rel::Ne => ord != Ordering::Equal,
        }
    }

    /// The complementary relation.
    pub fn negate(self) -> Rel {
        match self {
            Rel::Le => Rel::Gt,
            Rel::Lt => Rel::Ge,
            Rel::Ge => Rel::Lt,
            Rel::Gt => Rel::Le,
            Rel::Eq => Rel::Ne,
            Rel::Ne => Rel::Eq,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Le => "<=",
            Rel::Lt => "<",
            Rel::Ge => ">=",
            Rel::Gt => ">",
            Rel::Eq => "=",
            Rel::Ne => "!=",
        }
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Applies `op` to a multiset of weights.
///
/// The empty multiset gives `sum = count = 0`, `times = 1`, `min = +∞` and
/// `max = −∞`. The last three are conventions: they keep the operations
/// total and make `min`/`max` behave as the identity of their lattice.
pub fn eval_op<'a>(op: AggOp, ws: impl IntoIterator<Item = &'a Weight>) -> ExtendedValue {
    let ws = ws.into_iter();
    match op {
        AggOp::Sum => ExtendedValue::Finite(ws.fold(Weight::zero(), |acc, w| &acc + w)),
        AggOp::Count => ExtendedValue::Finite(Weight::from(ws.count() as i64)),
        AggOp::Product => ExtendedValue::Finite(ws.fold(Weight::one(), |acc, w| &acc * w)),
        AggOp::Min => ws
            .min()
            .map_or(ExtendedValue::PlusInf, |w| ExtendedValue::Finite(w.clone())),
        AggOp::Max => ws
            .max()
            .map_or(ExtendedValue::MinusInf, |w| ExtendedValue::Finite(w.clone())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Aggregate {
    pub op: AggOp,
    /// A list, not a set: repeated elements count separately.
    pub elements: Vec<(Formula, Weight)>,
    pub rel: Rel,
    pub bound: Weight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Monotonicity {
    Monotone,
    Antimonotone,
    Both,
    Neither,
}

impl Monotonicity {
    pub fn is_monotone(self) -> bool {
        matches!(self, Monotonicity::Monotone | Monotonicity::Both)
    }

    pub fn is_antimonotone(self) -> bool {
        matches!(self, Monotonicity::Antimonotone | Monotonicity::Both)
    }
}

impl Aggregate {
    pub fn new(op: AggOp, elements: Vec<(Formula, Weight)>, rel: Rel, bound: Weight) -> Self {
        Aggregate {
            op,
            elements,
            rel,
            bound,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `op` applied to the weights whose bit is set in `mask`.
    pub fn value_on(&self, mask: u64) -> ExtendedValue {
        eval_op(
            self.op,
            self.elements
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, (_, w))| w),
        )
    }

    /// Whether `op(W_I) ≺ N` for the index set `I` encoded by `mask`.
    pub fn holds_on(&self, mask: u64) -> bool {
        self.rel.holds(&self.value_on(mask), &self.bound)
    }

    pub(crate) fn check_width(&self, limit: usize) -> Result<()> {
        let limit = limit.min(63);
        if self.len() > limit {
            return Err(Error::BudgetExceeded {
                what: "aggregate width",
                size: self.len(),
                limit,
            });
        }
        Ok(())
    }

    /// Index sets `I` (as bitmasks, ascending) with `op(W_I) ⊀ N`.
    pub fn failing_subsets(&self) -> impl Iterator<Item = u64> + '_ {
        (0..1u64 << self.len()).filter(move |&m| !self.holds_on(m))
    }

    /// For each element, whether some failing index set leaves it out, i.e.
    /// whether it reaches a consequent of the compiled formula.
    pub(crate) fn elements_in_some_consequent(&self) -> Vec<bool> {
        let n = self.len();
        if n > DEFAULT_MAX_ELEMENTS {
            return vec![true; n];
        }
        let mut seen = vec![false; n];
        for mask in self.failing_subsets() {
            for (i, s) in seen.iter_mut().enumerate() {
                if mask >> i & 1 == 0 {
                    *s = true;
                }
            }
        }
        seen
    }
}

/// `X ⊨ op⟨…⟩ ≺ N`: `op` of the weights of satisfied elements relates to `N`.
pub fn agg_sat<V: Valuation + ?Sized>(x: &V, a: &Aggregate) -> bool {
    let weights = a
        .elements
        .iter()
        .filter(|(f, _)| sat(x, f))
        .map(|(_, w)| w);
    a.rel.holds(&eval_op(a.op, weights), &a.bound)
}

pub fn classify_monotonicity(a: &Aggregate) -> Result<Monotonicity> {
    classify_monotonicity_within(a, DEFAULT_MAX_ELEMENTS)
}

/// Compares every index set with its one-element extensions; by
/// transitivity along chains this covers all pairs `I1 ⊆ I2`.
pub fn classify_monotonicity_within(a: &Aggregate, max_elements: usize) -> Result<Monotonicity> {
    a.check_width(max_elements)?;
    let n = a.len();
    let holds: Vec<bool> = (0..1u64 << n).map(|m| a.holds_on(m)).collect();
    let mut monotone = true;
    let mut antimonotone = true;
    for mask in 0..1u64 << n {
        for i in 0..n {
            if mask >> i & 1 == 1 {
                continue;
            }
            let (small, big) = (holds[mask as usize], holds[(mask | 1 << i) as usize]);
            if small && !big {
                monotone = false;
            }
            if big && !small {
                antimonotone = false;
            }
        }
    }
    Ok(match (monotone, antimonotone) {
        (true, true) => Monotonicity::Both,
        (true, false) => Monotonicity::Monotone,
        (false, true) => Monotonicity::Antimonotone,
        (false, false) => Monotonicity::Neither,
    })
}

fn conj_of(a: &Aggregate, mask: u64) -> Formula {
    Formula::conj(
        a.elements
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, (f, _))| f.clone()),
    )
}

fn disj_of_complement(a: &Aggregate, mask: u64) -> Formula {
    Formula::disj(
        a.elements
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 0)
            .map(|(_, (f, _))| f.clone()),
    )
}

/// Compiles element formulas first, so nested aggregates disappear
/// innermost-first.
fn with_compiled_elements(a: &Aggregate, max_elements: usize) -> Result<Aggregate> {
    a.check_width(max_elements)?;
    let elements = a
        .elements
        .iter()
        .map(|(f, w)| Ok((compile_formula_within(f, max_elements)?, w.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Aggregate {
        elements,
        ..a.clone()
    })
}

/// The propositional formula an aggregate stands for: the conjunction, over
/// every index set `I` with `op(W_I) ⊀ N`, of `∧_{i∈I} Fi → ∨_{i∉I} Fi`.
/// Index sets are visited in ascending bitmask order (element 1 is bit 0).
pub fn compile_aggregate(a: &Aggregate) -> Result<Formula> {
    compile_aggregate_within(a, DEFAULT_MAX_ELEMENTS)
}

pub fn compile_aggregate_within(a: &Aggregate, max_elements: usize) -> Result<Formula> {
    let a = with_compiled_elements(a, max_elements)?;
    Ok(Formula::conj(a.failing_subsets().map(|m| {
        Formula::implies(conj_of(&a, m), disj_of_complement(&a, m))
    })))
}

/// Antecedent-free form, strongly equivalent to the full compilation when
/// the aggregate is monotone.
pub fn compile_monotone(a: &Aggregate) -> Result<Formula> {
    if !classify_monotonicity(a)?.is_monotone() {
        return Err(Error::NotMonotone);
    }
    let a = with_compiled_elements(a, DEFAULT_MAX_ELEMENTS)?;
    Ok(Formula::conj(
        a.failing_subsets().map(|m| disj_of_complement(&a, m)),
    ))
}

/// Consequent-free form, strongly equivalent to the full compilation when
/// the aggregate is antimonotone.
pub fn compile_antimonotone(a: &Aggregate) -> Result<Formula> {
    if !classify_monotonicity(a)?.is_antimonotone() {
        return Err(Error::NotAntimonotone);
    }
    let a = with_compiled_elements(a, DEFAULT_MAX_ELEMENTS)?;
    Ok(Formula::conj(
        a.failing_subsets().map(|m| Formula::neg(conj_of(&a, m))),
    ))
}

/// Replaces every aggregate in `f` by its compiled formula.
pub fn compile_formula(f: &Formula) -> Result<Formula> {
    compile_formula_within(f, DEFAULT_MAX_ELEMENTS)
}

pub fn compile_formula_within(f: &Formula, max_elements: usize) -> Result<Formula> {
    map_aggregates(f, &mut |a| compile_aggregate_within(a, max_elements))
}

pub fn compile_theory(t: &Theory) -> Result<Theory> {
    compile_theory_within(t, DEFAULT_MAX_ELEMENTS)
}

pub fn compile_theory_within(t: &Theory, max_elements: usize) -> Result<Theory> {
    t.iter()
        .map(|f| compile_formula_within(f, max_elements))
        .collect()
}

/// Rebuilds `f` with each top-level aggregate node replaced by `rewrite(a)`.
/// `rewrite` is responsible for any aggregates nested in the elements.
pub fn map_aggregates(
    f: &Formula,
    rewrite: &mut dyn FnMut(&Aggregate) -> Result<Formula>,
) -> Result<Formula> {
    Ok(match f {
        Formula::Bottom | Formula::Atom(_) => f.clone(),
        Formula::And(l, r) => Formula::and(map_aggregates(l, rewrite)?, map_aggregates(r, rewrite)?),
        Formula::Or(l, r) => Formula::or(map_aggregates(l, rewrite)?, map_aggregates(r, rewrite)?),
        Formula::Implies(l, r) => {
            Formula::implies(map_aggregates(l, rewrite)?, map_aggregates(r, rewrite)?)
        }
        Formula::Agg(a) => rewrite(a)?,
    })
}
