//! Syntactic program classes and the rule shapes each semantics accepts.
//!
//! A formula `B → H` is read as the rule `H ← B`; any other formula `F` is
//! the rule `F ← ⊤`. In particular `¬G` is the constraint `⊥ ← G`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::aggregate::{AggOp, Aggregate, Rel};
use crate::error::{Error, Result};
use crate::formula::{Atom, Formula, Literal, Theory};
use crate::translate::{Direction, WcRule, WeightConstraint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProgramClass {
    /// `a ← l1 ∧ … ∧ ln`
    Traditional,
    /// `a1 ∨ … ∨ am ← l1 ∧ … ∧ ln`, `m ≥ 0`
    Disjunctive,
    /// Nested expressions with an atom or `⊥` as head.
    NondisjunctiveNested,
    /// `F ← G` with `F`, `G` nested expressions.
    NestedExpressions,
    GeneralTheory,
}

impl ProgramClass {
    /// Whether every program of class `other` also belongs to `self`.
    pub fn includes(self, other: ProgramClass) -> bool {
        use ProgramClass::*;
        match self {
            GeneralTheory => true,
            NestedExpressions => other != GeneralTheory,
            Disjunctive => matches!(other, Traditional | Disjunctive),
            NondisjunctiveNested => matches!(other, Traditional | NondisjunctiveNested),
            Traditional => other == Traditional,
        }
    }
}

/// Splits a formula into `(body, head)`.
pub fn split_rule(f: &Formula) -> (Option<&Formula>, &Formula) {
    match f {
        Formula::Implies(b, h) => (Some(b), h),
        other => (None, other),
    }
}

/// The conjuncts of a rule body; an absent body or a body of `⊤` has none.
pub fn body_items(body: Option<&Formula>) -> Vec<&Formula> {
    match body {
        None => Vec::new(),
        Some(b) if b.is_top() => Vec::new(),
        Some(b) => b.conjuncts(),
    }
}

/// No aggregates and no implications other than `G → ⊥`.
pub fn is_nested_expression(f: &Formula) -> bool {
    match f {
        Formula::Bottom | Formula::Atom(_) => true,
        Formula::And(l, r) | Formula::Or(l, r) => is_nested_expression(l) && is_nested_expression(r),
        Formula::Implies(l, r) => **r == Formula::Bottom && is_nested_expression(l),
        Formula::Agg(_) => false,
    }
}

/// Atoms of a disjunction of atoms; `⊥` is the empty disjunction.
pub fn head_disjunction(head: &Formula) -> Option<Vec<Atom>> {
    if *head == Formula::Bottom {
        return Some(Vec::new());
    }
    head.disjuncts()
        .into_iter()
        .map(|d| match d {
            Formula::Atom(a) => Some(a.clone()),
            _ => None,
        })
        .collect()
}

fn literal_body(body: Option<&Formula>) -> bool {
    body_items(body).iter().all(|i| i.as_literal().is_some())
}

fn is_traditional(f: &Formula) -> bool {
    let (body, head) = split_rule(f);
    matches!(head, Formula::Atom(_)) && literal_body(body)
}

fn is_disjunctive(f: &Formula) -> bool {
    let (body, head) = split_rule(f);
    head_disjunction(head).is_some() && literal_body(body)
}

fn is_nested_rule(f: &Formula) -> bool {
    let (body, head) = split_rule(f);
    is_nested_expression(head) && body.is_none_or(is_nested_expression)
}

fn is_nondisjunctive_nested(f: &Formula) -> bool {
    let (_, head) = split_rule(f);
    is_nested_rule(f) && matches!(head, Formula::Atom(_) | Formula::Bottom)
}

/// The smallest class containing `t`. `Disjunctive` and
/// `NondisjunctiveNested` are incomparable; the former is preferred.
pub fn classify(t: &Theory) -> ProgramClass {
    let all = |p: fn(&Formula) -> bool| t.iter().all(p);
    if all(is_traditional) {
        ProgramClass::Traditional
    } else if all(is_disjunctive) {
        ProgramClass::Disjunctive
    } else if all(is_nondisjunctive_nested) {
        ProgramClass::NondisjunctiveNested
    } else if all(is_nested_rule) {
        ProgramClass::NestedExpressions
    } else {
        ProgramClass::GeneralTheory
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedRule {
    pub head: Formula,
    pub body: Option<Formula>,
}

pub fn nested_rules(t: &Theory) -> Result<Vec<NestedRule>> {
    t.iter()
        .map(|f| {
            if !is_nested_rule(f) {
                return Err(Error::NotNested(format!("`{f}`")));
            }
            let (body, head) = split_rule(f);
            Ok(NestedRule {
                head: head.clone(),
                body: body.cloned(),
            })
        })
        .collect()
}

/// A rule `a1 ∨ … ∨ an ← A1 ∧ … ∧ Am ∧ ¬Am+1 ∧ … ∧ ¬Ap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlpRule {
    pub head: Vec<Atom>,
    /// Body conjuncts: FLP-aggregates, negated FLP-aggregates, literals.
    pub body: Vec<Formula>,
    pub source: Formula,
}

impl FlpRule {
    pub fn is_positive(&self) -> bool {
        self.body.iter().all(|i| i.as_negation().is_none())
    }
}

fn is_flp_aggregate(a: &Aggregate) -> bool {
    a.elements
        .iter()
        .all(|(f, _)| f.conjuncts().iter().all(|c| c.as_literal().is_some()))
}

fn is_flp_positive_item(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) => true,
        Formula::Agg(a) => is_flp_aggregate(a),
        _ => false,
    }
}

fn is_flp_item(f: &Formula) -> bool {
    is_flp_positive_item(f) || f.as_negation().is_some_and(is_flp_positive_item)
}

pub fn flp_rules(t: &Theory) -> Result<Vec<FlpRule>> {
    t.iter()
        .map(|f| {
            let (body, head) = split_rule(f);
            let head = head_disjunction(head)
                .ok_or_else(|| Error::NotFlp(format!("head of `{f}` is not a disjunction of atoms")))?;
            let items = body_items(body);
            if let Some(bad) = items.iter().find(|i| !is_flp_item(i)) {
                return Err(Error::NotFlp(format!("body item `{bad}` in `{f}`")));
            }
            Ok(FlpRule {
                head,
                body: items.into_iter().cloned().collect(),
                source: f.clone(),
            })
        })
        .collect()
}

pub fn is_positive_flp(t: &Theory) -> bool {
    flp_rules(t).is_ok_and(|rules| rules.iter().all(FlpRule::is_positive))
}

fn literal_elements(a: &Aggregate) -> Option<Vec<(Literal, crate::Weight)>> {
    a.elements
        .iter()
        .map(|(f, w)| Some((f.as_literal()?, w.clone())))
        .collect()
}

/// Reads `sum⟨S⟩ ≥ N` / `sum⟨S⟩ ≤ N` over literals as a weight constraint.
pub fn aggregate_to_wc(a: &Aggregate) -> Option<WeightConstraint> {
    if a.op != AggOp::Sum {
        return None;
    }
    let direction = match a.rel {
        Rel::Ge => Direction::LowerBound,
        Rel::Le => Direction::UpperBound,
        _ => return None,
    };
    Some(WeightConstraint {
        direction,
        bound: a.bound.clone(),
        elements: literal_elements(a)?,
    })
}

fn rule_err(kind: fn(String) -> Error, f: &Formula, what: &str) -> Error {
    kind(format!("{what} in `{f}`"))
}

/// Recognizes a program with weight constraints. Body literals `l` stand
/// for `1 ≤ {l = 1}`.
pub fn wc_rules(t: &Theory) -> Result<Vec<WcRule>> {
    t.iter()
        .map(|f| {
            let (body, head) = split_rule(f);
            let head = match head {
                Formula::Atom(a) => Some(a.clone()),
                Formula::Bottom => None,
                _ => return Err(rule_err(Error::NotWeightConstraint, f, "head is not an atom or bot")),
            };
            let body = body_items(body)
                .into_iter()
                .map(|item| {
                    if let Some(l) = item.as_literal() {
                        return Ok(WeightConstraint::literal(l));
                    }
                    match item {
                        Formula::Agg(a) => aggregate_to_wc(a).ok_or_else(|| {
                            rule_err(Error::NotWeightConstraint, f, "aggregate is not a weight constraint")
                        }),
                        _ => Err(rule_err(Error::NotWeightConstraint, f, "body item is not a constraint")),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(WcRule { head, body })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdbRule {
    pub head: Atom,
    /// Literals and aggregates whose elements are literals.
    pub body: Vec<Formula>,
}

pub fn pdb_rules(t: &Theory) -> Result<Vec<PdbRule>> {
    t.iter()
        .map(|f| {
            let (body, head) = split_rule(f);
            let Formula::Atom(head) = head else {
                return Err(rule_err(Error::NotPdb, f, "head is not an atom"));
            };
            let items = body_items(body);
            for item in &items {
                let ok = item.as_literal().is_some()
                    || matches!(item, Formula::Agg(a) if literal_elements(a).is_some());
                if !ok {
                    return Err(rule_err(Error::NotPdb, f, "body item is not a PDB-aggregate"));
                }
            }
            Ok(PdbRule {
                head: head.clone(),
                body: items.into_iter().cloned().collect(),
            })
        })
        .collect()
}
