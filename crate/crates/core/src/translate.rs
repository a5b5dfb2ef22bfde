//! Source-to-source transformations: weight constraints, PDB-aggregates,
//! disjunction elimination, completion and explicit definitions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::aggregate::{compile_formula, AggOp, Aggregate, Rel, DEFAULT_MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::formula::{atoms_of, occurrences, Atom, Formula, Literal, Polarity, Theory};
use crate::shape::{body_items, head_disjunction, split_rule};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `N ≤ {l1 = w1, …}`
    LowerBound,
    /// `{l1 = w1, …} ≤ N`
    UpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightConstraint {
    pub direction: Direction,
    pub bound: Weight,
    pub elements: Vec<(Literal, Weight)>,
}

impl WeightConstraint {
    pub fn lower(bound: Weight, elements: Vec<(Literal, Weight)>) -> Self {
        WeightConstraint {
            direction: Direction::LowerBound,
            bound,
            elements,
        }
    }

    pub fn upper(bound: Weight, elements: Vec<(Literal, Weight)>) -> Self {
        WeightConstraint {
            direction: Direction::UpperBound,
            bound,
            elements,
        }
    }

    /// A body literal `l` read as `1 ≤ {l = 1}`.
    pub fn literal(l: Literal) -> Self {
        Self::lower(Weight::one(), alloc::vec![(l, Weight::one())])
    }

    fn sum_of(&self, mask: u64) -> Weight {
        self.elements
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(Weight::zero(), |acc, (_, (_, w))| &acc + w)
    }

    fn conj_of(&self, mask: u64) -> Formula {
        Formula::conj(
            self.elements
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, (l, _))| l.to_formula()),
        )
    }

    fn check_width(&self, limit: usize) -> Result<()> {
        let limit = limit.min(63);
        if self.elements.len() > limit {
            return Err(Error::BudgetExceeded {
                what: "weight constraint width",
                size: self.elements.len(),
                limit,
            });
        }
        Ok(())
    }
}

/// `a ← C1 ∧ … ∧ Cn`; `head == None` stands for `⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WcRule {
    pub head: Option<Atom>,
    pub body: Vec<WeightConstraint>,
}

/// Replaces every `l = w` with `w < 0` by `l̄ = −w` and raises the bound by
/// `−w`. Since `w·l = w − w·l̄`, the same bound shift is exact for upper
/// bounds too.
pub fn eliminate_negative_weights(c: &WeightConstraint) -> WeightConstraint {
    let mut bound = c.bound.clone();
    let elements = c
        .elements
        .iter()
        .map(|(l, w)| {
            if w.is_negative() {
                bound = &bound - w;
                (l.complement(), -w)
            } else {
                (l.clone(), w.clone())
            }
        })
        .collect();
    WeightConstraint {
        direction: c.direction,
        bound,
        elements,
    }
}

/// The nested expression `[C]`.
pub fn wc_to_nested(c: &WeightConstraint) -> Result<Formula> {
    wc_to_nested_within(c, DEFAULT_MAX_ELEMENTS)
}

pub fn wc_to_nested_within(c: &WeightConstraint, max_elements: usize) -> Result<Formula> {
    c.check_width(max_elements)?;
    let masks = 0..1u64 << c.elements.len();
    Ok(match c.direction {
        Direction::LowerBound => Formula::disj(
            masks
                .filter(|&m| c.bound <= c.sum_of(m))
                .map(|m| c.conj_of(m)),
        ),
        Direction::UpperBound => Formula::neg(Formula::disj(
            masks
                .filter(|&m| c.bound < c.sum_of(m))
                .map(|m| c.conj_of(m)),
        )),
    })
}

pub fn wc_to_aggregate(c: &WeightConstraint) -> Aggregate {
    let rel = match c.direction {
        Direction::LowerBound => Rel::Ge,
        Direction::UpperBound => Rel::Le,
    };
    Aggregate::new(
        AggOp::Sum,
        c.elements
            .iter()
            .map(|(l, w)| (l.to_formula(), w.clone()))
            .collect(),
        rel,
        c.bound.clone(),
    )
}

/// `A_tr`: the disjunction, over pairs `I1 ⊆ I2` such that every `I` with
/// `I1 ⊆ I ⊆ I2` satisfies the aggregate, of
/// `∧_{i∈I1} li ∧ ∧_{i∉I2} l̄i`. Pairs are ordered by `I1`, then `I2`.
pub fn pdb_translate(a: &Aggregate) -> Result<Formula> {
    pdb_translate_within(a, DEFAULT_MAX_ELEMENTS)
}

pub fn pdb_translate_within(a: &Aggregate, max_elements: usize) -> Result<Formula> {
    let lits = a
        .elements
        .iter()
        .map(|(f, _)| f.as_literal())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::NotPdb(format!("aggregate elements must be literals: `{}`", Formula::agg(a.clone()))))?;
    a.check_width(max_elements)?;
    let n = a.len();
    let full = (1u64 << n) - 1;
    let holds: Vec<bool> = (0..=full).map(|m| a.holds_on(m)).collect();
    let mut disjuncts = Vec::new();
    for i1 in 0..=full {
        if !holds[i1 as usize] {
            continue;
        }
        for i2 in i1..=full {
            if i2 & i1 != i1 || !interval_holds(&holds, i1, i2) {
                continue;
            }
            let pos = (0..n).filter(|i| i1 >> i & 1 == 1).map(|i| lits[i].to_formula());
            let neg = (0..n)
                .filter(|i| i2 >> i & 1 == 0)
                .map(|i| lits[i].complement().to_formula());
            disjuncts.push(Formula::conj(pos.chain(neg)));
        }
    }
    Ok(Formula::disj(disjuncts))
}

fn interval_holds(holds: &[bool], lo: u64, hi: u64) -> bool {
    let free = hi & !lo;
    // Walk every submask of `free`, including 0.
    let mut sub = free;
    loop {
        if !holds[(lo | sub) as usize] {
            return false;
        }
        if sub == 0 {
            return true;
        }
        sub = (sub - 1) & free;
    }
}

/// Turns `l1 ∧ … ∧ lm → a1 ∨ … ∨ an` into the `n` implications
/// `l1 ∧ … ∧ lm ∧ (a1 → ai) ∧ … ∧ (an → ai) → ai`.
pub fn disjunctive_to_implications(rule: &Formula) -> Result<Theory> {
    let bad = || Error::NotDisjunctiveRule(format!("`{rule}`"));
    let (body, head) = split_rule(rule);
    let heads = head_disjunction(head).filter(|h| !h.is_empty()).ok_or_else(bad)?;
    let items = body_items(body);
    if items.iter().any(|i| i.as_literal().is_none()) {
        return Err(bad());
    }
    Ok(heads
        .iter()
        .map(|ai| {
            let ai_f = Formula::Atom(ai.clone());
            let guards = heads
                .iter()
                .map(|aj| Formula::implies(Formula::Atom(aj.clone()), ai_f.clone()));
            let antecedent = Formula::conj(items.iter().map(|&l| l.clone()).chain(guards));
            Formula::implies(antecedent, ai_f)
        })
        .collect())
}

fn def_atoms(defs: &BTreeMap<Atom, Formula>) -> BTreeSet<Atom> {
    defs.keys().cloned().collect()
}

/// `Γ ∪ {Def(q) ↔ q}`. Every positive occurrence of a defined atom in `Γ`
/// must be in the scope of negation, and every negative occurrence of a
/// defined atom in a definition too.
pub fn complete(t: &Theory, defs: &BTreeMap<Atom, Formula>) -> Result<Theory> {
    let q = def_atoms(defs);
    for f in t {
        check_occurrences(f, &q, "positive occurrence in the theory outside negation", |p| p.is_positive())?;
    }
    for d in defs.values() {
        check_occurrences(d, &q, "negative occurrence in a definition outside negation", |p| {
            p == Polarity::Negative
        })?;
    }
    let mut out = t.clone();
    out.extend(
        defs.iter()
            .map(|(a, d)| Formula::iff(d.clone(), Formula::Atom(a.clone()))),
    );
    Ok(out)
}

fn check_occurrences(
    f: &Formula,
    q: &BTreeSet<Atom>,
    what: &str,
    restricted: impl Fn(Polarity) -> bool,
) -> Result<()> {
    let compiled;
    let f = if f.contains_aggregate() {
        compiled = compile_formula(f)?;
        &compiled
    } else {
        f
    };
    for a in q {
        for occ in occurrences(f, a)? {
            if restricted(occ.polarity) && !occ.in_negation_scope {
                return Err(Error::PolarityViolation {
                    atom: a.clone(),
                    detail: format!("{what}: `{f}`"),
                });
            }
        }
    }
    Ok(())
}

/// `Γ ∪ {Def(q) → q}` for atoms `q` that occur neither in `Γ` nor in any
/// definition.
pub fn add_explicit_defs(t: &Theory, defs: &BTreeMap<Atom, Formula>) -> Result<Theory> {
    let used = atoms_of(t);
    for (q, _) in defs {
        if used.contains(q) {
            return Err(Error::NotFresh {
                atom: q.clone(),
                detail: String::from("occurs in the theory"),
            });
        }
        for (p, d) in defs {
            if d.atoms().contains(q) {
                return Err(Error::NotFresh {
                    atom: q.clone(),
                    detail: format!("occurs in the definition of `{p}`"),
                });
            }
        }
    }
    let mut out = t.clone();
    out.extend(
        defs.iter()
            .map(|(a, d)| Formula::implies(d.clone(), Formula::Atom(a.clone()))),
    );
    Ok(out)
}
