//! Atoms, formulas and theories.
//!
//! Only five connectives exist in the tree: `⊥`, atoms, `∧`, `∨`, `→`, plus
//! aggregate nodes. `⊤`, `¬F` and `F ↔ G` are built as `⊥ → ⊥`, `F → ⊥` and
//! `(F → G) ∧ (G → F)`.

use alloc::boxed::Box;
use alloc::collections::{btree_map, BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::aggregate::Aggregate;
use crate::error::{Error, Result};
use crate::syntax;

/// Words the text format reserves; they can never be atom names.
pub const KEYWORDS: &[&str] = &["not", "bot", "top", "sum", "count", "min", "max", "times"];

/// A propositional atom. Names match `[a-z][A-Za-z0-9_]*` and are not
/// keywords.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Self> {
        if !is_atom_name(name) {
            return Err(Error::InvalidAtom(name.into()));
        }
        Ok(Atom(Arc::from(name)))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !KEYWORDS.contains(&name)
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Bottom,
    Atom(Atom),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Agg(Box<Aggregate>),
}

/// Abbreviations that expand into the core connectives.
#[derive(Clone, Debug)]
pub enum Sugar {
    Top,
    Neg(Formula),
    Iff(Formula, Formula),
}

pub fn mk_sugar(kind: Sugar) -> Formula {
    match kind {
        Sugar::Top => Formula::implies(Formula::Bottom, Formula::Bottom),
        Sugar::Neg(f) => Formula::implies(f, Formula::Bottom),
        Sugar::Iff(f, g) => Formula::and(
            Formula::implies(f.clone(), g.clone()),
            Formula::implies(g, f),
        ),
    }
}

impl Formula {
    /// Panics on an invalid name; use [`Atom::new`] for untrusted input.
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Atom::new(name).expect("valid atom name"))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn top() -> Formula {
        mk_sugar(Sugar::Top)
    }

    pub fn neg(f: Formula) -> Formula {
        mk_sugar(Sugar::Neg(f))
    }

    pub fn iff(f: Formula, g: Formula) -> Formula {
        mk_sugar(Sugar::Iff(f, g))
    }

    pub fn agg(a: Aggregate) -> Formula {
        Formula::Agg(Box::new(a))
    }

    /// Left-nested conjunction; `⊤` when empty.
    pub fn conj(items: impl IntoIterator<Item = Formula>) -> Formula {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or_else(Formula::top)
    }

    /// Left-nested disjunction; `⊥` when empty.
    pub fn disj(items: impl IntoIterator<Item = Formula>) -> Formula {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bottom)
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Formula::Implies(l, r) if **l == Formula::Bottom && **r == Formula::Bottom)
    }

    /// `Some(F)` when `self` is `F → ⊥`.
    pub fn as_negation(&self) -> Option<&Formula> {
        match self {
            Formula::Implies(l, r) if **r == Formula::Bottom => Some(l),
            _ => None,
        }
    }

    pub fn as_literal(&self) -> Option<Literal> {
        match self {
            Formula::Atom(a) => Some(Literal::Pos(a.clone())),
            Formula::Implies(l, r) if **r == Formula::Bottom => match &**l {
                Formula::Atom(a) => Some(Literal::Neg(a.clone())),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn contains_aggregate(&self) -> bool {
        match self {
            Formula::Bottom | Formula::Atom(_) => false,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.contains_aggregate() || r.contains_aggregate()
            }
            Formula::Agg(_) => true,
        }
    }

    pub fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Bottom => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Formula::Agg(a) => {
                for (f, _) in &a.elements {
                    f.collect_atoms(out);
                }
            }
        }
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    /// Splits a left/right-nested conjunction into its conjuncts.
    pub fn conjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        fn go<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
            match f {
                Formula::And(l, r) => {
                    go(l, out);
                    go(r, out);
                }
                other => out.push(other),
            }
        }
        go(self, &mut out);
        out
    }

    pub fn disjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        fn go<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
            match f {
                Formula::Or(l, r) => {
                    go(l, out);
                    go(r, out);
                }
                other => out.push(other),
            }
        }
        go(self, &mut out);
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&syntax::print_formula(self))
    }
}

/// An atom or a negated atom.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Literal {
    Pos(Atom),
    Neg(Atom),
}

impl Literal {
    pub fn atom(&self) -> &Atom {
        match self {
            Literal::Pos(a) | Literal::Neg(a) => a,
        }
    }

    pub fn complement(&self) -> Literal {
        match self {
            Literal::Pos(a) => Literal::Neg(a.clone()),
            Literal::Neg(a) => Literal::Pos(a.clone()),
        }
    }

    pub fn to_formula(&self) -> Formula {
        match self {
            Literal::Pos(a) => Formula::Atom(a.clone()),
            Literal::Neg(a) => Formula::neg(Formula::Atom(a.clone())),
        }
    }
}

/// A finite set of formulas, deduplicated structurally and iterated in the
/// order of their canonical printed form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Theory {
    formulas: BTreeMap<String, Formula>,
}

impl Theory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, f: Formula) -> bool {
        match self.formulas.entry(syntax::print_formula(&f)) {
            btree_map::Entry::Occupied(_) => false,
            btree_map::Entry::Vacant(v) => {
                v.insert(f);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Formula> + '_ {
        self.formulas.values()
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.formulas.contains_key(&syntax::print_formula(f))
    }

    pub fn union(&self, other: &Theory) -> Theory {
        let mut out = self.clone();
        out.extend(other.iter().cloned());
        out
    }

    pub fn contains_aggregate(&self) -> bool {
        self.iter().any(Formula::contains_aggregate)
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        atoms_of(self)
    }

    /// The conjunction of all formulas (`⊤` for the empty theory).
    pub fn to_formula(&self) -> Formula {
        Formula::conj(self.iter().cloned())
    }
}

impl FromIterator<Formula> for Theory {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        let mut t = Theory::new();
        t.extend(iter);
        t
    }
}

impl Extend<Formula> for Theory {
    fn extend<I: IntoIterator<Item = Formula>>(&mut self, iter: I) {
        for f in iter {
            self.insert(f);
        }
    }
}

impl<'a> IntoIterator for &'a Theory {
    type Item = &'a Formula;
    type IntoIter = btree_map::Values<'a, String, Formula>;
    fn into_iter(self) -> Self::IntoIter {
        self.formulas.values()
    }
}

/// Every atom occurring in `t`, including inside aggregate elements.
pub fn atoms_of(t: &Theory) -> BTreeSet<Atom> {
    let mut out = BTreeSet::new();
    for f in t {
        f.collect_atoms(&mut out);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    /// Antecedent of no implication.
    StrictlyPositive,
    /// Antecedent of an even, nonzero number of implications.
    Positive,
    /// Antecedent of an odd number of implications.
    Negative,
}

impl Polarity {
    pub fn is_positive(self) -> bool {
        !matches!(self, Polarity::Negative)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub polarity: Polarity,
    /// Some enclosing subformula has the shape `G → ⊥`.
    pub in_negation_scope: bool,
}

/// One entry per occurrence of `a` in `f`, left to right.
pub fn occurrences(f: &Formula, a: &Atom) -> Result<Vec<Occurrence>> {
    if f.contains_aggregate() {
        return Err(Error::AggregatePresent);
    }
    let mut out = Vec::new();
    walk_occurrences(f, 0, false, &mut |atom, depth, neg| {
        if atom == a {
            out.push(occurrence_at(depth, neg));
        }
    });
    Ok(out)
}

pub(crate) fn occurrence_at(depth: usize, in_negation_scope: bool) -> Occurrence {
    let polarity = if depth == 0 {
        Polarity::StrictlyPositive
    } else if depth % 2 == 0 {
        Polarity::Positive
    } else {
        Polarity::Negative
    };
    Occurrence {
        polarity,
        in_negation_scope,
    }
}

/// Visits every atom occurrence of an aggregate-free formula with its
/// antecedent-nesting depth and negation-scope flag.
pub(crate) fn walk_occurrences(
    f: &Formula,
    depth: usize,
    neg: bool,
    visit: &mut dyn FnMut(&Atom, usize, bool),
) {
    match f {
        Formula::Bottom | Formula::Agg(_) => {}
        Formula::Atom(a) => visit(a, depth, neg),
        Formula::And(l, r) | Formula::Or(l, r) => {
            walk_occurrences(l, depth, neg, visit);
            walk_occurrences(r, depth, neg, visit);
        }
        Formula::Implies(l, r) => {
            let is_negation = **r == Formula::Bottom;
            walk_occurrences(l, depth + 1, neg || is_negation, visit);
            walk_occurrences(r, depth, neg, visit);
        }
    }
}

/// Atoms with at least one strictly positive occurrence in `t`.
///
/// Aggregates are analysed as their compiled formula without building it:
/// element `i` contributes a consequent occurrence exactly when some index
/// set failing the aggregate leaves `i` out. Aggregates wider than the
/// default element budget are over-approximated (every element counts),
/// which keeps the set a sound superset.
pub fn head_atoms(t: &Theory) -> BTreeSet<Atom> {
    let mut out = BTreeSet::new();
    for f in t {
        collect_heads(f, &mut out);
    }
    out
}

fn collect_heads(f: &Formula, out: &mut BTreeSet<Atom>) {
    match f {
        Formula::Bottom => {}
        Formula::Atom(a) => {
            out.insert(a.clone());
        }
        Formula::And(l, r) | Formula::Or(l, r) => {
            collect_heads(l, out);
            collect_heads(r, out);
        }
        // Antecedents never hold strictly positive occurrences.
        Formula::Implies(_, r) => collect_heads(r, out),
        Formula::Agg(a) => {
            let in_consequent = a.elements_in_some_consequent();
            for (i, (g, _)) in a.elements.iter().enumerate() {
                if in_consequent[i] {
                    collect_heads(g, out);
                }
            }
        }
    }
}
