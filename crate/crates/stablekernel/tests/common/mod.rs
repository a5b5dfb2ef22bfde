#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stablekernel_core::auction::AuctionInstance;
use stablekernel_core::formula::{atoms_of, Atom, Formula, Literal, Theory};
use stablekernel_core::semantics::{sat_theory, subsets_of, Interpretation};
use stablekernel_core::{AggOp, Aggregate, Rel, Weight};

pub const NAMES: [&str; 6] = ["p", "q", "r", "s", "t", "u"];

pub fn atom_f(i: usize) -> Formula {
    Formula::atom(NAMES[i])
}

pub fn single(f: Formula) -> Theory {
    [f].into_iter().collect()
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

/// Seeded random instances; the same seed always gives the same sequence.
pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn weight(&mut self, lo: i64, hi: i64) -> Weight {
        Weight::from(self.rng.gen_range(lo..=hi))
    }

    pub fn leaf(&mut self, n_atoms: usize) -> Formula {
        if self.below(7) == 0 {
            Formula::Bottom
        } else {
            atom_f(self.below(n_atoms))
        }
    }

    /// Aggregate-free formula of depth at most `depth`.
    pub fn formula(&mut self, n_atoms: usize, depth: u32) -> Formula {
        if depth == 0 || self.below(3) == 0 {
            return self.leaf(n_atoms);
        }
        match self.below(4) {
            0 => Formula::and(self.formula(n_atoms, depth - 1), self.formula(n_atoms, depth - 1)),
            1 => Formula::or(self.formula(n_atoms, depth - 1), self.formula(n_atoms, depth - 1)),
            2 => Formula::implies(self.formula(n_atoms, depth - 1), self.formula(n_atoms, depth - 1)),
            _ => Formula::neg(self.formula(n_atoms, depth - 1)),
        }
    }

    pub fn theory(&mut self, n_atoms: usize, max_formulas: usize, depth: u32) -> Theory {
        let n = self.range(1, max_formulas);
        (0..n).map(|_| self.formula(n_atoms, depth)).collect()
    }

    /// Atoms, `bot`, `top`, `&`, `|` and `not`.
    pub fn nested_expr(&mut self, n_atoms: usize, depth: u32) -> Formula {
        if depth == 0 || self.below(3) == 0 {
            return match self.below(8) {
                0 => Formula::Bottom,
                1 => Formula::top(),
                _ => atom_f(self.below(n_atoms)),
            };
        }
        match self.below(3) {
            0 => Formula::and(self.nested_expr(n_atoms, depth - 1), self.nested_expr(n_atoms, depth - 1)),
            1 => Formula::or(self.nested_expr(n_atoms, depth - 1), self.nested_expr(n_atoms, depth - 1)),
            _ => Formula::neg(self.nested_expr(n_atoms, depth - 1)),
        }
    }

    pub fn nested_program(&mut self, n_atoms: usize, max_rules: usize) -> Theory {
        let n = self.range(1, max_rules);
        (0..n)
            .map(|_| {
                let head = self.nested_expr(n_atoms, 2);
                if self.coin() {
                    Formula::implies(self.nested_expr(n_atoms, 3), head)
                } else {
                    head
                }
            })
            .collect()
    }

    pub fn op(&mut self) -> AggOp {
        *AggOp::ALL.choose(&mut self.rng).unwrap()
    }

    pub fn rel(&mut self) -> Rel {
        *Rel::ALL.choose(&mut self.rng).unwrap()
    }

    pub fn literal(&mut self, n_atoms: usize) -> Literal {
        let a = Atom::new(NAMES[self.below(n_atoms)]).unwrap();
        if self.coin() {
            Literal::Pos(a)
        } else {
            Literal::Neg(a)
        }
    }

    /// Up to `max_elements` elements over small formulas, weights in [-3, 3].
    pub fn aggregate(&mut self, n_atoms: usize, max_elements: usize) -> Aggregate {
        let n = self.range(0, max_elements);
        let elements = (0..n).map(|_| (self.formula(n_atoms, 2), self.weight(-3, 3))).collect();
        Aggregate::new(self.op(), elements, self.rel(), self.weight(-3, 3))
    }

    pub fn literal_aggregate(&mut self, n_atoms: usize, max_elements: usize) -> Aggregate {
        let n = self.range(0, max_elements);
        let elements = (0..n)
            .map(|_| (self.literal(n_atoms).to_formula(), self.weight(-3, 3)))
            .collect();
        Aggregate::new(self.op(), elements, self.rel(), self.weight(-3, 3))
    }

    pub fn atom_aggregate(&mut self, n_atoms: usize, max_elements: usize) -> Aggregate {
        let n = self.range(0, max_elements);
        let elements = (0..n).map(|_| (atom_f(self.below(n_atoms)), self.weight(-3, 3))).collect();
        Aggregate::new(self.op(), elements, self.rel(), self.weight(-3, 3))
    }

    /// Formulas that may contain aggregates, possibly nested.
    pub fn formula_with_aggregates(&mut self, n_atoms: usize, depth: u32) -> Formula {
        if depth == 0 || self.below(3) == 0 {
            if self.below(4) == 0 {
                let n = self.range(0, 3);
                let els = (0..n).map(|_| (self.leaf(n_atoms), self.weight(-3, 3))).collect();
                return Formula::agg(Aggregate::new(self.op(), els, self.rel(), self.weight(-3, 3)));
            }
            return self.leaf(n_atoms);
        }
        let d = depth - 1;
        match self.below(5) {
            0 => Formula::and(self.formula_with_aggregates(n_atoms, d), self.formula_with_aggregates(n_atoms, d)),
            1 => Formula::or(self.formula_with_aggregates(n_atoms, d), self.formula_with_aggregates(n_atoms, d)),
            2 => Formula::implies(self.formula_with_aggregates(n_atoms, d), self.formula_with_aggregates(n_atoms, d)),
            3 => Formula::neg(self.formula_with_aggregates(n_atoms, d)),
            _ => {
                let n = self.range(0, 2);
                let els = (0..n).map(|_| (self.formula_with_aggregates(n_atoms, d), self.weight(-3, 3))).collect();
                Formula::agg(Aggregate::new(self.op(), els, self.rel(), self.weight(-3, 3)))
            }
        }
    }

    /// FLP program with atom-only aggregate elements and no negation.
    pub fn positive_flp_program(&mut self, n_atoms: usize, max_rules: usize) -> Theory {
        let n = self.range(1, max_rules);
        (0..n)
            .map(|_| {
                let k = self.range(0, 2);
                let head = Formula::disj((0..k).map(|_| atom_f(self.below(n_atoms))).collect::<Vec<_>>());
                let m = self.range(0, 2);
                let body: Vec<Formula> = (0..m)
                    .map(|_| {
                        if self.coin() {
                            atom_f(self.below(n_atoms))
                        } else {
                            let e = self.range(0, 3);
                            let els = (0..e)
                                .map(|_| {
                                    let c = self.range(1, 2);
                                    let conj = Formula::conj((0..c).map(|_| atom_f(self.below(n_atoms))).collect::<Vec<_>>());
                                    (conj, self.weight(-3, 3))
                                })
                                .collect();
                            Formula::agg(Aggregate::new(self.op(), els, self.rel(), self.weight(-3, 3)))
                        }
                    })
                    .collect();
                if body.is_empty() {
                    head
                } else {
                    Formula::implies(Formula::conj(body), head)
                }
            })
            .filter(|r| !r.is_top())
            .collect()
    }

    /// Weight constraint program rules read as `sum` aggregates over
    /// literals with nonnegative weights.
    pub fn nonnegative_wc_program(&mut self, n_atoms: usize, max_rules: usize) -> Theory {
        let n = self.range(1, max_rules);
        (0..n)
            .map(|_| {
                let head = if self.below(5) == 0 {
                    Formula::Bottom
                } else {
                    atom_f(self.below(n_atoms))
                };
                let m = self.range(0, 2);
                let body: Vec<Formula> = (0..m)
                    .map(|_| {
                        if self.coin() {
                            self.literal(n_atoms).to_formula()
                        } else {
                            let e = self.range(0, 3);
                            let els = (0..e)
                                .map(|_| (self.literal(n_atoms).to_formula(), self.weight(0, 3)))
                                .collect();
                            let rel = if self.coin() { Rel::Ge } else { Rel::Le };
                            Formula::agg(Aggregate::new(AggOp::Sum, els, rel, self.weight(-1, 4)))
                        }
                    })
                    .collect();
                if body.is_empty() {
                    head
                } else {
                    Formula::implies(Formula::conj(body), head)
                }
            })
            .collect()
    }

    pub fn auction(&mut self, max_bids: usize, max_items: usize) -> AuctionInstance {
        let n_items = self.range(0, max_items);
        let n_bids = self.range(0, max_bids);
        let bid_items = (0..n_bids)
            .map(|_| (0..n_items).filter(|_| self.coin()).collect())
            .collect();
        AuctionInstance {
            n_bids,
            n_items,
            bid_items,
            bid_value: (0..n_bids).map(|_| self.weight(-3, 3)).collect(),
            junk_cost: (0..n_items).map(|_| self.weight(0, 3)).collect(),
        }
    }
}

/// Reduct written straight from the definition.
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
    let vocab: Vec<Atom> = atoms_of(t).into_iter().collect();
    let mut out: Vec<Interpretation> = subsets_of(&vocab)
        .filter(|x| {
            let r: Theory = t.iter().map(|f| oracle_reduct(f, x)).collect();
            sat_theory(x, &r)
                && !subsets_of(&x.iter().cloned().collect::<Vec<_>>()).any(|y| y != *x && sat_theory(&y, &r))
        })
        .collect();
    out.sort();
    out
}

pub fn substitute(f: &Formula, name: &str, by: &Formula) -> Formula {
    match f {
        Formula::Atom(a) if a.name() == name => by.clone(),
        Formula::Bottom | Formula::Atom(_) => f.clone(),
        Formula::And(l, r) => Formula::and(substitute(l, name, by), substitute(r, name, by)),
        Formula::Or(l, r) => Formula::or(substitute(l, name, by), substitute(r, name, by)),
        Formula::Implies(l, r) => Formula::implies(substitute(l, name, by), substitute(r, name, by)),
        Formula::Agg(_) => unreachable!("aggregate-free input"),
    }
}

pub fn models(names: &[&[&str]]) -> Vec<Interpretation> {
    let mut out: Vec<Interpretation> = names.iter().map(|m| Interpretation::from_names(m)).collect();
    out.sort();
    out
}
