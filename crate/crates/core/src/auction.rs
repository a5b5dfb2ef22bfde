//! Furniture auction: accept bids so that no item is sold twice and the
//! money from accepted bids covers the cost of disposing of unsold items.
//!
//! Atoms are `b1..bn` (bid accepted) and `s1..sm` (item sold), 1-based.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::aggregate::{AggOp, Aggregate, Rel};
use crate::formula::{Atom, Formula, Theory};
use crate::semantics::Interpretation;
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuctionInstance {
    pub n_bids: usize,
    pub n_items: usize,
    /// Items (0-based) each bid asks for.
    pub bid_items: Vec<BTreeSet<usize>>,
    /// Money offered per bid; may be negative.
    pub bid_value: Vec<Weight>,
    /// Cost of getting rid of each item if it is not sold.
    pub junk_cost: Vec<Weight>,
}

impl AuctionInstance {
    pub fn validate(&self) -> Result<(), String> {
        if self.bid_items.len() != self.n_bids || self.bid_value.len() != self.n_bids {
            return Err(format!("expected {} bids", self.n_bids));
        }
        if self.junk_cost.len() != self.n_items {
            return Err(format!("expected {} junk costs", self.n_items));
        }
        if let Some(c) = self.junk_cost.iter().find(|c| c.is_negative()) {
            return Err(format!("negative junk cost {c}"));
        }
        for (j, items) in self.bid_items.iter().enumerate() {
            if let Some(i) = items.iter().find(|&&i| i >= self.n_items) {
                return Err(format!("bid {j} names unknown item {i}"));
            }
        }
        Ok(())
    }

    fn overlap(&self, i: usize, j: usize) -> bool {
        !self.bid_items[i].is_disjoint(&self.bid_items[j])
    }
}

pub fn bid_atom(j: usize) -> Atom {
    Atom::new(&format!("b{}", j + 1)).expect("valid name")
}

pub fn item_atom(i: usize) -> Atom {
    Atom::new(&format!("s{}", i + 1)).expect("valid name")
}

/// The encoding: `bj ∨ ¬bj` per bid, `¬(bj ∧ bk)` per overlapping pair,
/// `bj → si` per item of each bid, and
/// `sum⟨{b1 = w1, …, ¬s1 = −c1, …}⟩ ≥ 0`.
pub fn auction_encode(inst: &AuctionInstance) -> Theory {
    let b = |j| Formula::Atom(bid_atom(j));
    let s = |i| Formula::Atom(item_atom(i));
    let mut t = Theory::new();
    for j in 0..inst.n_bids {
        t.insert(Formula::or(b(j), Formula::neg(b(j))));
    }
    for j in 0..inst.n_bids {
        for k in j + 1..inst.n_bids {
            if inst.overlap(j, k) {
                t.insert(Formula::neg(Formula::and(b(j), b(k))));
            }
        }
    }
    for (j, items) in inst.bid_items.iter().enumerate() {
        for &i in items {
            t.insert(Formula::implies(b(j), s(i)));
        }
    }
    let elements = (0..inst.n_bids)
        .map(|j| (b(j), inst.bid_value[j].clone()))
        .chain((0..inst.n_items).map(|i| (Formula::neg(s(i)), -&inst.junk_cost[i])))
        .collect();
    t.insert(Formula::agg(Aggregate::new(AggOp::Sum, elements, Rel::Ge, Weight::zero())));
    t
}

/// Accepted bids (0-based) encoded by an interpretation.
pub fn decode(inst: &AuctionInstance, x: &Interpretation) -> BTreeSet<usize> {
    (0..inst.n_bids).filter(|&j| x.contains(&bid_atom(j))).collect()
}

/// Brute force over all bid sets: pairwise disjoint and
/// `Σ accepted w − Σ unsold c ≥ 0`.
pub fn auction_oracle(inst: &AuctionInstance) -> BTreeSet<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for mask in 0..1u64 << inst.n_bids {
        let chosen: Vec<usize> = (0..inst.n_bids).filter(|j| mask >> j & 1 == 1).collect();
        let disjoint = chosen
            .iter()
            .enumerate()
            .all(|(a, &j)| chosen[a + 1..].iter().all(|&k| !inst.overlap(j, k)));
        if !disjoint {
            continue;
        }
        let sold: BTreeSet<usize> = chosen.iter().flat_map(|&j| inst.bid_items[j].iter().copied()).collect();
        let income = chosen.iter().fold(Weight::zero(), |acc, &j| &acc + &inst.bid_value[j]);
        let junk = (0..inst.n_items)
            .filter(|i| !sold.contains(i))
            .fold(Weight::zero(), |acc, i| &acc + &inst.junk_cost[i]);
        if !(&income - &junk).is_negative() {
            out.insert(chosen.into_iter().collect());
        }
    }
    out
}
