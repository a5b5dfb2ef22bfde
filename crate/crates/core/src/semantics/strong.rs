use alloc::vec::Vec;

use crate::aggregate::compile_theory_within;
use crate::error::Result;
use crate::formula::{atoms_of, Atom, Theory};

use super::interp::{subsets_of, HtInterpretation, Interpretation};
use super::reduct::reduct_theory_ferraris;
use super::sat::{ht_sat_theory, sat_theory};
use super::stable::Budget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StrongEqMethod {
    /// Compare the theories on every HT-interpretation.
    HereAndThere,
    /// For every `X`, compare the reducts wrt `X` classically.
    ReductEquivalence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongEqReport {
    pub equivalent: bool,
    /// An HT-interpretation satisfying exactly one of the two theories.
    pub witness: Option<HtInterpretation>,
}

pub fn strong_equiv(t1: &Theory, t2: &Theory, method: StrongEqMethod) -> Result<StrongEqReport> {
    strong_equiv_with(t1, t2, method, &Budget::default())
}

/// Both methods visit `(Z, X)` in the same order: `X` ascending by bitmask
/// over the sorted joint vocabulary, then `Z ⊆ X` ascending. The first
/// disagreement is the witness, so the two methods report the same one.
pub fn strong_equiv_with(
    t1: &Theory,
    t2: &Theory,
    method: StrongEqMethod,
    budget: &Budget,
) -> Result<StrongEqReport> {
    let t1 = compile_theory_within(t1, budget.max_elements)?;
    let t2 = compile_theory_within(t2, budget.max_elements)?;
    let vocab: Vec<Atom> = atoms_of(&t1).union(&atoms_of(&t2)).cloned().collect();
    budget.check_atoms(vocab.len())?;

    for x in subsets_of(&vocab) {
        let found = match method {
            StrongEqMethod::HereAndThere => ht_disagreement(&t1, &t2, &x)?,
            StrongEqMethod::ReductEquivalence => reduct_disagreement(&t1, &t2, &x),
        };
        if let Some(z) = found {
            return Ok(StrongEqReport {
                equivalent: false,
                witness: Some(HtInterpretation::new(z, x)?),
            });
        }
    }
    Ok(StrongEqReport {
        equivalent: true,
        witness: None,
    })
}

fn subsets_ascending(x: &Interpretation) -> impl Iterator<Item = Interpretation> + '_ {
    x.proper_subsets().chain(core::iter::once(x.clone()))
}

fn ht_disagreement(t1: &Theory, t2: &Theory, x: &Interpretation) -> Result<Option<Interpretation>> {
    for z in subsets_ascending(x) {
        let i = HtInterpretation::new(z.clone(), x.clone())?;
        if ht_sat_theory(&i, t1)? != ht_sat_theory(&i, t2)? {
            return Ok(Some(z));
        }
    }
    Ok(None)
}

/// Reducts wrt `x` only mention atoms of `x`, so comparing them on the
/// subsets of `x` decides classical equivalence over the whole vocabulary.
fn reduct_disagreement(t1: &Theory, t2: &Theory, x: &Interpretation) -> Option<Interpretation> {
    let r1 = reduct_theory_ferraris(t1, x);
    let r2 = reduct_theory_ferraris(t2, x);
    subsets_ascending(x).find(|y| sat_theory(y, &r1) != sat_theory(y, &r2))
}
