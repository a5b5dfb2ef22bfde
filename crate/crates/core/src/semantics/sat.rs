use crate::aggregate::agg_sat;
use crate::error::{Error, Result};
use crate::formula::{Formula, Theory};

use super::interp::{HtInterpretation, Valuation};

/// Classical satisfaction. Aggregates are evaluated directly.
pub fn sat<V: Valuation + ?Sized>(x: &V, f: &Formula) -> bool {
    match f {
        Formula::Bottom => false,
        Formula::Atom(a) => x.holds(a),
        Formula::And(l, r) => sat(x, l) && sat(x, r),
        Formula::Or(l, r) => sat(x, l) || sat(x, r),
        Formula::Implies(l, r) => !sat(x, l) || sat(x, r),
        Formula::Agg(a) => agg_sat(x, a),
    }
}

pub fn sat_theory<V: Valuation + ?Sized>(x: &V, t: &Theory) -> bool {
    t.iter().all(|f| sat(x, f))
}

/// Satisfaction in the logic of here-and-there. Aggregates must be compiled
/// away first.
pub fn ht_sat(i: &HtInterpretation, f: &Formula) -> Result<bool> {
    if f.contains_aggregate() {
        return Err(Error::AggregatePresent);
    }
    Ok(ht(i, f))
}

pub fn ht_sat_theory(i: &HtInterpretation, t: &Theory) -> Result<bool> {
    if t.contains_aggregate() {
        return Err(Error::AggregatePresent);
    }
    Ok(t.iter().all(|f| ht(i, f)))
}

fn ht(i: &HtInterpretation, f: &Formula) -> bool {
    match f {
        Formula::Bottom => false,
        Formula::Atom(a) => i.here().contains(a),
        Formula::And(l, r) => ht(i, l) && ht(i, r),
        Formula::Or(l, r) => ht(i, l) || ht(i, r),
        Formula::Implies(l, r) => (!ht(i, l) || ht(i, r)) && sat(i.there(), f),
        Formula::Agg(_) => unreachable!("checked by caller"),
    }
}
