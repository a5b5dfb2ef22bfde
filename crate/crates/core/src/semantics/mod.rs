//! Satisfaction, reducts, stable models and strong equivalence.

mod interp;
mod reduct;
mod sat;
mod stable;
mod strong;

pub use interp::{subsets_of, HtInterpretation, Interpretation, Valuation};
pub use reduct::{reduct_ferraris, reduct_flp, reduct_lif99, reduct_theory_ferraris};
pub use sat::{ht_sat, ht_sat_theory, sat, sat_theory};
pub use stable::{
    check_stable, check_stable_with, equilibrium_models, equilibrium_models_with, is_stable,
    stable_models, stable_models_with, translate_for, Budget, Semantics,
};
pub use strong::{strong_equiv, strong_equiv_with, StrongEqMethod, StrongEqReport};

pub use stable::Verdict;
