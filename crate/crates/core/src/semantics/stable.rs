use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::aggregate::{compile_theory_within, DEFAULT_MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::formula::{atoms_of, head_atoms, Atom, Formula, Theory};
use crate::shape::{nested_rules, pdb_rules, wc_rules};
use crate::translate::{eliminate_negative_weights, pdb_translate_within, wc_to_nested_within};

use super::interp::{subsets_of, HtInterpretation, Interpretation};
use super::reduct::{reduct_flp, reduct_lif99, reduct_theory_ferraris};
use super::sat::{ht_sat_theory, sat_theory};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    Ferraris,
    Lif99,
    Flp,
    SmodelsWc,
    Pdb,
}

impl Semantics {
    pub const ALL: [Semantics; 5] = [
        Semantics::Ferraris,
        Semantics::Lif99,
        Semantics::Flp,
        Semantics::SmodelsWc,
        Semantics::Pdb,
    ];

    /// Name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Semantics::Ferraris => "ferraris",
            Semantics::Lif99 => "lif99",
            Semantics::Flp => "flp",
            Semantics::SmodelsWc => "smodels",
            Semantics::Pdb => "pdb",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = ();
    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        Semantics::ALL.into_iter().find(|m| m.name() == s).ok_or(())
    }
}

/// Limits on the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest vocabulary whose power set is enumerated.
    pub max_atoms: usize,
    /// Widest aggregate or weight constraint that is expanded.
    pub max_elements: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_atoms: 20,
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

impl Budget {
    pub(crate) fn check_atoms(&self, n: usize) -> Result<()> {
        let limit = self.max_atoms.min(63);
        if n > limit {
            return Err(Error::BudgetExceeded {
                what: "vocabulary size",
                size: n,
                limit,
            });
        }
        Ok(())
    }

    pub(crate) fn check_aggregates(&self, t: &Theory) -> Result<()> {
        fn walk(f: &Formula, limit: usize) -> Result<()> {
            match f {
                Formula::Bottom | Formula::Atom(_) => Ok(()),
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                    walk(l, limit)?;
                    walk(r, limit)
                }
                Formula::Agg(a) => {
                    a.check_width(limit)?;
                    a.elements.iter().try_for_each(|(g, _)| walk(g, limit))
                }
            }
        }
        t.iter().try_for_each(|f| walk(f, self.max_elements))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    /// The candidate does not satisfy its own reduct.
    NotAModel,
    /// A proper subset satisfies the reduct. The witness has maximum
    /// cardinality and is the least such set in canonical order.
    NotMinimal(Interpretation),
}

/// The theory a semantics actually takes reducts of. Weight-constraint and
/// PDB programs are rewritten into nested expressions; the other
/// semantics get `t` back after a shape check.
pub fn translate_for(t: &Theory, s: Semantics) -> Result<Theory> {
    translate_with(t, s, &Budget::default())
}

fn translate_with(t: &Theory, s: Semantics, budget: &Budget) -> Result<Theory> {
    budget.check_aggregates(t)?;
    match s {
        Semantics::Ferraris => Ok(t.clone()),
        Semantics::Lif99 => nested_rules(t).map(|_| t.clone()),
        Semantics::Flp => crate::shape::flp_rules(t).map(|_| t.clone()),
        Semantics::SmodelsWc => wc_rules(t)?
            .into_iter()
            .map(|rule| {
                let body = rule
                    .body
                    .iter()
                    .map(|c| wc_to_nested_within(&eliminate_negative_weights(c), budget.max_elements))
                    .collect::<Result<Vec<_>>>()?;
                let head = rule.head.map_or(Formula::Bottom, Formula::Atom);
                Ok(make_rule(body, head))
            })
            .collect(),
        Semantics::Pdb => pdb_rules(t)?
            .into_iter()
            .map(|rule| {
                let body = rule
                    .body
                    .iter()
                    .map(|item| match item {
                        Formula::Agg(a) => pdb_translate_within(a, budget.max_elements),
                        lit => Ok(lit.clone()),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(make_rule(body, Formula::Atom(rule.head)))
            })
            .collect(),
    }
}

fn make_rule(body: Vec<Formula>, head: Formula) -> Formula {
    if body.is_empty() {
        head
    } else {
        Formula::implies(Formula::conj(body), head)
    }
}

/// Precomputed per-semantics state for checking candidates.
struct Engine {
    semantics: Semantics,
    program: Theory,
}

impl Engine {
    fn new(t: &Theory, s: Semantics, budget: &Budget) -> Result<Self> {
        budget.check_atoms(atoms_of(t).len())?;
        Ok(Engine {
            semantics: s,
            program: translate_with(t, s, budget)?,
        })
    }

    fn reduct(&self, x: &Interpretation) -> Theory {
        let r = match self.semantics {
            Semantics::Ferraris => Ok(reduct_theory_ferraris(&self.program, x)),
            Semantics::Flp => reduct_flp(&self.program, x),
            _ => reduct_lif99(&self.program, x),
        };
        r.expect("shape checked when the engine was built")
    }

    /// Candidate atoms. Under Ferraris only head atoms can be in a stable
    /// model, so the rest are never enumerated.
    fn candidates(&self) -> Vec<Atom> {
        let atoms = match self.semantics {
            Semantics::Ferraris => head_atoms(&self.program),
            _ => atoms_of(&self.program),
        };
        atoms.into_iter().collect()
    }

    fn check(&self, x: &Interpretation) -> Verdict {
        let reduct = self.reduct(x);
        if !sat_theory(x, &reduct) {
            return Verdict::NotAModel;
        }
        let mut best: Option<Interpretation> = None;
        for y in x.proper_subsets() {
            if sat_theory(&y, &reduct) {
                let better = match &best {
                    None => true,
                    Some(b) => y.len() > b.len() || (y.len() == b.len() && y < *b),
                };
                if better {
                    best = Some(y);
                }
            }
        }
        best.map_or(Verdict::Stable, Verdict::NotMinimal)
    }

    fn is_stable(&self, x: &Interpretation) -> bool {
        let reduct = self.reduct(x);
        if !sat_theory(x, &reduct) {
            return false;
        }
        // Fast fail on one-atom removals; the full scan below decides.
        for a in x.iter() {
            let mut y = x.clone();
            y.remove(a);
            if sat_theory(&y, &reduct) {
                return false;
            }
        }
        !x.proper_subsets().any(|y| sat_theory(&y, &reduct))
    }
}

pub fn stable_models(t: &Theory, s: Semantics) -> Result<Vec<Interpretation>> {
    stable_models_with(t, s, &Budget::default())
}

/// All stable models of `t` under `s`, in canonical order.
pub fn stable_models_with(t: &Theory, s: Semantics, budget: &Budget) -> Result<Vec<Interpretation>> {
    let engine = Engine::new(t, s, budget)?;
    let vocab = engine.candidates();
    let found: BTreeSet<Interpretation> = subsets_of(&vocab).filter(|x| engine.is_stable(x)).collect();
    Ok(found.into_iter().collect())
}

pub fn is_stable(t: &Theory, x: &Interpretation, s: Semantics) -> Result<bool> {
    Ok(check_stable(t, x, s)? == Verdict::Stable)
}

pub fn check_stable(t: &Theory, x: &Interpretation, s: Semantics) -> Result<Verdict> {
    check_stable_with(t, x, s, &Budget::default())
}

pub fn check_stable_with(t: &Theory, x: &Interpretation, s: Semantics, budget: &Budget) -> Result<Verdict> {
    budget.check_atoms(x.len())?;
    Ok(Engine::new(t, s, budget)?.check(x))
}

pub fn equilibrium_models(t: &Theory) -> Result<Vec<Interpretation>> {
    equilibrium_models_with(t, &Budget::default())
}

/// Sets `X` with `(X,X) ⊨ t` and no `(Z,X) ⊨ t` for `Z ⊂ X`. Aggregates are
/// compiled first.
pub fn equilibrium_models_with(t: &Theory, budget: &Budget) -> Result<Vec<Interpretation>> {
    let t = compile_theory_within(t, budget.max_elements)?;
    let vocab: Vec<Atom> = atoms_of(&t).into_iter().collect();
    budget.check_atoms(vocab.len())?;
    let mut out = BTreeSet::new();
    for x in subsets_of(&vocab) {
        let total = HtInterpretation::new(x.clone(), x.clone())?;
        if !ht_sat_theory(&total, &t)? {
            continue;
        }
        let mut minimal = true;
        for z in x.proper_subsets() {
            if ht_sat_theory(&HtInterpretation::new(z, x.clone())?, &t)? {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.insert(x);
        }
    }
    Ok(out.into_iter().collect())
}
