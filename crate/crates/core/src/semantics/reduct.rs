use alloc::boxed::Box;

use crate::aggregate::{agg_sat, Aggregate};
use crate::error::Result;
use crate::formula::{Formula, Theory};
use crate::shape::{flp_rules, nested_rules};

use super::interp::Interpretation;
use super::sat::sat;

/// Replaces every maximal subformula of `f` that `x` does not satisfy with
/// `⊥`. An aggregate satisfied by `x` keeps its shape and has each element
/// formula reduced.
pub fn reduct_ferraris(f: &Formula, x: &Interpretation) -> Formula {
    reduce(f, x).1
}

pub fn reduct_theory_ferraris(t: &Theory, x: &Interpretation) -> Theory {
    t.iter().map(|f| reduct_ferraris(f, x)).collect()
}

/// Returns `(x ⊨ f, f^x)` in one pass.
fn reduce(f: &Formula, x: &Interpretation) -> (bool, Formula) {
    match f {
        Formula::Bottom => (false, Formula::Bottom),
        Formula::Atom(a) => {
            if x.contains(a) {
                (true, f.clone())
            } else {
                (false, Formula::Bottom)
            }
        }
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
            let (sl, rl) = reduce(l, x);
            let (sr, rr) = reduce(r, x);
            let (holds, node): (bool, fn(Formula, Formula) -> Formula) = match f {
                Formula::And(..) => (sl && sr, Formula::and),
                Formula::Or(..) => (sl || sr, Formula::or),
                _ => (!sl || sr, Formula::implies),
            };
            if holds {
                (true, node(rl, rr))
            } else {
                (false, Formula::Bottom)
            }
        }
        Formula::Agg(a) => {
            if agg_sat(x, a) {
                let elements = a
                    .elements
                    .iter()
                    .map(|(g, w)| (reduce(g, x).1, w.clone()))
                    .collect();
                (
                    true,
                    Formula::Agg(Box::new(Aggregate {
                        elements,
                        ..(**a).clone()
                    })),
                )
            } else {
                (false, Formula::Bottom)
            }
        }
    }
}

/// The reduct of a program with nested expressions: inside each rule every
/// maximal negation `¬F` becomes `⊤` when `x ⊨ ¬F` and `⊥` otherwise.
pub fn reduct_lif99(t: &Theory, x: &Interpretation) -> Result<Theory> {
    Ok(nested_rules(t)?
        .into_iter()
        .map(|rule| {
            let head = reduce_negations(&rule.head, x);
            match rule.body {
                Some(body) => Formula::implies(reduce_negations(&body, x), head),
                None => head,
            }
        })
        .collect())
}

fn reduce_negations(f: &Formula, x: &Interpretation) -> Formula {
    match f {
        Formula::Bottom | Formula::Atom(_) => f.clone(),
        Formula::And(l, r) => Formula::and(reduce_negations(l, x), reduce_negations(r, x)),
        Formula::Or(l, r) => Formula::or(reduce_negations(l, x), reduce_negations(r, x)),
        Formula::Implies(l, _) => {
            // Nested expressions only contain implications of the form G → ⊥.
            if sat(x, l) {
                Formula::Bottom
            } else {
                Formula::top()
            }
        }
        Formula::Agg(_) => unreachable!("nested_rules rejects aggregates"),
    }
}

/// The rules of an FLP-program whose body `x` satisfies, unchanged.
pub fn reduct_flp(t: &Theory, x: &Interpretation) -> Result<Theory> {
    Ok(flp_rules(t)?
        .into_iter()
        .filter(|rule| rule.body.iter().all(|item| sat(x, item)))
        .map(|rule| rule.source)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_theory};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn t(s: &str) -> Theory {
        parse_theory(s).unwrap()
    }

    #[test]
    fn ferraris_examples() {
        let p = Interpretation::from_names(&["p"]);
        assert_eq!(reduct_ferraris(&f("p :- not q"), &p), f("top -> p"));
        assert_eq!(reduct_ferraris(&f("q :- not p"), &p), f("bot -> bot"));
        assert_eq!(
            reduct_ferraris(&f("(p -> q) | (q -> p)"), &p),
            Formula::or(Formula::Bottom, Formula::implies(Formula::Bottom, f("p")))
        );
        let q = Interpretation::from_names(&["q"]);
        assert_eq!(
            reduct_ferraris(&f("sum{p = -1; q = 1} >= 0 -> q"), &q),
            f("sum{bot = -1; q = 1} >= 0 -> q")
        );
    }

    #[test]
    fn lif99_examples() {
        let prog = t("p :- not q. q :- not p.");
        assert_eq!(
            reduct_lif99(&prog, &Interpretation::from_names(&["p"])).unwrap(),
            t("p :- top. q :- bot.")
        );
        assert_eq!(
            reduct_lif99(&prog, &Interpretation::new()).unwrap(),
            t("p :- top. q :- top.")
        );
        assert_eq!(
            reduct_lif99(&t("p :- not not p."), &Interpretation::from_names(&["p"])).unwrap(),
            t("p :- top.")
        );
        assert!(reduct_lif99(&t("(p -> q) | r."), &Interpretation::new()).is_err());
    }

    #[test]
    fn flp_examples() {
        let prog = t("p :- sum{p = 2} >= 1.");
        assert!(reduct_flp(&prog, &Interpretation::new()).unwrap().is_empty());
        assert_eq!(
            reduct_flp(&prog, &Interpretation::from_names(&["p"])).unwrap(),
            prog
        );
        let neg = t("a :- not b.");
        assert_eq!(
            reduct_flp(&neg, &Interpretation::from_names(&["a"])).unwrap(),
            neg
        );
    }
}
