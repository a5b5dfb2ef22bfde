//! A small rewriting pass that keeps formulas strongly equivalent. Used to
//! make compiled output readable; every rule is an intuitionistic
//! equivalence, hence valid in here-and-there.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::formula::{Formula, Theory};
use crate::syntax::print_formula;

pub fn simplify_theory(t: &Theory) -> Theory {
    t.iter().map(simplify).filter(|f| !f.is_top()).collect()
}

pub fn simplify(f: &Formula) -> Formula {
    match f {
        Formula::Bottom | Formula::Atom(_) => f.clone(),
        Formula::And(..) => simplify_and(f),
        Formula::Or(..) => simplify_or(f),
        Formula::Implies(l, r) => simplify_implies(simplify(l), simplify(r)),
        Formula::Agg(a) => {
            let mut a = (**a).clone();
            for (g, _) in &mut a.elements {
                *g = simplify(g);
            }
            Formula::Agg(Box::new(a))
        }
    }
}

fn simplify_implies(l: Formula, r: Formula) -> Formula {
    if l == Formula::Bottom || r.is_top() || l == r {
        return Formula::top();
    }
    if l.is_top() {
        return r;
    }
    if l.conjuncts().contains(&&r) {
        return Formula::top();
    }
    // ¬¬¬F ≡ ¬F
    if r == Formula::Bottom {
        if let Some(inner) = l.as_negation().filter(|g| g.as_negation().is_some()) {
            return inner.clone();
        }
    }
    Formula::implies(l, r)
}

fn sort_dedup(items: &mut Vec<Formula>) {
    items.sort_by_cached_key(print_formula);
    items.dedup();
}

fn flatten<'a>(f: &'a Formula, split: fn(&'a Formula) -> Vec<&'a Formula>) -> Vec<Formula> {
    split(f).into_iter().map(simplify).collect()
}

fn simplify_and(f: &Formula) -> Formula {
    let mut items = Vec::new();
    for g in flatten(f, Formula::conjuncts) {
        if g == Formula::Bottom {
            return Formula::Bottom;
        }
        if !g.is_top() {
            items.extend(g.conjuncts().into_iter().cloned());
        }
    }
    sort_dedup(&mut items);
    // A ∧ (A ∨ B) ≡ A
    let keep: Vec<bool> = items
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let ds = g.disjuncts();
            !items
                .iter()
                .enumerate()
                .any(|(j, h)| i != j && h != g && h.disjuncts().iter().all(|d| ds.contains(d)))
        })
        .collect();
    let items = items.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g);
    Formula::conj(items)
}

fn simplify_or(f: &Formula) -> Formula {
    let mut items = Vec::new();
    for g in flatten(f, Formula::disjuncts) {
        if g.is_top() {
            return Formula::top();
        }
        if g != Formula::Bottom {
            items.extend(g.disjuncts().into_iter().cloned());
        }
    }
    sort_dedup(&mut items);
    // A ∨ (A ∧ B) ≡ A
    let keep: Vec<bool> = items
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let cs = g.conjuncts();
            !items
                .iter()
                .enumerate()
                .any(|(j, h)| i != j && h != g && h.conjuncts().iter().all(|c| cs.contains(c)))
        })
        .collect();
    let items = items.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g);
    Formula::disj(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{strong_equiv, StrongEqMethod};
    use crate::syntax::parse_formula;

    fn s(text: &str) -> alloc::string::String {
        print_formula(&simplify(&parse_formula(text).unwrap()))
    }

    #[test]
    fn rewrites() {
        assert_eq!(s("(p | q) & q & p"), "p & q");
        assert_eq!(s("top & p"), "p");
        assert_eq!(s("bot | p"), "p");
        assert_eq!(s("p & bot"), "bot");
        assert_eq!(s("top -> p"), "p");
        assert_eq!(s("p -> p"), "top");
        assert_eq!(s("p & q -> q"), "top");
        assert_eq!(s("not not not p"), "not p");
        assert_eq!(s("p | p & q"), "p");
        assert_eq!(s("not not p"), "not not p");
    }

    #[test]
    fn preserves_strong_equivalence() {
        for text in ["(p | q) & q & p", "not not not (p & q)", "(p -> p) & (q | q & r)", "p | not p"] {
            let f = parse_formula(text).unwrap();
            let t1: Theory = [f.clone()].into_iter().collect();
            let t2: Theory = [simplify(&f)].into_iter().collect();
            assert!(strong_equiv(&t1, &t2, StrongEqMethod::HereAndThere).unwrap().equivalent);
        }
    }
}
