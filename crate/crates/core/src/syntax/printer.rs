use alloc::string::String;
use core::fmt::Write;

use crate::aggregate::AggOp;
use crate::formula::{Formula, Theory};
use crate::semantics::Interpretation;
use crate::shape::head_disjunction;
use crate::weight::Weight;

const IMP: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

/// Canonical text of a formula with the fewest parentheses that still
/// parse back to the same tree.
pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, 0);
    out
}

fn write_formula(out: &mut String, f: &Formula, ctx: u8) {
    let (prec, text) = render(f);
    if prec < ctx {
        out.push('(');
        out.push_str(&text);
        out.push(')');
    } else {
        out.push_str(&text);
    }
}

fn render(f: &Formula) -> (u8, String) {
    let mut s = String::new();
    let prec = match f {
        Formula::Bottom => {
            s.push_str("bot");
            u8::MAX
        }
        Formula::Atom(a) => {
            s.push_str(a.name());
            u8::MAX
        }
        _ if f.is_top() => {
            s.push_str("top");
            u8::MAX
        }
        Formula::Implies(l, r) if **r == Formula::Bottom => {
            s.push_str("not ");
            write_formula(&mut s, l, UNARY);
            UNARY
        }
        Formula::Implies(l, r) => {
            write_formula(&mut s, l, IMP + 1);
            s.push_str(" -> ");
            write_formula(&mut s, r, IMP);
            IMP
        }
        Formula::Or(l, r) => {
            write_formula(&mut s, l, OR);
            s.push_str(" | ");
            write_formula(&mut s, r, OR + 1);
            OR
        }
        Formula::And(l, r) => {
            write_formula(&mut s, l, AND);
            s.push_str(" & ");
            write_formula(&mut s, r, AND + 1);
            AND
        }
        Formula::Agg(a) => {
            s.push_str(a.op.keyword());
            s.push('{');
            for (i, (g, w)) in a.elements.iter().enumerate() {
                if i > 0 {
                    s.push_str("; ");
                }
                write_formula(&mut s, g, 0);
                if !(a.op == AggOp::Count && *w == Weight::one()) {
                    let _ = write!(s, " = {w}");
                }
            }
            let _ = write!(s, "}} {} {}", a.rel, a.bound);
            u8::MAX
        }
    };
    (prec, s)
}

/// One statement, `.`-terminated. Implications whose consequent is an
/// atom, `bot` or a disjunction of atoms print as rules `H :- B.`
pub fn print_statement(f: &Formula) -> String {
    let mut out = String::new();
    match f {
        _ if f.is_top() => out.push_str("top"),
        Formula::Implies(body, head) if head_disjunction(head).is_some() => {
            write_formula(&mut out, head, 0);
            out.push_str(" :- ");
            write_formula(&mut out, body, 0);
        }
        _ => write_formula(&mut out, f, 0),
    }
    out.push('.');
    out
}

/// One statement per line, in theory order.
pub fn print_theory(t: &Theory) -> String {
    let mut out = String::new();
    for f in t {
        out.push_str(&print_statement(f));
        out.push('\n');
    }
    out
}

/// `{p,q}` per line.
pub fn print_models(models: &[Interpretation]) -> String {
    let mut out = String::new();
    for m in models {
        let _ = writeln!(out, "{m}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_theory};

    fn round(s: &str) -> String {
        print_formula(&parse_formula(s).unwrap())
    }

    #[test]
    fn minimal_parentheses() {
        assert_eq!(round("(p & q) | r"), "p & q | r");
        assert_eq!(round("p & (q | r)"), "p & (q | r)");
        assert_eq!(round("(p -> q) -> r"), "(p -> q) -> r");
        assert_eq!(round("p -> (q -> r)"), "p -> q -> r");
        assert_eq!(round("p | (q | r)"), "p | (q | r)");
        assert_eq!(round("not (p & q)"), "not (p & q)");
        assert_eq!(round("not not p"), "not not p");
        assert_eq!(round("p <-> q"), "(p -> q) & (q -> p)");
        assert_eq!(round("count{p; q = 2} != 1"), "count{p; q = 2} != 1");
        assert_eq!(round("sum{p = 0.5} >= -3"), "sum{p = 1/2} >= -3");
        assert_eq!(round("not sum{p = 1} <= 0"), "not sum{p = 1} <= 0");
        assert_eq!(round("bot -> p"), "bot -> p");
    }

    #[test]
    fn statements() {
        let t = parse_theory("p :- not q. (p -> q) | (q -> p). top. a | b :- c. not p.").unwrap();
        assert_eq!(
            print_theory(&t),
            "(p -> q) | (q -> p).\na | b :- c.\nbot :- p.\np :- not q.\ntop.\n"
        );
        assert_eq!(print_theory(&Theory::new()), "");
    }

    #[test]
    fn models() {
        let ms = [Interpretation::from_names(&["p"]), Interpretation::from_names(&["q"])];
        assert_eq!(print_models(&ms), "{p}\n{q}\n");
        assert_eq!(print_models(&[Interpretation::new()]), "{}\n");
    }
}
