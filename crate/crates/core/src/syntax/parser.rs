use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::lexer::{span_at, tokenize, Tok, Token};
use super::ParseError;
use crate::aggregate::{AggOp, Aggregate, Rel};
use crate::formula::{is_atom_name, Atom, Formula, Theory, KEYWORDS};
use crate::semantics::Interpretation;
use crate::weight::Weight;

type PResult<T> = Result<T, ParseError>;

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> PResult<Self> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn at(&self, p: &str) -> bool {
        matches!(self.peek(), Tok::Punct(q) if *q == p)
    }

    fn eat(&mut self, p: &str) -> bool {
        let hit = self.at(p);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError {
            span: t.span,
            message: format!("unexpected {}", t.tok.describe()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, p: &'static str) -> PResult<()> {
        if self.eat(p) {
            Ok(())
        } else {
            let mut e = self.error(&[]);
            e.expected = vec![format!("`{p}`")];
            Err(e)
        }
    }

    fn statement(&mut self) -> PResult<Formula> {
        let f = self.rule()?;
        self.expect(".")?;
        Ok(f)
    }

    /// `H :- B`, `:- B` or a bare formula.
    fn rule(&mut self) -> PResult<Formula> {
        if self.eat(":-") {
            return Ok(Formula::neg(self.formula()?));
        }
        let head = self.formula()?;
        if self.eat(":-") {
            let body = self.formula()?;
            return Ok(Formula::implies(body, head));
        }
        Ok(head)
    }

    fn formula(&mut self) -> PResult<Formula> {
        let mut f = self.implication()?;
        while self.eat("<->") {
            let g = self.implication()?;
            f = Formula::iff(f, g);
        }
        Ok(f)
    }

    fn implication(&mut self) -> PResult<Formula> {
        let f = self.disjunction()?;
        if self.eat("->") {
            let g = self.implication()?;
            return Ok(Formula::implies(f, g));
        }
        Ok(f)
    }

    fn disjunction(&mut self) -> PResult<Formula> {
        let mut f = self.conjunction()?;
        while self.eat("|") {
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> PResult<Formula> {
        let mut f = self.unary()?;
        while self.eat("&") {
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> PResult<Formula> {
        if matches!(self.peek(), Tok::Ident(s) if s == "not") {
            self.bump();
            return Ok(Formula::neg(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> PResult<Formula> {
        const START: &[&str] = &["atom", "`not`", "`bot`", "`top`", "`(`", "aggregate"];
        if self.eat("(") {
            let f = self.formula()?;
            self.expect(")")?;
            return Ok(f);
        }
        let Tok::Ident(name) = self.peek().clone() else {
            return Err(self.error(START));
        };
        match name.as_str() {
            "bot" => {
                self.bump();
                Ok(Formula::Bottom)
            }
            "top" => {
                self.bump();
                Ok(Formula::top())
            }
            _ => {
                if let Some(op) = AggOp::ALL.into_iter().find(|op| op.keyword() == name) {
                    self.bump();
                    return Ok(Formula::agg(self.aggregate(op)?));
                }
                if !is_atom_name(&name) {
                    let mut e = self.error(START);
                    e.message = if KEYWORDS.contains(&name.as_str()) {
                        format!("reserved word `{name}` cannot be an atom")
                    } else {
                        format!("invalid atom name `{name}`")
                    };
                    return Err(e);
                }
                self.bump();
                Ok(Formula::Atom(Atom::new(&name).expect("checked")))
            }
        }
    }

    fn aggregate(&mut self, op: AggOp) -> PResult<Aggregate> {
        self.expect("{")?;
        let mut elements = Vec::new();
        if !self.eat("}") {
            loop {
                let f = self.formula()?;
                let w = if self.eat("=") {
                    self.number()?
                } else if op == AggOp::Count {
                    Weight::one()
                } else {
                    return Err(self.error(&["`=`"]));
                };
                elements.push((f, w));
                if self.eat("}") {
                    break;
                }
                if !self.eat(";") {
                    return Err(self.error(&["`;`", "`}`"]));
                }
            }
        }
        let rel = match self.peek() {
            Tok::Punct(p) => Rel::ALL.into_iter().find(|r| r.symbol() == *p),
            _ => None,
        };
        let Some(rel) = rel else {
            return Err(self.error(&["`<=`", "`<`", "`>=`", "`>`", "`=`", "`!=`"]));
        };
        self.bump();
        let bound = self.number()?;
        Ok(Aggregate::new(op, elements, rel, bound))
    }

    fn number(&mut self) -> PResult<Weight> {
        if let Tok::Number(text) = self.peek().clone() {
            if let Some(w) = Weight::parse(&text) {
                self.bump();
                return Ok(w);
            }
            let mut e = self.error(&[]);
            e.message = format!("invalid number `{text}`");
            return Err(e);
        }
        Err(self.error(&["number"]))
    }
}

/// Parses a sequence of `.`-terminated statements.
pub fn parse_theory(text: &str) -> Result<Theory, ParseError> {
    let mut p = Parser::new(text)?;
    let mut t = Theory::new();
    while *p.peek() != Tok::Eof {
        t.insert(p.statement()?);
    }
    Ok(t)
}

/// Parses one formula; `H :- B` and a trailing `.` are accepted.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.rule()?;
    p.eat(".");
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["end of input"]));
    }
    Ok(f)
}

/// Parses `p,q`, `{p,q}`, `{}` or the empty string.
pub fn parse_model(text: &str) -> Result<Interpretation, ParseError> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    let (inner, inner_offset) = match trimmed.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
        Some(inner) => (inner, offset + 1),
        None => (trimmed, offset),
    };
    if inner.trim().is_empty() {
        return Ok(Interpretation::new());
    }
    let mut out = Interpretation::new();
    let mut pos = inner_offset;
    for part in inner.split(',') {
        let name = part.trim();
        let start = pos + (part.len() - part.trim_start().len());
        match Atom::new(name) {
            Ok(a) => {
                out.insert(a);
            }
            Err(_) => {
                return Err(ParseError {
                    span: span_at(text, start, start + name.len()),
                    message: format!("invalid atom `{name}` in model"),
                    expected: vec![String::from("atom")],
                })
            }
        }
        pos += part.len() + 1;
    }
    Ok(out)
}
