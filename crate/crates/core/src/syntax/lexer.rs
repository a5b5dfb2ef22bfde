use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{ParseError, SourceSpan};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Number(String),
    Punct(&'static str),
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::Punct(p) => format!("`{p}`"),
            Tok::Eof => "end of input".to_string(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

/// Longest match first.
const PUNCT: &[&str] = &[
    "<->", ":-", "->", "<=", ">=", "!=", "<", ">", "=", "&", "|", ";", "{", "}", "(", ")", ".",
];

pub(crate) fn span_at(src: &str, start: usize, end: usize) -> SourceSpan {
    let before = &src[..start];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(start, |nl| start - nl - 1) + 1;
    SourceSpan {
        start,
        end,
        line,
        column,
    }
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'%' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            Tok::Ident(src[start..i].to_string())
        } else if c.is_ascii_digit() || (c == b'-' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)) {
            i += 1;
            i = digits(bytes, i);
            // `1.5` is a decimal, but the `.` in `>= 1.` ends a statement.
            if i + 1 < bytes.len()
                && (bytes[i] == b'.' || bytes[i] == b'/')
                && bytes[i + 1].is_ascii_digit()
            {
                i = digits(bytes, i + 1);
            }
            Tok::Number(src[start..i].to_string())
        } else if let Some(p) = PUNCT.iter().find(|p| src[i..].starts_with(**p)) {
            i += p.len();
            Tok::Punct(p)
        } else {
            let ch = src[i..].chars().next().unwrap_or('?');
            return Err(ParseError {
                span: span_at(src, i, i + ch.len_utf8()),
                message: format!("unexpected character `{ch}`"),
                expected: Vec::new(),
            });
        };
        out.push(Token {
            tok,
            span: span_at(src, start, i),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        span: span_at(src, src.len(), src.len()),
    });
    Ok(out)
}

fn digits(bytes: &[u8], mut i: usize) -> usize {
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    i
}
