//! Text syntax for terms.
//!
//! ```text
//! unary  ::= "[" idx ("," idx)* "]"      leaf 0 of the base 1
//!          | "<" (idx ("," idx)*)? ">"   the same, allowing the empty sequence
//!          | "b" nat                     a base leaf
//!          | "th" "(" idx "," unary ")"
//!          | "{" unary "}"               a leaf that is a term itself
//! binary ::= "z" | "(" "t" idx binary binary ")"
//! ```
//!
//! Whitespace is ignored. Printing is canonical: the bracket form when the
//! leaf is key 0 and there is at least one index, `bN` / `{..}` for a bare
//! leaf, and nested `th(i, ..)` otherwise.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::descriptor::Leaf;
use crate::error::TermError;
use crate::ot::OtTerm;
use crate::seq::{check_chain, Index, SeqTerm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        pos: usize,
        expected: &'static str,
    },
    UnexpectedEnd {
        expected: &'static str,
    },
    /// Well-formed text naming an ill-formed term.
    Constraint {
        pos: usize,
        error: TermError,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, expected } => write!(f, "syntax error at {pos}: expected {expected}"),
            ParseError::UnexpectedEnd { expected } => write!(f, "unexpected end of input: expected {expected}"),
            ParseError::Constraint { pos, error } => write!(f, "invalid term at {pos}: {error}"),
        }
    }
}

/// Either kind of term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Seq(SeqTerm<Leaf>),
    Ot(OtTerm),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail(&self, expected: &'static str) -> ParseError {
        if self.pos >= self.src.len() {
            ParseError::UnexpectedEnd { expected }
        } else {
            ParseError::Syntax { pos: self.pos, expected }
        }
    }

    fn expect(&mut self, c: u8, expected: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(expected))
        }
    }

    fn nat(&mut self) -> Result<(usize, u32), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("a natural number"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let value = text.parse::<u32>().map_err(|_| ParseError::Syntax { pos: start, expected: "a number below 2^32" })?;
        Ok((start, value))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(ParseError::Syntax { pos: self.pos, expected: "end of input" }),
        }
    }

    /// Indices (outermost first) with their source positions, then the leaf.
    fn unary_raw(&mut self) -> Result<(Vec<(usize, Index)>, Leaf), ParseError> {
        match self.peek() {
            Some(open @ (b'[' | b'<')) => {
                let close = if open == b'[' { b']' } else { b'>' };
                self.pos += 1;
                let mut out = Vec::new();
                if open == b'<' && self.peek() == Some(b'>') {
                    self.pos += 1;
                    return Ok((out, Leaf::Key(0)));
                }
                loop {
                    out.push(self.nat()?);
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        Some(c) if c == close => {
                            self.pos += 1;
                            return Ok((out, Leaf::Key(0)));
                        }
                        _ => return Err(self.fail("',' or a closing bracket")),
                    }
                }
            }
            Some(b'b') => {
                self.pos += 1;
                let (_, k) = self.nat()?;
                Ok((Vec::new(), Leaf::Key(k)))
            }
            Some(b't') => {
                self.pos += 1;
                self.expect(b'h', "'th('")?;
                self.expect(b'(', "'('")?;
                let (p, i) = self.nat()?;
                self.expect(b',', "','")?;
                let (mut rest, leaf) = self.unary_raw()?;
                self.expect(b')', "')'")?;
                rest.insert(0, (p, i));
                Ok((rest, leaf))
            }
            Some(b'{') => {
                self.pos += 1;
                let inner = self.unary()?;
                self.expect(b'}', "'}'")?;
                Ok((Vec::new(), Leaf::Term(Box::new(inner))))
            }
            _ => Err(self.fail("a unary term")),
        }
    }

    fn unary(&mut self) -> Result<SeqTerm<Leaf>, ParseError> {
        let (raw, leaf) = self.unary_raw()?;
        let indices: Vec<Index> = raw.iter().map(|&(_, i)| i).collect();
        if let Err((at, error)) = check_chain(&indices) {
            return Err(ParseError::Constraint { pos: raw[at].0, error });
        }
        Ok(SeqTerm::from_parts(indices, leaf).expect("checked chain"))
    }

    fn binary(&mut self) -> Result<OtTerm, ParseError> {
        match self.peek() {
            Some(b'z') => {
                self.pos += 1;
                Ok(OtTerm::zero())
            }
            Some(b'(') => {
                let start = self.pos;
                self.pos += 1;
                self.expect(b't', "'t'")?;
                let (_, i) = self.nat()?;
                let s = self.binary()?;
                let t = self.binary()?;
                self.expect(b')', "')'")?;
                OtTerm::theta(i, s, t).map_err(|error| ParseError::Constraint { pos: start, error })
            }
            _ => Err(self.fail("'z' or '(t'")),
        }
    }
}

pub fn parse_seq(text: &str) -> Result<SeqTerm<Leaf>, ParseError> {
    let mut p = Parser::new(text);
    let s = p.unary()?;
    p.finish()?;
    Ok(s)
}

/// A unary term over a keyed base (no nested leaves).
pub fn parse_keyed(text: &str) -> Result<SeqTerm<u32>, ParseError> {
    let s = parse_seq(text)?;
    crate::descriptor::to_keys(s).ok_or(ParseError::Syntax { pos: 0, expected: "a term with key leaves" })
}

pub fn parse_ot(text: &str) -> Result<OtTerm, ParseError> {
    let mut p = Parser::new(text);
    let s = p.binary()?;
    p.finish()?;
    Ok(s)
}

/// Binary terms start with `z` or `(`; everything else is unary.
pub fn parse(text: &str) -> Result<Parsed, ParseError> {
    let mut p = Parser::new(text);
    match p.peek() {
        Some(b'z' | b'(') => parse_ot(text).map(Parsed::Ot),
        _ => parse_seq(text).map(Parsed::Seq),
    }
}

fn write_seq<E>(s: &SeqTerm<E>, out: &mut String, leaf: &dyn Fn(&E, &mut String), leaf_is_zero: &dyn Fn(&E) -> bool) {
    let ix = s.indices();
    if !ix.is_empty() && leaf_is_zero(s.leaf()) {
        out.push('[');
        for (n, i) in ix.iter().enumerate() {
            if n > 0 {
                out.push(',');
            }
            out.push_str(&format!("{i}"));
        }
        out.push(']');
        return;
    }
    for i in ix {
        out.push_str(&format!("th({i},"));
    }
    leaf(s.leaf(), out);
    for _ in ix {
        out.push(')');
    }
}

fn write_leaf(l: &Leaf, out: &mut String) {
    match l {
        Leaf::Key(k) => out.push_str(&format!("b{k}")),
        Leaf::Term(t) => {
            out.push('{');
            write_seq(t, out, &write_leaf, &|l| *l == Leaf::Key(0));
            out.push('}');
        }
    }
}

pub fn print_seq(s: &SeqTerm<Leaf>) -> String {
    let mut out = String::new();
    write_seq(s, &mut out, &write_leaf, &|l| *l == Leaf::Key(0));
    out
}

pub fn print_keyed(s: &SeqTerm<u32>) -> String {
    let mut out = String::new();
    write_seq(s, &mut out, &|k, o| o.push_str(&format!("b{k}")), &|k| *k == 0);
    out
}

/// A term over terms, with nested leaves in braces.
pub fn print_nested(s: &SeqTerm<SeqTerm<u32>>) -> String {
    let mut out = String::new();
    write_seq(
        s,
        &mut out,
        &|t, o| {
            o.push('{');
            o.push_str(&print_keyed(t));
            o.push('}');
        },
        &|_| false,
    );
    out
}

/// `z` or `(t i s t')`.
pub fn print_ot(s: &OtTerm) -> String {
    let mut out = String::new();
    fn go(s: &OtTerm, out: &mut String) {
        match s.parts() {
            None => out.push('z'),
            Some((i, a, b)) => {
                out.push_str(&format!("(t {i} "));
                go(a, out);
                out.push(' ');
                go(b, out);
                out.push(')');
            }
        }
    }
    go(s, &mut out);
    out
}

/// `<i1,...,ik>` for a sequence over `1`, used by the gap tools.
pub fn print_sequence(seq: &[Index]) -> String {
    let body: Vec<String> = seq.iter().map(|i| format!("{i}")).collect();
    format!("<{}>", body.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let s = parse_keyed("[0,1,0]").unwrap();
        assert_eq!(s.indices(), &[0, 1, 0]);
        assert_eq!(*s.leaf(), 0);
        let z = OtTerm::zero();
        assert_eq!(parse_ot("(t 0 z z)").unwrap(), OtTerm::theta(0, z.clone(), z).unwrap());
        assert_eq!(parse_seq("[0,"), Err(ParseError::UnexpectedEnd { expected: "a natural number" }));
    }

    #[test]
    fn constraint_errors_are_distinct() {
        match parse_seq("th(0, th(2, b0))") {
            Err(ParseError::Constraint { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_ot("(t 0 (t 0 z z) z)"), Err(ParseError::Constraint { pos: 0, .. })));
        assert!(matches!(parse_seq("[0 1]"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn canonical_printing() {
        for text in ["b0", "b3", "[0,1,0]", "th(1,b2)", "{[0]}", "th(0,{b0})"] {
            assert_eq!(print_seq(&parse_seq(text).unwrap()), text);
        }
        assert_eq!(print_seq(&parse_seq("<>").unwrap()), "b0");
        assert_eq!(print_seq(&parse_seq(" th( 0 , [1] ) ").unwrap()), "[0,1]");
        assert_eq!(print_ot(&parse_ot("(t0(t1zz)z)").unwrap()), "(t 0 (t 1 z z) z)");
    }
}
