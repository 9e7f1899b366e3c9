//! A small group-spec language.
//!
//! ```text
//! atom := Z(n) | D(n) | Q(n) | S(n) | A(n) | SL(2,q) | PSL(2,q) | SD(a,b,r)
//! expr := atom ('x' atom)*
//! ```
//!
//! Whitespace-insensitive; `x` builds left-associated direct products.

use super::{
    alternating, cyclic, dihedral, direct_product, generalized_quaternion, psl2, semidirect_cyclic,
    sl2, symmetric, ConstructError, SemidirectSpec,
};
use crate::group::{Caps, Group};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpecAst {
    Cyclic(u64),
    Dihedral(u64),
    Quaternion(u64),
    Symmetric(u64),
    Alternating(u64),
    Sl2(u64),
    Psl2(u64),
    Semidirect(u64, u64, u64),
    /// Left-associated direct product.
    Product(Box<GroupSpecAst>, Box<GroupSpecAst>),
}

impl fmt::Display for GroupSpecAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpecAst::Cyclic(n) => write!(f, "Z({n})"),
            GroupSpecAst::Dihedral(n) => write!(f, "D({n})"),
            GroupSpecAst::Quaternion(n) => write!(f, "Q({n})"),
            GroupSpecAst::Symmetric(n) => write!(f, "S({n})"),
            GroupSpecAst::Alternating(n) => write!(f, "A({n})"),
            GroupSpecAst::Sl2(q) => write!(f, "SL(2,{q})"),
            GroupSpecAst::Psl2(q) => write!(f, "PSL(2,{q})"),
            GroupSpecAst::Semidirect(a, b, r) => write!(f, "SD({a},{b},{r})"),
            GroupSpecAst::Product(l, r) => write!(f, "{l} x {r}"),
        }
    }
}

/// A syntax error with the byte offset of the offending character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecError {
    Parse(ParseError),
    Construct(ConstructError),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::Parse(e) => write!(f, "{e}"),
            SpecError::Construct(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SpecError {}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: at,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(self.pos, format!("expected '{}'", c as char))
        }
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .map_or_else(|| self.err(start, "integer out of range"), Ok)
    }

    fn ident(&mut self) -> Result<(usize, String), ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected a group family name");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii alphabetic slice")
            .to_string();
        Ok((start, s))
    }

    fn atom(&mut self) -> Result<GroupSpecAst, ParseError> {
        let (at, name) = self.ident()?;
        self.expect(b'(')?;
        let ast = match name.as_str() {
            "Z" => GroupSpecAst::Cyclic(self.integer()?),
            "D" => GroupSpecAst::Dihedral(self.integer()?),
            "Q" => GroupSpecAst::Quaternion(self.integer()?),
            "S" => GroupSpecAst::Symmetric(self.integer()?),
            "A" => GroupSpecAst::Alternating(self.integer()?),
            "SL" | "PSL" => {
                let deg_at = {
                    self.skip_ws();
                    self.pos
                };
                let degree = self.integer()?;
                if degree != 2 {
                    return self.err(deg_at, format!("{name} supports degree 2 only"));
                }
                self.expect(b',')?;
                let q = self.integer()?;
                if name == "SL" {
                    GroupSpecAst::Sl2(q)
                } else {
                    GroupSpecAst::Psl2(q)
                }
            }
            "SD" => {
                let a = self.integer()?;
                self.expect(b',')?;
                let b = self.integer()?;
                self.expect(b',')?;
                let r = self.integer()?;
                GroupSpecAst::Semidirect(a, b, r)
            }
            other => return self.err(at, format!("unknown group family '{other}'")),
        };
        self.expect(b')')?;
        Ok(ast)
    }

    fn expr(&mut self) -> Result<GroupSpecAst, ParseError> {
        let mut acc = self.atom()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let rhs = self.atom()?;
                    acc = GroupSpecAst::Product(Box::new(acc), Box::new(rhs));
                }
                Some(_) => return self.err(self.pos, "expected 'x' or end of input"),
                None => return Ok(acc),
            }
        }
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpecAst, ParseError> {
    let mut p = Parser::new(text);
    p.expr()
}

/// Build the group an AST describes. Product names follow the spec text.
pub fn build_group_spec(ast: &GroupSpecAst, caps: &Caps) -> Result<Group, ConstructError> {
    match ast {
        GroupSpecAst::Cyclic(n) => cyclic(*n, caps),
        GroupSpecAst::Dihedral(n) => dihedral(*n, caps),
        GroupSpecAst::Quaternion(n) => generalized_quaternion(*n, caps),
        GroupSpecAst::Symmetric(n) => symmetric(*n, caps),
        GroupSpecAst::Alternating(n) => alternating(*n, caps),
        GroupSpecAst::Sl2(q) => sl2(*q, caps),
        GroupSpecAst::Psl2(q) => psl2(*q, caps),
        GroupSpecAst::Semidirect(a, b, r) => {
            semidirect_cyclic(&SemidirectSpec::new(*a, *b, *r)?, caps)
        }
        GroupSpecAst::Product(l, r) => {
            let left = build_group_spec(l, caps)?;
            let right = build_group_spec(r, caps)?;
            direct_product(&left, &right, caps)
        }
    }
}

/// Parse and build in one step.
pub fn group_from_spec(text: &str, caps: &Caps) -> Result<Group, SpecError> {
    let ast = parse_group_spec(text).map_err(SpecError::Parse)?;
    build_group_spec(&ast, caps).map_err(SpecError::Construct)
}
