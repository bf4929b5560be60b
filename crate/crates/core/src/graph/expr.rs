//! Graph expressions: `P<k>` paths, `C<k>` cycles, `*` for the box product
//! (left-associative) and parentheses. Whitespace is ignored.
//!
//! ```text
//! expr := term ('*' term)*
//! term := 'P' int | 'C' int | '(' expr ')'
//! ```

use std::fmt;

use super::FiniteGraph;
use crate::error::{Error, Result};

/// Largest graph an expression may build; distances are cached for every pair.
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Path(usize),
    Cycle(usize),
    Product(Box<GraphExpr>, Box<GraphExpr>),
}

impl GraphExpr {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error(format!("unexpected '{}'", p.src[p.pos] as char)));
        }
        e.order_checked()?;
        Ok(e)
    }

    fn order_checked(&self) -> Result<usize> {
        let n = match self {
            GraphExpr::Path(k) | GraphExpr::Cycle(k) => *k,
            GraphExpr::Product(a, b) => a.order_checked()?.saturating_mul(b.order_checked()?),
        };
        if n > MAX_VERTICES {
            return Err(Error::Parse {
                offset: 0,
                message: format!("graph would have {n} vertices, more than the limit of {MAX_VERTICES}"),
            });
        }
        Ok(n)
    }

    pub fn build(&self) -> FiniteGraph {
        match self {
            GraphExpr::Path(k) => FiniteGraph::path(*k),
            GraphExpr::Cycle(k) => FiniteGraph::cycle(*k),
            GraphExpr::Product(a, b) => FiniteGraph::box_product(&a.build(), &b.build()),
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Path(k) => write!(f, "P{k}"),
            GraphExpr::Cycle(k) => write!(f, "C{k}"),
            GraphExpr::Product(a, b) => {
                write!(f, "{a}*")?;
                if matches!(**b, GraphExpr::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

/// Parses and builds a graph expression such as `P5*P5` or `C4*(C4*P2)`.
pub fn parse_graph_expr(text: &str) -> Result<FiniteGraph> {
    Ok(GraphExpr::parse(text)?.build())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
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

    fn expr(&mut self) -> Result<GraphExpr> {
        let mut lhs = self.term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = GraphExpr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<GraphExpr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c @ (b'P' | b'p' | b'C' | b'c')) => {
                let start = self.pos;
                self.pos += 1;
                let k = self.int()?;
                if c.eq_ignore_ascii_case(&b'P') {
                    if k < 1 {
                        return Err(Error::Parse { offset: start, message: "paths need at least 1 vertex".into() });
                    }
                    Ok(GraphExpr::Path(k))
                } else {
                    if k < 3 {
                        return Err(Error::Parse {
                            offset: start,
                            message: format!("C{k}: cycles need at least 3 vertices"),
                        });
                    }
                    Ok(GraphExpr::Cycle(k))
                }
            }
            Some(c) => Err(self.error(format!("expected 'P', 'C' or '(', found '{}'", c as char))),
            None => Err(self.error("unexpected end of expression")),
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a vertex count"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse { offset: start, message: "vertex count too large".into() })
    }
}
