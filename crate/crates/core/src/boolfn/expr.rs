// SPDX-License-Identifier: Apache-2.0

//! Boolean expression language.
//!
//! ```text
//! expr  := or
//! or    := xor ('|' xor)*
//! xor   := and ('^' and)*
//! and   := unary ('&' unary)*
//! unary := '!' unary | atom
//! atom  := ident | '0' | '1' | '(' expr ')'
//!        | ('MAJ' | 'MIN') '(' expr (',' expr)+ ')'
//! ```
//!
//! Precedence is `!` > `&` > `^` > `|`. Variables are numbered in order of
//! first textual occurrence; variable `j` becomes bit `j` of the pattern
//! index when the expression is compiled.

use std::fmt;

use crate::boolfn::TruthTable;
use crate::error::{Error, Result};
use crate::MAX_INPUTS;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Index into [`BoolExpr::vars`].
    Var(usize),
    Const(bool),
    Not(Box<Expr>),
    And(Vec<Expr>),
    Or(Vec<Expr>),
    Xor(Vec<Expr>),
    Maj(Vec<Expr>),
    Min(Vec<Expr>),
}

impl Expr {
    fn eval(&self, pattern: usize) -> bool {
        match self {
            Expr::Var(j) => (pattern >> j) & 1 == 1,
            Expr::Const(b) => *b,
            Expr::Not(e) => !e.eval(pattern),
            Expr::And(es) => es.iter().all(|e| e.eval(pattern)),
            Expr::Or(es) => es.iter().any(|e| e.eval(pattern)),
            Expr::Xor(es) => es.iter().filter(|e| e.eval(pattern)).count() % 2 == 1,
            Expr::Maj(es) => 2 * es.iter().filter(|e| e.eval(pattern)).count() > es.len(),
            Expr::Min(es) => 2 * es.iter().filter(|e| e.eval(pattern)).count() < es.len(),
        }
    }

    fn is_atomic(&self) -> bool {
        matches!(
            self,
            Expr::Var(_) | Expr::Const(_) | Expr::Not(_) | Expr::Maj(_) | Expr::Min(_)
        )
    }
}

/// A parsed expression and its free variables in first-occurrence order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolExpr {
    root: Expr,
    vars: Vec<String>,
}

impl BoolExpr {
    pub fn root(&self) -> &Expr {
        &self.root
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    fn write_expr(&self, e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let joined = |f: &mut fmt::Formatter<'_>, es: &[Expr], op: &str| -> fmt::Result {
            for (i, child) in es.iter().enumerate() {
                if i > 0 {
                    write!(f, " {op} ")?;
                }
                if child.is_atomic() {
                    self.write_expr(child, f)?;
                } else {
                    f.write_str("(")?;
                    self.write_expr(child, f)?;
                    f.write_str(")")?;
                }
            }
            Ok(())
        };
        let call = |f: &mut fmt::Formatter<'_>, name: &str, es: &[Expr]| -> fmt::Result {
            write!(f, "{name}(")?;
            for (i, child) in es.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                self.write_expr(child, f)?;
            }
            f.write_str(")")
        };
        match e {
            Expr::Var(j) => f.write_str(&self.vars[*j]),
            Expr::Const(b) => f.write_str(if *b { "1" } else { "0" }),
            Expr::Not(inner) => {
                f.write_str("!")?;
                if inner.is_atomic() {
                    self.write_expr(inner, f)
                } else {
                    f.write_str("(")?;
                    self.write_expr(inner, f)?;
                    f.write_str(")")
                }
            }
            Expr::And(es) => joined(f, es, "&"),
            Expr::Or(es) => joined(f, es, "|"),
            Expr::Xor(es) => joined(f, es, "^"),
            Expr::Maj(es) => call(f, "MAJ", es),
            Expr::Min(es) => call(f, "MIN", es),
        }
    }
}

impl fmt::Display for BoolExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_expr(&self.root, f)
    }
}

impl std::str::FromStr for BoolExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Not,
    And,
    Or,
    Xor,
    LParen,
    RParen,
    Comma,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Zero => "`0`".into(),
        Tok::One => "`1`".into(),
        Tok::Not => "`!`".into(),
        Tok::And => "`&`".into(),
        Tok::Or => "`|`".into(),
        Tok::Xor => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let simple = match c {
            '!' => Some(Tok::Not),
            '&' => Some(Tok::And),
            '|' => Some(Tok::Or),
            '^' => Some(Tok::Xor),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = simple {
            chars.next();
            out.push((pos, tok));
        } else if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    ident.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((pos, Tok::Ident(ident)));
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    digits.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let tok = match digits.as_str() {
                "0" => Tok::Zero,
                "1" => Tok::One,
                _ => {
                    return Err(Error::Syntax {
                        pos,
                        msg: format!("invalid constant `{digits}`, expected 0 or 1"),
                    })
                }
            };
            out.push((pos, tok));
        } else {
            return Err(Error::Syntax {
                pos,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected {}", describe(&want))))
        }
    }

    fn unexpected(&self, what: &str) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg: format!("{what}, found {}", describe(self.peek())),
        }
    }

    fn chain(
        &mut self,
        op: Tok,
        next: fn(&mut Self) -> Result<Expr>,
        build: fn(Vec<Expr>) -> Expr,
    ) -> Result<Expr> {
        let mut items = vec![next(self)?];
        while *self.peek() == op {
            self.bump();
            items.push(next(self)?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            build(items)
        })
    }

    fn or(&mut self) -> Result<Expr> {
        self.chain(Tok::Or, Self::xor, Expr::Or)
    }

    fn xor(&mut self) -> Result<Expr> {
        self.chain(Tok::Xor, Self::and, Expr::Xor)
    }

    fn and(&mut self) -> Result<Expr> {
        self.chain(Tok::And, Self::unary, Expr::And)
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Not {
            self.bump();
            Ok(Expr::Not(Box::new(self.unary()?)))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Zero => {
                self.bump();
                Ok(Expr::Const(false))
            }
            Tok::One => {
                self.bump();
                Ok(Expr::Const(true))
            }
            Tok::LParen => {
                self.bump();
                let e = self.or()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                let is_call = *self.peek() == Tok::LParen;
                match name.as_str() {
                    "MAJ" if is_call => self.call("MAJ", pos).map(Expr::Maj),
                    "MIN" if is_call => self.call("MIN", pos).map(Expr::Min),
                    _ => Ok(Expr::Var(self.var_index(name)?)),
                }
            }
            _ => Err(self.unexpected("expected a variable, constant, `!` or `(`")),
        }
    }

    fn call(&mut self, name: &'static str, pos: usize) -> Result<Vec<Expr>> {
        self.expect(Tok::LParen)?;
        let mut args = vec![self.or()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            args.push(self.or()?);
        }
        self.expect(Tok::RParen)?;
        if args.len() < 3 || args.len() % 2 == 0 {
            return Err(Error::CallArity {
                name,
                pos,
                arity: args.len(),
            });
        }
        Ok(args)
    }

    fn var_index(&mut self, name: String) -> Result<usize> {
        if let Some(i) = self.vars.iter().position(|v| *v == name) {
            return Ok(i);
        }
        self.vars.push(name);
        if self.vars.len() > MAX_INPUTS {
            return Err(Error::TooManyVariables(self.vars.len()));
        }
        Ok(self.vars.len() - 1)
    }
}

pub fn parse_expr(text: &str) -> Result<BoolExpr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        vars: Vec::new(),
    };
    if *p.peek() == Tok::End {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let root = p.or()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("expected an operator or end of input"));
    }
    Ok(BoolExpr { root, vars: p.vars })
}

/// Evaluates the expression over all `2^n` assignments of its variables.
pub fn compile_expr(e: &BoolExpr) -> Result<TruthTable> {
    if e.vars.is_empty() {
        return Err(Error::ZeroVariables);
    }
    TruthTable::from_fn(e.vars.len(), |p| e.root.eval(p))
}
