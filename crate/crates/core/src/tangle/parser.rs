//! Recursive-descent parser:
//!
//! ```text
//! expr  := seq
//! seq   := par ( ";" par )*
//! par   := atom ( "*" atom )*
//! atom  := IDENT | "id" "[" IDENT "]" | "swap" "[" IDENT "," IDENT "]" | "(" expr ")"
//! ```
//!
//! Identifiers start with a letter or `_` and continue with letters, digits
//! or `_`; letters include non-ASCII ones such as `Δ_H` or `α`.

use super::ast::TangleExpr;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Star,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::LParen => "\"(\"".into(),
            Tok::RParen => "\")\"".into(),
            Tok::LBracket => "\"[\"".into(),
            Tok::RBracket => "\"]\"".into(),
            Tok::Comma => "\",\"".into(),
            Tok::Semi => "\";\"".into(),
            Tok::Star => "\"*\"".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '*' => Tok::Star,
            c if is_ident_start(c) => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if !is_ident_continue(c) {
                        break;
                    }
                    s.push(c);
                    chars.next();
                    column += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(s),
                    line: l,
                    column: col,
                });
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    line: l,
                    column: col,
                    expected: vec!["a tangle expression".into()],
                    found: format!("character {other:?}"),
                });
            }
        };
        chars.next();
        column += 1;
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

const ATOM_START: [&str; 4] = ["identifier", "\"id\"", "\"swap\"", "\"(\""];

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T> {
        let t = self.peek();
        Err(Error::Syntax {
            line: t.line,
            column: t.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.peek().tok == tok {
            self.bump();
            Ok(())
        } else {
            self.error(&[&tok.describe()])
        }
    }

    fn ident(&mut self) -> Result<String> {
        match &self.peek().tok {
            Tok::Ident(s) if s != "id" && s != "swap" => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => self.error(&["identifier"]),
        }
    }

    fn seq(&mut self) -> Result<TangleExpr> {
        let mut steps = vec![self.par()?];
        while self.peek().tok == Tok::Semi {
            self.bump();
            steps.push(self.par()?);
        }
        Ok(if steps.len() == 1 {
            steps.pop().expect("one step")
        } else {
            TangleExpr::Compose(steps)
        })
    }

    fn par(&mut self) -> Result<TangleExpr> {
        let mut parts = vec![self.atom()?];
        while self.peek().tok == Tok::Star {
            self.bump();
            parts.push(self.atom()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            TangleExpr::Tensor(parts)
        })
    }

    fn atom(&mut self) -> Result<TangleExpr> {
        match self.peek().tok.clone() {
            Tok::Ident(s) if s == "id" => {
                self.bump();
                self.expect(Tok::LBracket)?;
                let x = self.ident()?;
                self.expect(Tok::RBracket)?;
                Ok(TangleExpr::Id(x))
            }
            Tok::Ident(s) if s == "swap" => {
                self.bump();
                self.expect(Tok::LBracket)?;
                let a = self.ident()?;
                self.expect(Tok::Comma)?;
                let b = self.ident()?;
                self.expect(Tok::RBracket)?;
                Ok(TangleExpr::Swap(a, b))
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(TangleExpr::Gen(s))
            }
            Tok::LParen => {
                self.bump();
                let e = self.seq()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => self.error(&ATOM_START),
        }
    }
}

pub fn parse(text: &str) -> Result<TangleExpr> {
    let mut p = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    let e = p.seq()?;
    if p.peek().tok != Tok::Eof {
        return p.error(&["\";\"", "\"*\"", "end of input"]);
    }
    Ok(e)
}
