//! Recursive-descent parser for the formula syntax.
//!
//! ```text
//! formula := tensor ("-o" formula)?
//! tensor  := primary ("*" primary)*
//! primary := IDENT | "1" | "(" formula ")"
//! IDENT   := [A-Za-z][A-Za-z0-9_]*
//! ```

use thiserror::Error;

use super::formula::Formula;
use crate::names::LabelId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {position}: expected {expected}, found {found}")]
pub struct SyntaxError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Ident(&'a str),
    One,
    Star,
    Lolli,
    Open,
    Close,
    End,
}

impl Token<'_> {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("`{name}`"),
            Token::One => "`1`".into(),
            Token::Star => "`*`".into(),
            Token::Lolli => "`-o`".into(),
            Token::Open => "`(`".into(),
            Token::Close => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    peeked: Option<(usize, Token<'a>)>,
}

impl<'a> Parser<'a> {
    fn lex(&mut self) -> Result<(usize, Token<'a>), SyntaxError> {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = bytes.get(start) else {
            return Ok((start, Token::End));
        };
        let ident_tail = |b: u8| b.is_ascii_alphanumeric() || b == b'_';
        let token = match c {
            b'*' => Token::Star,
            b'(' => Token::Open,
            b')' => Token::Close,
            b'-' if bytes.get(start + 1) == Some(&b'o') => {
                self.pos += 1;
                Token::Lolli
            }
            b'1' if !bytes.get(start + 1).copied().is_some_and(ident_tail) => Token::One,
            c if c.is_ascii_alphabetic() => {
                let len = bytes[start..]
                    .iter()
                    .take_while(|&&b| ident_tail(b))
                    .count();
                self.pos += len;
                return Ok((start, Token::Ident(&self.text[start..start + len])));
            }
            _ => {
                let found = self.text[start..].chars().next().unwrap_or_default();
                return Err(SyntaxError {
                    position: start,
                    expected: "a formula token".into(),
                    found: format!("`{found}`"),
                });
            }
        };
        self.pos += 1;
        Ok((start, token))
    }

    fn peek(&mut self) -> Result<&Token<'a>, SyntaxError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex()?);
        }
        Ok(&self.peeked.as_ref().expect("just filled").1)
    }

    fn next(&mut self) -> Result<(usize, Token<'a>), SyntaxError> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lex(),
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        let left = self.tensor()?;
        if self.peek()? == &Token::Lolli {
            self.next()?;
            let right = self.formula()?;
            return Ok(Formula::lolli(left, right));
        }
        Ok(left)
    }

    fn tensor(&mut self) -> Result<Formula, SyntaxError> {
        let mut acc = self.primary()?;
        while self.peek()? == &Token::Star {
            self.next()?;
            acc = Formula::tensor(acc, self.primary()?);
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<Formula, SyntaxError> {
        let (position, token) = self.next()?;
        match token {
            Token::Ident(name) => Ok(Formula::Atom(LabelId::new(name))),
            Token::One => Ok(Formula::Unit),
            Token::Open => {
                let inner = self.formula()?;
                self.expect(Token::Close, "`)`")?;
                Ok(inner)
            }
            other => Err(SyntaxError {
                position,
                expected: "an atom, `1` or `(`".into(),
                found: other.describe(),
            }),
        }
    }

    fn expect(&mut self, want: Token<'a>, expected: &str) -> Result<(), SyntaxError> {
        let (position, token) = self.next()?;
        if token == want {
            Ok(())
        } else {
            Err(SyntaxError {
                position,
                expected: expected.into(),
                found: token.describe(),
            })
        }
    }
}

/// Parses formula text.
pub fn parse(text: &str) -> Result<Formula, SyntaxError> {
    let mut parser = Parser {
        text,
        pos: 0,
        peeked: None,
    };
    let formula = parser.formula()?;
    let (position, token) = parser.next()?;
    if token != Token::End {
        return Err(SyntaxError {
            position,
            expected: "`*`, `-o` or end of input".into(),
            found: token.describe(),
        });
    }
    Ok(formula)
}
