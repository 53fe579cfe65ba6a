//! Textual syntax for period values: rationals `a/b`, symbols by name,
//! operators `+ - * / ^`, the imaginary unit `i`, parentheses.

use num::BigRational;

use super::symbols::SymbolTable;
use super::value::PeriodValue;
use super::PeriodError;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn next_tok(&mut self) -> Result<Tok, PeriodError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        self.pos += 1;
        match c {
            b'+' => Ok(Tok::Plus),
            b'-' => Ok(Tok::Minus),
            b'*' => Ok(Tok::Star),
            b'/' => Ok(Tok::Slash),
            b'^' => Ok(Tok::Caret),
            b'(' => Ok(Tok::LParen),
            b')' => Ok(Tok::RParen),
            b'0'..=b'9' => {
                let start = self.pos - 1;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: num::BigInt = text
                    .parse()
                    .map_err(|_| PeriodError::Parse(format!("bad integer `{text}`")))?;
                Ok(Tok::Num(BigRational::from_integer(n)))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos - 1;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Tok::Ident(
                    std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string(),
                ))
            }
            c => Err(PeriodError::Parse(format!("unexpected character `{}`", c as char))),
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    cur: Tok,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, PeriodError> {
        let mut lexer = Lexer::new(src);
        let cur = lexer.next_tok()?;
        Ok(Parser { lexer, cur })
    }

    fn bump(&mut self) -> Result<(), PeriodError> {
        self.cur = self.lexer.next_tok()?;
        Ok(())
    }

    fn expr(&mut self) -> Result<PeriodValue, PeriodError> {
        let mut acc = self.term()?;
        loop {
            match self.cur {
                Tok::Plus => {
                    self.bump()?;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump()?;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PeriodValue, PeriodError> {
        let mut acc = self.factor()?;
        loop {
            match self.cur {
                Tok::Star => {
                    self.bump()?;
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    self.bump()?;
                    acc = acc.div(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<PeriodValue, PeriodError> {
        if self.cur == Tok::Minus {
            self.bump()?;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.cur == Tok::Caret {
            self.bump()?;
            let mut sign = 1i64;
            if self.cur == Tok::Minus {
                self.bump()?;
                sign = -1;
            }
            match std::mem::replace(&mut self.cur, Tok::End) {
                Tok::Num(n) => {
                    self.bump()?;
                    if !n.is_integer() {
                        return Err(PeriodError::Parse("exponent must be an integer".into()));
                    }
                    let e: i64 = num::ToPrimitive::to_i64(&n.to_integer())
                        .ok_or_else(|| PeriodError::Parse("exponent out of range".into()))?;
                    return base.pow(sign * e);
                }
                other => {
                    self.cur = other;
                    return Err(PeriodError::Parse("expected integer exponent after ^".into()));
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<PeriodValue, PeriodError> {
        match std::mem::replace(&mut self.cur, Tok::End) {
            Tok::Num(n) => {
                self.bump()?;
                Ok(PeriodValue::from_rational(n))
            }
            Tok::Ident(name) => {
                self.bump()?;
                if name == "i" {
                    Ok(PeriodValue::i())
                } else {
                    Ok(PeriodValue::symbol(SymbolTable::resolve(&name)?))
                }
            }
            Tok::LParen => {
                self.bump()?;
                let v = self.expr()?;
                if self.cur != Tok::RParen {
                    return Err(PeriodError::Parse("expected `)`".into()));
                }
                self.bump()?;
                Ok(v)
            }
            other => {
                self.cur = other;
                Err(PeriodError::Parse(format!("unexpected token {:?}", self.cur)))
            }
        }
    }
}

/// Parse a period expression such as `(-1/12)`, `1/log_2` or `pi^2/6`.
pub fn parse_period(src: &str) -> Result<PeriodValue, PeriodError> {
    let mut p = Parser::new(src)?;
    let v = p.expr()?;
    if p.cur != Tok::End {
        return Err(PeriodError::Parse(format!("trailing input near {:?}", p.cur)));
    }
    Ok(v)
}
