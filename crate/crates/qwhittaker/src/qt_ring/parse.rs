//! Parser for the textual form of `Q(q,t)` values.
//!
//! Accepts integers, `q`, `t`, `+ - * /`, `^` with (possibly negative)
//! integer exponents, parentheses or braces, and implicit multiplication
//! (`2q t` is `2*q*t`).

use super::poly::QTPoly;
use super::rational::QTRational;
use super::QtError;
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Op(char),
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<Tok>, QtError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '0'..='9' => {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let txt: String = cs[st..i].iter().collect();
                out.push(Tok::Num(txt.parse().unwrap()));
            }
            'q' | 't' => {
                out.push(Tok::Var(c));
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' => {
                out.push(Tok::Op(c));
                i += 1;
            }
            '(' | '{' => {
                out.push(Tok::Open);
                i += 1;
            }
            ')' | '}' => {
                out.push(Tok::Close);
                i += 1;
            }
            _ => return Err(QtError::Parse(format!("unexpected character '{c}' in \"{s}\""))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, msg: &str) -> QtError {
        QtError::Parse(format!("{msg} at token {}", self.pos))
    }

    fn expr(&mut self) -> Result<QTRational, QtError> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QTRational, QtError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().cloned() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = &acc / &d;
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::Open) => {
                    acc = &acc * &self.power()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<QTRational, QtError> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn exponent(&mut self) -> Result<i64, QtError> {
        let mut sign = 1;
        let mut braced = false;
        if let Some(Tok::Open) = self.peek() {
            braced = true;
            self.pos += 1;
        }
        if let Some(Tok::Op('-')) = self.peek() {
            sign = -1;
            self.pos += 1;
        }
        let e = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                i64::try_from(n).map_err(|_| self.err("exponent too large"))?
            }
            _ => return Err(self.err("expected integer exponent")),
        };
        if braced {
            match self.peek() {
                Some(Tok::Close) => self.pos += 1,
                _ => return Err(self.err("expected closing bracket")),
            }
        }
        Ok(sign * e)
    }

    fn power(&mut self) -> Result<QTRational, QtError> {
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let e = self.exponent()?;
            if e < 0 && base.is_zero() {
                return Err(self.err("zero to a negative power"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QTRational, QtError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(QTRational::int(n))
            }
            Some(Tok::Var('q')) => {
                self.pos += 1;
                Ok(QTPoly::q().into())
            }
            Some(Tok::Var(_)) => {
                self.pos += 1;
                Ok(QTPoly::t().into())
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let v = self.expr()?;
                match self.peek() {
                    Some(Tok::Close) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    _ => Err(self.err("expected closing bracket")),
                }
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// Parses a value of `Q(q,t)`.
pub fn parse_qt(s: &str) -> Result<QTRational, QtError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(QtError::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_paper_like_forms() {
        let a = parse_qt("(q^2+q+1) q^3").unwrap();
        assert_eq!(a, parse_qt("q^5 + q^4 + q^3").unwrap());
        let b = parse_qt("q^{-1} t").unwrap();
        assert_eq!(b, QTRational::monomial(-1, 1));
        assert!(parse_qt("q +").is_err());
        assert!(parse_qt("x").is_err());
    }

    #[test]
    fn round_trip() {
        for s in ["q^2*t", "-1 / (q - 1)", "(q^2 - t) / (q*t^3 + 2)", "0", "-3*q*t + 7"] {
            let v = parse_qt(s).unwrap();
            assert_eq!(v.to_string(), s);
            assert_eq!(parse_qt(&v.to_string()).unwrap(), v);
        }
    }
}
