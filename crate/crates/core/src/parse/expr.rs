//! Free noncommutative expressions in `X`, `Y`, `H` and rational literals.
//!
//! Grammar (whitespace-insensitive, `*` mandatory between factors):
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := 'X' | 'Y' | 'H' | rational | '(' expr ')'
//! rational := int ('/' posint)?
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{PolyH, Rat};
use crate::error::ParseError;
use crate::weyl::WeylElement;

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    X,
    Y,
    H,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreeExpr {
    Sum(Vec<FreeExpr>),
    Product(Vec<FreeExpr>),
    Power(Box<FreeExpr>, u32),
    Neg(Box<FreeExpr>),
    Atom(Atom),
    Rat(Rat),
}

impl FreeExpr {
    pub fn x() -> Self {
        FreeExpr::Atom(Atom::X)
    }
    pub fn y() -> Self {
        FreeExpr::Atom(Atom::Y)
    }
    pub fn h() -> Self {
        FreeExpr::Atom(Atom::H)
    }
}

impl fmt::Display for FreeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeExpr::Sum(ts) => {
                f.write_str("(")?;
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str(")")
            }
            FreeExpr::Product(fs) => {
                for (i, t) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            FreeExpr::Power(b, e) => write!(f, "({b})^{e}"),
            FreeExpr::Neg(e) => write!(f, "(-({e}))"),
            FreeExpr::Atom(Atom::X) => f.write_str("X"),
            FreeExpr::Atom(Atom::Y) => f.write_str("Y"),
            FreeExpr::Atom(Atom::H) => f.write_str("H"),
            FreeExpr::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "({})", r.numer())
                } else {
                    write!(f, "({}/{})", r.numer(), r.denom())
                }
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse(text: &str) -> Result<FreeExpr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err(format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(e)
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
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

    fn expr(&mut self) -> Result<FreeExpr, ParseError> {
        let mut terms = Vec::new();
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                neg = true;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            terms.push(if neg { FreeExpr::Neg(Box::new(t)) } else { t });
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    neg = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    neg = true;
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            FreeExpr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<FreeExpr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            FreeExpr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<FreeExpr, ParseError> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected exponent"));
            }
            let e: u32 = digits
                .parse()
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or(ParseError::ExponentOverflow { pos: start })?;
            return Ok(FreeExpr::Power(Box::new(base), e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn base(&mut self) -> Result<FreeExpr, ParseError> {
        match self.peek() {
            Some(b'X') => {
                self.pos += 1;
                Ok(FreeExpr::x())
            }
            Some(b'Y') => {
                self.pos += 1;
                Ok(FreeExpr::y())
            }
            Some(b'H') => {
                self.pos += 1;
                Ok(FreeExpr::h())
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().unwrap();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let d = self.digits();
                    if d.is_empty() {
                        return Err(self.err("expected denominator"));
                    }
                    let den: BigInt = d.parse().unwrap();
                    if den.is_zero() {
                        return Err(ParseError::ZeroDenominator { pos: at });
                    }
                    return Ok(FreeExpr::Rat(Rat::new(num, den)));
                }
                Ok(FreeExpr::Rat(Rat::from_integer(num)))
            }
            Some(c) => Err(self.err(format!("unexpected {:?}", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Normal form by recursive evaluation with the graded product.
pub fn normalize(e: &FreeExpr) -> WeylElement {
    match e {
        FreeExpr::Sum(ts) => ts
            .iter()
            .fold(WeylElement::zero(), |acc, t| acc.add(&normalize(t))),
        FreeExpr::Product(fs) => fs
            .iter()
            .fold(WeylElement::one(), |acc, f| acc.mul(&normalize(f))),
        FreeExpr::Power(b, k) => normalize(b).pow(*k),
        FreeExpr::Neg(b) => normalize(b).neg(),
        FreeExpr::Atom(Atom::X) => WeylElement::x(),
        FreeExpr::Atom(Atom::Y) => WeylElement::y(),
        FreeExpr::Atom(Atom::H) => WeylElement::h(),
        FreeExpr::Rat(r) => WeylElement::scalar(r.clone()),
    }
}

pub fn parse_element(text: &str) -> Result<WeylElement, ParseError> {
    Ok(normalize(&parse(text)?))
}

/// A monomial of the free algebra: scalar times a word in `X`, `Y`, `H`.
#[derive(Debug, Clone)]
pub struct Word {
    pub coeff: Rat,
    pub letters: Vec<Atom>,
}

/// Expands to a sum of words without using any relation.
pub fn expand_words(e: &FreeExpr) -> Vec<Word> {
    match e {
        FreeExpr::Sum(ts) => ts.iter().flat_map(expand_words).collect(),
        FreeExpr::Product(fs) => fs.iter().fold(
            vec![Word {
                coeff: Rat::one(),
                letters: Vec::new(),
            }],
            |acc, f| word_product(&acc, &expand_words(f)),
        ),
        FreeExpr::Power(b, k) => {
            let inner = expand_words(b);
            (0..*k).fold(
                vec![Word {
                    coeff: Rat::one(),
                    letters: Vec::new(),
                }],
                |acc, _| word_product(&acc, &inner),
            )
        }
        FreeExpr::Neg(b) => expand_words(b)
            .into_iter()
            .map(|w| Word {
                coeff: -w.coeff,
                letters: w.letters,
            })
            .collect(),
        FreeExpr::Atom(a) => vec![Word {
            coeff: Rat::one(),
            letters: vec![*a],
        }],
        FreeExpr::Rat(r) => vec![Word {
            coeff: r.clone(),
            letters: Vec::new(),
        }],
    }
}

fn word_product(a: &[Word], b: &[Word]) -> Vec<Word> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for u in a {
        for v in b {
            let mut letters = u.letters.clone();
            letters.extend_from_slice(&v.letters);
            out.push(Word {
                coeff: &u.coeff * &v.coeff,
                letters,
            });
        }
    }
    out
}

/// Rewrites one word to normal form left to right, using only the
/// single-letter rules `Y^k X -> (H + k - 1) Y^(k-1)`, `X^k Y -> (H - k) X^(k-1)`,
/// `v_k f(H) -> sigma^k(f) v_k`. Independent of the structure-constant table.
pub fn rewrite_word(word: &Word) -> WeylElement {
    // state: list of (degree, coefficient) for f(H) v_degree
    let mut state: Vec<(i64, PolyH)> = vec![(0, PolyH::constant(word.coeff.clone()))];
    for &letter in &word.letters {
        let mut next: Vec<(i64, PolyH)> = Vec::with_capacity(state.len());
        for (k, f) in state {
            match letter {
                Atom::H => next.push((k, &f * &PolyH::h().sigma_pow(k))),
                Atom::X if k >= 0 => next.push((k + 1, f)),
                Atom::X => {
                    let c = PolyH::linear(Rat::from_integer((-k - 1).into()));
                    next.push((k + 1, &f * &c));
                }
                Atom::Y if k <= 0 => next.push((k - 1, f)),
                Atom::Y => {
                    let c = PolyH::linear(Rat::from_integer((-k).into()));
                    next.push((k - 1, &f * &c));
                }
            }
        }
        state = next;
    }
    WeylElement::from_components(state)
}

/// Normal form by full expansion into words and left-to-right rewriting.
pub fn normalize_by_rewriting(e: &FreeExpr) -> WeylElement {
    expand_words(e)
        .iter()
        .fold(WeylElement::zero(), |acc, w| acc.add(&rewrite_word(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{int, rat};

    fn p(c: &[i64]) -> PolyH {
        PolyH::from_ints(c)
    }

    #[test]
    fn parse_shapes() {
        assert_eq!(
            parse("Y*X").unwrap(),
            FreeExpr::Product(vec![FreeExpr::y(), FreeExpr::x()])
        );
        assert_eq!(
            parse("X^2 - 1/2").unwrap(),
            FreeExpr::Sum(vec![
                FreeExpr::Power(Box::new(FreeExpr::x()), 2),
                FreeExpr::Neg(Box::new(FreeExpr::Rat(rat(1, 2))))
            ])
        );
        let e = parse("X*(Y+H)^2").unwrap();
        assert_eq!(
            e,
            FreeExpr::Product(vec![
                FreeExpr::x(),
                FreeExpr::Power(Box::new(FreeExpr::Sum(vec![FreeExpr::y(), FreeExpr::h()])), 2)
            ])
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse("X Y"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse("X^99999999999"), Err(ParseError::ExponentOverflow { pos: 2 })));
        assert!(matches!(parse("3/0"), Err(ParseError::ZeroDenominator { pos: 2 })));
        assert!(matches!(parse("(X"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("X*"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(parse_element("Y*X").unwrap(), WeylElement::h());
        assert!(parse_element("Y*X - X*Y").unwrap().is_one());
        let sq = parse_element("(X+Y)^2").unwrap();
        let want = WeylElement::from_components([(-2, p(&[1])), (0, p(&[-1, 2])), (2, p(&[1]))]);
        assert_eq!(sq, want);
        assert_eq!(parse_element("-X + 2").unwrap(), WeylElement::x().neg().add(&WeylElement::scalar(int(2))));
    }

    #[test]
    fn rewriting_agrees_with_product() {
        for s in ["Y*X", "X*Y", "X^3*Y^2*H", "Y^2*H*X^3 - 2/3*X*Y*X", "(X+Y+H)^3", "H*X*Y*H"] {
            let e = parse(s).unwrap();
            assert_eq!(normalize(&e), normalize_by_rewriting(&e), "{s}");
        }
    }
}
