//! Univariate polynomials in `H` over the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{int, rat_to_text, Rat};
use crate::error::{Error, Result};

/// Degree with a `-inf` sentinel for the zero polynomial. `NegInf` absorbs
/// under addition and sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Deg {
    NegInf,
    Fin(i64),
}

impl Deg {
    pub fn finite(self) -> Option<i64> {
        match self {
            Deg::NegInf => None,
            Deg::Fin(d) => Some(d),
        }
    }
}

impl PartialOrd for Deg {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Deg {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Deg::NegInf, Deg::NegInf) => Ordering::Equal,
            (Deg::NegInf, _) => Ordering::Less,
            (_, Deg::NegInf) => Ordering::Greater,
            (Deg::Fin(a), Deg::Fin(b)) => a.cmp(b),
        }
    }
}

impl Add for Deg {
    type Output = Deg;
    fn add(self, rhs: Deg) -> Deg {
        match (self, rhs) {
            (Deg::Fin(a), Deg::Fin(b)) => Deg::Fin(a + b),
            _ => Deg::NegInf,
        }
    }
}

impl Sub for Deg {
    type Output = Deg;
    fn sub(self, rhs: Deg) -> Deg {
        match (self, rhs) {
            (Deg::Fin(a), Deg::Fin(b)) => Deg::Fin(a - b),
            _ => Deg::NegInf,
        }
    }
}

impl fmt::Display for Deg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deg::NegInf => f.write_str("-inf"),
            Deg::Fin(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in `H`, stored densely in ascending order with no trailing
/// zeros. The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyH {
    coeffs: Vec<Rat>,
}

impl PolyH {
    pub fn zero() -> Self {
        PolyH { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The indeterminate `H`.
    pub fn h() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rat, exp: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    /// `H + c`.
    pub fn linear(c: Rat) -> Self {
        Self::from_coeffs(vec![c, Rat::one()])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyH { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Builds from sparse `(exponent, coefficient)` terms; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (usize, Rat)>>(terms: I) -> Self {
        let mut coeffs: Vec<Rat> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Rat::zero());
            }
            coeffs[e] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &Rat)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn coeff(&self, exp: usize) -> Rat {
        self.coeffs.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for elements of the scalar field, including zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn deg(&self) -> Deg {
        match self.coeffs.len() {
            0 => Deg::NegInf,
            n => Deg::Fin(n as i64 - 1),
        }
    }

    /// Degree as `usize`; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> PolyH {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lead();
        self.scale(&lc.recip())
    }

    pub fn scale(&self, c: &Rat) -> PolyH {
        if c.is_zero() {
            return PolyH::zero();
        }
        PolyH::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> PolyH {
        PolyH::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> PolyH {
        let mut base = self.clone();
        let mut acc = PolyH::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `H -> a*H + b` (Horner).
    pub fn compose_affine(&self, a: &Rat, b: &Rat) -> PolyH {
        let lin = PolyH::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = PolyH::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &PolyH::constant(c.clone());
        }
        acc
    }

    /// `sigma^i(f)`, i.e. `f(H - i)`.
    pub fn sigma_pow(&self, i: i64) -> PolyH {
        if i == 0 || self.is_constant() {
            return self.clone();
        }
        self.taylor_shift(&int(-i))
    }

    /// `f(H + t)` via repeated synthetic division.
    fn taylor_shift(&self, t: &Rat) -> PolyH {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let add = &c[j + 1] * t;
                c[j] += add;
            }
        }
        PolyH::from_coeffs(c)
    }

    /// `(1 - sigma^i)(f) = f(H) - f(H - i)`.
    pub fn delta_op(&self, i: i64) -> Result<PolyH> {
        if i == 0 {
            return Err(Error::ZeroShift);
        }
        Ok(self - &self.sigma_pow(i))
    }

    pub fn div_rem(&self, d: &PolyH) -> (PolyH, PolyH) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < d.coeffs.len() {
            return (PolyH::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dl = d.lead().recip();
        let dn = d.coeffs.len();
        let mut q = vec![Rat::zero(); rem.len() - dn + 1];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dn - 1] * &dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let sub = &c * dc;
                rem[k + j] -= sub;
            }
            q[k] = c;
        }
        rem.truncate(dn - 1);
        (PolyH::from_coeffs(q), PolyH::from_coeffs(rem))
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn div_exact(&self, d: &PolyH) -> Option<PolyH> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &PolyH) -> PolyH {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            // keep intermediate coefficients small
            b = r.monic();
        }
        a.monic()
    }

    /// Clears denominators: returns `(c, g)` with `self = c * g`, `g` primitive
    /// in `Z[H]` with positive leading coefficient.
    pub fn primitive_part(&self) -> (Rat, Vec<BigInt>) {
        use num_integer::Integer;
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rat::new(g, lcm), prim)
    }

    pub fn from_bigints(c: &[BigInt]) -> PolyH {
        PolyH::from_coeffs(c.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    /// Canonical text, descending exponents: `H^2 - 3/2*H + 1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = match e {
                0 => String::new(),
                1 => "H".to_string(),
                _ => format!("H^{e}"),
            };
            if var.is_empty() {
                out.push_str(&rat_to_text(&a));
            } else if a.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&rat_to_text(&a));
                out.push('*');
                out.push_str(&var);
            }
        }
        out
    }
}

impl fmt::Display for PolyH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<Rat> for PolyH {
    fn from(c: Rat) -> Self {
        PolyH::constant(c)
    }
}

impl<'a> Add<&'a PolyH> for &'a PolyH {
    type Output = PolyH;
    fn add(self, rhs: &PolyH) -> PolyH {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.coeffs.clone();
        for (i, b) in short.coeffs.iter().enumerate() {
            c[i] += b;
        }
        PolyH::from_coeffs(c)
    }
}

impl<'a> Sub<&'a PolyH> for &'a PolyH {
    type Output = PolyH;
    fn sub(self, rhs: &PolyH) -> PolyH {
        self + &(-rhs)
    }
}

impl Neg for &PolyH {
    type Output = PolyH;
    fn neg(self) -> PolyH {
        PolyH {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for PolyH {
    type Output = PolyH;
    fn neg(self) -> PolyH {
        -&self
    }
}

impl<'a> Mul<&'a PolyH> for &'a PolyH {
    type Output = PolyH;
    fn mul(self, rhs: &PolyH) -> PolyH {
        if self.is_zero() || rhs.is_zero() {
            return PolyH::zero();
        }
        let mut c = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        PolyH::from_coeffs(c)
    }
}

impl AddAssign<&PolyH> for PolyH {
    fn add_assign(&mut self, rhs: &PolyH) {
        *self = &*self + rhs;
    }
}

impl Add for PolyH {
    type Output = PolyH;
    fn add(self, rhs: PolyH) -> PolyH {
        &self + &rhs
    }
}

impl Sub for PolyH {
    type Output = PolyH;
    fn sub(self, rhs: PolyH) -> PolyH {
        &self - &rhs
    }
}

impl Mul for PolyH {
    type Output = PolyH;
    fn mul(self, rhs: PolyH) -> PolyH {
        &self * &rhs
    }
}
