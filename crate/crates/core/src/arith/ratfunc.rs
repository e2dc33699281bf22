//! Rational functions in `H`, kept as reduced fractions with monic denominator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{Deg, PolyH};
use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFuncH {
    num: PolyH,
    den: PolyH,
}

impl RatFuncH {
    pub fn zero() -> Self {
        RatFuncH {
            num: PolyH::zero(),
            den: PolyH::one(),
        }
    }

    pub fn one() -> Self {
        RatFuncH::from_poly(PolyH::one())
    }

    pub fn from_poly(p: PolyH) -> Self {
        RatFuncH {
            num: p,
            den: PolyH::one(),
        }
    }

    /// `num / den` in canonical form. Panics on a zero denominator.
    pub fn new(num: PolyH, den: PolyH) -> Self {
        Self::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: PolyH, den: PolyH) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroInput("denominator"));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.lead();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFuncH { num, den })
    }

    pub fn num(&self) -> &PolyH {
        &self.num
    }

    pub fn den(&self) -> &PolyH {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&PolyH> {
        self.is_poly().then_some(&self.num)
    }

    pub fn is_constant(&self) -> bool {
        self.is_poly() && self.num.is_constant()
    }

    /// Numerator and denominator both monic (the denominator always is).
    pub fn is_monic(&self) -> bool {
        self.num.is_monic()
    }

    /// `deg num - deg den`; `-inf` for zero.
    pub fn deg(&self) -> Deg {
        self.num.deg() - self.den.deg()
    }

    pub fn lead(&self) -> Rat {
        self.num.lead()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFuncH {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::try_new(self.den.clone(), self.num.clone())
    }

    pub fn sigma_pow(&self, i: i64) -> Self {
        RatFuncH {
            num: self.num.sigma_pow(i),
            den: self.den.sigma_pow(i),
        }
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 {
            self.recip().expect("negative power of zero")
        } else {
            self.clone()
        };
        let k = e.unsigned_abs();
        RatFuncH {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
    }

    /// `h = lead * monic` with `monic` having monic numerator and denominator.
    pub fn monic_split(&self) -> Result<(Rat, RatFuncH)> {
        if self.is_zero() {
            return Err(Error::ZeroInput("monic_split"));
        }
        let lc = self.num.lead();
        Ok((
            lc.clone(),
            RatFuncH {
                num: self.num.scale(&lc.recip()),
                den: self.den.clone(),
            },
        ))
    }

    pub fn div(&self, rhs: &RatFuncH) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn to_text(&self) -> String {
        if self.is_poly() {
            self.num.to_text()
        } else {
            format!("({})/({})", self.num.to_text(), self.den.to_text())
        }
    }
}

impl fmt::Display for RatFuncH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl From<PolyH> for RatFuncH {
    fn from(p: PolyH) -> Self {
        RatFuncH::from_poly(p)
    }
}

impl<'a> Add<&'a RatFuncH> for &'a RatFuncH {
    type Output = RatFuncH;
    fn add(self, rhs: &RatFuncH) -> RatFuncH {
        if self.den == rhs.den {
            return RatFuncH::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFuncH::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFuncH> for &'a RatFuncH {
    type Output = RatFuncH;
    fn sub(self, rhs: &RatFuncH) -> RatFuncH {
        self + &(-rhs)
    }
}

impl Neg for &RatFuncH {
    type Output = RatFuncH;
    fn neg(self) -> RatFuncH {
        RatFuncH {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Mul<&'a RatFuncH> for &'a RatFuncH {
    type Output = RatFuncH;
    fn mul(self, rhs: &RatFuncH) -> RatFuncH {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncH::zero();
        }
        if self.is_poly() && rhs.is_poly() {
            return RatFuncH::from_poly(&self.num * &rhs.num);
        }
        RatFuncH::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Zero for RatFuncH {
    fn zero() -> Self {
        RatFuncH::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RatFuncH {
    type Output = RatFuncH;
    fn add(self, rhs: RatFuncH) -> RatFuncH {
        &self + &rhs
    }
}

impl One for RatFuncH {
    fn one() -> Self {
        RatFuncH::one()
    }
}

impl Mul for RatFuncH {
    type Output = RatFuncH;
    fn mul(self, rhs: RatFuncH) -> RatFuncH {
        &self * &rhs
    }
}
