//! Graded elements in normal form `sum f_i(H) v_i`, with `v_i = X^i` for
//! `i > 0`, `v_i = Y^-i` for `i < 0` and `v_0 = 1`.
//!
//! The same container holds elements of the Weyl algebra (polynomial
//! coefficients) and of its localization at `K[H] \ 0` (rational-function
//! coefficients). Both share the basis `v_i`, so the embedding keeps
//! components unchanged.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::arith::{Deg, PolyH, Rat, RatFuncH};
use crate::error::{Error, Result};

/// Coefficient rings for graded elements: `K[H]` or `K(H)`.
pub trait Coeff: Clone + PartialEq + Eq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &Rat) -> Self;
    fn sigma_pow(&self, i: i64) -> Self;
    fn from_poly(p: PolyH) -> Self;
    fn deg(&self) -> Deg;
    fn is_monic(&self) -> bool;
    fn to_text(&self) -> String;
}

impl Coeff for PolyH {
    fn zero() -> Self {
        PolyH::zero()
    }
    fn one() -> Self {
        PolyH::one()
    }
    fn is_zero(&self) -> bool {
        PolyH::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, c: &Rat) -> Self {
        PolyH::scale(self, c)
    }
    fn sigma_pow(&self, i: i64) -> Self {
        PolyH::sigma_pow(self, i)
    }
    fn from_poly(p: PolyH) -> Self {
        p
    }
    fn deg(&self) -> Deg {
        PolyH::deg(self)
    }
    fn is_monic(&self) -> bool {
        PolyH::is_monic(self)
    }
    fn to_text(&self) -> String {
        PolyH::to_text(self)
    }
}

impl Coeff for RatFuncH {
    fn zero() -> Self {
        RatFuncH::zero()
    }
    fn one() -> Self {
        RatFuncH::one()
    }
    fn is_zero(&self) -> bool {
        RatFuncH::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, c: &Rat) -> Self {
        RatFuncH::scale(self, c)
    }
    fn sigma_pow(&self, i: i64) -> Self {
        RatFuncH::sigma_pow(self, i)
    }
    fn from_poly(p: PolyH) -> Self {
        RatFuncH::from_poly(p)
    }
    fn deg(&self) -> Deg {
        RatFuncH::deg(self)
    }
    fn is_monic(&self) -> bool {
        RatFuncH::is_monic(self)
    }
    fn to_text(&self) -> String {
        RatFuncH::to_text(self)
    }
}

/// The structure constant `(n, m)` with `v_n v_m = (n, m) v_{n+m}`.
///
/// Nontrivial only when the signs differ:
/// `(n, -b) = (H - n)(H - n + 1)...` with `min(n, b)` factors, and
/// `(-a, m) = (H + a - 1)(H + a - 2)...` with `min(a, m)` factors.
pub fn structure_constant(n: i64, m: i64) -> PolyH {
    let linear = |c: i64| PolyH::linear(Rat::from_integer(c.into()));
    if n > 0 && m < 0 {
        let b = -m;
        (0..n.min(b)).fold(PolyH::one(), |acc, k| &acc * &linear(k - n))
    } else if n < 0 && m > 0 {
        let a = -n;
        (0..a.min(m)).fold(PolyH::one(), |acc, k| &acc * &linear(a - 1 - k))
    } else {
        PolyH::one()
    }
}

/// `<n, m>` with `v_n v_m = v_{n+m} <n, m>`, equal to `sigma^-(n+m)((n, m))`.
pub fn right_structure_constant(n: i64, m: i64) -> PolyH {
    structure_constant(n, m).sigma_pow(-(n + m))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedElement<C> {
    comps: BTreeMap<i64, C>,
}

/// Element of the first Weyl algebra.
pub type WeylElement = GradedElement<PolyH>;
/// Element of the localization `K(H)[X, X^-1; sigma]`.
pub type BElement = GradedElement<RatFuncH>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl<C: Coeff> Default for GradedElement<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> GradedElement<C> {
    pub fn zero() -> Self {
        GradedElement {
            comps: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::homogeneous(0, C::one())
    }

    pub fn homogeneous(degree: i64, coeff: C) -> Self {
        let mut comps = BTreeMap::new();
        if !coeff.is_zero() {
            comps.insert(degree, coeff);
        }
        GradedElement { comps }
    }

    pub fn scalar(c: Rat) -> Self {
        Self::homogeneous(0, C::from_poly(PolyH::constant(c)))
    }

    pub fn x() -> Self {
        Self::homogeneous(1, C::one())
    }

    pub fn y() -> Self {
        Self::homogeneous(-1, C::one())
    }

    pub fn h() -> Self {
        Self::homogeneous(0, C::from_poly(PolyH::h()))
    }

    /// The basis element `v_n`.
    pub fn v(n: i64) -> Self {
        Self::homogeneous(n, C::one())
    }

    pub fn from_components<I: IntoIterator<Item = (i64, C)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (i, c) in it {
            out.add_component(i, &c);
        }
        out
    }

    fn add_component(&mut self, i: i64, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.comps.get_mut(&i) {
            Some(e) => {
                let s = e.add(c);
                if s.is_zero() {
                    self.comps.remove(&i);
                } else {
                    *e = s;
                }
            }
            None => {
                self.comps.insert(i, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Components sorted ascending by degree.
    pub fn components(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.comps.iter().map(|(&i, c)| (i, c))
    }

    pub fn component(&self, i: i64) -> Option<&C> {
        self.comps.get(&i)
    }

    /// Homogeneous part of degree `i` as an element.
    pub fn part(&self, i: i64) -> Self {
        self.comps
            .get(&i)
            .map(|c| Self::homogeneous(i, c.clone()))
            .unwrap_or_default()
    }

    /// Number of nonzero graded components; zero for the zero element.
    pub fn mass(&self) -> usize {
        self.comps.len()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.comps.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.comps.keys().next_back().copied()
    }

    pub fn as_homogeneous(&self) -> Option<(i64, &C)> {
        if self.comps.len() == 1 {
            self.comps.iter().next().map(|(&i, c)| (i, c))
        } else {
            None
        }
    }

    pub fn in_skew_subalgebra(&self, side: Side) -> bool {
        match side {
            Side::Plus => self.comps.keys().all(|&i| i >= 0),
            Side::Minus => self.comps.keys().all(|&i| i <= 0),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &rhs.comps {
            out.add_component(i, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GradedElement {
            comps: self.comps.iter().map(|(&i, c)| (i, c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedElement {
            comps: self.comps.iter().map(|(&i, f)| (i, f.scale(c))).collect(),
        }
    }

    /// Normal-form product: `(f v_n)(g v_m) = f sigma^n(g) (n, m) v_{n+m}`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&n, f) in &self.comps {
            for (&m, g) in &rhs.comps {
                let sc = structure_constant(n, m);
                let mut c = f.mul(&g.sigma_pow(n));
                if !sc.is_one() {
                    c = c.mul(&C::from_poly(sc));
                }
                out.add_component(n + m, &c);
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl WeylElement {
    pub fn to_b(&self) -> BElement {
        GradedElement {
            comps: self
                .comps
                .iter()
                .map(|(&i, f)| (i, RatFuncH::from_poly(f.clone())))
                .collect(),
        }
    }

    /// Scalar value, if the element lies in `K`.
    pub fn as_scalar(&self) -> Option<Rat> {
        match self.comps.len() {
            0 => Some(Rat::zero()),
            1 => self
                .comps
                .get(&0)
                .filter(|f| f.is_constant())
                .map(|f| f.coeff(0)),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }

    /// Filtration degree in `X`, `Y`: `max(2 deg f_i + |i|)`, `-inf` for zero.
    pub fn total_degree(&self) -> Deg {
        self.comps
            .iter()
            .map(|(&i, f)| match f.deg() {
                Deg::Fin(d) => Deg::Fin(2 * d + i.abs()),
                Deg::NegInf => Deg::NegInf,
            })
            .max()
            .unwrap_or(Deg::NegInf)
    }

    /// Substitutes `H` by an element `h_img` (Horner).
    fn eval_coeff_at(f: &PolyH, h_img: &WeylElement) -> WeylElement {
        let mut acc = WeylElement::zero();
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(h_img).add(&WeylElement::scalar(c.clone()));
        }
        acc
    }

    /// Image under the algebra endomorphism sending `X -> x_img`, `Y -> y_img`.
    pub fn substitute(&self, x_img: &WeylElement, y_img: &WeylElement) -> WeylElement {
        let h_img = y_img.mul(x_img);
        let mut out = WeylElement::zero();
        let mut xp: Vec<WeylElement> = vec![WeylElement::one()];
        let mut yp: Vec<WeylElement> = vec![WeylElement::one()];
        for (&i, f) in &self.comps {
            let k = i.unsigned_abs() as usize;
            let pows = if i >= 0 { &mut xp } else { &mut yp };
            let img = if i >= 0 { x_img } else { y_img };
            while pows.len() <= k {
                let next = pows.last().unwrap().mul(img);
                pows.push(next);
            }
            let term = Self::eval_coeff_at(f, &h_img).mul(&pows[k]);
            out = out.add(&term);
        }
        out
    }

    /// The automorphism `X -> Y`, `Y -> -X`. On normal forms:
    /// `f(H) X^n -> f(1 - H) Y^n` and `f(H) Y^n -> (-1)^n f(1 - H) X^n`.
    pub fn xi_apply(&self) -> WeylElement {
        let minus_one = -Rat::one();
        let mut out = WeylElement::zero();
        for (&i, f) in &self.comps {
            let mut g = f.compose_affine(&minus_one, &Rat::one());
            if i < 0 && i % 2 != 0 {
                g = -g;
            }
            out.add_component(-i, &g);
        }
        out
    }
}

impl BElement {
    /// Back to the Weyl algebra when every coefficient is a polynomial.
    pub fn to_weyl(&self) -> Option<WeylElement> {
        let mut comps = BTreeMap::new();
        for (&i, f) in &self.comps {
            comps.insert(i, f.as_poly()?.clone());
        }
        Some(GradedElement { comps })
    }
}

/// A single graded component `coeff * v_degree` with nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homogeneous<C> {
    pub degree: i64,
    pub coeff: C,
}

impl<C: Coeff> Homogeneous<C> {
    pub fn new(degree: i64, coeff: C) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::ZeroInput("homogeneous element"));
        }
        Ok(Homogeneous { degree, coeff })
    }

    pub fn is_monic(&self) -> bool {
        self.coeff.is_monic()
    }

    pub fn to_element(&self) -> GradedElement<C> {
        GradedElement::homogeneous(self.degree, self.coeff.clone())
    }

    pub fn from_element(e: &GradedElement<C>) -> Result<Self> {
        match e.as_homogeneous() {
            Some((d, c)) => Ok(Homogeneous {
                degree: d,
                coeff: c.clone(),
            }),
            None => Err(Error::NotHomogeneous(e.mass())),
        }
    }
}
