//! Centralizers of homogeneous elements in the localization
//! `B = K(H)[X, X^-1; sigma]`.
//!
//! For a monic `u = alpha v_n` with `n != 0`, the centralizer is the Laurent
//! ring `K[v, v^-1]` with `v = beta v_{sign(n) s}`, where `s` is the least
//! positive divisor of `|n|` admitting a monic `beta` whose `|n|/s` shifted
//! copies multiply to `alpha`:
//!
//! ```text
//! n > 0:  beta sigma^s(beta) ... sigma^((k-1)s)(beta) = alpha
//! n < 0:  beta sigma^-s(beta) ... sigma^-((k-1)s)(beta) = alpha
//! ```
//!
//! Negative degrees use the basis `v_{-m} = Y^m`; powers of `Y` carry no
//! structure constants, so the same twisted-product equation governs both
//! signs.
//!
//! `beta` is found by factoring `alpha`, grouping irreducible factors into
//! `sigma^s`-orbits, and deconvolving the exponent pattern of each orbit.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::arith::{factor_ratfunc, Deg, FactoredPoly, PolyH, Rat, RatFuncH};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::weyl::{BElement, Homogeneous};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Plus,
    Minus,
}

impl Direction {
    pub fn of_degree(n: i64) -> Self {
        if n > 0 {
            Direction::Plus
        } else {
            Direction::Minus
        }
    }

    fn sign(self) -> i64 {
        match self {
            Direction::Plus => 1,
            Direction::Minus => -1,
        }
    }
}

/// One `sigma^step`-orbit of irreducible factors. Position `j` stands for
/// `base(H - j*step)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub base: PolyH,
    pub step: i64,
    pub exponents: BTreeMap<i64, i32>,
}

impl Orbit {
    pub fn factor_at(&self, j: i64) -> PolyH {
        self.base.sigma_pow(j * self.step)
    }
}

/// Integer `t` with `q(H) = p(H - t)`, if any. Both must be monic.
pub fn shift_between(p: &PolyH, q: &PolyH) -> Option<i64> {
    if p.degree() != q.degree() || p.is_constant() {
        return None;
    }
    let d = p.degree();
    // p(H - t) has sub-leading coefficient p_{d-1} - d t
    let t = (p.coeff(d - 1) - q.coeff(d - 1)) / Rat::from_integer((d as i64).into());
    if !t.is_integer() {
        return None;
    }
    let t: i64 = t.to_integer().try_into().ok()?;
    (p.sigma_pow(t) == *q).then_some(t)
}

/// Groups the bases of a factorization into `sigma^s`-orbits.
pub fn shift_orbit_partition(factors: &FactoredPoly, s: i64) -> Vec<Orbit> {
    assert!(s > 0, "orbit step must be positive");
    let mut orbits: Vec<Orbit> = Vec::new();
    for (base, e) in &factors.factors {
        let placed = orbits.iter_mut().find_map(|o| {
            shift_between(&o.base, base)
                .filter(|t| t % s == 0)
                .map(|t| (o, t / s))
        });
        match placed {
            Some((o, j)) => *o.exponents.entry(j).or_insert(0) += e,
            None => orbits.push(Orbit {
                base: base.clone(),
                step: s,
                exponents: BTreeMap::from([(0, *e)]),
            }),
        }
    }
    for o in &mut orbits {
        o.exponents.retain(|_, e| *e != 0);
    }
    orbits.retain(|o| !o.exponents.is_empty());
    orbits
}

/// Why a divisor admits no twisted root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasibility {
    /// `k` does not divide `deg alpha`.
    Degree { deg_alpha: i64, k: i64 },
    /// Deconvolution of the orbit's exponent pattern left a nonzero residue.
    Residue {
        orbit_base: PolyH,
        step: i64,
        position: i64,
        residue: i64,
    },
}

/// `beta sigma^(ds)(beta) ... sigma^(d(k-1)s)(beta)` with `d = +-1` by direction.
pub fn twisted_product(beta: &RatFuncH, k: i64, s: i64, dir: Direction) -> RatFuncH {
    (0..k).fold(RatFuncH::one(), |acc, m| {
        &acc * &beta.sigma_pow(dir.sign() * m * s)
    })
}

/// Solves the deconvolution `sum_{m<k} d(j - m) = e(j)` for finitely supported `d`.
fn deconvolve(e: &BTreeMap<i64, i32>, k: i64) -> std::result::Result<BTreeMap<i64, i64>, (i64, i64)> {
    let mut d: BTreeMap<i64, i64> = BTreeMap::new();
    let (Some(&lo), Some(&hi)) = (e.keys().next(), e.keys().next_back()) else {
        return Ok(d);
    };
    let window = |d: &BTreeMap<i64, i64>, j: i64| -> i64 {
        (1..k).map(|m| d.get(&(j - m)).copied().unwrap_or(0)).sum()
    };
    let last = hi - k + 1;
    for j in lo..=last {
        let v = i64::from(e.get(&j).copied().unwrap_or(0)) - window(&d, j);
        if v != 0 {
            d.insert(j, v);
        }
    }
    for j in (last + 1).max(lo)..=hi {
        let r = i64::from(e.get(&j).copied().unwrap_or(0))
            - window(&d, j)
            - d.get(&j).copied().unwrap_or(0);
        if r != 0 {
            return Err((j, r));
        }
    }
    Ok(d)
}

/// Monic `beta` whose `k` shifted copies multiply to `alpha`, or why none exists.
pub fn solve_twisted_root(
    alpha: &RatFuncH,
    k: i64,
    s: i64,
    dir: Direction,
) -> Result<std::result::Result<RatFuncH, Infeasibility>> {
    if k < 1 || s < 1 {
        return Err(Error::OutOfScope(format!("k = {k} and s = {s} must be positive")));
    }
    if alpha.is_zero() || !alpha.is_monic() {
        return Err(Error::NotMonic);
    }
    let Deg::Fin(deg_alpha) = alpha.deg() else {
        unreachable!("alpha is nonzero")
    };
    if deg_alpha % k != 0 {
        return Ok(Err(Infeasibility::Degree { deg_alpha, k }));
    }
    let fac = factor_ratfunc(alpha)?;
    let mut num = PolyH::one();
    let mut den = PolyH::one();
    for orbit in shift_orbit_partition(&fac, s) {
        let e: BTreeMap<i64, i32> = match dir {
            Direction::Plus => orbit.exponents.clone(),
            Direction::Minus => orbit.exponents.iter().map(|(&j, &x)| (-j, x)).collect(),
        };
        let d = match deconvolve(&e, k) {
            Ok(d) => d,
            Err((pos, residue)) => {
                return Ok(Err(Infeasibility::Residue {
                    orbit_base: orbit.base.clone(),
                    step: s,
                    position: dir.sign() * pos,
                    residue,
                }))
            }
        };
        for (j, x) in d {
            let f = orbit.factor_at(dir.sign() * j).pow(x.unsigned_abs() as u32);
            if x > 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        }
    }
    Ok(Ok(RatFuncH::new(num, den)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerResult {
    pub n: i64,
    pub s: i64,
    pub beta: RatFuncH,
    pub v: Homogeneous<RatFuncH>,
    /// Smaller divisors with their infeasibility certificates, ascending.
    pub infeasible_divisors: Vec<(i64, Infeasibility)>,
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

/// Generator `v` of the centralizer of a monic homogeneous `u` of nonzero degree.
pub fn centralizer_generator(u: &Homogeneous<RatFuncH>) -> Result<CentralizerResult> {
    centralizer_generator_with(u, Exec::Sequential)
}

/// Same as [`centralizer_generator`], testing candidate divisors under `exec`.
pub fn centralizer_generator_with(u: &Homogeneous<RatFuncH>, exec: Exec) -> Result<CentralizerResult> {
    let n = u.degree;
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if !u.is_monic() {
        return Err(Error::NotMonic);
    }
    let dir = Direction::of_degree(n);
    let divs = divisors(n.unsigned_abs());
    let outcomes = exec.map(&divs, |&s| {
        let s = s as i64;
        solve_twisted_root(&u.coeff, n.abs() / s, s, dir)
    });
    let mut infeasible = Vec::new();
    for (s, outcome) in divs.into_iter().zip(outcomes) {
        let s = s as i64;
        match outcome? {
            Ok(beta) => {
                let v = Homogeneous::new(n.signum() * s, beta.clone())?;
                return Ok(CentralizerResult {
                    n,
                    s,
                    beta,
                    v,
                    infeasible_divisors: infeasible,
                });
            }
            Err(cert) => infeasible.push((s, cert)),
        }
    }
    Err(Error::Verification(
        "s = |n| must always be feasible".to_string(),
    ))
}

/// `w = scalar * v^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerDecomposition {
    pub scalar: Rat,
    pub exponent: i64,
}

/// Writes `w` as a scalar times a positive power of `v`, if possible.
pub fn power_decompose(
    w: &Homogeneous<RatFuncH>,
    v: &Homogeneous<RatFuncH>,
) -> Option<PowerDecomposition> {
    if v.degree == 0 || w.degree == 0 || w.degree.signum() != v.degree.signum() {
        return None;
    }
    let (j, r) = w.degree.div_rem(&v.degree);
    if r != 0 || j < 1 {
        return None;
    }
    let (lead, monic) = w.coeff.monic_split().ok()?;
    let (vl, vm) = v.coeff.monic_split().ok()?;
    let dir = Direction::of_degree(v.degree);
    let power = twisted_product(&vm, j, v.degree.abs(), dir);
    (power == monic).then(|| PowerDecomposition {
        scalar: lead / vl.pow(j as i32),
        exponent: j,
    })
}

/// Centralizer of a nonconstant degree-zero element: all of `K(H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalCentralizer;

impl RationalCentralizer {
    pub const MARKER: &'static str = "K(H)";

    /// Membership test: concentrated in degree 0.
    pub fn contains(&self, b: &BElement) -> bool {
        b.components().all(|(i, _)| i == 0)
    }
}

pub fn centralizer_rational(u: &RatFuncH) -> Result<RationalCentralizer> {
    if u.is_constant() {
        return Err(Error::ConstantCentralizer);
    }
    Ok(RationalCentralizer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::int;
    use crate::arith::FactoredPoly;

    fn p(c: &[i64]) -> PolyH {
        PolyH::from_ints(c)
    }

    fn rf(c: &[i64]) -> RatFuncH {
        RatFuncH::from_poly(p(c))
    }

    fn hom(n: i64, c: RatFuncH) -> Homogeneous<RatFuncH> {
        Homogeneous::new(n, c).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let fac = |bases: Vec<PolyH>| FactoredPoly {
            unit: int(1),
            factors: bases.into_iter().map(|b| (b, 1)).collect(),
        };
        let o = shift_orbit_partition(&fac(vec![p(&[0, 1]), p(&[-1, 1])]), 1);
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].exponents, BTreeMap::from([(0, 1), (1, 1)]));
        assert_eq!(shift_orbit_partition(&fac(vec![p(&[0, 1]), p(&[1, 0, 1])]), 1).len(), 2);
        assert_eq!(shift_orbit_partition(&fac(vec![p(&[0, 1]), p(&[-1, 1])]), 2).len(), 2);
        assert_eq!(shift_between(&p(&[1, 0, 1]), &p(&[2, -2, 1])), Some(1));
        assert_eq!(shift_between(&p(&[1, 0, 1]), &p(&[3, -2, 1])), None);
    }

    #[test]
    fn twisted_root_examples() {
        let one = RatFuncH::one();
        assert_eq!(solve_twisted_root(&one, 2, 1, Direction::Plus).unwrap(), Ok(one));
        let a = rf(&[0, -1, 1]);
        assert_eq!(solve_twisted_root(&a, 2, 1, Direction::Plus).unwrap(), Ok(rf(&[0, 1])));
        assert_eq!(
            solve_twisted_root(&rf(&[0, 1]), 2, 1, Direction::Plus).unwrap(),
            Err(Infeasibility::Degree { deg_alpha: 1, k: 2 })
        );
        // minus direction: beta sigma^-1(beta) = H (H + 1)
        let b = rf(&[0, 1, 1]);
        assert_eq!(solve_twisted_root(&b, 2, 1, Direction::Minus).unwrap(), Ok(rf(&[0, 1])));
        assert!(solve_twisted_root(&rf(&[0, 2]), 1, 1, Direction::Plus).is_err());
    }

    #[test]
    fn rational_twisted_root() {
        // beta = (H^2+1)/(H - 1/2), k = 3, s = 2
        let beta = RatFuncH::new(p(&[1, 0, 1]), PolyH::linear(crate::arith::rat::rat(-1, 2)));
        let alpha = twisted_product(&beta, 3, 2, Direction::Plus);
        assert_eq!(solve_twisted_root(&alpha, 3, 2, Direction::Plus).unwrap(), Ok(beta.clone()));
        let alpha = twisted_product(&beta, 3, 2, Direction::Minus);
        assert_eq!(solve_twisted_root(&alpha, 3, 2, Direction::Minus).unwrap(), Ok(beta));
    }

    #[test]
    fn residue_certificate() {
        // H (H - 2): k = 2, s = 1 has a gap at position 1
        let alpha = rf(&[0, -2, 1]);
        let out = solve_twisted_root(&alpha, 2, 1, Direction::Plus).unwrap();
        assert!(matches!(out, Err(Infeasibility::Residue { .. })), "{out:?}");
    }

    #[test]
    fn generator_examples() {
        let r = centralizer_generator(&hom(2, RatFuncH::one())).unwrap();
        assert_eq!((r.s, r.v.clone()), (1, hom(1, RatFuncH::one())));
        let r = centralizer_generator(&hom(2, rf(&[0, 1]))).unwrap();
        assert_eq!((r.s, r.v.clone()), (2, hom(2, rf(&[0, 1]))));
        assert_eq!(r.infeasible_divisors.len(), 1);
        let r = centralizer_generator(&hom(2, rf(&[0, -1, 1]))).unwrap();
        assert_eq!((r.s, r.v.clone()), (1, hom(1, rf(&[0, 1]))));
        let r = centralizer_generator(&hom(-1, rf(&[0, 1]))).unwrap();
        assert_eq!((r.s, r.v.clone()), (1, hom(-1, rf(&[0, 1]))));
        assert_eq!(centralizer_generator(&hom(0, rf(&[0, 1]))), Err(Error::ZeroDegree));
        assert_eq!(centralizer_generator(&hom(2, rf(&[0, 3]))), Err(Error::NotMonic));
    }

    #[test]
    fn power_decompose_examples() {
        let x = hom(1, RatFuncH::one());
        assert_eq!(
            power_decompose(&hom(4, RatFuncH::one()), &x),
            Some(PowerDecomposition { scalar: int(1), exponent: 4 })
        );
        let hx = hom(1, rf(&[0, 1]));
        assert_eq!(
            power_decompose(&hom(2, rf(&[0, -2, 2])), &hx),
            Some(PowerDecomposition { scalar: int(2), exponent: 2 })
        );
        assert_eq!(power_decompose(&hom(3, rf(&[0, 1])), &x), None);
        assert_eq!(power_decompose(&hom(-3, RatFuncH::one()), &x), None);
    }

    #[test]
    fn rational_centralizer() {
        let c = centralizer_rational(&rf(&[0, 1])).unwrap();
        assert_eq!(RationalCentralizer::MARKER, "K(H)");
        assert!(!c.contains(&BElement::x()));
        assert!(c.contains(&BElement::h()));
        assert_eq!(centralizer_rational(&rf(&[5])), Err(Error::ConstantCentralizer));
        let h = BElement::h();
        assert!(!h.commutator(&BElement::x()).is_zero());
    }
}
