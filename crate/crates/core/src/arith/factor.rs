//! Factorization of polynomials over the rationals into monic irreducibles.
//!
//! Pipeline: squarefree decomposition (Yun), factorization of each squarefree
//! part modulo a good prime, Hensel lifting past a Mignotte-style coefficient
//! bound, then recombination of lifted factors by trial division.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{is_prime, Fp, ModPoly};
use super::poly::PolyH;
use super::rat::Rat;
use super::ratfunc::RatFuncH;
use crate::error::{Error, Result};

/// `unit * prod(base^exp)` with monic irreducible bases in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPoly {
    pub unit: Rat,
    pub factors: Vec<(PolyH, i32)>,
}

impl FactoredPoly {
    pub fn expand(&self) -> RatFuncH {
        let mut acc = RatFuncH::from_poly(PolyH::constant(self.unit.clone()));
        for (b, e) in &self.factors {
            acc = &acc * &RatFuncH::from_poly(b.clone()).pow(*e);
        }
        acc
    }
}

/// Total order used to sort factor bases: by degree, then coefficients.
pub fn poly_cmp(a: &PolyH, b: &PolyH) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.coeffs().iter().zip(b.coeffs()).rev() {
            match x.cmp(y) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    })
}

pub fn factor_poly(f: &PolyH) -> Result<FactoredPoly> {
    if f.is_zero() {
        return Err(Error::ZeroInput("factor_poly"));
    }
    let unit = f.lead();
    let mut factors = Vec::new();
    for (part, mult) in squarefree(&f.monic()) {
        for base in factor_squarefree(&part) {
            factors.push((base, mult));
        }
    }
    factors.sort_by(|a, b| poly_cmp(&a.0, &b.0));
    Ok(FactoredPoly { unit, factors })
}

/// Factors numerator and denominator; denominator bases get negative exponents.
pub fn factor_ratfunc(h: &RatFuncH) -> Result<FactoredPoly> {
    let num = factor_poly(h.num())?;
    let den = factor_poly(h.den())?;
    let mut factors = num.factors;
    factors.extend(den.factors.into_iter().map(|(b, e)| (b, -e)));
    factors.sort_by(|a, b| poly_cmp(&a.0, &b.0));
    Ok(FactoredPoly {
        unit: num.unit / den.unit,
        factors,
    })
}

/// Yun's algorithm on a monic polynomial: returns `(a_i, i)` with `f = prod a_i^i`.
pub fn squarefree(f: &PolyH) -> Vec<(PolyH, i32)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        let nb = b.div_rem(&a).0;
        let nc = d.div_rem(&a).0;
        d = &nc - &nb.derivative();
        b = nb;
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

/// Irreducible monic factors of a monic squarefree polynomial.
fn factor_squarefree(f: &PolyH) -> Vec<PolyH> {
    if f.degree() <= 1 {
        return vec![f.clone()];
    }
    let (_, g) = f.primitive_part();
    zassenhaus(&g)
        .into_iter()
        .map(|h| PolyH::from_bigints(&h).monic())
        .collect()
}

type ZPoly = Vec<BigInt>;

fn zassenhaus(g: &ZPoly) -> Vec<ZPoly> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g.clone()];
    }
    let lc = g.last().unwrap().clone();
    let (fp, modular) = choose_prime(g);
    if modular.len() == 1 {
        return vec![g.clone()];
    }
    // any factor's coefficients are bounded by 2^n * ||g||_2 * |lc|
    let norm2: BigInt = g.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = (BigInt::one() << n) * norm2 * lc.abs() * 2;
    let p = BigInt::from(fp.p);
    let mut modulus = p.clone();
    let mut k = 1;
    while modulus <= bound {
        modulus *= &p;
        k += 1;
    }
    let lifted = hensel_lift(g, &modular, fp, k);
    recombine(g.clone(), lifted, &modulus)
}

fn to_modp(g: &ZPoly, fp: Fp) -> ModPoly {
    let p = BigInt::from(fp.p);
    Fp::trim(
        g.iter()
            .map(|c| c.mod_floor(&p).to_u64().unwrap())
            .collect(),
    )
}

/// Picks the prime (among the first few good ones) with the fewest modular factors.
fn choose_prime(g: &ZPoly) -> (Fp, Vec<ModPoly>) {
    let lc = g.last().unwrap();
    let mut best: Option<(Fp, Vec<ModPoly>)> = None;
    let mut tried = 0;
    let mut cand: u64 = (1 << 31) - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    while tried < 3 {
        cand -= 2;
        if !is_prime(cand) {
            continue;
        }
        let fp = Fp::new(cand);
        if (lc % BigInt::from(cand)).is_zero() {
            continue;
        }
        let gm = to_modp(g, fp);
        let d = fp.derivative(&gm);
        if fp.gcd(&gm, &d).len() != 1 {
            continue;
        }
        tried += 1;
        let monic = fp.monic(&gm);
        let mut parts = Vec::new();
        for (block, d) in fp.distinct_degree(&monic) {
            parts.extend(fp.equal_degree(&block, d, &mut rng));
        }
        if best.as_ref().is_none_or(|(_, b)| parts.len() < b.len()) {
            best = Some((fp, parts));
        }
        if best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    best.unwrap()
}

fn reduce_sym(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zmul(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out.iter().map(|c| c.mod_floor(m)).collect())
}

fn ztrim(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

fn lift_modp(f: &ModPoly) -> ZPoly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `G = lc^-1 g = prod f_i (mod p)` with monic `f_i` to the same
/// identity modulo `p^k`.
fn hensel_lift(g: &ZPoly, factors: &[ModPoly], fp: Fp, k: u32) -> Vec<ZPoly> {
    let p = BigInt::from(fp.p);
    let pk = p.pow(k);
    let lc_inv = g
        .last()
        .unwrap()
        .extended_gcd(&pk)
        .x
        .mod_floor(&pk);
    let target: ZPoly = ztrim(g.iter().map(|c| (c * &lc_inv).mod_floor(&pk)).collect());
    let mut out = Vec::with_capacity(factors.len());
    let mut rest_target = target;
    for (i, f) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            out.push(rest_target);
            break;
        }
        let rest = factors[i + 1..]
            .iter()
            .fold(vec![1u64], |acc, q| fp.mul_poly(&acc, q));
        let (a, b) = lift_pair(&rest_target, f, &rest, fp, k);
        out.push(a);
        rest_target = b;
    }
    out
}

/// Linear Hensel lifting of `G = a*b (mod p)` to `mod p^k`, with `a`, `b` monic.
fn lift_pair(target: &ZPoly, a0: &ModPoly, b0: &ModPoly, fp: Fp, k: u32) -> (ZPoly, ZPoly) {
    let p = BigInt::from(fp.p);
    let (_, s, t) = fp.ext_gcd(a0, b0);
    let mut a = lift_modp(a0);
    let mut b = lift_modp(b0);
    let mut m = p.clone();
    for _ in 1..k {
        let next = &m * &p;
        let ab = zmul(&a, &b, &next);
        let diff: ZPoly = (0..target.len().max(ab.len()))
            .map(|i| {
                let x = target.get(i).cloned().unwrap_or_default();
                let y = ab.get(i).cloned().unwrap_or_default();
                (x - y).mod_floor(&next)
            })
            .collect();
        let e: ModPoly = Fp::trim(
            diff.iter()
                .map(|c| {
                    debug_assert!((c % &m).is_zero());
                    (c / &m).mod_floor(&p).to_u64().unwrap()
                })
                .collect(),
        );
        let (q, alpha) = fp.div_rem(&fp.mul_poly(&t, &e), a0);
        let beta = fp.rem(
            &fp.add_poly(&fp.mul_poly(&s, &e), &fp.mul_poly(&q, b0)),
            b0,
        );
        a = zadd_scaled(&a, &alpha, &m, &next);
        b = zadd_scaled(&b, &beta, &m, &next);
        m = next;
    }
    (a, b)
}

fn zadd_scaled(a: &ZPoly, d: &ModPoly, m: &BigInt, modulus: &BigInt) -> ZPoly {
    let n = a.len().max(d.len());
    ztrim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                let y = d.get(i).map(|&c| BigInt::from(c) * m).unwrap_or_default();
                (x + y).mod_floor(modulus)
            })
            .collect(),
    )
}

/// Exact division in `Z[x]`; `None` unless `d | f` with integer quotient.
fn zdiv_exact(f: &ZPoly, d: &ZPoly) -> Option<ZPoly> {
    if d.len() > f.len() {
        return None;
    }
    let mut r = f.clone();
    let dl = d.last().unwrap();
    let mut q = vec![BigInt::zero(); f.len() - d.len() + 1];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + d.len() - 1].div_rem(dl);
        if !rem.is_zero() {
            return None;
        }
        for (j, y) in d.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        q[k] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

fn primitive(f: ZPoly) -> ZPoly {
    let g = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if f.last().unwrap().is_negative() { -1 } else { 1 };
    let g = g * sign;
    f.into_iter().map(|c| c / &g).collect()
}

fn recombine(mut g: ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in Combinations::new(lifted.len(), size) {
            let lc = g.last().unwrap().clone();
            let prod = subset
                .iter()
                .fold(vec![lc], |acc, &i| zmul(&acc, &lifted[i], modulus));
            let cand: ZPoly = prod.iter().map(|c| reduce_sym(c, modulus)).collect();
            let cand = primitive(ztrim(cand));
            if let Some(q) = zdiv_exact(&g, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                g = primitive(q);
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, f)| f)
                    .collect();
            }
            None => size += 1,
        }
    }
    if g.len() > 1 {
        found.push(g);
    }
    found
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Rational roots of `f`, by the rational root theorem on the primitive part.
pub fn rational_roots(f: &PolyH) -> Vec<Rat> {
    if f.is_zero() {
        return Vec::new();
    }
    let (_, g) = f.primitive_part();
    let mut roots = Vec::new();
    if g[0].is_zero() {
        roots.push(Rat::zero());
    }
    let first = g.iter().position(|c| !c.is_zero()).unwrap();
    let c0 = g[first].abs();
    let cn = g.last().unwrap().abs();
    let divs = |m: &BigInt| -> Vec<BigInt> {
        let m = m.to_biguint().unwrap_or_else(BigUint::zero);
        let mut out = Vec::new();
        let mut d = BigUint::one();
        while &d * &d <= m {
            if (&m % &d).is_zero() {
                out.push(BigInt::from(d.clone()));
                out.push(BigInt::from(&m / &d));
            }
            d += 1u32;
        }
        out
    };
    let mut seen = std::collections::BTreeSet::new();
    for num in divs(&c0) {
        for den in divs(&cn) {
            for sgn in [1, -1] {
                let r = Rat::new(&num * sgn, den.clone());
                if seen.insert(r.clone()) && f.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}
