//! Dense polynomials over a word-sized prime field, used by the factorizer.

use num_bigint::BigUint;
use rand::Rng;

/// Ascending coefficients in `[0, p)`, no trailing zeros.
pub(crate) type ModPoly = Vec<u64>;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < (1 << 31));
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn trim(mut f: ModPoly) -> ModPoly {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn deg(f: &ModPoly) -> usize {
        f.len().saturating_sub(1)
    }

    pub fn add_poly(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        Self::trim(out)
    }

    pub fn sub_poly(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        Self::trim(out)
    }

    pub fn scale(&self, a: &ModPoly, c: u64) -> ModPoly {
        Self::trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn mul_poly(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(out)
    }

    pub fn div_rem(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        let mut q = vec![0u64; a.len() - b.len() + 1];
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + b.len() - 1], inv);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                r[k + j] = self.sub(r[k + j], self.mul(c, y));
            }
        }
        r.truncate(b.len() - 1);
        (Self::trim(q), Self::trim(r))
    }

    pub fn rem(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.div_rem(a, b).1
    }

    pub fn monic(&self, a: &ModPoly) -> ModPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn gcd(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t2 = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("ext_gcd of zeros"));
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &ModPoly) -> ModPoly {
        Self::trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    pub fn powmod(&self, base: &ModPoly, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut acc: ModPoly = vec![1];
        let base = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul_poly(&acc, &acc), m);
            if e.bit(i) {
                acc = self.rem(&self.mul_poly(&acc, &base), m);
            }
        }
        acc
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    pub fn distinct_degree(&self, f: &ModPoly) -> Vec<(ModPoly, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x: ModPoly = vec![0, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 0;
        while Self::deg(&f) >= 2 * (d + 1) {
            d += 1;
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&self.sub_poly(&h, &x), &f);
            if g.len() > 1 {
                out.push((g.clone(), d));
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
            }
        }
        if f.len() > 1 {
            let d = Self::deg(&f);
            out.push((f, d));
        }
        out
    }

    /// Cantor-Zassenhaus splitting of a product of irreducibles of degree `d`.
    pub fn equal_degree<R: Rng>(&self, f: &ModPoly, d: usize, rng: &mut R) -> Vec<ModPoly> {
        let n = Self::deg(f);
        if n == d {
            return vec![f.clone()];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: ModPoly = Self::trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub_poly(&self.powmod(&a, &e, f), &vec![1]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let rest = self.div_rem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&rest, d, rng));
                return out;
            }
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn splits_over_small_field() {
        let f = Fp::new(101);
        // (x-1)(x-2)(x^2+1): x^2+1 irreducible mod 101? 101 = 1 mod 4, so it splits.
        let a = f.mul_poly(&vec![100, 1], &vec![99, 1]);
        let poly = f.mul_poly(&a, &vec![1, 0, 1]);
        let dd = f.distinct_degree(&poly);
        assert_eq!(dd.len(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let parts = f.equal_degree(&dd[0].0, 1, &mut rng);
        assert_eq!(parts.len(), 4);
        let back = parts.iter().fold(vec![1], |acc, q| f.mul_poly(&acc, q));
        assert_eq!(back, poly);
    }

    #[test]
    fn ext_gcd_identity() {
        let f = Fp::new(7);
        let a = vec![1, 1];
        let b = vec![6, 1];
        let (g, s, t) = f.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        let lhs = f.add_poly(&f.mul_poly(&s, &a), &f.mul_poly(&t, &b));
        assert_eq!(lhs, vec![1]);
        assert!(is_prime(2_147_483_647));
    }
}
