//! Constructive certifier: given `[P, Q] = 1` within the mass bounds, find a
//! word `τ` with `τ(Y) = P` and `τ(X) = Q`.
//!
//! Each reduction rewrites the pair and records a word factor on the right:
//! if `τ'` certifies the new pair, `τ = τ' ∘ g` certifies the old one.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::affine::affine_decompose;
use super::auto::{AutoGen, AutoWord};
use crate::arith::rat::rat_to_text;
use crate::arith::{Deg, PolyH, Rat};
use crate::error::{Error, Result};
use crate::parse::print_canonical;
use crate::weyl::WeylElement;

const MAX_STEPS: usize = 64;

/// Whether the pair lies in the scope of the certifier.
pub fn in_scope(p: &WeylElement, q: &WeylElement) -> bool {
    let (mp, mq) = (p.mass(), q.mass());
    (mp <= 2 && mq <= 2) || mp == 1 || mq == 1
}

fn commutator_text(c: &WeylElement) -> String {
    match c.as_scalar() {
        Some(s) => rat_to_text(&s),
        None => print_canonical(c),
    }
}

/// Coefficients `(a, b, λ)` of `aY + bX + λ`, if the element has that form.
fn affine_coeffs(e: &WeylElement) -> Option<(Rat, Rat, Rat)> {
    let mut out = (Rat::zero(), Rat::zero(), Rat::zero());
    for (i, f) in e.components() {
        if !f.is_constant() {
            return None;
        }
        let c = f.coeff(0);
        match i {
            -1 => out.0 = c,
            1 => out.1 = c,
            0 => out.2 = c,
            _ => return None,
        }
    }
    Some(out)
}

fn constant_homogeneous(e: &WeylElement, degree: i64) -> Option<Rat> {
    match e.as_homogeneous() {
        Some((d, f)) if d == degree && f.is_constant() => Some(f.coeff(0)),
        _ => None,
    }
}

/// Coefficients of `e - lead*v(sign)` as a polynomial in `X` (`sign = -1`) or
/// `Y` (`sign = 1`); `None` if `e` has any other shape.
fn one_variable_tail(e: &WeylElement, sign: i64, lead: &Rat) -> Option<BTreeMap<u32, Rat>> {
    let mut tail = BTreeMap::new();
    let mut seen = false;
    for (i, f) in e.components() {
        if !f.is_constant() {
            return None;
        }
        let c = f.coeff(0);
        if i == sign {
            if &c != lead {
                return None;
            }
            seen = true;
        } else if i * sign <= 0 {
            tail.insert(i.unsigned_abs() as u32, c);
        } else {
            return None;
        }
    }
    seen.then_some(tail)
}

/// `Q = λX`, `P = λ⁻¹Y + C(X)`: `τ = Torus(λ) ∘ ∏ PhiX(k, c_k λ^-k) ∘ Translate(0, c_0)`.
fn one_sided_x(p: &WeylElement, q: &WeylElement) -> Option<Vec<AutoGen>> {
    let lambda = constant_homogeneous(q, 1)?;
    let tail = one_variable_tail(p, -1, &lambda.recip())?;
    let mut gens = vec![AutoGen::Torus { mu: lambda.clone() }];
    let mut c0 = Rat::zero();
    for (k, c) in tail {
        if k == 0 {
            c0 = c;
        } else {
            gens.push(AutoGen::PhiX { n: k, lambda: c / lambda.pow(k as i32) });
        }
    }
    gens.push(AutoGen::Translate { c: Rat::zero(), d: c0 });
    Some(gens)
}

/// `P = μY`, `Q = μ⁻¹X + D(Y)`: `τ = Torus(μ⁻¹) ∘ ∏ PhiY(k, d_k μ^-k) ∘ Translate(d_0, 0)`.
fn one_sided_y(p: &WeylElement, q: &WeylElement) -> Option<Vec<AutoGen>> {
    let mu = constant_homogeneous(p, -1)?;
    let tail = one_variable_tail(q, 1, &mu.recip())?;
    let mut gens = vec![AutoGen::Torus { mu: mu.recip() }];
    let mut d0 = Rat::zero();
    for (k, c) in tail {
        if k == 0 {
            d0 = c;
        } else {
            gens.push(AutoGen::PhiY { n: k, lambda: c / mu.pow(k as i32) });
        }
    }
    gens.push(AutoGen::Translate { c: d0, d: Rat::zero() });
    Some(gens)
}

fn swap_factor() -> Vec<AutoGen> {
    vec![AutoGen::Torus { mu: -Rat::one() }, AutoGen::Xi]
}

/// `λ` with `a = λ b`, for nonzero polynomials.
fn proportion(a: &PolyH, b: &PolyH) -> Option<Rat> {
    if a.deg() != b.deg() || b.is_zero() {
        return None;
    }
    let l = a.lead() / b.lead();
    (&b.scale(&l) == a).then_some(l)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    P,
    Q,
}

struct Step {
    target: Target,
    k: u32,
    lambda: Rat,
}

/// Extremal homogeneous parts at one end of the grading (`top` or bottom).
fn graded_step(p: &WeylElement, q: &WeylElement, top: bool) -> Option<Step> {
    let end = |e: &WeylElement| if top { e.max_degree() } else { e.min_degree() };
    let (dp, dq) = (end(p)?, end(q)?);
    if dp == 0 || dq == 0 || (dp > 0) != (dq > 0) {
        return None;
    }
    let try_reduce = |big: &WeylElement, db: i64, small: &WeylElement, ds: i64, target| {
        if db % ds != 0 {
            return None;
        }
        let k = (db / ds) as u32;
        let small_top = WeylElement::homogeneous(ds, small.component(ds)?.clone()).pow(k);
        let lambda = proportion(big.component(db)?, small_top.component(db)?)?;
        Some(Step { target, k, lambda })
    };
    if dq.abs() >= dp.abs() {
        try_reduce(q, dq, p, dp, Target::Q).or_else(|| try_reduce(p, dp, q, dq, Target::P))
    } else {
        try_reduce(p, dp, q, dq, Target::P)
    }
}

type Form = BTreeMap<(i64, i64), Rat>;

/// Leading form in the associated graded commutative algebra `K[x, y]`.
fn leading_form(e: &WeylElement) -> (i64, Form) {
    let d = e.total_degree().finite().unwrap_or(0);
    let mut form = Form::new();
    for (i, f) in e.components() {
        let Deg::Fin(e) = f.deg() else { continue };
        if 2 * e + i.abs() == d {
            form.insert((e + i.max(0), e + (-i).max(0)), f.lead());
        }
    }
    (d, form)
}

fn form_mul(a: &Form, b: &Form) -> Form {
    let mut out = Form::new();
    for ((ax, ay), ac) in a {
        for ((bx, by), bc) in b {
            *out.entry((ax + bx, ay + by)).or_insert_with(Rat::zero) += ac * bc;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn form_proportion(a: &Form, b: &Form) -> Option<Rat> {
    if a.len() != b.len() {
        return None;
    }
    let (key, bc) = b.iter().next()?;
    let l = a.get(key)? / bc;
    b.iter()
        .all(|(k, c)| a.get(k) == Some(&(c * &l)))
        .then_some(l)
}

fn total_degree_step(p: &WeylElement, q: &WeylElement) -> Option<Step> {
    let (dp, fp) = leading_form(p);
    let (dq, fq) = leading_form(q);
    let attempt = |db: i64, fb: &Form, ds: i64, fs: &Form, target| {
        if ds <= 0 || db % ds != 0 {
            return None;
        }
        let k = (db / ds) as u32;
        let mut pw = fs.clone();
        for _ in 1..k {
            pw = form_mul(&pw, fs);
        }
        let lambda = form_proportion(fb, &pw)?;
        Some(Step { target, k, lambda })
    };
    if dq >= dp {
        attempt(dq, &fq, dp, &fp, Target::Q).or_else(|| attempt(dp, &fp, dq, &fq, Target::P))
    } else {
        attempt(dp, &fp, dq, &fq, Target::P)
    }
}

fn size(p: &WeylElement, q: &WeylElement) -> (i64, usize) {
    let t = |e: &WeylElement| e.total_degree().finite().unwrap_or(0);
    (t(p) + t(q), p.mass() + q.mass())
}

fn apply_step(p: &WeylElement, q: &WeylElement, s: &Step) -> (WeylElement, WeylElement, AutoGen) {
    match s.target {
        Target::Q => (
            p.clone(),
            q.sub(&p.pow(s.k).scale(&s.lambda)),
            AutoGen::PhiY { n: s.k, lambda: s.lambda.clone() },
        ),
        Target::P => (
            p.sub(&q.pow(s.k).scale(&s.lambda)),
            q.clone(),
            AutoGen::PhiX { n: s.k, lambda: s.lambda.clone() },
        ),
    }
}

/// Checks the hypotheses, then reduces the pair to an affine or one-variable
/// base case. The returned word is always verified by application.
pub fn certify_pair(p: &WeylElement, q: &WeylElement) -> Result<AutoWord> {
    let c = p.commutator(q);
    if !c.is_one() {
        return Err(Error::Commutator(commutator_text(&c)));
    }
    if !in_scope(p, q) {
        return Err(Error::OutOfScope(format!(
            "masses ({}, {}) outside the certified range",
            p.mass(),
            q.mass()
        )));
    }
    let (mut cp, mut cq) = (p.clone(), q.clone());
    let mut factors: Vec<Vec<AutoGen>> = Vec::new();
    let mut base = None;
    for _ in 0..MAX_STEPS {
        if let (Some((a, b, l)), Some((c, d, m))) = (affine_coeffs(&cp), affine_coeffs(&cq)) {
            base = Some(affine_decompose(&a, &b, &c, &d, &l, &m)?.gens);
            break;
        }
        if let Some(g) = one_sided_x(&cp, &cq).or_else(|| one_sided_y(&cp, &cq)) {
            base = Some(g);
            break;
        }
        let swapped = (cq.neg(), cp.clone());
        if let Some(g) = one_sided_x(&swapped.0, &swapped.1).or_else(|| one_sided_y(&swapped.0, &swapped.1)) {
            factors.push(swap_factor());
            base = Some(g);
            break;
        }
        let before = size(&cp, &cq);
        let graded = [true, false].into_iter().find_map(|top| {
            let s = graded_step(&cp, &cq, top)?;
            let next = apply_step(&cp, &cq, &s);
            (size(&next.0, &next.1) < before).then_some(next)
        });
        let next = match graded {
            Some(n) => n,
            None => match total_degree_step(&cp, &cq) {
                Some(s) => apply_step(&cp, &cq, &s),
                None => break,
            },
        };
        (cp, cq) = (next.0, next.1);
        factors.push(vec![next.2]);
    }
    let base = base.ok_or_else(|| Error::Verification("no reduction applies to the pair".into()))?;
    let gens: Vec<AutoGen> = base.into_iter().chain(factors.into_iter().rev().flatten()).collect();
    let word = AutoWord::new(gens).simplified();
    let (tx, ty) = word.images();
    if &tx != q || &ty != p {
        return Err(Error::Verification("certified word does not reproduce the pair".into()));
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{int, rat};
    use crate::dixmier::auto::{random_tame, TameLimits};
    use crate::parse::parse_element;

    fn el(s: &str) -> WeylElement {
        parse_element(s).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(certify_pair(&el("Y"), &el("X")).unwrap(), AutoWord::identity());
        assert_eq!(
            certify_pair(&el("Y"), &el("X + 2*Y^3")).unwrap(),
            AutoWord::new(vec![AutoGen::PhiY { n: 3, lambda: int(2) }])
        );
        let w = certify_pair(&el("2*Y + X^3 + 1"), &el("1/2*X")).unwrap();
        assert_eq!(
            w,
            AutoWord::new(vec![
                AutoGen::Torus { mu: rat(1, 2) },
                AutoGen::PhiX { n: 3, lambda: int(8) },
                AutoGen::Translate { c: int(0), d: int(1) },
            ])
        );
        let err = certify_pair(&el("X"), &el("Y")).unwrap_err();
        assert_eq!(err.to_string(), "commutator is -1, not 1");
    }

    #[test]
    fn swapped_orientations() {
        // P = X, Q = -Y + X^2
        let w = certify_pair(&el("X"), &el("-Y + X^2")).unwrap();
        assert_eq!(w.images(), (el("-Y + X^2"), el("X")));
        let w = certify_pair(&el("-X + 3*Y^2 + 1"), &el("Y")).unwrap();
        assert_eq!(w.images(), (el("Y"), el("-X + 3*Y^2 + 1")));
    }

    #[test]
    fn out_of_scope() {
        let w = AutoWord::new(vec![
            AutoGen::PhiX { n: 2, lambda: int(1) },
            AutoGen::PhiY { n: 2, lambda: int(1) },
            AutoGen::PhiX { n: 2, lambda: int(1) },
        ]);
        let (x, y) = w.images();
        assert!(x.mass() >= 3 && y.mass() >= 3);
        assert!(matches!(certify_pair(&y, &x), Err(Error::OutOfScope(_))));
    }

    #[test]
    fn random_round_trip() {
        let limits = TameLimits { word_len: 4, max_n: 3, coeff_height: 3 };
        let mut certified = 0;
        for seed in 0..300 {
            let (x, y) = random_tame(seed, limits).images();
            if !in_scope(&y, &x) {
                continue;
            }
            let w = certify_pair(&y, &x).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
            assert_eq!(w.images(), (x, y));
            certified += 1;
        }
        assert!(certified > 100);
    }
}
