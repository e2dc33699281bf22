//! Acceptance suite: one PASS/FAIL line per criterion, exit status nonzero on
//! any failure. Limits and tolerances are pinned below.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weyl_core::arith::{factor_poly, Deg, PolyH, Rat, RatFuncH};
use weyl_core::centralizer::{centralizer_generator, divisors, Infeasibility};
use weyl_core::dixmier::{
    certify_pair, impossibility_sweep, in_scope, random_tame, AutoWord, CellStatus, SweepBounds, SweepPattern,
    TameLimits,
};
use weyl_core::exec::Exec;
use weyl_core::parse::{from_json_str, normalize_by_rewriting, parse, parse_element, print_canonical, to_json_string};
use weyl_core::weyl::{structure_constant, BElement, Homogeneous, WeylElement};

const LIMIT_1: Duration = Duration::from_millis(1);
const LIMIT_2: Duration = Duration::from_secs(10);
const LIMIT_5: Duration = Duration::from_secs(60);
const LIMIT_6: Duration = Duration::from_secs(120);

const TRIPLES: usize = 10_000;
const DEGREE_SAMPLES: usize = 1_000;
const CERTIFY_WORDS: usize = 1_000;
const XI_ELEMENTS: usize = 1_000;
const SERIAL_ELEMENTS: usize = 1_000;
const SERIAL_WORDS: usize = 100;
const FACTOR_PRODUCTS: usize = 100;
const BRUTE_HEIGHT: i64 = 20;

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn el(s: &str) -> WeylElement {
    parse_element(s).expect("valid expression")
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let yx = el("Y*X");
    let xy = el("X*Y");
    let c = WeylElement::y().commutator(&WeylElement::x());
    let elapsed = start.elapsed();
    let ok = yx == WeylElement::h() && xy == el("H - 1") && c.is_one();
    outcome(ok && elapsed < LIMIT_1, format!("exact relations {ok}, {elapsed:?} (limit {LIMIT_1:?})"))
}

fn word_text(n: i64) -> String {
    match n {
        0 => "1".into(),
        n if n > 0 => format!("X^{n}"),
        n => format!("Y^{}", -n),
    }
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in -6..=6i64 {
        for m in -6..=6i64 {
            let engine = WeylElement::v(n).mul(&WeylElement::v(m));
            let via_constant = WeylElement::homogeneous(n + m, structure_constant(n, m));
            let expr = parse(&format!("{}*{}", word_text(n), word_text(m))).unwrap();
            let rewritten = normalize_by_rewriting(&expr);
            if engine != rewritten || via_constant != rewritten {
                bad.push((n, m));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < LIMIT_2,
        format!("169 pairs, mismatches {bad:?}, {elapsed:?} (limit {LIMIT_2:?})"),
    )
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut failures = 0;
    for _ in 0..TRIPLES {
        let a = common::random_element(&mut rng, 3, 3, 4, 10);
        let b = common::random_element(&mut rng, 3, 3, 4, 10);
        let c = common::random_element(&mut rng, 3, 3, 4, 10);
        if a.mul(&b).mul(&c) != a.mul(&b.mul(&c)) {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{TRIPLES} triples, {failures} failures"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut failures = 0;
    for _ in 0..DEGREE_SAMPLES {
        let f = loop {
            let f = common::random_poly(&mut rng, 8, 10);
            if !f.is_constant() {
                break f;
            }
        };
        let i = loop {
            let i = rng.gen_range(-10..=10i64);
            if i != 0 {
                break i;
            }
        };
        let shifted = f.sigma_pow(i);
        let diff = &f - &shifted;
        // independent evaluation of sigma^i(f)(H) = f(H - i) at a point
        let x = Rat::from_integer(BigInt::from(rng.gen_range(-50..=50)));
        let shift_ok = shifted.eval(&x) == f.eval(&(&x - Rat::from_integer(BigInt::from(i))));
        if shifted.deg() != f.deg() || diff.degree() + 1 != f.degree() || !shift_ok {
            failures += 1;
        }
    }
    let sc_ok = (1..=12).all(|p| structure_constant(p, -p).deg() == Deg::Fin(p));
    outcome(
        failures == 0 && sc_ok,
        format!("{DEGREE_SAMPLES} samples, {failures} failures; deg (p,-p) = p for p <= 12: {sc_ok}"),
    )
}

// ---------- criterion 5: centralizer corpus with brute-force minimality ----------

const MODULUS: u64 = 1_000_000_007;

fn mod_rat(r: &Rat) -> u64 {
    let m = BigInt::from(MODULUS);
    let n = r.numer().mod_floor(&m).to_u64().unwrap();
    let d = r.denom().mod_floor(&m).to_u64().unwrap();
    n * mod_pow(d, MODULUS - 2) % MODULUS
}

fn mod_pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    b %= MODULUS;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % MODULUS;
        }
        b = b * b % MODULUS;
        e >>= 1;
    }
    acc
}

fn mod_eval(f: &PolyH, x: u64) -> u64 {
    f.coeffs().iter().rev().fold(0, |acc, c| (acc * x + mod_rat(c)) % MODULUS)
}

fn rf_deg(f: &RatFuncH) -> i64 {
    f.num().degree() as i64 - f.den().degree() as i64
}

/// Shifted copies `beta(H - sign*m*s)` for `m < k`, multiplied exactly.
fn twisted_oracle(beta: &RatFuncH, k: i64, s: i64, sign: i64) -> RatFuncH {
    let mut acc = RatFuncH::one();
    for m in 0..k {
        let shift = Rat::from_integer(BigInt::from(-sign * m * s));
        let num = beta.num().compose_affine(&Rat::one(), &shift);
        let den = beta.den().compose_affine(&Rat::one(), &shift);
        acc = &acc * &RatFuncH::new(num, den);
    }
    acc
}

/// Searches monic `beta` of the forced degree with integer coefficients of
/// absolute value `<= BRUTE_HEIGHT` (scaled by the denominator lcm of `alpha`),
/// plus `f/(H + c)` candidates when the forced degree is at most 1. Candidates
/// are filtered modulo a prime at one point, then compared exactly.
fn brute_force_root(alpha: &RatFuncH, k: i64, s: i64, sign: i64) -> Option<RatFuncH> {
    let d_alpha = rf_deg(alpha);
    if d_alpha % k != 0 {
        return None;
    }
    let d = d_alpha / k;
    let scale = alpha
        .num()
        .coeffs()
        .iter()
        .chain(alpha.den().coeffs())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let unit = Rat::from_integer(scale).recip();
    let range: Vec<Rat> = (-BRUTE_HEIGHT..=BRUTE_HEIGHT)
        .map(|c| Rat::from_integer(BigInt::from(c)) * &unit)
        .collect();
    let range_mod: Vec<u64> = range.iter().map(mod_rat).collect();
    let x0: i64 = 7919;
    let shifted: Vec<u64> = (0..k)
        .map(|m| (x0 - sign * m * s).rem_euclid(MODULUS as i64) as u64)
        .collect();
    let (an, ad) = (mod_eval(alpha.num(), x0 as u64), mod_eval(alpha.den(), x0 as u64));
    let search = |deg: i64, den: &PolyH| -> Option<RatFuncH> {
        if deg < 0 {
            return None;
        }
        let deg = deg as usize;
        let pows: Vec<Vec<u64>> = shifted
            .iter()
            .map(|&x| (0..=deg).scan(1u64, |acc, _| { let v = *acc; *acc = *acc * x % MODULUS; Some(v) }).collect())
            .collect();
        let den_prod = shifted.iter().fold(1u64, |acc, &x| acc * mod_eval(den, x) % MODULUS);
        let mut idx = vec![0usize; deg];
        loop {
            let num_prod = pows.iter().fold(1u64, |acc, pw| {
                let v = idx.iter().enumerate().fold(pw[deg], |v, (j, &i)| (v + range_mod[i] * pw[j]) % MODULUS);
                acc * v % MODULUS
            });
            if num_prod * ad % MODULUS == an * den_prod % MODULUS {
                let mut coeffs: Vec<Rat> = idx.iter().map(|&i| range[i].clone()).collect();
                coeffs.push(Rat::one());
                let beta = RatFuncH::new(PolyH::from_coeffs(coeffs), den.clone());
                if &twisted_oracle(&beta, k, s, sign) == alpha {
                    return Some(beta);
                }
            }
            let mut pos = 0;
            loop {
                if pos == deg {
                    return None;
                }
                idx[pos] += 1;
                if idx[pos] < range.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    };
    if let Some(b) = search(d, &PolyH::one()) {
        return Some(b);
    }
    if (0..=1).contains(&d) {
        for c in -BRUTE_HEIGHT..=BRUTE_HEIGHT {
            if let Some(b) = search(d + 1, &PolyH::linear(Rat::from_integer(BigInt::from(c)))) {
                return Some(b);
            }
        }
    }
    None
}

fn poly(c: &[(i64, i64)]) -> PolyH {
    PolyH::from_coeffs(c.iter().map(|&(n, d)| Rat::new(BigInt::from(n), BigInt::from(d))).collect())
}

/// Monic `beta`s. Within each, irreducible factors lie in pairwise distinct
/// shift classes, so the constructed `s` is the least feasible divisor.
fn beta_pool() -> Vec<RatFuncH> {
    let h = PolyH::h();
    let lin = |n: i64, d: i64| poly(&[(n, d), (1, 1)]);
    vec![
        RatFuncH::one(),
        RatFuncH::from_poly(h.clone()),
        RatFuncH::from_poly(lin(1, 2)),
        RatFuncH::from_poly(lin(-7, 3)),
        RatFuncH::from_poly(poly(&[(1, 1), (0, 1), (1, 1)])),
        RatFuncH::from_poly(poly(&[(2, 1), (0, 1), (1, 1)])),
        RatFuncH::from_poly(poly(&[(1, 1), (1, 1), (1, 1)])),
        RatFuncH::from_poly(&h * &lin(1, 2)),
        RatFuncH::from_poly(&lin(1, 3) * &poly(&[(1, 1), (0, 1), (1, 1)])),
        RatFuncH::new(lin(1, 2), h.clone()),
        RatFuncH::new(poly(&[(2, 1), (0, 1), (1, 1)]), lin(1, 3)),
        RatFuncH::from_poly(&lin(1, 4) * &lin(1, 3)),
    ]
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let pool = beta_pool();
    let (mut cases, mut certs, mut disagreements) = (0, 0, Vec::new());
    for n_abs in 1..=6i64 {
        for sign in [1i64, -1] {
            let n = sign * n_abs;
            for s in divisors(n_abs as u64).into_iter().map(|s| s as i64) {
                let k = n_abs / s;
                for beta in &pool {
                    let d_num = beta.num().degree() as i64 * k;
                    let d_den = beta.den().degree() as i64 * k;
                    // beta = 1 is only minimal for s = 1
                    if d_num > 8 || d_den > 8 || (beta.is_one() && s > 1) {
                        continue;
                    }
                    cases += 1;
                    // ground truth by multiplying v = beta v_{sign s} in B
                    let v = BElement::homogeneous(sign * s, beta.clone());
                    let u_el = v.pow(k as u32);
                    let (deg, alpha) = u_el.as_homogeneous().expect("power of homogeneous");
                    let u = Homogeneous::new(deg, alpha.clone()).unwrap();
                    let label = format!("n={n} s={s} beta={}", beta.to_text());
                    let res = match centralizer_generator(&u) {
                        Ok(r) => r,
                        Err(e) => {
                            disagreements.push(format!("{label}: error {e}"));
                            continue;
                        }
                    };
                    if res.s != s || &res.beta != beta {
                        disagreements.push(format!("{label}: got s={} beta={}", res.s, res.beta.to_text()));
                        continue;
                    }
                    let v_found = res.v.to_element();
                    if u_el.mul(&v_found) != v_found.mul(&u_el) || v_found.pow(k as u32) != u_el {
                        disagreements.push(format!("{label}: uv != vu or u != v^(n/s)"));
                    }
                    for (s_small, cert) in &res.infeasible_divisors {
                        certs += 1;
                        let k_small = n_abs / s_small;
                        if let Infeasibility::Degree { deg_alpha, k } = cert {
                            if deg_alpha % k == 0 || *k != k_small {
                                disagreements.push(format!("{label}: bad degree certificate at s={s_small}"));
                            }
                        }
                        if let Some(b) = brute_force_root(alpha, k_small, *s_small, sign) {
                            disagreements.push(format!("{label}: s={s_small} refuted by {}", b.to_text()));
                        }
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let shown: Vec<_> = disagreements.iter().take(3).collect();
    outcome(
        disagreements.is_empty() && elapsed < LIMIT_5,
        format!(
            "{cases} generators, {certs} infeasibility certificates confirmed, {} disagreements {shown:?}, {elapsed:?} (limit {LIMIT_5:?})",
            disagreements.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let limits = TameLimits { word_len: 4, max_n: 3, coeff_height: 5 };
    let (mut seed, mut tried, mut certified, mut one_sided) = (0u64, 0usize, 0usize, 0usize);
    let mut failures = Vec::new();
    while certified + failures.len() < CERTIFY_WORDS {
        let w = random_tame(seed, limits);
        seed += 1;
        let (q, p) = w.images();
        if !in_scope(&p, &q) {
            continue;
        }
        tried += 1;
        match certify_pair(&p, &q) {
            Ok(t) if t.images() == (q.clone(), p.clone()) => {
                certified += 1;
                if (p.mass() > 2 || q.mass() > 2) && (p.mass() == 1 || q.mass() == 1) {
                    one_sided += 1;
                }
            }
            Ok(_) => failures.push(format!("seed {}: wrong images", seed - 1)),
            Err(e) => failures.push(format!("seed {}: {e}", seed - 1)),
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && elapsed < LIMIT_6,
        format!(
            "{certified}/{tried} in-scope pairs certified ({one_sided} via one-sided mass), {seed} words drawn, failures {:?}, {elapsed:?} (limit {LIMIT_6:?})",
            failures.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn criterion_7() -> Outcome {
    let bounds = SweepBounds { p_min: 2, p_max: 4, q_min: 2, q_max: 4, max_coeff_deg: 4, ..Default::default() };
    let report = impossibility_sweep(SweepPattern::CaseII, &bounds, Exec::from_env()).unwrap();
    let diagonal: Vec<_> = report.cells.iter().filter(|c| c.p == c.q).collect();
    let all_empty = report.cells.iter().all(|c| c.status == CellStatus::Empty);
    let control_bounds = SweepBounds { p_min: 1, p_max: 1, q_min: 1, q_max: 1, max_coeff_deg: 0, ..Default::default() };
    let control = impossibility_sweep(SweepPattern::CaseII, &control_bounds, Exec::Sequential).unwrap();
    let c = &control.cells[0];
    // unique solution z = alpha*beta = -1, and the family checks out directly
    let family_ok = c.status == CellStatus::Solutions && c.solution_dim == Some(0) && {
        let p = el(&c.witness[0].1);
        let q = el(&c.witness[1].1);
        let ab = p.component(1).unwrap().coeff(0) * q.component(-1).unwrap().coeff(0);
        ab == -Rat::one()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let direct_ok = (0..50).all(|_| {
        let a = loop {
            let a = common::random_rat(&mut rng, 9);
            if !a.is_zero() {
                break a;
            }
        };
        let b = common::random_rat(&mut rng, 9);
        let comm = WeylElement::x().scale(&a).commutator(&WeylElement::y().scale(&b));
        comm.is_one() == (&a * &b == -Rat::one())
    });
    outcome(
        all_empty && !diagonal.is_empty() && family_ok && direct_ok,
        format!(
            "{} cells ({} on p = q solved) all empty: {all_empty}; control p = q = 1 family alpha*beta = -1: {}",
            report.cells.len(),
            diagonal.len(),
            family_ok && direct_ok
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = 0;
    let minus_x = WeylElement::x().neg();
    for _ in 0..XI_ELEMENTS {
        let a = common::random_element(&mut rng, 4, 5, 4, 10);
        let four = a.xi_apply().xi_apply().xi_apply().xi_apply();
        let by_substitution = a.substitute(&WeylElement::y(), &minus_x);
        let graded = a.components().all(|(i, f)| {
            let img = WeylElement::homogeneous(i, f.clone()).xi_apply();
            img.is_zero() || img.as_homogeneous().is_some_and(|(j, _)| j == -i)
        });
        if four != a || by_substitution != a.xi_apply() || !graded {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{XI_ELEMENTS} elements, {failures} failures"))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut failures = 0;
    for _ in 0..SERIAL_ELEMENTS {
        let a = common::random_element(&mut rng, 4, 5, 4, 30);
        let text = print_canonical(&a);
        let json = to_json_string(&a);
        let back: WeylElement = from_json_str(&json).unwrap();
        if parse_element(&text).ok() != Some(a.clone()) || back != a || to_json_string(&back) != json {
            failures += 1;
        }
    }
    let limits = TameLimits { word_len: 6, max_n: 5, coeff_height: 9 };
    for seed in 0..SERIAL_WORDS as u64 {
        let w = random_tame(seed, limits);
        let json = to_json_string(&w);
        let back: AutoWord = from_json_str(&json).unwrap();
        if back != w || to_json_string(&back) != json {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("{SERIAL_ELEMENTS} elements, {SERIAL_WORDS} words, {failures} failures"),
    )
}

/// Rational root test by enumerating `±p/q` with `p | a0`, `q | lead` (integer polys).
fn has_rational_root(c: &[i64]) -> bool {
    let divs = |n: i64| -> Vec<i64> { (1..=n.abs()).filter(|d| n % d == 0).collect() };
    if c[0] == 0 {
        return true;
    }
    let lead = *c.last().unwrap();
    for p in divs(c[0]) {
        for q in divs(lead) {
            for sgn in [1, -1] {
                let x = Rat::new(BigInt::from(sgn * p), BigInt::from(q));
                let v = c
                    .iter()
                    .rev()
                    .fold(Rat::zero(), |acc, &k| acc * &x + Rat::from_integer(BigInt::from(k)));
                if v.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut failures = 0;
    for _ in 0..FACTOR_PRODUCTS {
        let count = rng.gen_range(1..=4);
        let mut expected: BTreeMap<String, (PolyH, i32)> = BTreeMap::new();
        let mut product = PolyH::one();
        let mut unit = Rat::one();
        for _ in 0..count {
            // degree <= 3 without rational roots is irreducible over Q
            let c = loop {
                let d = rng.gen_range(1..=3);
                let mut c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-50..=50)).collect();
                if c[d] == 0 {
                    continue;
                }
                if d == 1 || !has_rational_root(&c) {
                    break std::mem::take(&mut c);
                }
            };
            let f = PolyH::from_ints(&c);
            unit *= f.lead();
            product = &product * &f;
            let m = f.monic();
            expected.entry(m.to_text()).or_insert((m, 0)).1 += 1;
        }
        let Ok(fac) = factor_poly(&product) else {
            failures += 1;
            continue;
        };
        let got: BTreeMap<String, (PolyH, i32)> =
            fac.factors.iter().map(|(f, e)| (f.to_text(), (f.clone(), *e))).collect();
        if got != expected || fac.unit != unit {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("{FACTOR_PRODUCTS} products, {failures} failures"))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("defining relations", criterion_1),
        ("structure-constant oracle", criterion_2),
        ("associativity fuzz", criterion_3),
        ("degree identities", criterion_4),
        ("centralizer suite", criterion_5),
        ("certifier round trip", criterion_6),
        ("impossibility sweep", criterion_7),
        ("xi involution", criterion_8),
        ("serialization", criterion_9),
        ("factorization oracle", criterion_10),
    ];
    let filter: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let n = i + 1;
        if filter.is_some_and(|f| f != n) {
            continue;
        }
        let o = run();
        println!("criterion {n:>2} {:<4} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
