//! Exhaustive exact linear-algebra sweeps over the homogeneous shapes that the
//! mass bounds leave open.
//!
//! * `CaseII`: `[αX^p, βY^q] = 1`, unknowns `z_ij = α_i β_j`.
//! * `CaseIII`: `[αX^p, γ v_s + δ v_q] = 1`, unknowns `α_i γ_j` and `α_i δ_j`.
//! * `CaseV`: `(1 - σ^-p)(a) + (1 - σ^-q)(b) = 1` with `a ∈ (p,-p) K[H]`,
//!   `b ∈ (q,-q) K[H]` and the degree ordering forced by `p < q` (or `p > q`).
//!
//! The bilinear cases are linearized, so emptiness of a cell is a sound
//! certificate; any solution found is checked by direct commutator.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::linalg::{solve, LinearOutcome};
use crate::arith::{PolyH, Rat};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::parse::print_canonical;
use crate::weyl::{structure_constant, WeylElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepPattern {
    CaseII,
    CaseIII,
    CaseV,
}

impl SweepPattern {
    pub fn name(self) -> &'static str {
        match self {
            SweepPattern::CaseII => "case-ii",
            SweepPattern::CaseIII => "case-iii",
            SweepPattern::CaseV => "case-v",
        }
    }
}

impl std::str::FromStr for SweepPattern {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "case-ii" => Ok(SweepPattern::CaseII),
            "case-iii" => Ok(SweepPattern::CaseIII),
            "case-v" => Ok(SweepPattern::CaseV),
            _ => Err(format!("unknown pattern {s:?} (expected case-ii, case-iii or case-v)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub p_min: i64,
    pub p_max: i64,
    pub q_min: i64,
    pub q_max: i64,
    pub max_coeff_deg: u32,
    /// Refuse sweeps with more cells than this.
    pub max_cells: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            p_min: 1,
            p_max: 4,
            q_min: 1,
            q_max: 4,
            max_coeff_deg: 3,
            max_cells: 20_000,
        }
    }
}

pub const MAX_EXPONENT_BOUND: i64 = 64;
pub const MAX_DEGREE_BOUND: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellStatus {
    Empty,
    Solutions,
    Reduction,
}

impl CellStatus {
    pub fn name(self) -> &'static str {
        match self {
            CellStatus::Empty => "empty",
            CellStatus::Solutions => "solutions",
            CellStatus::Reduction => "reduction",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepCell {
    pub p: i64,
    pub q: i64,
    /// Degree of the second component of `Q` (case-iii only).
    pub s: Option<i64>,
    pub degrees: Vec<u32>,
    pub status: CellStatus,
    /// `grading`, `linear-system` or `case-v-reduction`.
    pub reason: &'static str,
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub rank_augmented: usize,
    pub solution_dim: Option<usize>,
    /// Named witness elements, each verified independently.
    pub witness: Vec<(String, String)>,
}

impl SweepCell {
    pub fn to_json(&self) -> Value {
        let witness: serde_json::Map<String, Value> = self
            .witness
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        json!({
            "p": self.p,
            "q": self.q,
            "s": self.s,
            "degrees": self.degrees,
            "status": self.status.name(),
            "reason": self.reason,
            "unknowns": self.unknowns,
            "equations": self.equations,
            "rank": self.rank,
            "rank_augmented": self.rank_augmented,
            "solution_dim": self.solution_dim,
            "witness": if witness.is_empty() { Value::Null } else { Value::Object(witness) },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub pattern: SweepPattern,
    pub cells: Vec<SweepCell>,
}

impl SweepReport {
    pub fn to_json(&self) -> Value {
        Value::Array(self.cells.iter().map(SweepCell::to_json).collect())
    }

    pub fn count(&self, status: CellStatus) -> usize {
        self.cells.iter().filter(|c| c.status == status).count()
    }

    /// Every cell with `p >= 2` is empty (or, for case-v, `p = q` reduces).
    pub fn hypothesis_cells_empty(&self) -> bool {
        self.cells
            .iter()
            .filter(|c| c.p >= 2)
            .all(|c| c.status != CellStatus::Solutions)
    }
}

/// `(1 - σ^-p)(a) + (1 - σ^-q)(b)`.
pub fn delta_balance_check(a: &PolyH, b: &PolyH, p: i64, q: i64) -> PolyH {
    let da = a - &a.sigma_pow(-p);
    let db = b - &b.sigma_pow(-q);
    &da + &db
}

#[derive(Debug, Clone)]
enum CellSpec {
    Two { p: i64, q: i64, da: u32, db: u32 },
    Three { p: i64, s: i64, q: i64, d: u32 },
    Five { p: i64, q: i64, ea: u32, eb: u32 },
}

fn check_bounds(b: &SweepBounds) -> Result<()> {
    if b.p_min < 1 || b.q_min < 1 || b.p_min > b.p_max || b.q_min > b.q_max {
        return Err(Error::BoundsTooLarge(format!(
            "need 1 <= p_min <= p_max and 1 <= q_min <= q_max, got p in [{}, {}], q in [{}, {}]",
            b.p_min, b.p_max, b.q_min, b.q_max
        )));
    }
    if b.p_max > MAX_EXPONENT_BOUND || b.q_max > MAX_EXPONENT_BOUND {
        return Err(Error::BoundsTooLarge(format!("exponent bound exceeds {MAX_EXPONENT_BOUND}")));
    }
    if b.max_coeff_deg > MAX_DEGREE_BOUND {
        return Err(Error::BoundsTooLarge(format!("coefficient degree exceeds {MAX_DEGREE_BOUND}")));
    }
    Ok(())
}

fn cell_specs(pattern: SweepPattern, b: &SweepBounds) -> Vec<CellSpec> {
    let dmax = b.max_coeff_deg;
    let mut out = Vec::new();
    for p in b.p_min..=b.p_max {
        match pattern {
            SweepPattern::CaseII => {
                for q in b.q_min..=b.q_max {
                    for da in 0..=dmax {
                        for db in 0..=dmax {
                            out.push(CellSpec::Two { p, q, da, db });
                        }
                    }
                }
            }
            SweepPattern::CaseIII => {
                let range: Vec<i64> = (-b.q_max..=b.q_max).filter(|d| d.abs() >= b.q_min || *d == 0).collect();
                for (k, &s) in range.iter().enumerate() {
                    for &q in &range[k + 1..] {
                        for d in 0..=dmax {
                            out.push(CellSpec::Three { p, s, q, d });
                        }
                    }
                }
            }
            SweepPattern::CaseV => {
                for q in b.q_min..=b.q_max {
                    for ea in 0..=dmax {
                        for eb in 0..=dmax {
                            out.push(CellSpec::Five { p, q, ea, eb });
                        }
                    }
                }
            }
        }
    }
    out
}

fn empty_cell(p: i64, q: i64, s: Option<i64>, degrees: Vec<u32>, status: CellStatus, reason: &'static str) -> SweepCell {
    SweepCell {
        p,
        q,
        s,
        degrees,
        status,
        reason,
        unknowns: 0,
        equations: 0,
        rank: 0,
        rank_augmented: 0,
        solution_dim: None,
        witness: Vec::new(),
    }
}

/// Builds `rows` (one per monomial `H^e` in each degree) from column elements.
fn system_from_columns(columns: &[WeylElement]) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    let mut keys: Vec<(i64, usize)> = columns
        .iter()
        .flat_map(|c| c.components().flat_map(|(i, f)| f.terms().map(move |(e, _)| (i, e))).collect::<Vec<_>>())
        .collect();
    keys.push((0, 0));
    keys.sort_unstable();
    keys.dedup();
    let rows = keys
        .iter()
        .map(|&(i, e)| {
            columns
                .iter()
                .map(|c| c.component(i).map(|f| f.coeff(e)).unwrap_or_else(Rat::zero))
                .collect()
        })
        .collect();
    let rhs = keys
        .iter()
        .map(|&k| if k == (0, 0) { Rat::one() } else { Rat::zero() })
        .collect();
    (rows, rhs)
}

fn fill(cell: &mut SweepCell, out: &LinearOutcome) {
    cell.unknowns = out.unknowns;
    cell.equations = out.equations;
    cell.rank = out.rank;
    cell.rank_augmented = out.rank_augmented;
    cell.solution_dim = out.consistent().then(|| out.nullity());
    cell.status = if out.consistent() { CellStatus::Solutions } else { CellStatus::Empty };
}

fn hpow(i: u32) -> PolyH {
    PolyH::monomial(Rat::one(), i as usize)
}

/// Splits `z` (row-major `rows × cols`) as an outer product `u ⊗ w`, if possible.
fn rank_one_split(z: &[Rat], rows: usize, cols: usize) -> Option<(Vec<Rat>, Vec<Rat>)> {
    let k = z.iter().position(|c| !c.is_zero())?;
    let (i0, j0) = (k / cols, k % cols);
    let u: Vec<Rat> = (0..rows).map(|i| z[i * cols + j0].clone()).collect();
    let w: Vec<Rat> = (0..cols).map(|j| &z[i0 * cols + j] / &z[k]).collect();
    (0..rows)
        .all(|i| (0..cols).all(|j| z[i * cols + j] == &u[i] * &w[j]))
        .then_some((u, w))
}

fn run_case_ii(p: i64, q: i64, da: u32, db: u32) -> SweepCell {
    let degrees = vec![da, db];
    if p != q {
        return empty_cell(p, q, None, degrees, CellStatus::Empty, "grading");
    }
    let mut cell = empty_cell(p, q, None, degrees, CellStatus::Empty, "linear-system");
    let (na, nb) = (da as usize + 1, db as usize + 1);
    let mut columns = Vec::with_capacity(na * nb);
    for i in 0..=da {
        let a = WeylElement::homogeneous(p, hpow(i));
        for j in 0..=db {
            columns.push(a.commutator(&WeylElement::homogeneous(-q, hpow(j))));
        }
    }
    let (rows, rhs) = system_from_columns(&columns);
    let out = solve(&rows, &rhs, columns.len());
    fill(&mut cell, &out);
    if let Some(z) = &out.particular {
        if let Some((u, w)) = rank_one_split(z, na, nb) {
            let big_p = WeylElement::homogeneous(p, PolyH::from_coeffs(u));
            let big_q = WeylElement::homogeneous(-q, PolyH::from_coeffs(w));
            if big_p.commutator(&big_q).is_one() {
                cell.witness = vec![
                    ("P".to_string(), print_canonical(&big_p)),
                    ("Q".to_string(), print_canonical(&big_q)),
                ];
            }
        }
    }
    cell
}

fn run_case_iii(p: i64, s: i64, q: i64, d: u32) -> SweepCell {
    let degrees = vec![d, d, d];
    if p + s != 0 && p + q != 0 {
        return empty_cell(p, q, Some(s), degrees, CellStatus::Empty, "grading");
    }
    let mut cell = empty_cell(p, q, Some(s), degrees, CellStatus::Empty, "linear-system");
    let n = d as usize + 1;
    let mut columns = Vec::with_capacity(2 * n * n);
    for i in 0..=d {
        let a = WeylElement::homogeneous(p, hpow(i));
        for deg in [s, q] {
            for j in 0..=d {
                columns.push(a.commutator(&WeylElement::homogeneous(deg, hpow(j))));
            }
        }
    }
    let (rows, rhs) = system_from_columns(&columns);
    let out = solve(&rows, &rhs, columns.len());
    fill(&mut cell, &out);
    if let Some(z) = &out.particular {
        if let Some((u, w)) = rank_one_split(z, n, 2 * n) {
            let big_p = WeylElement::homogeneous(p, PolyH::from_coeffs(u));
            let big_q = WeylElement::from_components([
                (s, PolyH::from_coeffs(w[..n].to_vec())),
                (q, PolyH::from_coeffs(w[n..].to_vec())),
            ]);
            if big_p.commutator(&big_q).is_one() {
                cell.witness = vec![
                    ("P".to_string(), print_canonical(&big_p)),
                    ("Q".to_string(), print_canonical(&big_q)),
                ];
            }
        }
    }
    cell
}

/// Unknowns: `u` (degree `<= ea`) and `w` (degree `<= eb`) with
/// `a = (p,-p) u`, `b = (q,-q) w`. The cell asks for a solution whose
/// dominant factor (`w` if `p < q`, else `u`) has exact degree.
fn run_case_v(p: i64, q: i64, ea: u32, eb: u32) -> SweepCell {
    let degrees = vec![ea, eb];
    if p == q {
        return empty_cell(p, q, None, degrees, CellStatus::Reduction, "case-v-reduction");
    }
    let (cp, cq) = (structure_constant(p, -p), structure_constant(q, -q));
    let (deg_a, deg_b) = (p + ea as i64, q + eb as i64);
    // the degree ordering forced by the power decompositions
    if (p < q && deg_a >= deg_b) || (p > q && deg_a <= deg_b) {
        return empty_cell(p, q, None, degrees, CellStatus::Empty, "grading");
    }
    let mut cell = empty_cell(p, q, None, degrees, CellStatus::Empty, "linear-system");
    let zero = PolyH::zero();
    let mut columns: Vec<PolyH> = (0..=ea)
        .map(|k| delta_balance_check(&(&cp * &hpow(k)), &zero, p, q))
        .collect();
    columns.extend((0..=eb).map(|k| delta_balance_check(&zero, &(&cq * &hpow(k)), p, q)));
    let unknowns = columns.len();
    let top = if p < q { unknowns - 1 } else { ea as usize };
    let maxdeg = columns.iter().map(|c| c.coeffs().len()).max().unwrap_or(0).max(1);
    let mut rows: Vec<Vec<Rat>> = (0..maxdeg)
        .map(|e| columns.iter().map(|c| c.coeff(e)).collect())
        .collect();
    let mut rhs: Vec<Rat> = (0..maxdeg).map(|e| if e == 0 { Rat::one() } else { Rat::zero() }).collect();
    let base = solve(&rows, &rhs, unknowns);
    let pinned = |value: Rat, rows: &mut Vec<Vec<Rat>>, rhs: &mut Vec<Rat>| {
        let mut r = vec![Rat::zero(); unknowns];
        r[top] = Rat::one();
        rows.push(r);
        rhs.push(value);
        let out = solve(rows, rhs, unknowns);
        rows.pop();
        rhs.pop();
        out
    };
    let with_one = pinned(Rat::one(), &mut rows, &mut rhs);
    let with_zero = pinned(Rat::zero(), &mut rows, &mut rhs);
    fill(&mut cell, &base);
    let exact = if with_one.consistent() {
        with_one.particular
    } else if base.consistent() && !with_zero.consistent() {
        base.particular.clone()
    } else {
        None
    };
    match exact {
        None => cell.status = CellStatus::Empty,
        Some(z) => {
            let u = PolyH::from_coeffs(z[..=ea as usize].to_vec());
            let w = PolyH::from_coeffs(z[ea as usize + 1..].to_vec());
            let (a, b) = (&cp * &u, &cq * &w);
            cell.status = CellStatus::Solutions;
            if delta_balance_check(&a, &b, p, q).is_one() {
                cell.witness = vec![("a".to_string(), a.to_text()), ("b".to_string(), b.to_text())];
            }
        }
    }
    cell
}

fn run_cell(spec: &CellSpec) -> SweepCell {
    match *spec {
        CellSpec::Two { p, q, da, db } => run_case_ii(p, q, da, db),
        CellSpec::Three { p, s, q, d } => run_case_iii(p, s, q, d),
        CellSpec::Five { p, q, ea, eb } => run_case_v(p, q, ea, eb),
    }
}

/// Runs every cell of the pattern within `bounds`; cells are independent and
/// merged in enumeration order.
pub fn impossibility_sweep(pattern: SweepPattern, bounds: &SweepBounds, exec: Exec) -> Result<SweepReport> {
    check_bounds(bounds)?;
    let specs = cell_specs(pattern, bounds);
    if specs.len() > bounds.max_cells {
        return Err(Error::BoundsTooLarge(format!(
            "{} cells exceed the cap of {}",
            specs.len(),
            bounds.max_cells
        )));
    }
    let cells = exec.map(&specs, run_cell);
    Ok(SweepReport { pattern, cells })
}
