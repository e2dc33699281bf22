//! Exact linear systems over the rationals by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOutcome {
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub rank_augmented: usize,
    /// A particular solution (free variables set to zero), if consistent.
    pub particular: Option<Vec<Rat>>,
}

impl LinearOutcome {
    pub fn consistent(&self) -> bool {
        self.rank == self.rank_augmented
    }

    /// Dimension of the solution space when consistent.
    pub fn nullity(&self) -> usize {
        self.unknowns - self.rank
    }
}

fn row_to_ints(row: &[Rat]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    row.iter()
        .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
        .collect()
}

/// Solves `A z = b` exactly. `rows[r]` holds the coefficients of equation `r`.
pub fn solve(rows: &[Vec<Rat>], rhs: &[Rat], unknowns: usize) -> LinearOutcome {
    assert_eq!(rows.len(), rhs.len());
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut full = r.clone();
            full.resize(unknowns, Rat::zero());
            full.push(b.clone());
            row_to_ints(&full)
        })
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .collect();
    let ncols = unknowns + 1;
    let mut prev = BigInt::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r >= m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in r + 1..m.len() {
            for j in col + 1..ncols {
                let v = &m[r][col] * &m[i][j] - &m[i][col] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    let rank_augmented = pivots.len();
    let rank = pivots.iter().filter(|&&c| c < unknowns).count();
    let particular = (rank == rank_augmented).then(|| {
        let mut z = vec![Rat::zero(); unknowns];
        for (row, &col) in pivots.iter().enumerate().rev() {
            let mut acc = Rat::from_integer(m[row][unknowns].clone());
            for j in col + 1..unknowns {
                if !m[row][j].is_zero() {
                    acc -= Rat::from_integer(m[row][j].clone()) * &z[j];
                }
            }
            z[col] = acc / Rat::from_integer(m[row][col].clone());
        }
        z
    });
    LinearOutcome {
        unknowns,
        equations: rows.len(),
        rank,
        rank_augmented,
        particular,
    }
}
