//! Brute-force principal specializations `s_λ(1, q, …, q^d)`.
//!
//! Both routes are independent of the hook-content pipeline: one evaluates
//! the bialternant quotient of two determinants, the other sums over
//! semistandard tableaux.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qpoly::QPolynomial;

pub const DEFAULT_SSYT_BUDGET: u64 = 10_000_000;

/// Determinant of a square matrix over `Z[q]` by fraction-free (Bareiss)
/// elimination.
pub fn determinant(mut m: Vec<Vec<QPolynomial>>) -> Result<QPolynomial> {
    let n = m.len();
    if n == 0 {
        return Ok(QPolynomial::one());
    }
    let mut negate = false;
    let mut prev = QPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(QPolynomial::zero());
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// `det(x_j^{λ_i + k − i}) / det(x_j^{k − i})` at `x_j = q^{j−1}`, `k = d + 1`.
pub fn specialize_bialternant(p: &Partition, d: usize) -> Result<QPolynomial> {
    check_length(p, d)?;
    let k = d + 1;
    let alternant = |exponent: &dyn Fn(usize) -> usize| -> Vec<Vec<QPolynomial>> {
        (1..=k)
            .map(|i| {
                (1..=k)
                    .map(|j| QPolynomial::monomial((j - 1) * exponent(i), BigInt::from(1)))
                    .collect()
            })
            .collect()
    };
    let numer = determinant(alternant(&|i| p.part(i) + k - i))?;
    let vandermonde = determinant(alternant(&|i| k - i))?;
    numer.exact_div(&vandermonde)
}

/// `Σ_T q^{Σ (T(u) − 1)}` over semistandard fillings `T` of `λ` with entries
/// in `{1, …, d + 1}`.
pub fn specialize_ssyt(p: &Partition, d: usize, budget: u64) -> Result<QPolynomial> {
    let counts = ssyt_weights(p, d, budget)?;
    Ok(QPolynomial::from_coeffs(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

/// Number of semistandard fillings of `λ` with entries at most `d + 1`.
pub fn ssyt_count(p: &Partition, d: usize, budget: u64) -> Result<u64> {
    Ok(ssyt_weights(p, d, budget)?.iter().sum())
}

fn ssyt_weights(p: &Partition, d: usize, budget: u64) -> Result<Vec<u64>> {
    check_length(p, d)?;
    let cells: Vec<(usize, usize)> = p.cells().map(|c| (c.row - 1, c.col - 1)).collect();
    let conj = p.conjugate();
    let mut walker = Walker {
        column_heights: conj.parts().to_vec(),
        cells,
        max_entry: d + 1,
        grid: p
            .parts()
            .iter()
            .map(|&len| alloc::vec![0usize; len])
            .collect(),
        counts: alloc::vec![0u64; p.weight() * d + 1],
        seen: 0,
        budget,
    };
    walker.fill(0, 0)?;
    Ok(walker.counts)
}

struct Walker {
    column_heights: Vec<usize>,
    cells: Vec<(usize, usize)>,
    max_entry: usize,
    grid: Vec<Vec<usize>>,
    counts: Vec<u64>,
    seen: u64,
    budget: u64,
}

impl Walker {
    fn fill(&mut self, idx: usize, weight: usize) -> Result<()> {
        if idx == self.cells.len() {
            self.seen += 1;
            if self.seen > self.budget {
                return Err(Error::EnumerationBudgetExceeded(self.budget));
            }
            self.counts[weight] += 1;
            return Ok(());
        }
        let (r, c) = self.cells[idx];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(self.grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(self.grid[r - 1][c] + 1);
        }
        // leave room for the strictly increasing entries below in this column
        let hi = self.max_entry - (self.column_heights[c] - 1 - r);
        for v in lo..=hi {
            self.grid[r][c] = v;
            self.fill(idx + 1, weight + v - 1)?;
        }
        Ok(())
    }
}

fn check_length(p: &Partition, d: usize) -> Result<()> {
    if p.length() > d + 1 {
        return Err(Error::LengthExceedsDimension {
            length: p.length(),
            dim: d + 1,
        });
    }
    Ok(())
}
