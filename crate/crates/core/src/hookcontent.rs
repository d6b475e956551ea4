//! Hook and content products and their quotient `P^d_λ = C^d_λ / H_λ`.
//!
//! `s_λ(1, q, …, q^d) = q^{b(λ)} P^d_λ(q)`, so `P^d_λ` is the normalized
//! principal specialization: constant term 1, palindromic, of degree
//! `|λ| d − 2 b(λ)`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qpoly::QPolynomial;

/// `H_λ(q) = Π [h(u)]_q`
pub fn hook_poly(p: &Partition) -> QPolynomial {
    let mut out = QPolynomial::one();
    for h in p.hooks() {
        out.mul_q_analog(h).expect("hook lengths are positive");
    }
    out
}

/// `C^d_λ(q) = Π [d + 1 + c(u)]_q`
pub fn content_poly(p: &Partition, d: usize) -> Result<QPolynomial> {
    let mut out = QPolynomial::one();
    for a in shifted_contents(p, d)? {
        out.mul_q_analog(a)?;
    }
    Ok(out)
}

/// The numerator and denominator q-analog arguments left after cancelling
/// equal factors between `{d + 1 + c(u)}` and `{h(u)}`. Both lists are sorted
/// ascending and never contain `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFactors {
    pub numerators: Vec<usize>,
    pub denominators: Vec<usize>,
}

pub fn reduced_factors(p: &Partition, d: usize) -> Result<ReducedFactors> {
    let numer = shifted_contents(p, d)?;
    let denom = p.hooks();
    let top = numer.iter().chain(&denom).copied().max().unwrap_or(0);
    let mut balance = alloc::vec![0i64; top + 1];
    for &a in &numer {
        balance[a] += 1;
    }
    for &h in &denom {
        balance[h] -= 1;
    }
    let mut numerators = Vec::new();
    let mut denominators = Vec::new();
    for (a, &n) in balance.iter().enumerate().skip(2) {
        let list = if n > 0 {
            &mut numerators
        } else {
            &mut denominators
        };
        list.extend(core::iter::repeat_n(a, n.unsigned_abs() as usize));
    }
    Ok(ReducedFactors {
        numerators,
        denominators,
    })
}

/// `P^d_λ = C^d_λ / H_λ` as an exact integer polynomial.
pub fn p_poly(p: &Partition, d: usize) -> Result<QPolynomial> {
    let ReducedFactors {
        numerators,
        denominators,
    } = reduced_factors(p, d)?;
    let mut out = QPolynomial::one();
    for a in numerators {
        out.mul_q_analog(a)?;
    }
    // Largest factors first keeps the working degree falling fastest.
    for &h in denominators.iter().rev() {
        out = out.div_q_analog(h)?;
    }
    Ok(out)
}

/// `dim S_λ(C^{d+1}) = P^d_λ(1)`
pub fn dimension(p: &Partition, d: usize) -> Result<BigInt> {
    Ok(p_poly(p, d)?.eval_at_one())
}

/// Expected degree of `P^d_λ`, `|λ| d − 2 b(λ)`.
pub fn p_degree(p: &Partition, d: usize) -> usize {
    p.weight() * d - 2 * p.b_statistic()
}

fn shifted_contents(p: &Partition, d: usize) -> Result<Vec<usize>> {
    if p.length() > d + 1 {
        return Err(Error::LengthExceedsDimension {
            length: p.length(),
            dim: d + 1,
        });
    }
    // ℓ(λ) ≤ d + 1 makes every d + 1 + c(u) ≥ 1.
    Ok(p.contents()
        .into_iter()
        .map(|c| (d as isize + 1 + c) as usize)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn product(args: &[usize]) -> QPolynomial {
        let mut out = QPolynomial::one();
        for &a in args {
            out = &out * &QPolynomial::q_analog(a).unwrap();
        }
        out
    }

    #[test]
    fn hook_poly_examples() {
        assert_eq!(hook_poly(&p(&[1])), QPolynomial::one());
        assert_eq!(hook_poly(&p(&[2])), QPolynomial::from_i64s(&[1, 1]));
        assert_eq!(
            hook_poly(&p(&[3, 2, 2, 1])),
            product(&[6, 4, 1, 4, 2, 3, 1, 1])
        );
        assert_eq!(hook_poly(&Partition::empty()), QPolynomial::one());
    }

    #[test]
    fn content_poly_examples() {
        for d in 0..5 {
            assert_eq!(content_poly(&p(&[1]), d).unwrap(), product(&[d + 1]));
        }
        assert_eq!(content_poly(&p(&[2]), 3).unwrap(), product(&[4, 5]));
        let contents = [0isize, 1, 2, -1, 0, -2, -1, -3];
        let args: Vec<usize> = contents.iter().map(|c| (4 + c) as usize).collect();
        assert_eq!(content_poly(&p(&[3, 2, 2, 1]), 3).unwrap(), product(&args));
        assert_eq!(
            content_poly(&p(&[1, 1, 1]), 1),
            Err(Error::LengthExceedsDimension { length: 3, dim: 2 })
        );
    }

    #[test]
    fn p_poly_examples() {
        assert_eq!(
            p_poly(&p(&[2]), 3).unwrap(),
            QPolynomial::from_i64s(&[1, 1, 2, 2, 2, 1, 1])
        );
        for d in 0..4 {
            assert_eq!(p_poly(&Partition::empty(), d).unwrap(), QPolynomial::one());
        }
        // [4][3] / ([2][1])
        assert_eq!(
            p_poly(&p(&[1, 1]), 3).unwrap(),
            QPolynomial::from_i64s(&[1, 1, 2, 1, 1])
        );
        assert!(p_poly(&p(&[1, 1]), 0).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&p(&[2]), 3).unwrap(), BigInt::from(10));
        assert_eq!(dimension(&p(&[1]), 7).unwrap(), BigInt::from(8));
        assert_eq!(dimension(&p(&[1, 1, 1]), 2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn reduced_factors_cancel() {
        // contents of (2) at d = 3 give [4][5]; hooks [2][1]
        let r = reduced_factors(&p(&[2]), 3).unwrap();
        assert_eq!(
            r,
            ReducedFactors {
                numerators: vec![4, 5],
                denominators: vec![2]
            }
        );
        // a full column at d = 0 cancels completely
        let r = reduced_factors(&p(&[1]), 0).unwrap();
        assert!(r.numerators.is_empty() && r.denominators.is_empty());
    }

    #[test]
    fn content_equals_hook_times_p() {
        for n in 0..=8 {
            for lam in Partition::all_of_weight(n) {
                for d in lam.length().saturating_sub(1)..=6 {
                    let pp = p_poly(&lam, d).unwrap();
                    assert_eq!(&hook_poly(&lam) * &pp, content_poly(&lam, d).unwrap());
                    assert_eq!(pp.degree(), Some(p_degree(&lam, d)));
                    assert_eq!(pp.coeff(0), BigInt::from(1));
                    assert!(pp.is_palindromic().unwrap());
                }
            }
        }
    }
}
