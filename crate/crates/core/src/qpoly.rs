//! Dense univariate polynomials in `q` over arbitrary-precision integers.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient `i` is the coefficient of `q^i`. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial {
            coeffs: alloc::vec![BigInt::one()],
        }
    }

    /// `c · q^k`
    pub fn monomial(k: usize, c: BigInt) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        QPolynomial::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `[a]_q = 1 + q + … + q^{a−1}`
    pub fn q_analog(a: usize) -> Result<Self> {
        if a == 0 {
            return Err(Error::NonPositiveArgument);
        }
        Ok(QPolynomial {
            coeffs: alloc::vec![BigInt::one(); a],
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Substitutes `q ↦ q^k` for `k ≥ 1`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        QPolynomial { coeffs }
    }

    /// `q^{deg f} f(1/q)`
    pub fn reverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(QPolynomial::from_coeffs(coeffs))
    }

    pub fn is_palindromic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.coeffs.iter().eq(self.coeffs.iter().rev()))
    }

    /// Returns `h` with `self = g · h`, by long division from the top
    /// coefficient. Any remainder or non-integral quotient coefficient is an
    /// error.
    pub fn exact_div(&self, g: &QPolynomial) -> Result<QPolynomial> {
        let Some(dg) = g.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(df) = self.degree() else {
            return Ok(QPolynomial::zero());
        };
        if df < dg {
            return Err(Error::InexactDivision);
        }
        let lead = &g.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![BigInt::zero(); df - dg + 1];
        for k in (0..=df - dg).rev() {
            let top = &rem[k + dg];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, gj) in g.coeffs.iter().enumerate() {
                if !gj.is_zero() {
                    rem[k + j] -= &c * gj;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(QPolynomial::from_coeffs(quot))
    }

    /// In-place multiplication by `[a]_q`, using a sliding window sum.
    pub fn mul_q_analog(&mut self, a: usize) -> Result<()> {
        if a == 0 {
            return Err(Error::NonPositiveArgument);
        }
        if a == 1 || self.is_zero() {
            return Ok(());
        }
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n + a - 1);
        let mut window = BigInt::zero();
        for i in 0..n + a - 1 {
            if i < n {
                window += &self.coeffs[i];
            }
            if i >= a {
                window -= &self.coeffs[i - a];
            }
            out.push(window.clone());
        }
        self.coeffs = out;
        Ok(())
    }

    /// Exact division by `[a]_q` in linear time, from
    /// `g_i = f_i − f_{i−1} + g_{i−a}`.
    pub fn div_q_analog(&self, a: usize) -> Result<QPolynomial> {
        if a == 0 {
            return Err(Error::NonPositiveArgument);
        }
        if a == 1 || self.is_zero() {
            return Ok(self.clone());
        }
        let n = self.coeffs.len();
        if n < a {
            return Err(Error::InexactDivision);
        }
        let qlen = n - a + 1;
        let zero = BigInt::zero();
        let f = |i: usize| -> &BigInt { self.coeffs.get(i).unwrap_or(&zero) };
        let mut g: Vec<BigInt> = Vec::with_capacity(qlen);
        for i in 0..n + 1 {
            let mut gi = f(i).clone();
            if i >= 1 {
                gi -= f(i - 1);
            }
            if i >= a && i - a < qlen {
                gi += &g[i - a];
            }
            if i < qlen {
                g.push(gi);
            } else if !gi.is_zero() {
                return Err(Error::InexactDivision);
            }
        }
        Ok(QPolynomial::from_coeffs(g))
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn q_analog_examples() {
        assert_eq!(QPolynomial::q_analog(4).unwrap(), poly(&[1, 1, 1, 1]));
        assert_eq!(QPolynomial::q_analog(1).unwrap(), QPolynomial::one());
        assert_eq!(QPolynomial::q_analog(2).unwrap(), poly(&[1, 1]));
        assert_eq!(QPolynomial::q_analog(0), Err(Error::NonPositiveArgument));
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&poly(&[1, 1]) * &poly(&[1, 0, 1]), poly(&[1, 1, 1, 1]));
        let f = poly(&[3, -2, 0, 5]);
        assert_eq!(&f * &QPolynomial::one(), f);
        assert!((&poly(&[1, 1]) + &poly(&[-1, -1])).is_zero());
        assert_eq!(&f - &f, QPolynomial::zero());
    }

    #[test]
    fn exact_div_examples() {
        let four = QPolynomial::q_analog(4).unwrap();
        let two = QPolynomial::q_analog(2).unwrap();
        assert_eq!(four.exact_div(&two).unwrap(), poly(&[1, 0, 1]));
        assert_eq!(four.exact_div(&four).unwrap(), QPolynomial::one());
        let five = QPolynomial::q_analog(5).unwrap();
        assert_eq!(five.exact_div(&two), Err(Error::InexactDivision));
        assert_eq!(
            four.exact_div(&QPolynomial::zero()),
            Err(Error::DivisionByZero)
        );
        // 1 + q is not divisible by 2 + q over the integers
        assert_eq!(
            poly(&[2, 2]).exact_div(&poly(&[1, 2])),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn q_analog_fast_paths_agree_with_generic_ops() {
        let f = poly(&[2, -1, 4, 0, 3]);
        for a in 1..7 {
            let qa = QPolynomial::q_analog(a).unwrap();
            let mut g = f.clone();
            g.mul_q_analog(a).unwrap();
            assert_eq!(g, &f * &qa);
            assert_eq!(g.div_q_analog(a).unwrap(), f);
        }
        assert_eq!(
            QPolynomial::q_analog(5).unwrap().div_q_analog(2),
            Err(Error::InexactDivision)
        );
        assert_eq!(poly(&[1]).div_q_analog(3), Err(Error::InexactDivision));
    }

    #[test]
    fn reverse_and_palindromes() {
        assert!(poly(&[1, 2, 1]).is_palindromic().unwrap());
        assert!(poly(&[1, 0, 0, 1]).is_palindromic().unwrap());
        assert!(!poly(&[1, 2]).is_palindromic().unwrap());
        assert_eq!(poly(&[1, 2]).reverse().unwrap(), poly(&[2, 1]));
        assert_eq!(poly(&[0, 0, 3, 1]).reverse().unwrap(), poly(&[1, 3]));
        assert_eq!(QPolynomial::zero().reverse(), Err(Error::ZeroPolynomial));
        assert_eq!(
            QPolynomial::zero().is_palindromic(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn eval_at_one_examples() {
        for d in 0..6 {
            assert_eq!(
                QPolynomial::q_analog(d + 1).unwrap().eval_at_one(),
                BigInt::from(d + 1)
            );
        }
        assert_eq!(QPolynomial::zero().eval_at_one(), BigInt::zero());
        assert_eq!(poly(&[1, 1, 2, 2, 2, 1, 1]).eval_at_one(), BigInt::from(10));
    }

    #[test]
    fn shift_and_substitution() {
        assert_eq!(poly(&[1, 1]).shift(2), poly(&[0, 0, 1, 1]));
        assert_eq!(poly(&[1, 1]).substitute_power(3), poly(&[1, 0, 0, 1]));
        assert_eq!(QPolynomial::monomial(2, BigInt::from(7)), poly(&[0, 0, 7]));
    }
}
