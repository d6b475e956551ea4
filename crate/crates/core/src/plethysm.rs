//! SL(2, C) and GL(2, C) isomorphism of plethysms `S_λ(S_δ(C²))`.
//!
//! Two plethysms are SL-isomorphic exactly when their `P`-polynomials agree,
//! and GL-isomorphic when additionally `|δ||λ| = |ε||μ|`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use core::cell::RefCell;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hookcontent;
use crate::partition::Partition;
use crate::qpoly::QPolynomial;

/// `S_λ(S_(d)(C²))` viewed as an SL(2, C)-module.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SLInstance {
    // field order gives the canonical (d, λ) ordering
    d: usize,
    lambda: Partition,
}

impl SLInstance {
    pub fn new(lambda: Partition, d: usize) -> Result<Self> {
        check_dimension(&lambda, d)?;
        Ok(SLInstance { d, lambda })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The GL-instance with minimal lift `δ = (d, 0)`.
    pub fn lift(&self) -> PlethysmInstance {
        PlethysmInstance {
            lambda: self.lambda.clone(),
            delta: (self.d, 0),
        }
    }

    /// Removes full columns of height `d + 1`; the module is unchanged up to
    /// SL-isomorphism.
    pub fn normalize(&self) -> SLInstance {
        let (lambda, _) = self
            .lambda
            .tilde_reduce(self.d + 1)
            .expect("length checked on construction");
        SLInstance { d: self.d, lambda }
    }

    pub fn is_normalized(&self) -> bool {
        self.lambda.length() <= self.d
    }

    /// The dual module, given by the complement in the `(d + 1) × λ₁` box.
    pub fn dual(&self) -> SLInstance {
        let lambda = self
            .lambda
            .complement(self.d + 1)
            .expect("length checked on construction");
        SLInstance { d: self.d, lambda }
    }
}

impl fmt::Debug for SLInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, d={})", self.lambda, self.d)
    }
}

/// `S_λ(S_δ(C²))` with `δ = (δ₁, δ₂)`, a GL(2, C)-module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlethysmInstance {
    lambda: Partition,
    delta: (usize, usize),
}

impl PlethysmInstance {
    pub fn new(lambda: Partition, delta: (usize, usize)) -> Result<Self> {
        if delta.0 < delta.1 {
            return Err(Error::InvalidDelta(delta.0, delta.1));
        }
        check_dimension(&lambda, delta.0 - delta.1)?;
        Ok(PlethysmInstance { lambda, delta })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn delta(&self) -> (usize, usize) {
        self.delta
    }

    /// `d = δ₁ − δ₂`
    pub fn d(&self) -> usize {
        self.delta.0 - self.delta.1
    }

    /// Forgets `δ₂`.
    pub fn sl(&self) -> SLInstance {
        SLInstance {
            d: self.d(),
            lambda: self.lambda.clone(),
        }
    }

    /// `|δ| |λ|`, the total degree of the character.
    pub fn total_degree(&self) -> usize {
        (self.delta.0 + self.delta.1) * self.lambda.weight()
    }
}

/// The character `(x₁^{δ₁} x₂^{δ₂})^{|λ|} q^{b(λ)} P^d_λ(q)` with
/// `q = x₁^{−1} x₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterData {
    /// `(|λ| δ₁, |λ| δ₂)`
    pub weight_exponents: (usize, usize),
    pub b_shift: usize,
    pub p: QPolynomial,
}

impl CharacterData {
    /// Expands to `Σ c · x₁^i x₂^j`, keyed by `(i, j)`.
    pub fn expand(&self) -> BTreeMap<(usize, usize), BigInt> {
        let (e1, e2) = self.weight_exponents;
        let mut out = BTreeMap::new();
        for (i, c) in self.p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.b_shift + i;
            out.insert((e1 - k, e2 + k), c.clone());
        }
        out
    }
}

/// Source of `P^d_λ`, so callers can choose whether and how to memoize.
pub trait PolySource {
    fn p_poly(&self, lambda: &Partition, d: usize) -> Result<Arc<QPolynomial>>;
}

/// Recomputes every time.
#[derive(Clone, Copy, Debug, Default)]
pub struct Uncached;

impl PolySource for Uncached {
    fn p_poly(&self, lambda: &Partition, d: usize) -> Result<Arc<QPolynomial>> {
        hookcontent::p_poly(lambda, d).map(Arc::new)
    }
}

/// Single-threaded memo table keyed by the normalized instance.
#[derive(Debug, Default)]
pub struct LocalCache {
    table: RefCell<BTreeMap<SLInstance, Arc<QPolynomial>>>,
}

impl LocalCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl PolySource for LocalCache {
    fn p_poly(&self, lambda: &Partition, d: usize) -> Result<Arc<QPolynomial>> {
        let key = SLInstance::new(lambda.clone(), d)?.normalize();
        if let Some(hit) = self.table.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let value = Arc::new(hookcontent::p_poly(&key.lambda, d)?);
        self.table.borrow_mut().insert(key, value.clone());
        Ok(value)
    }
}

impl<S: PolySource + ?Sized> PolySource for &S {
    fn p_poly(&self, lambda: &Partition, d: usize) -> Result<Arc<QPolynomial>> {
        (**self).p_poly(lambda, d)
    }
}

pub fn character_data<S: PolySource>(src: &S, inst: &PlethysmInstance) -> Result<CharacterData> {
    let w = inst.lambda.weight();
    Ok(CharacterData {
        weight_exponents: (w * inst.delta.0, w * inst.delta.1),
        b_shift: inst.lambda.b_statistic(),
        p: (*src.p_poly(&inst.lambda, inst.d())?).clone(),
    })
}

/// SL(2)-character as a Laurent polynomial in `x₂`:
/// `x₂^{−d|λ| + 2b(λ)} P^d_λ(x₂²)`, keyed by exponent.
pub fn sl_character<S: PolySource>(src: &S, a: &SLInstance) -> Result<BTreeMap<i64, BigInt>> {
    let p = src.p_poly(&a.lambda, a.d)?;
    let base = 2 * a.lambda.b_statistic() as i64 - (a.d * a.lambda.weight()) as i64;
    Ok(p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (base + 2 * i as i64, c.clone()))
        .collect())
}

/// `P^d_λ = P^e_μ`. Equal polynomials with `|λ| d − |μ| e` odd would
/// contradict the character identity and are reported as an error.
pub fn sl_isomorphic<S: PolySource>(src: &S, a: &SLInstance, b: &SLInstance) -> Result<bool> {
    let same = src.p_poly(&a.lambda, a.d)? == src.p_poly(&b.lambda, b.d)?;
    if same {
        let gap = (a.lambda.weight() * a.d) as i128 - (b.lambda.weight() * b.d) as i128;
        if gap % 2 != 0 {
            return Err(Error::ParityViolation(gap));
        }
    }
    Ok(same)
}

pub fn gl_isomorphic<S: PolySource>(
    src: &S,
    a: &PlethysmInstance,
    b: &PlethysmInstance,
) -> Result<bool> {
    Ok(a.total_degree() == b.total_degree() && sl_isomorphic(src, &a.sl(), &b.sl())?)
}

pub fn normalize(a: &SLInstance) -> SLInstance {
    a.normalize()
}

pub fn dual(a: &SLInstance) -> SLInstance {
    a.dual()
}

fn check_dimension(lambda: &Partition, d: usize) -> Result<()> {
    if lambda.length() > d + 1 {
        return Err(Error::LengthExceedsDimension {
            length: lambda.length(),
            dim: d + 1,
        });
    }
    Ok(())
}
