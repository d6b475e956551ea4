//! Upgrading SL-isomorphisms to GL-isomorphisms by twisting.
//!
//! Replacing `λ` by `λ + (l^{d+1})` and `δ = (d, 0)` by `(d + x, x)` leaves
//! the SL-module unchanged, so an SL-isomorphic pair becomes GL-isomorphic
//! once
//!
//! ```text
//! (|λ| + l(d+1)) (d + 2x) = (|μ| + m(e+1)) (e + 2y).
//! ```

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::plethysm::{gl_isomorphic, sl_isomorphic, PlethysmInstance, PolySource, SLInstance};

pub const DEFAULT_BOUND: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistSolution {
    pub l: usize,
    pub m: usize,
    pub x: usize,
    pub y: usize,
}

impl TwistSolution {
    /// Both sides of the defining identity, `(|λ|+l(d+1))(d+2x)` and
    /// `(|μ|+m(e+1))(e+2y)`.
    pub fn products(&self, a: &SLInstance, b: &SLInstance) -> (u128, u128) {
        let left =
            (a.lambda().weight() + self.l * (a.d() + 1)) as u128 * (a.d() + 2 * self.x) as u128;
        let right =
            (b.lambda().weight() + self.m * (b.d() + 1)) as u128 * (b.d() + 2 * self.y) as u128;
        (left, right)
    }
}

/// The coefficients `(A, B, c)` of `A y − B x = c` for a fixed `(l, m)`.
pub fn twist_equation(
    a: &SLInstance,
    b: &SLInstance,
    l: usize,
    m: usize,
) -> Result<(i128, i128, i128)> {
    twist_coefficients(Sizes::of(a, b), l, m)
}

/// `(|λ|, d, |μ|, e)`: everything the twist equation sees of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sizes {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub e: usize,
}

impl Sizes {
    pub fn of(a: &SLInstance, b: &SLInstance) -> Self {
        Sizes {
            n: a.lambda().weight(),
            d: a.d(),
            k: b.lambda().weight(),
            e: b.d(),
        }
    }
}

fn twist_coefficients(s: Sizes, l: usize, m: usize) -> Result<(i128, i128, i128)> {
    let (n, d, k, e) = (s.n as i128, s.d as i128, s.k as i128, s.e as i128);
    let (l, m) = (l as i128, m as i128);
    let diff = n * d - k * e;
    if diff % 2 != 0 {
        return Err(Error::ParityViolation(diff));
    }
    let big_a = k + m * (e + 1);
    let big_b = n + l * (d + 1);
    let c = diff / 2 + l * (d + 1) * d / 2 - m * (e + 1) * e / 2;
    Ok((big_a, big_b, c))
}

/// A nonnegative solution `(x, y)` of `A y − B x = c` with `A, B ≥ 0`,
/// choosing the smallest `y` and then the smallest `x`.
pub fn nonnegative_solution(a: i128, b: i128, c: i128) -> Option<(i128, i128)> {
    debug_assert!(a >= 0 && b >= 0);
    match (a, b) {
        (0, 0) => (c == 0).then_some((0, 0)),
        (0, _) => (c <= 0 && c % b == 0).then(|| (-c / b, 0)),
        (_, 0) => (c >= 0 && c % a == 0).then(|| (0, c / a)),
        _ => {
            let eg = a.extended_gcd(&b);
            let g = eg.gcd;
            if c % g != 0 {
                return None;
            }
            // a·s + b·t = g, so y ≡ s·(c/g) (mod b/g)
            let period = b / g;
            let y0 = (eg.x.rem_euclid(period) * (c / g).rem_euclid(period)).rem_euclid(period);
            // x = (a y − c) / b ≥ 0 needs y ≥ c / a
            let y_min = Integer::div_ceil(&c, &a).max(0);
            let y = y_min + (y0 - y_min).rem_euclid(period);
            let x = (a * y - c) / b;
            Some((x, y))
        }
    }
}

/// Searches `l, m ∈ [0, bound]` by increasing `l + m`, then `l`, and returns
/// the first twist with a nonnegative `(x, y)`.
pub fn solve_twist<S: PolySource>(
    src: &S,
    a: &SLInstance,
    b: &SLInstance,
    bound: usize,
) -> Result<Option<TwistSolution>> {
    if !sl_isomorphic(src, a, b)? {
        return Err(Error::NotSLIsomorphic);
    }
    search_twist(Sizes::of(a, b), bound)
}

/// The arithmetic part of [`solve_twist`]: only requires `|λ|d − |μ|e` even.
pub fn search_twist(sizes: Sizes, bound: usize) -> Result<Option<TwistSolution>> {
    for total in 0..=2 * bound {
        let lo = total.saturating_sub(bound);
        for l in lo..=total.min(bound) {
            let m = total - l;
            let (big_a, big_b, c) = twist_coefficients(sizes, l, m)?;
            if let Some((x, y)) = nonnegative_solution(big_a, big_b, c) {
                return Ok(Some(TwistSolution {
                    l,
                    m,
                    x: x as usize,
                    y: y as usize,
                }));
            }
        }
    }
    Ok(None)
}

/// Builds both twisted GL-instances and compares them.
pub fn verify_twist<S: PolySource>(
    src: &S,
    a: &SLInstance,
    b: &SLInstance,
    t: &TwistSolution,
) -> Result<bool> {
    let (left, right) = twisted_pair(a, b, t)?;
    gl_isomorphic(src, &left, &right)
}

/// `(λ + (l^{d+1}), (d + x, x))` and `(μ + (m^{e+1}), (e + y, y))`.
pub fn twisted_pair(
    a: &SLInstance,
    b: &SLInstance,
    t: &TwistSolution,
) -> Result<(PlethysmInstance, PlethysmInstance)> {
    let twist = |inst: &SLInstance, cols: usize, shift: usize| {
        let lambda = inst.lambda().add(&Partition::rectangle(cols, inst.d() + 1));
        PlethysmInstance::new(lambda, (inst.d() + shift, shift))
    };
    Ok((twist(a, t.l, t.x)?, twist(b, t.m, t.y)?))
}

/// 2-adic valuation of a positive integer.
pub fn nu2(n: usize) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroWeight);
    }
    Ok(n.trailing_zeros())
}

/// `ν₂(|μ|) ≠ ν₂(|λ|)` and `0 < min(ν₂|μ|, ν₂|λ|) < min(ν₂(e+1), ν₂(d+1))`.
pub fn nu2_obstruction(a: &SLInstance, b: &SLInstance) -> Result<bool> {
    sizes_obstructed(Sizes::of(a, b))
}

pub fn sizes_obstructed(s: Sizes) -> Result<bool> {
    let (vl, vm) = (nu2(s.n)?, nu2(s.k)?);
    let low = vl.min(vm);
    let dims = nu2(s.d + 1)?.min(nu2(s.e + 1)?);
    Ok(vl != vm && 0 < low && low < dims)
}
