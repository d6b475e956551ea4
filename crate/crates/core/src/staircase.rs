//! Staircase descriptors `⟨h || v⟩` and the isomorphism families built
//! from them.
//!
//! A descriptor lists step widths `w₁, …, w_r` and row-block heights
//! `h₁, …, h_r` plus a trailing slack `h_{r+1}`. Row block `i` has `h_i`
//! rows of length `w₁ + ⋯ + w_{r+1−i}`, and the ambient dimension is
//! `d + 1 = h₁ + ⋯ + h_r + slack`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::plethysm::{gl_isomorphic, sl_isomorphic, PolySource, SLInstance};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StaircaseDescriptor {
    steps: Vec<(usize, usize)>,
    slack: usize,
}

impl StaircaseDescriptor {
    /// `steps` are `(width, height)` pairs.
    pub fn new(steps: Vec<(usize, usize)>, slack: usize) -> Self {
        StaircaseDescriptor { steps, slack }
    }

    /// `⟨widths || heights⟩`, where the last height is the slack.
    pub fn from_widths_heights(widths: &[usize], heights: &[usize]) -> Result<Self> {
        if heights.len() != widths.len() + 1 {
            return Err(Error::ShapeMismatch);
        }
        let steps = widths
            .iter()
            .copied()
            .zip(heights.iter().copied())
            .collect();
        Ok(StaircaseDescriptor {
            steps,
            slack: heights[widths.len()],
        })
    }

    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    pub fn slack(&self) -> usize {
        self.slack
    }

    pub fn widths(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.0).collect()
    }

    /// Heights followed by the slack.
    pub fn heights_with_slack(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.1).chain([self.slack]).collect()
    }

    /// `d = Σ heights + slack − 1`
    pub fn dimension(&self) -> Result<usize> {
        let rows: usize = self.steps.iter().map(|s| s.1).sum::<usize>() + self.slack;
        rows.checked_sub(1).ok_or(Error::EmptyDiagram)
    }

    /// The partition in canonical form, with zero-width and zero-height
    /// blocks merged away.
    pub fn to_instance(&self) -> Result<SLInstance> {
        let d = self.dimension()?;
        let r = self.steps.len();
        let mut prefix = Vec::with_capacity(r + 1);
        prefix.push(0usize);
        for (w, _) in &self.steps {
            prefix.push(prefix.last().unwrap() + w);
        }
        let mut rows = Vec::new();
        for (i, &(_, h)) in self.steps.iter().enumerate() {
            rows.extend(core::iter::repeat_n(prefix[r - i], h));
        }
        SLInstance::new(Partition::new(&rows)?, d)
    }

    /// An equivalent descriptor with no zero widths and no zero heights
    /// among the steps (the slack may still be zero).
    pub fn merge_zeros(&self) -> StaircaseDescriptor {
        let mut widths = self.widths();
        let mut heights = self.heights_with_slack();
        loop {
            let r = widths.len();
            // width j feeds blocks 1..=r+1−j; when it is zero, blocks r+1−j
            // and r+2−j have equal row length
            if let Some(j) = widths.iter().position(|&w| w == 0) {
                let block = r - j - 1;
                heights[block] += heights[block + 1];
                heights.remove(block + 1);
                widths.remove(j);
                continue;
            }
            // an empty block i separates widths r+1−i and r+2−i
            if let Some(i) = heights[..r].iter().position(|&h| h == 0) {
                let j = r - 1 - i;
                if j + 1 < r {
                    widths[j + 1] += widths[j];
                }
                widths.remove(j);
                heights.remove(i);
                continue;
            }
            break;
        }
        StaircaseDescriptor::from_widths_heights(&widths, &heights).expect("lengths kept in step")
    }

    /// `⟨h⃖ || v⃖⟩`: widths reversed, heights-with-slack reversed. Realizes the
    /// dual module.
    pub fn reverse(&self) -> StaircaseDescriptor {
        let mut widths = self.widths();
        widths.reverse();
        let mut heights = self.heights_with_slack();
        heights.reverse();
        StaircaseDescriptor::from_widths_heights(&widths, &heights).expect("lengths preserved")
    }
}

/// Whether the `y` sequence has the same length as `x` or one more.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MainShape {
    /// `t = s`
    Balanced,
    /// `t = s + 1`
    Extended,
}

impl MainShape {
    pub fn of(x: &[usize], y: &[usize]) -> Result<Self> {
        match y.len().checked_sub(x.len()) {
            Some(0) => Ok(MainShape::Balanced),
            Some(1) => Ok(MainShape::Extended),
            _ => Err(Error::ShapeMismatch),
        }
    }
}

/// The square `[A, B, C, D]`: `A = ⟨x u y || z x v y⟩`, `B` swaps `u ↔ v`,
/// `C` and `D` are the reversals of `A` and `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainFamily {
    pub u: usize,
    pub v: usize,
    pub descriptors: [StaircaseDescriptor; 4],
    pub instances: [SLInstance; 4],
}

pub fn main_family(x: &[usize], y: &[usize], u: usize, v: usize, z: usize) -> Result<MainFamily> {
    MainShape::of(x, y)?;
    let build = |u: usize, v: usize| {
        let widths: Vec<usize> = x
            .iter()
            .copied()
            .chain([u])
            .chain(y.iter().copied())
            .collect();
        let heights: Vec<usize> = [z]
            .into_iter()
            .chain(x.iter().copied())
            .chain([v])
            .chain(y.iter().copied())
            .collect();
        StaircaseDescriptor::from_widths_heights(&widths, &heights)
    };
    let a = build(u, v)?;
    let b = build(v, u)?;
    let c = a.reverse();
    let d = b.reverse();
    let instances = [
        a.to_instance()?,
        b.to_instance()?,
        c.to_instance()?,
        d.to_instance()?,
    ];
    Ok(MainFamily {
        u,
        v,
        descriptors: [a, b, c, d],
        instances,
    })
}

/// `Σ x_i y_j` over `1 ≤ i ≤ s`, `1 ≤ j ≤ t` with `i + j ≤ t`.
fn staircase_cross_sum(x: &[usize], y: &[usize]) -> usize {
    let t = y.len();
    let mut total = 0;
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            if (i + 1) + (j + 1) <= t {
                total += xi * yj;
            }
        }
    }
    total
}

/// Sufficient condition for the first row `A ≃ B` to hold over GL(2, C):
/// `z(z − 1) = S + |x|(u + v)` (plus `uv` when `t = s + 1`), where
/// `S = |x|² + 2 Σ_{i+j≤t} x_i y_j` is the part of `|λ_A|` not involving
/// `z`, `u` or `v`.
pub fn main_gl_condition(
    x: &[usize],
    y: &[usize],
    u: usize,
    v: usize,
    z: usize,
    shape: MainShape,
) -> Result<bool> {
    if MainShape::of(x, y)? != shape {
        return Err(Error::ShapeMismatch);
    }
    let sx: usize = x.iter().sum();
    let s = sx * sx + 2 * staircase_cross_sum(x, y);
    let mut rhs = s + sx * (u + v);
    if shape == MainShape::Extended {
        rhs += u * v;
    }
    Ok(z * z.saturating_sub(1) == rhs)
}

/// Which of the pairs `(A, C)`, `(B, D)` and `(C, D)` fail to be
/// GL-isomorphic under the minimal lifts `δ = (d, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GlNegative {
    pub left_column_fails: bool,
    pub right_column_fails: bool,
    pub second_row_fails: bool,
}

impl GlNegative {
    pub fn holds(&self) -> bool {
        self.left_column_fails && self.right_column_fails && self.second_row_fails
    }
}

pub fn main_gl_negative<S: PolySource>(src: &S, family: &MainFamily) -> Result<GlNegative> {
    let [a, b, c, d] = &family.instances;
    let fails = |p: &SLInstance, q: &SLInstance| -> Result<bool> {
        Ok(!gl_isomorphic(src, &p.lift(), &q.lift())?)
    };
    Ok(GlNegative {
        left_column_fails: fails(a, c)?,
        right_column_fails: fails(b, d)?,
        second_row_fails: fails(c, d)?,
    })
}

fn repeat(value: usize, count: usize) -> impl Iterator<Item = usize> {
    core::iter::repeat_n(value, count)
}

fn descriptor<W, H>(widths: W, heights: H) -> StaircaseDescriptor
where
    W: IntoIterator<Item = usize>,
    H: IntoIterator<Item = usize>,
{
    let widths: Vec<usize> = widths.into_iter().collect();
    let heights: Vec<usize> = heights.into_iter().collect();
    StaircaseDescriptor::from_widths_heights(&widths, &heights)
        .expect("family shapes are consistent")
}

/// One row of family I:
/// `⟨a^s b^{s+1} || a^{s+1} u b^s⟩, ⟨a^s u b^s || a^{s+1} b^{s+1}⟩, ⟨a^{s+1} b^s || a^s u b^{s+1}⟩`.
fn corollary_i_row(s: usize, u: usize, a: usize, b: usize) -> [StaircaseDescriptor; 3] {
    [
        descriptor(
            repeat(a, s).chain(repeat(b, s + 1)),
            repeat(a, s + 1).chain([u]).chain(repeat(b, s)),
        ),
        descriptor(
            repeat(a, s).chain([u]).chain(repeat(b, s)),
            repeat(a, s + 1).chain(repeat(b, s + 1)),
        ),
        descriptor(
            repeat(a, s + 1).chain(repeat(b, s)),
            repeat(a, s).chain([u]).chain(repeat(b, s + 1)),
        ),
    ]
}

/// One row of family II:
/// `⟨a^s u b^{s+1} || a^{s+2} b^{s+1}⟩, ⟨a^{s+1} b^{s+1} || a^{s+1} u b^{s+1}⟩, ⟨a^{s+1} u b^s || a^{s+1} b^{s+2}⟩`.
fn corollary_ii_row(s: usize, u: usize, a: usize, b: usize) -> [StaircaseDescriptor; 3] {
    [
        descriptor(
            repeat(a, s).chain([u]).chain(repeat(b, s + 1)),
            repeat(a, s + 2).chain(repeat(b, s + 1)),
        ),
        descriptor(
            repeat(a, s + 1).chain(repeat(b, s + 1)),
            repeat(a, s + 1).chain([u]).chain(repeat(b, s + 1)),
        ),
        descriptor(
            repeat(a, s + 1).chain([u]).chain(repeat(b, s)),
            repeat(a, s + 1).chain(repeat(b, s + 2)),
        ),
    ]
}

fn six(
    top: [StaircaseDescriptor; 3],
    bottom: [StaircaseDescriptor; 3],
) -> Vec<StaircaseDescriptor> {
    top.into_iter().chain(bottom).collect()
}

/// Family I: top row with `(z, v)`, bottom row with the roles of `z` and `v`
/// exchanged. For `s = 0` this is the six-fold rectangle symmetry.
pub fn corollary_i_family(s: usize, u: usize, v: usize, z: usize) -> Vec<StaircaseDescriptor> {
    six(corollary_i_row(s, u, z, v), corollary_i_row(s, u, v, z))
}

/// Family II, arranged like family I.
pub fn corollary_ii_family(s: usize, u: usize, v: usize, z: usize) -> Vec<StaircaseDescriptor> {
    six(corollary_ii_row(s, u, z, v), corollary_ii_row(s, u, v, z))
}

pub fn to_instances(descriptors: &[StaircaseDescriptor]) -> Result<Vec<SLInstance>> {
    descriptors
        .iter()
        .map(StaircaseDescriptor::to_instance)
        .collect()
}

/// True when every instance is SL-isomorphic to every other.
pub fn verify_pairwise<S: PolySource>(src: &S, instances: &[SLInstance]) -> Result<bool> {
    for (i, a) in instances.iter().enumerate() {
        for b in &instances[i + 1..] {
            if !sl_isomorphic(src, a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Index pairs `(i, j)`, `i < j`, that are GL-isomorphic under minimal lifts.
pub fn gl_pairs<S: PolySource>(src: &S, instances: &[SLInstance]) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for (i, a) in instances.iter().enumerate() {
        for (j, b) in instances.iter().enumerate().skip(i + 1) {
            if gl_isomorphic(src, &a.lift(), &b.lift())? {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}
