//! Integer partitions and Young-diagram cell statistics.
//!
//! A [`Partition`] is always stored in canonical form: weakly decreasing
//! positive parts with no trailing zeros. Every constructor that accepts
//! zero-padded input strips the padding, so equality is structural.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based: `row` counts from the top and `col`
/// from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any increase is rejected.
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        let len = parts.iter().take_while(|&&p| p > 0).count();
        Ok(Partition {
            parts: parts[..len].to_vec(),
        })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(a^count)`: a rectangle with `count` rows of length `a`.
    pub fn rectangle(a: usize, count: usize) -> Self {
        if a == 0 {
            return Partition::empty();
        }
        Partition {
            parts: alloc::vec![a; count],
        }
    }

    /// Sorts arbitrary nonnegative parts into canonical form.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `|λ|`
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Complement of the diagram inside the `k × λ₁` rectangle, i.e.
    /// `(λ₁ − λ_k, …, λ₁ − λ₂)`.
    pub fn complement(&self, k: usize) -> Result<Partition> {
        self.check_length(k)?;
        if self.is_empty() {
            return Ok(Partition::empty());
        }
        let top = self.part(1);
        let parts: Vec<usize> = (2..=k).rev().map(|i| top - self.part(i)).collect();
        Partition::new(&parts)
    }

    /// Removes the full columns of height `k`: returns `λ − (λ_k^k)` together
    /// with `λ_k`.
    pub fn tilde_reduce(&self, k: usize) -> Result<(Partition, usize)> {
        self.check_length(k)?;
        let shift = self.part(k);
        let parts: Vec<usize> = self.parts.iter().map(|p| p - shift).collect();
        Ok((Partition::new(&parts)?, shift))
    }

    /// Componentwise sum with zero padding.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        let parts: Vec<usize> = (1..=len).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// `b(λ) = Σ (i − 1) λ_i`
    pub fn b_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        let arm = self.part(cell.row) - cell.col;
        let leg = self.column_height(cell.col) - cell.row;
        Ok(arm + leg + 1)
    }

    pub fn content(&self, cell: Cell) -> Result<isize> {
        self.check_cell(cell)?;
        Ok(cell.col as isize - cell.row as isize)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Hook lengths of all cells in row-major order.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| (self.part(c.row) - c.col) + (conj.part(c.col) - c.row) + 1)
            .collect()
    }

    /// Contents of all cells in row-major order.
    pub fn contents(&self) -> Vec<isize> {
        self.cells()
            .map(|c| c.col as isize - c.row as isize)
            .collect()
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_weight(n: usize) -> Vec<Partition> {
        Partition::bounded(n, n, usize::MAX)
    }

    /// Partitions of `n` with at most `max_len` parts, each at most `max_part`,
    /// in decreasing lexicographic order.
    pub fn bounded(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
        fn go(
            rest: usize,
            max_part: usize,
            slots: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                prefix.push(p);
                go(rest - p, p, slots - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    fn column_height(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    fn check_length(&self, k: usize) -> Result<()> {
        if self.length() > k {
            return Err(Error::LengthExceedsK {
                length: self.length(),
                k,
            });
        }
        Ok(())
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if !self.contains(cell) {
            return Err(Error::CellOutsideDiagram {
                row: cell.row,
                col: cell.col,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
