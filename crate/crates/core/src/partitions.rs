//! Young diagrams and the diagram combinatorics behind the Pieri rules.
//!
//! A [`Partition`] doubles as a dominant weight of `gl(n)` in standard
//! coordinates. Strip additions enumerate the constituents of
//! `L(μ) ⊗ S^d(ℂ^n)` and `L(ν) ⊗ Λ^k(ℂ^n)`; the completion searches find a
//! strip that lands on a diagram with even columns (symplectic-spherical)
//! or even rows (orthogonal-spherical).

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts trailing zeros; rejects sequences that increase.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(join(&parts)));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The single-row partition `(m)`.
    pub fn row(m: u32) -> Self {
        Self::from_sorted(vec![m])
    }

    /// The single-column partition `1^k`.
    pub fn column(k: usize) -> Self {
        Self::from_sorted(vec![1; k])
    }

    fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_(i+1)` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Self { parts }
    }

    pub fn has_even_rows(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    pub fn has_even_columns(&self) -> bool {
        self.conjugate().has_even_rows()
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Componentwise sum; the highest weight of the Cartan component of
    /// `L(self) ⊗ L(other)`.
    pub fn sum(&self, other: &Partition) -> Self {
        let len = self.len().max(other.len());
        Self::from_sorted((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// `(row, column)` of every box, 0-based, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// Representative of the same `sl(n)` weight with at most `n - 1`
    /// parts: subtracts `λ_n` from every part.
    pub fn canonical_sl(&self, n: usize) -> Result<Self> {
        if self.len() > n {
            return Err(Error::TooManyParts {
                parts: self.len(),
                max: n,
            });
        }
        if n == 0 || self.len() < n {
            return Ok(self.clone());
        }
        let last = self.parts[n - 1];
        Ok(Self::from_sorted(self.parts.iter().map(|p| p - last).collect()))
    }
}

fn join(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition is the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

/// Every `ρ ⊇ λ` with at most `max_rows` parts such that `ρ/λ` is a
/// horizontal strip of `d` boxes (`ρ_i ≥ λ_i ≥ ρ_(i+1)`).
///
/// Output is duplicate-free, in decreasing lexicographic order. Empty when
/// `λ` itself has more than `max_rows` parts.
pub fn add_horizontal_strips(lambda: &Partition, d: u32, max_rows: usize) -> Vec<Partition> {
    if lambda.len() > max_rows {
        return Vec::new();
    }
    // Only rows 0..=len(λ) can grow.
    let rows = (lambda.len() + 1).min(max_rows);
    let mut out = Vec::new();
    let mut current: Vec<u32> = (0..rows).map(|i| lambda.part(i)).collect();
    fill_horizontal(lambda, 0, d, &mut current, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill_horizontal(
    lambda: &Partition,
    row: usize,
    remaining: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == current.len() {
        if remaining == 0 {
            let mut parts = current.clone();
            parts.extend_from_slice(&lambda.parts[current.len().min(lambda.len())..]);
            out.push(Partition::from_sorted(parts));
        }
        return;
    }
    let base = lambda.part(row);
    let room = if row == 0 {
        remaining
    } else {
        (lambda.part(row - 1) - base).min(remaining)
    };
    for add in (0..=room).rev() {
        current[row] = base + add;
        fill_horizontal(lambda, row + 1, remaining - add, current, out);
    }
    current[row] = base;
}

/// Every `ρ ⊇ λ` with at most `max_rows` parts such that `ρ/λ` is a
/// vertical strip of `k` boxes (`0 ≤ ρ_i - λ_i ≤ 1`).
///
/// Same ordering and emptiness conventions as [`add_horizontal_strips`].
pub fn add_vertical_strips(lambda: &Partition, k: u32, max_rows: usize) -> Vec<Partition> {
    if lambda.len() > max_rows {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(max_rows);
    fill_vertical(lambda, max_rows, k, &mut current, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill_vertical(
    lambda: &Partition,
    max_rows: usize,
    remaining: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    let row = current.len();
    if remaining as usize > max_rows - row {
        return;
    }
    if remaining == 0 {
        let mut parts = current.clone();
        parts.extend((row..lambda.len()).map(|i| lambda.part(i)));
        out.push(Partition::from_sorted(parts));
        return;
    }
    let base = lambda.part(row);
    for add in [1, 0] {
        let value = base + add;
        if row > 0 && value > current[row - 1] {
            continue;
        }
        current.push(value);
        fill_vertical(lambda, max_rows, remaining - add, current, out);
        current.pop();
    }
}

/// Complement of `λ` in the `λ_1 × n` rectangle, rotated:
/// `(λ_1 - λ_n, λ_1 - λ_(n-1), ..., λ_1 - λ_1)`. The highest weight of
/// `L(λ)*` as a `gl(n)` diagram.
pub fn dual_diagram(lambda: &Partition, n: usize) -> Result<Partition> {
    if lambda.len() > n {
        return Err(Error::TooManyParts {
            parts: lambda.len(),
            max: n,
        });
    }
    let top = lambda.part(0);
    Ok(Partition::from_sorted(
        (0..n).rev().map(|i| top - lambda.part(i)).collect(),
    ))
}

/// Smallest `d` such that adding a horizontal `d`-strip to the dual of `μ`
/// (within `n` rows) gives a diagram with even columns, and the first such
/// diagram. `n` must be even.
pub fn find_even_column_completion(mu: &Partition, n: usize) -> Result<(u32, Partition)> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidRank(n));
    }
    let dual = dual_diagram(mu, n)?;
    let bound = n as u32 * mu.part(0).max(1);
    for d in 0..=bound {
        if let Some(w) = add_horizontal_strips(&dual, d, n)
            .into_iter()
            .find(Partition::has_even_columns)
        {
            return Ok((d, w));
        }
    }
    Err(Error::NoCompletion(bound as usize))
}

/// Smallest `k` such that adding a vertical `k`-strip to the dual of `ν`
/// (within `n` rows) gives a diagram with even rows, and the first such
/// diagram. `n` must be odd.
pub fn find_even_row_completion(nu: &Partition, n: usize) -> Result<(u32, Partition)> {
    if n % 2 != 1 {
        return Err(Error::InvalidRank(n));
    }
    let dual = dual_diagram(nu, n)?;
    for k in 0..=n as u32 {
        if let Some(w) = add_vertical_strips(&dual, k, n)
            .into_iter()
            .find(Partition::has_even_rows)
        {
            return Ok((k, w));
        }
    }
    Err(Error::NoCompletion(n))
}

/// Partitions of `size` with at most `max_parts` parts, decreasing
/// lexicographic order.
pub fn partitions_of(size: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(remaining: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, max_parts, &mut Vec::new(), &mut out);
    out
}

/// All partitions with at most `max_boxes` boxes and `max_parts` parts,
/// by size and then decreasing lexicographic order.
pub fn partitions_up_to(max_boxes: u32, max_parts: usize) -> Vec<Partition> {
    (0..=max_boxes)
        .flat_map(|s| partitions_of(s, max_parts))
        .collect()
}
