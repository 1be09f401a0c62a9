//! Partitions, skew shapes, cells and hooks.
//!
//! Cells are 1-based `(row, col)` pairs, rows counted top-down. Partitions never
//! store trailing zeros.

use std::fmt;
use std::str::FromStr;

use crate::error::{HookError, Result};

/// A square `(row, col)` of a Young diagram, both coordinates 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }

    /// `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Errors if the sequence is not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(HookError::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for 1-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.part(c.row)
    }

    /// Cellwise inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Partition) -> bool {
        self.length() <= other.length()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &r) in self.parts.iter().enumerate() {
            for j in 1..=r {
                out.push(Cell { row: i + 1, col: j });
            }
        }
        out
    }

    /// `λ'`, with `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let w = self.part(1);
        let parts = (1..=w).map(|j| self.parts.iter().filter(|&&r| r >= j).count()).collect();
        Partition { parts }
    }

    /// `λ_i - i + λ'_j - j + 1`.
    pub fn hook(&self, c: Cell) -> Result<usize> {
        if !self.contains(c) {
            return Err(HookError::CellOutside(c, self.to_string()));
        }
        let conj_len = self.parts.iter().filter(|&&r| r >= c.col).count();
        Ok(self.part(c.row) + conj_len + 1 - c.row - c.col)
    }

    /// Hook lengths in row-major order.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .map(|c| self.part(c.row) + conj.part(c.col) + 1 - c.row - c.col)
            .collect()
    }

    /// `Σ (i-1) λ_i`.
    pub fn b_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &r)| i * r).sum()
    }

    /// `Σ_{(i,j)∈λ} (i+j-1) = b(λ) + b(λ') + |λ|`.
    pub fn s_stat(&self) -> usize {
        self.b_stat() + self.conjugate().b_stat() + self.size()
    }

    /// Parts padded with zeros to length `d` (at least the current length).
    pub fn padded(&self, d: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        if v.len() < d {
            v.resize(d, 0);
        }
        v
    }

    /// Outer corners addable to the diagram, in row order.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.length() + 1 {
            let j = self.part(i) + 1;
            if i == 1 || self.part(i - 1) >= j {
                out.push(Cell { row: i, col: j });
            }
        }
        out
    }

    /// Adds one cell to each listed row.
    fn with_rows_incremented(&self, rows: &[usize]) -> Partition {
        let max_row = rows.iter().copied().max().unwrap_or(0);
        let mut p = self.padded(max_row);
        for &r in rows {
            p[r - 1] += 1;
        }
        Partition { parts: p }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = HookError;

    /// Accepts `"4,4,2"`; the empty string or `"0"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| HookError::Parse(format!("bad part '{t}' in '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `λ/μ` with `μ ⊆ λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_subset_of(&outer) {
            return Err(HookError::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.outer.contains(c) && !self.inner.contains(c)
    }

    /// `{(i,j) : μ_i < j ≤ λ_i}` in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.outer.length() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push(Cell { row: i, col: j });
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = HookError;

    /// Accepts `"4,4,2/2,1"` or a straight `"4,4,2"`.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((a, b)) => SkewShape::new(a.parse()?, b.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// `(d-1, d-2, ..., 1)`; empty for `d ≤ 1`.
pub fn staircase(d: usize) -> Partition {
    Partition { parts: (1..d).rev().collect() }
}

/// `(n+1, n, ..., 1)`.
pub fn staircase_long(n: usize) -> Partition {
    Partition { parts: (1..=n + 1).rev().collect() }
}

/// True iff `μ ⊊ ν` and the cells of `ν/μ` lie in pairwise distinct rows and columns.
pub fn covers_rc(nu: &Partition, mu: &Partition) -> bool {
    if !mu.is_subset_of(nu) || nu == mu {
        return false;
    }
    // Distinct rows: each row grows by at most one. Distinct columns: the new
    // cell of row i+1 must not sit under the new cell of row i.
    for i in 1..=nu.length() {
        let grow = nu.part(i) - mu.part(i);
        if grow > 1 {
            return false;
        }
        if grow == 1 && i > 1 && nu.part(i - 1) - mu.part(i - 1) == 1 && mu.part(i - 1) == mu.part(i) {
            return false;
        }
    }
    true
}

/// All `ν` with `covers_rc(ν, μ)` and `ν ⊆ bound`.
pub fn rc_covers_within(mu: &Partition, bound: &Partition) -> Vec<Partition> {
    let candidates: Vec<usize> = mu
        .addable_cells()
        .into_iter()
        .filter(|c| bound.contains(*c))
        .map(|c| c.row)
        .collect();
    let mut out = Vec::new();
    // Addable corners are automatically in distinct rows and columns.
    for mask in 1u32..(1u32 << candidates.len()) {
        let rows: Vec<usize> = candidates
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &r)| r)
            .collect();
        out.push(mu.with_rows_incremented(&rows));
    }
    out.sort();
    out
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions `μ ⊆ λ`, sorted.
pub fn subpartitions(lam: &Partition) -> Vec<Partition> {
    fn rec(lam: &Partition, i: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > lam.length() {
            let mut p = cur.clone();
            while p.last() == Some(&0) {
                p.pop();
            }
            out.push(Partition { parts: p });
            return;
        }
        for v in 0..=prev.min(lam.part(i)) {
            cur.push(v);
            rec(lam, i + 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lam, 1, usize::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Every skew shape `λ/μ` with `1 ≤ |λ| ≤ max_size`, sorted.
pub fn skew_shapes_up_to(max_size: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        for lam in partitions_of(n) {
            for mu in subpartitions(&lam) {
                out.push(SkewShape { outer: lam.clone(), inner: mu });
            }
        }
    }
    out.sort();
    out
}

/// Every straight shape `λ` with `1 ≤ |λ| ≤ max_size`, sorted.
pub fn straight_shapes_up_to(max_size: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = (1..=max_size).flat_map(partitions_of).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,4,2").conjugate(), p("3,3,2,2"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("1,1,1").conjugate(), p("3"));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(p("2,2").hooks(), vec![3, 2, 2, 1]);
        assert_eq!(p("1").hook(Cell::new(1, 1)).unwrap(), 1);
        assert_eq!(p("4,4,2").hook(Cell::new(1, 1)).unwrap(), 6);
        assert!(p("2,2").hook(Cell::new(3, 1)).is_err());
    }

    #[test]
    fn b_and_s_statistics() {
        assert_eq!((p("4,4,2").b_stat(), p("4,4,2").s_stat()), (8, 31));
        assert_eq!((p("").b_stat(), p("").s_stat()), (0, 0));
        assert_eq!((p("2,2").b_stat(), p("2,2").s_stat()), (2, 8));
    }

    #[test]
    fn staircases() {
        assert_eq!(staircase(4), p("3,2,1"));
        assert_eq!(staircase(1), p(""));
        assert_eq!(staircase(0), p(""));
        assert_eq!(staircase_long(2), p("3,2,1"));
    }

    #[test]
    fn covers_examples() {
        assert!(covers_rc(&p("2,1"), &p("1")));
        assert!(!covers_rc(&p("2"), &p("")));
        assert!(!covers_rc(&p("1"), &p("1")));
        assert!(covers_rc(&p("1"), &p("")));
        assert!(!covers_rc(&p("2,2"), &p("2")));
    }

    #[test]
    fn parsing() {
        let sh: SkewShape = "4,4,2/2,1".parse().unwrap();
        assert_eq!(sh.size(), 7);
        assert_eq!(sh.to_string(), "4,4,2/2,1");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,1/3".parse::<SkewShape>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!(p("3,0,0"), p("3"));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(subpartitions(&p("2,2")).len(), 6);
    }

    #[test]
    fn rc_covers_of_empty() {
        assert_eq!(rc_covers_within(&p(""), &p("2,2")), vec![p("1")]);
        assert_eq!(rc_covers_within(&p("1"), &p("2,2")), vec![p("1,1"), p("2"), p("2,1")]);
    }
}
