//! Indices and their combinatorial primitives.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of positive integers, possibly empty.
///
/// Ordering is lexicographic on the part sequence, which is the order every
/// enumeration and serialized output in this crate uses.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index(Vec<u32>);

impl Index {
    /// Largest component accepted by [`Index::new`] and the parser.
    pub const MAX_COMPONENT: u32 = 1_000_000;

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for &p in &parts {
            if p == 0 {
                return Err(Error::NonPositiveComponent(0));
            }
            if p > Self::MAX_COMPONENT {
                return Err(Error::ComponentTooLarge(p as u64));
            }
        }
        Ok(Index(parts))
    }

    /// Builds an index from parts already known to be positive.
    pub(crate) fn from_parts(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Index(parts)
    }

    /// `{1}^n`, the index of `n` ones.
    pub fn ones(n: usize) -> Self {
        Index(vec![1; n])
    }

    pub fn single(k: u32) -> Self {
        assert!(k >= 1, "index components are positive");
        Index(vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Empty, or last component at least 2.
    pub fn is_admissible(&self) -> bool {
        self.0.last().map_or(true, |&k| k >= 2)
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Number of trailing components equal to 1.
    pub fn trailing_ones(&self) -> usize {
        self.0.iter().rev().take_while(|&&k| k == 1).count()
    }

    /// `(k_{i+1}, ..., k_j)`.
    pub fn slice(&self, i: usize, j: usize) -> Result<Index> {
        if i > j || j > self.depth() {
            return Err(Error::SliceOutOfRange { start: i, end: j, depth: self.depth() });
        }
        Ok(Index(self.0[i..j].to_vec()))
    }

    /// `k_i = (k_1, ..., k_i)`. Panics if `i > depth`.
    pub fn prefix(&self, i: usize) -> Index {
        Index(self.0[..i].to_vec())
    }

    /// `k^i = (k_{i+1}, ..., k_r)`. Panics if `i > depth`.
    pub fn suffix(&self, i: usize) -> Index {
        Index(self.0[i..].to_vec())
    }

    pub fn reversed(&self) -> Index {
        Index(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Index) -> Index {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Index(parts)
    }

    /// The index with `k` appended.
    pub fn pushed(&self, k: u32) -> Index {
        assert!(k >= 1, "index components are positive");
        let mut parts = self.0.clone();
        parts.push(k);
        Index(parts)
    }

    /// Splits off the last component.
    pub fn split_last(&self) -> Option<(Index, u32)> {
        let (&last, rest) = self.0.split_last()?;
        Some((Index(rest.to_vec()), last))
    }
}

impl fmt::Debug for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Renders the comma-separated text format, `""` for the empty index.
impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_index(s)
    }
}

/// Parses `"k1,k2,...,kr"`. Whitespace is ignored; empty text is the empty
/// index.
pub fn parse_index(text: &str) -> Result<Index> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Index::empty());
    }
    let mut parts = Vec::new();
    for piece in trimmed.split(',') {
        let piece = piece.trim();
        let value: i64 = piece
            .parse()
            .map_err(|_| Error::InvalidComponent(piece.to_string()))?;
        if value <= 0 {
            return Err(Error::NonPositiveComponent(value));
        }
        if value > Index::MAX_COMPONENT as i64 {
            return Err(Error::ComponentTooLarge(value as u64));
        }
        parts.push(value as u32);
    }
    Ok(Index(parts))
}

/// All indices of weight exactly `w`, in lexicographic order.
pub fn enumerate_indices(w: u32) -> Vec<Index> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    compositions(w, &mut current, &mut out);
    out
}

fn compositions(remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Index>) {
    if remaining == 0 {
        out.push(Index(current.clone()));
        return;
    }
    for first in 1..=remaining {
        current.push(first);
        compositions(remaining - first, current, out);
        current.pop();
    }
}

/// All indices of weight `w` and depth `r`, in lexicographic order.
pub fn enumerate_indices_of_depth(w: u32, r: usize) -> Vec<Index> {
    enumerate_indices(w).into_iter().filter(|k| k.depth() == r).collect()
}

/// All indices of weight at most `max_weight`, grouped by weight.
pub fn enumerate_up_to(max_weight: u32) -> Vec<Index> {
    (0..=max_weight).flat_map(enumerate_indices).collect()
}

/// A split `(k, a, l)` of an index around a distinguished component `a`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub k: Index,
    pub a: u32,
    pub l: Index,
}

impl Triple {
    pub fn weight(&self) -> u32 {
        self.k.weight() + self.a + self.l.weight()
    }

    /// The concatenation `(k, a, l)`.
    pub fn joined(&self) -> Index {
        self.k.pushed(self.a).concat(&self.l)
    }
}

/// All triples `(k, a, l)` with `|k| + a + |l| = w` and `a >= min_a`,
/// ordered by `a`, then `k`, then `l`.
pub fn enumerate_triples(w: u32, min_a: u32) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in min_a.max(1)..=w {
        let rest = w - a;
        for wk in 0..=rest {
            for k in enumerate_indices(wk) {
                for l in enumerate_indices(rest - wk) {
                    out.push(Triple { k: k.clone(), a, l });
                }
            }
        }
    }
    out
}
