//! Compositions, descent sets, refinement order and partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An ordered sequence of positive integers.
///
/// The empty sequence is the unique composition of 0. Compositions are ordered
/// graded-lexicographically: first by size, then lexicographically on parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition {
    parts: Vec<usize>,
    size: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart(parts));
        }
        let size = parts.iter().sum();
        Ok(Composition { parts, size })
    }

    pub fn empty() -> Self {
        Composition::default()
    }

    /// The one-part composition `[n]` (empty when `n == 0`).
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Composition::empty()
        } else {
            Composition { parts: vec![n], size: n }
        }
    }

    /// The composition `[1,1,...,1]` of `n`.
    pub fn ones(n: usize) -> Self {
        Composition { parts: vec![1; n], size: n }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|α|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.size
    }

    /// `ℓ(α)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Partial sums `α_1, α_1+α_2, ...` strictly below `|α|`.
    pub fn descent_positions(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.parts.len().saturating_sub(1));
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Parses `"[a1,a2,...]"` with no spaces; `"[]"` is the empty composition.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseComposition(s.to_string());
        let inner = s
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(bad)?;
        if inner.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                tok.parse::<usize>().map_err(|_| bad())
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts).map_err(|_| bad())
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A subset of `{1, ..., n-1}`, in bijection with compositions of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentSet {
    n: usize,
    elements: Vec<usize>,
}

impl DescentSet {
    /// Builds a descent set, sorting and deduplicating `elements`.
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&e| e == 0 || e >= n) {
            return Err(Error::InvalidDescentSet { n, elements });
        }
        Ok(DescentSet { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The partition viewed as a composition.
    pub fn to_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
            size: self.size(),
        }
    }
}

/// All compositions of `n` in graded-lexicographic order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn go(remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>, n: usize) {
        if remaining == 0 {
            out.push(Composition {
                parts: prefix.clone(),
                size: n,
            });
            return;
        }
        for first in 1..=remaining {
            prefix.push(first);
            go(remaining - first, prefix, out, n);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << n.saturating_sub(1));
    go(n, &mut Vec::new(), &mut out, n);
    out
}

pub fn to_descent_set(alpha: &Composition) -> DescentSet {
    DescentSet {
        n: alpha.size(),
        elements: alpha.descent_positions(),
    }
}

pub fn from_descent_set(set: &DescentSet) -> Result<Composition> {
    if set.elements.iter().any(|&e| e == 0 || e >= set.n) || set.elements.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidDescentSet {
            n: set.n,
            elements: set.elements.clone(),
        });
    }
    if set.n == 0 {
        return Ok(Composition::empty());
    }
    let mut parts = Vec::with_capacity(set.elements.len() + 1);
    let mut last = 0;
    for &e in set.elements.iter().chain(std::iter::once(&set.n)) {
        parts.push(e - last);
        last = e;
    }
    Ok(Composition {
        parts,
        size: set.n,
    })
}

/// `α ≤ β` in refinement order, i.e. `S(β) ⊆ S(α)`.
pub fn refines(alpha: &Composition, beta: &Composition) -> Result<bool> {
    if alpha.size() != beta.size() {
        return Err(Error::IncomparableSize {
            left: alpha.clone(),
            right: beta.clone(),
        });
    }
    Ok(to_descent_set(beta).is_subset(&to_descent_set(alpha)))
}

pub fn sort_to_partition(alpha: &Composition) -> Partition {
    let mut parts = alpha.parts.clone();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition { parts }
}
