//! Combinatorics of cyclic polytopes `C(n, d)`.
//!
//! Vertices are the indices `1..=n` in the order of their parameters on the
//! moment curve. No coordinates are ever computed: the face structure of a
//! cyclic polytope depends only on that order.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Parameters of a cyclic polytope with `n` vertices in dimension `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicParams {
    n: usize,
    d: usize,
}

impl CyclicParams {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if d < 2 {
            return invalid(format!("cyclic polytope dimension must be at least 2, got d = {d}"));
        }
        if n < d + 1 {
            return invalid(format!("C(n, d) needs n >= d + 1, got n = {n}, d = {d}"));
        }
        Ok(Self { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }
}

impl fmt::Display for CyclicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({},{})", self.n, self.d)
    }
}

/// A strictly increasing set of 1-based vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    /// Builds a subset of `[1, n]`. Members may be given in any order but must be distinct.
    pub fn new(members: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return invalid(format!("vertex {} listed twice", w[0]));
        }
        if let Some(&bad) = v.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::OutOfRange {
                what: "vertex",
                value: bad as i64,
                lo: 1,
                hi: n as i64,
            });
        }
        Ok(Self(v))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Caller guarantees `members` is strictly increasing and 1-based.
    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.first().is_none_or(|&i| i >= 1));
        Self(members)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_subset_of(&self, other: &VertexSubset) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|x| it.any(|y| y == x))
    }

    pub fn union(&self, other: &VertexSubset) -> VertexSubset {
        let v = self.0.iter().merge(other.0.iter()).dedup().copied().collect();
        Self(v)
    }

    pub fn difference(&self, other: &VertexSubset) -> VertexSubset {
        Self(self.0.iter().copied().filter(|&i| !other.contains(i)).collect())
    }

    /// Subsets obtained by deleting exactly one member.
    pub fn facets(&self) -> impl Iterator<Item = VertexSubset> + '_ {
        (0..self.0.len()).map(move |skip| {
            Self(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect(),
            )
        })
    }

    pub(crate) fn check_bound(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(top) if top > n => Err(Error::OutOfRange {
                what: "vertex",
                value: top as i64,
                lo: 1,
                hi: n as i64,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// All `k`-subsets of `[1, n]` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSubset> {
    (1..=n).combinations(k).map(VertexSubset::from_sorted)
}

/// A maximal run `[start, end]` of consecutive indices inside a vertex subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    pub start: usize,
    pub end: usize,
    /// The run avoids both the first and the last vertex.
    pub proper: bool,
    pub odd: bool,
}

impl Component {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Splits `x` into its maximal contiguous runs, in increasing order.
pub fn components(x: &VertexSubset, n: usize) -> Result<Vec<Component>> {
    x.check_bound(n)?;
    let mut out = Vec::new();
    let mut members = x.as_slice().iter().copied().peekable();
    while let Some(start) = members.next() {
        let mut end = start;
        while members.peek() == Some(&(end + 1)) {
            end = members.next().unwrap();
        }
        out.push(Component {
            start,
            end,
            proper: start != 1 && end != n,
            odd: (end - start + 1) % 2 == 1,
        });
    }
    Ok(out)
}

fn proper_odd_count(x: &VertexSubset, n: usize) -> usize {
    // Bound already checked by the callers.
    components(x, n)
        .expect("subset within bounds")
        .iter()
        .filter(|c| c.proper && c.odd)
        .count()
}

/// Face test for the boundary complex of `C(n, d)`.
///
/// `x` spans a face iff `|x| <= d` and `x` has at most `d - |x|` proper odd
/// components. The empty set is a face.
pub fn is_face(x: &VertexSubset, p: CyclicParams) -> Result<bool> {
    x.check_bound(p.n)?;
    if x.len() > p.d {
        return Ok(false);
    }
    Ok(proper_odd_count(x, p.n) <= p.d - x.len())
}

/// Every nonempty face with at most `max_card` vertices, ordered by cardinality
/// and then lexicographically.
pub fn enumerate_faces(p: CyclicParams, max_card: usize) -> Result<Vec<VertexSubset>> {
    if max_card > p.d {
        return Err(Error::OutOfRange {
            what: "max_card",
            value: max_card as i64,
            lo: 0,
            hi: p.d as i64,
        });
    }
    Ok((1..=max_card)
        .flat_map(|k| subsets_of_size(p.n, k))
        .filter(|x| x.len() <= p.d && proper_odd_count(x, p.n) <= p.d - x.len())
        .collect())
}

/// Whether every `q`-subset of the vertices spans a face.
pub fn is_q_neighborly(p: CyclicParams, q: usize) -> Result<bool> {
    if q < 1 {
        return invalid("neighborliness order q must be at least 1");
    }
    if q > p.n {
        return Ok(true);
    }
    if q > p.d {
        return Ok(false);
    }
    Ok(subsets_of_size(p.n, q).all(|x| proper_odd_count(&x, p.n) <= p.d - q))
}
