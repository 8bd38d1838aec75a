//! Homology ranks of connected sums of products of two spheres.
//!
//! Every space here has torsion-free homology, so ranks carry all the
//! information. Factors have dimension at least 2, which keeps every space
//! simply connected and orientable.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{invalid, Error, Result};

/// `S^m x S^n` with `2 <= m <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SphereProduct {
    m: usize,
    n: usize,
}

impl SphereProduct {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        let (m, n) = if a <= b { (a, b) } else { (b, a) };
        if m < 2 {
            return invalid(format!("sphere factors need dimension >= 2, got S^{m}"));
        }
        Ok(Self { m, n })
    }

    pub fn factors(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }
}

impl fmt::Display for SphereProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}xS{}", self.m, self.n)
    }
}

/// `#_{k_1} T_1 # #_{k_2} T_2 # ...`, kept merged and sorted by factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConnectedSumSpec {
    summands: Vec<(usize, SphereProduct)>,
}

impl ConnectedSumSpec {
    pub fn new(summands: impl IntoIterator<Item = (usize, SphereProduct)>) -> Result<Self> {
        let mut merged: BTreeMap<SphereProduct, usize> = BTreeMap::new();
        for (k, t) in summands {
            if k == 0 {
                return invalid(format!("multiplicity of {t} must be positive"));
            }
            *merged.entry(t).or_default() += k;
        }
        let summands: Vec<(usize, SphereProduct)> = merged.into_iter().map(|(t, k)| (k, t)).collect();
        let Some(&(_, first)) = summands.first() else {
            return invalid("a connected sum needs at least one summand");
        };
        if let Some(&(_, other)) = summands.iter().find(|(_, t)| t.dim() != first.dim()) {
            return Err(Error::DimensionMismatch(first.dim(), other.dim()));
        }
        Ok(Self { summands })
    }

    pub fn summands(&self) -> &[(usize, SphereProduct)] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.summands[0].1.dim()
    }
}

impl fmt::Display for ConnectedSumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = self.summands.iter().map(|(k, t)| format!("{k}*{t}"));
        f.write_str(&parts.join(" # "))
    }
}

fn parse_summand(raw: &str) -> Result<(usize, SphereProduct)> {
    let err = |msg: &str| Error::Parse {
        line: 1,
        msg: format!("{msg} in summand {raw:?}"),
    };
    let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    let (k, body) = match s.split_once('*') {
        Some((k, body)) => (k.parse::<usize>().map_err(|_| err("bad multiplicity"))?, body),
        None => (1, s.as_str()),
    };
    let (a, b) = body
        .split_once(['x', 'X'])
        .ok_or_else(|| err("expected S<m>xS<n>"))?;
    let sphere = |t: &str| -> Result<usize> {
        t.strip_prefix(['S', 's'])
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| err("expected a sphere S<dim>"))
    };
    let t = SphereProduct::new(sphere(a)?, sphere(b)?)?;
    Ok((k, t))
}

/// Grammar: summands joined by `#`, each `k*S<m>xS<n>` with `k*` optional; whitespace is ignored.
impl FromStr for ConnectedSumSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let summands = s.split('#').map(parse_summand).collect::<Result<Vec<_>>>()?;
        Self::new(summands)
    }
}

/// Homology ranks by degree for a space of top dimension `top`. Zero ranks are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRanks {
    ranks: BTreeMap<usize, u64>,
    top: usize,
}

impl GradedRanks {
    pub fn new(ranks: impl IntoIterator<Item = (usize, u64)>, top: usize) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (k, r) in ranks {
            if k > top {
                return Err(Error::OutOfRange {
                    what: "degree",
                    value: k as i64,
                    lo: 0,
                    hi: top as i64,
                });
            }
            if r > 0 {
                *out.entry(k).or_default() += r;
            }
        }
        Ok(Self { ranks: out, top })
    }

    pub fn rank(&self, k: usize) -> u64 {
        self.ranks.get(&k).copied().unwrap_or(0)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn ranks(&self) -> &BTreeMap<usize, u64> {
        &self.ranks
    }

    /// Smallest positive degree with nonzero rank.
    pub fn connectivity_degree(&self) -> Option<usize> {
        self.ranks.keys().copied().find(|&k| k > 0)
    }
}

impl fmt::Display for GradedRanks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.ranks.iter().map(|(k, r)| format!("{k}:{r}")).join(", ");
        write!(f, "{{{body}}}")
    }
}

/// Homology of `S^m x S^n`; with `punctured`, of the complement of an open disk.
pub fn product_homology(t: SphereProduct, punctured: bool) -> GradedRanks {
    let mut ranks = vec![(0, 1), (t.m, 1), (t.n, 1)];
    if !punctured {
        ranks.push((t.dim(), 1));
    }
    GradedRanks::new(ranks, t.dim()).expect("degrees within [0, m + n]")
}

/// Each copy contributes its punctured middle homology; the sum keeps one bottom and one top class.
pub fn connected_sum_homology(spec: &ConnectedSumSpec) -> GradedRanks {
    let top = spec.dim();
    let mut ranks = vec![(0, 1), (top, 1)];
    for &(k, t) in spec.summands() {
        let piece = product_homology(t, true);
        ranks.extend(
            piece
                .ranks()
                .iter()
                .filter(|&(&deg, _)| deg > 0)
                .map(|(&deg, &r)| (deg, r * k as u64)),
        );
    }
    GradedRanks::new(ranks, top).expect("degrees within [0, top]")
}

/// `rank_k == rank_{D-k}` for every `k`.
pub fn poincare_check(g: &GradedRanks) -> bool {
    (0..=g.top).all(|k| g.rank(k) == g.rank(g.top - k))
}

pub fn euler_characteristic(g: &GradedRanks) -> i64 {
    g.ranks
        .iter()
        .map(|(&k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum()
}

/// Rank of `pi_q (x) Q` for a simply connected space with homology `g`.
///
/// With `r` the first positive degree of nonzero homology, rational homotopy
/// and rational homology agree through degree `2r - 2`; queries past that fail.
pub fn rational_homotopy_rank(g: &GradedRanks, q: usize) -> Result<u64> {
    if q == 0 {
        return invalid("homotopy degree must be positive");
    }
    let r = g
        .connectivity_degree()
        .ok_or_else(|| Error::InvalidInput("homology is concentrated in degree 0".into()))?;
    let limit = 2 * r - 2;
    if q > limit {
        return Err(Error::OutOfRange {
            what: "homotopy degree",
            value: q as i64,
            lo: 1,
            hi: limit as i64,
        });
    }
    Ok(g.rank(q))
}
