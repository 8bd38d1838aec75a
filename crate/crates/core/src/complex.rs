//! Simplicial complexes on `[1, m]` and their Stanley-Reisner face rings.
//!
//! Every complex is normalized to its list of minimal non-faces, which is the
//! generating set of the face ring's ideal. Generator variables have degree 2.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{invalid, Error, Result};
use crate::gale::{self, subsets_of_size, CyclicParams, VertexSubset};

/// Where a complex came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexSource {
    Cyclic(CyclicParams),
    Polygon(usize),
    Facets,
    NonFaces,
}

impl fmt::Display for ComplexSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexSource::Cyclic(p) => write!(f, "boundary complex of cyclic polytope {p}"),
            ComplexSource::Polygon(m) => write!(f, "boundary of the dual of the {m}-gon"),
            ComplexSource::Facets => f.write_str("explicit facet list"),
            ComplexSource::NonFaces => f.write_str("explicit non-face list"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: usize,
    /// Largest number of vertices of a face.
    max_face: usize,
    nonfaces: Vec<VertexSubset>,
    source: ComplexSource,
}

/// Enumerates the minimal non-faces of size `2..=max_card` for a downward
/// closed face predicate on `[1, m]` in which every vertex is a face.
/// Output is in lexicographic order.
fn minimal_nonfaces_by(
    m: usize,
    max_card: usize,
    is_face: impl Fn(&VertexSubset) -> bool,
) -> Vec<VertexSubset> {
    (2..=max_card.min(m))
        .flat_map(|k| subsets_of_size(m, k))
        .filter(|s| !is_face(s) && s.facets().all(|t| is_face(&t)))
        .sorted()
        .collect()
}

impl SimplicialComplex {
    /// Boundary complex of the cyclic polytope; its face ring is the face ring of the dual simple polytope.
    pub fn from_cyclic(p: CyclicParams) -> Self {
        let nonfaces = minimal_nonfaces_by(p.n(), p.d() + 1, |s| {
            gale::is_face(s, p).expect("subsets drawn from [1, n]")
        });
        Self {
            m: p.n(),
            max_face: p.d(),
            nonfaces,
            source: ComplexSource::Cyclic(p),
        }
    }

    /// The `m`-cycle: faces are vertices and the edges `{i, i+1 mod m}`.
    pub fn from_polygon(m: usize) -> Result<Self> {
        if m < 4 {
            return Err(Error::OutOfRange {
                what: "polygon size",
                value: m as i64,
                lo: 4,
                hi: i64::MAX,
            });
        }
        let adjacent = |i: usize, j: usize| j - i == 1 || (i == 1 && j == m);
        let nonfaces = subsets_of_size(m, 2)
            .filter(|s| !adjacent(s.as_slice()[0], s.as_slice()[1]))
            .collect();
        Ok(Self {
            m,
            max_face: 2,
            nonfaces,
            source: ComplexSource::Polygon(m),
        })
    }

    /// Boundary of the `(m-1)`-simplex: the only non-face is `[1, m]`.
    pub fn simplex_boundary(m: usize) -> Result<Self> {
        if m < 2 {
            return invalid("simplex boundary needs at least 2 vertices");
        }
        Self::from_nonfaces(m, vec![VertexSubset::from_sorted((1..=m).collect())])
    }

    pub fn from_facets(m: usize, facets: Vec<VertexSubset>) -> Result<Self> {
        if m == 0 {
            return invalid("a complex needs at least one vertex");
        }
        for f in &facets {
            f.check_bound(m)?;
        }
        let mut covered = vec![false; m + 1];
        for &i in facets.iter().flat_map(|f| f.as_slice()) {
            covered[i] = true;
        }
        if let Some(ghost) = (1..=m).find(|&i| !covered[i]) {
            return invalid(format!("vertex {ghost} lies in no facet"));
        }
        let max_face = facets.iter().map(VertexSubset::len).max().unwrap_or(0);
        let nonfaces = minimal_nonfaces_by(m, max_face + 1, |s| facets.iter().any(|f| s.is_subset_of(f)));
        Ok(Self {
            m,
            max_face,
            nonfaces,
            source: ComplexSource::Facets,
        })
    }

    /// Complex whose faces are the sets containing none of `nonfaces`.
    /// Non-minimal entries are discarded.
    pub fn from_nonfaces(m: usize, nonfaces: Vec<VertexSubset>) -> Result<Self> {
        if m == 0 {
            return invalid("a complex needs at least one vertex");
        }
        for s in &nonfaces {
            s.check_bound(m)?;
            match s.len() {
                0 => return invalid("the empty set cannot be a non-face"),
                1 => return invalid(format!("vertex {} is declared a non-face", s.as_slice()[0])),
                _ => {}
            }
        }
        let mut minimal: Vec<VertexSubset> = nonfaces
            .iter()
            .filter(|s| !nonfaces.iter().any(|t| t != *s && t.is_subset_of(s)))
            .cloned()
            .collect();
        minimal.sort();
        minimal.dedup();

        // Grow faces level by level until none survive.
        let is_face = |s: &VertexSubset| !minimal.iter().any(|g| g.is_subset_of(s));
        let mut level: Vec<VertexSubset> = subsets_of_size(m, 1).collect();
        let mut max_face = 1;
        loop {
            let next: Vec<VertexSubset> = level
                .iter()
                .flat_map(|f| {
                    let top = f.max().unwrap_or(0);
                    (top + 1..=m).map(move |v| {
                        let mut w = f.as_slice().to_vec();
                        w.push(v);
                        VertexSubset::from_sorted(w)
                    })
                })
                .filter(|s| is_face(s))
                .collect();
            if next.is_empty() {
                break;
            }
            max_face += 1;
            level = next;
        }
        Ok(Self {
            m,
            max_face,
            nonfaces: minimal,
            source: ComplexSource::NonFaces,
        })
    }

    /// Parses the plain-text complex format:
    ///
    /// ```text
    /// vertices 5
    /// facets            (or: nonfaces)
    /// 1 2
    /// 2 3
    /// ```
    ///
    /// Blank lines and text after `#` are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_err = |line: usize, msg: String| Error::Parse { line, msg };

        let (ln, header) = lines.next().ok_or_else(|| parse_err(1, "empty complex file".into()))?;
        let m: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["vertices", count] => count
                .parse()
                .map_err(|_| parse_err(ln, format!("bad vertex count {count:?}")))?,
            _ => return Err(parse_err(ln, "expected `vertices <m>`".into())),
        };
        let (ln, kind) = lines
            .next()
            .ok_or_else(|| parse_err(ln + 1, "expected `facets` or `nonfaces`".into()))?;
        let facets = match kind {
            "facets" => true,
            "nonfaces" => false,
            other => return Err(parse_err(ln, format!("expected `facets` or `nonfaces`, got {other:?}"))),
        };
        let mut sets = Vec::new();
        for (ln, line) in lines {
            let members = line
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| parse_err(ln, format!("bad vertex {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let set = VertexSubset::new(members, m).map_err(|e| parse_err(ln, e.to_string()))?;
            sets.push(set);
        }
        if facets {
            Self::from_facets(m, sets)
        } else {
            Self::from_nonfaces(m, sets)
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    /// `dim K = max face size - 1`.
    pub fn dim(&self) -> usize {
        self.max_face - 1
    }

    pub fn source(&self) -> &ComplexSource {
        &self.source
    }

    pub fn is_face(&self, s: &VertexSubset) -> bool {
        s.max().is_none_or(|top| top <= self.m) && !self.nonfaces.iter().any(|g| g.is_subset_of(s))
    }

    /// Faces with exactly `k` vertices, lexicographically.
    pub fn faces_of_size(&self, k: usize) -> Vec<VertexSubset> {
        if k > self.max_face {
            return Vec::new();
        }
        subsets_of_size(self.m, k).filter(|s| self.is_face(s)).collect()
    }

    /// `(f_0, f_1, ..., f_dim)`: numbers of faces with 1, 2, ... vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        (1..=self.max_face).map(|k| self.faces_of_size(k).len()).collect()
    }
}

/// The minimal non-faces of `k` in canonical order.
pub fn minimal_nonfaces(k: &SimplicialComplex) -> &[VertexSubset] {
    &k.nonfaces
}

/// A squarefree monomial `v_{i_1} ... v_{i_r}` with each variable of degree 2.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquarefreeMonomial {
    support: VertexSubset,
}

impl SquarefreeMonomial {
    pub fn new(support: VertexSubset) -> Result<Self> {
        if support.is_empty() {
            return invalid("a squarefree monomial needs a nonempty support");
        }
        Ok(Self { support })
    }

    pub fn support(&self) -> &VertexSubset {
        &self.support
    }

    pub fn degree(&self) -> usize {
        2 * self.support.len()
    }

    pub fn divides(&self, other: &SquarefreeMonomial) -> bool {
        self.support.is_subset_of(&other.support)
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.support.as_slice() {
            write!(f, "v{i}")?;
        }
        Ok(())
    }
}

/// `Z[v_1, ..., v_m] / I` with `I` given by its minimal squarefree generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRingPresentation {
    m: usize,
    generators: Vec<SquarefreeMonomial>,
}

impl FaceRingPresentation {
    /// Builds a presentation from arbitrary generators; they are sorted and must be pairwise incomparable.
    pub fn new(m: usize, mut generators: Vec<SquarefreeMonomial>) -> Result<Self> {
        for g in &generators {
            g.support().check_bound(m)?;
        }
        generators.sort();
        generators.dedup();
        for (a, b) in generators.iter().tuple_combinations() {
            if a.divides(b) || b.divides(a) {
                return invalid(format!("generators {a} and {b} are comparable under divisibility"));
            }
        }
        Ok(Self { m, generators })
    }

    pub fn variable_count(&self) -> usize {
        self.m
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    /// `|I|`, the number of minimal generators.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    /// True for the full simplex, whose ideal is zero.
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Generator degree -> number of generators of that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        self.generators.iter().map(SquarefreeMonomial::degree).counts().into_iter().collect()
    }
}

pub fn face_ring(k: &SimplicialComplex) -> FaceRingPresentation {
    let generators = k
        .nonfaces
        .iter()
        .map(|s| SquarefreeMonomial { support: s.clone() })
        .collect();
    FaceRingPresentation { m: k.m, generators }
}
