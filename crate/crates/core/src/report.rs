//! End-to-end comparison of a moment-angle complex against a connected sum of
//! sphere products by rational homotopy ranks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::complex::{face_ring, SimplicialComplex};
use crate::error::{Error, Result};
use crate::gale::CyclicParams;
use crate::hilton::borel_model;
use crate::manifold::{
    connected_sum_homology, euler_characteristic, poincare_check, rational_homotopy_rank, ConnectedSumSpec,
};
use crate::syzygy::min_relation_degree;
use crate::Model;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NotEquivalent,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::NotEquivalent => "NOT_EQUIVALENT",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSection {
    pub complex: String,
    pub manifold: String,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSection {
    pub variables: usize,
    pub generator_count: usize,
    pub generators: Vec<String>,
    pub degree_histogram: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSection {
    pub degree: u64,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeSection {
    /// Sphere dimension -> number of wedge summands of that dimension.
    pub wedge_spheres: BTreeMap<u64, u64>,
    /// Sphere dimension -> multiplicity in the loop-space splitting, up to `q_max`.
    pub spectrum: BTreeMap<u64, u64>,
    pub q_max: u64,
    pub degree_two_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldSection {
    pub spec: String,
    pub dimension: usize,
    pub homology: BTreeMap<usize, u64>,
    pub poincare_duality: bool,
    pub euler_characteristic: i64,
    pub hurewicz_limit: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRow {
    pub q: u64,
    pub wedge: u64,
    pub manifold: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonSection {
    /// Degree the verdict rests on: the requested one, or the first discriminating one.
    pub q: Option<u64>,
    pub admissible: [u64; 2],
    pub ranks: Vec<RankRow>,
    pub notes: Vec<String>,
}

impl ComparisonSection {
    pub fn row(&self, q: u64) -> Option<&RankRow> {
        self.ranks.iter().find(|r| r.q == q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub input: InputSection,
    pub ideal: IdealSection,
    pub rmin: RelationSection,
    pub wedge: WedgeSection,
    pub manifold: ManifoldSection,
    pub comparison: ComparisonSection,
    pub verdict: Verdict,
}

impl VerdictReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Process exit status for the verdict.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::NotEquivalent => 0,
            Verdict::Inconclusive => 2,
        }
    }
}

pub const INCONCLUSIVE_NOTE: &str =
    "equal ranks in the admissible degrees do not show that the spaces are homotopy equivalent";

/// Runs the full pipeline and compares ranks in degree `q`, or scans every
/// admissible degree upward from 3 when `q` is `None`.
pub fn verdict(
    descriptor: &str,
    complex: &SimplicialComplex,
    target: &ConnectedSumSpec,
    q: Option<u64>,
) -> Result<VerdictReport> {
    let ring = face_ring(complex);
    let rel = min_relation_degree(&ring)?;
    let model: Model = borel_model(&ring, rel.degree as u64)?;

    let homology = connected_sum_homology(target);
    let r = homology
        .connectivity_degree()
        .expect("connected sums of sphere products have middle homology") as u64;
    let hurewicz_limit = 2 * r - 2;
    let hi = model.q_max.min(hurewicz_limit);

    if let Some(q) = q {
        if q < 3 || q > hi {
            return Err(Error::ComparisonRange {
                q,
                q_max: model.q_max,
                hurewicz_limit,
            });
        }
    }

    let ranks = (3..=hi)
        .map(|q| {
            Ok(RankRow {
                q,
                wedge: model.rational_rank(q)?,
                manifold: rational_homotopy_rank(&homology, q as usize)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let differs = |row: &&RankRow| row.wedge != row.manifold;
    let decisive = match q {
        Some(q) => ranks.iter().find(|r| r.q == q).filter(differs),
        None => ranks.iter().find(differs),
    };
    let (verdict, at, mut notes) = match decisive {
        Some(row) => (
            Verdict::NotEquivalent,
            Some(row.q),
            vec![format!(
                "rank of pi_{} (x) Q differs: {} on the moment-angle side, {} on the connected-sum side",
                row.q, row.wedge, row.manifold
            )],
        ),
        None => (Verdict::Inconclusive, q, vec![INCONCLUSIVE_NOTE.to_string()]),
    };
    notes.push(format!(
        "wedge model valid for 3 <= q <= {} (relation degree {} minus 2); rational Hurewicz valid for q <= {}",
        model.q_max, rel.degree, hurewicz_limit
    ));

    let witness = rel.display(&ring).to_string();
    let wedge_spheres = model.sphere_dims.iter().fold(BTreeMap::new(), |mut acc, &d| {
        *acc.entry(d).or_insert(0u64) += 1;
        acc
    });

    Ok(VerdictReport {
        input: InputSection {
            complex: descriptor.to_string(),
            manifold: target.to_string(),
            notes: Vec::new(),
        },
        ideal: IdealSection {
            variables: ring.variable_count(),
            generator_count: ring.len(),
            generators: ring.generators().iter().map(ToString::to_string).collect(),
            degree_histogram: ring.degree_histogram(),
        },
        rmin: RelationSection {
            degree: rel.degree as u64,
            witness,
        },
        wedge: WedgeSection {
            wedge_spheres,
            spectrum: model.spectrum.entries().clone(),
            q_max: model.q_max,
            degree_two_rank: model.degree_two_rank(),
        },
        manifold: ManifoldSection {
            spec: target.to_string(),
            dimension: target.dim(),
            homology: homology.ranks().clone(),
            poincare_duality: poincare_check(&homology),
            euler_characteristic: euler_characteristic(&homology),
            hurewicz_limit,
        },
        comparison: ComparisonSection {
            q: at,
            admissible: [3, hi],
            ranks,
            notes,
        },
        verdict,
    })
}

pub const COUNTEREXAMPLE_TARGET: &str = "16*S5xS7 # 15*S6xS6";

/// The `C(8,4)` moment-angle complex against `(#16 S^5 x S^7) # (#15 S^6 x S^6)`.
pub fn counterexample() -> Result<VerdictReport> {
    let p = CyclicParams::new(8, 4)?;
    let complex = SimplicialComplex::from_cyclic(p);
    let target: ConnectedSumSpec = COUNTEREXAMPLE_TARGET.parse()?;
    let mut report = verdict("cyclic 8 4", &complex, &target, None)?;
    report.input.notes.push(
        "C(8,4) means 8 vertices in dimension 4; the same polytope is sometimes written C(4,8)".to_string(),
    );
    Ok(report)
}
