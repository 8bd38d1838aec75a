//! Relations among relations between generators of a squarefree monomial ideal.
//!
//! A relation `g_i * u - g_j * u' = 0` in the polynomial ring forces both
//! sides to be a common multiple of `g_i` and `g_j`; the cheapest one is the
//! lcm. The minimal relation degree is therefore a minimum over generator pairs.

use std::fmt;

use itertools::Itertools;

use crate::complex::{FaceRingPresentation, SquarefreeMonomial};
use crate::error::{invalid, Error, Result};

pub fn lcm_support(a: &SquarefreeMonomial, b: &SquarefreeMonomial) -> SquarefreeMonomial {
    SquarefreeMonomial::new(a.support().union(b.support())).expect("union of nonempty supports")
}

/// `generator(i) * multiplier_i - generator(j) * multiplier_j = 0`, indices into the
/// presentation's generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationAmongRelations {
    pub i: usize,
    pub j: usize,
    pub multiplier_i: SquarefreeMonomial,
    pub multiplier_j: SquarefreeMonomial,
    pub degree: usize,
}

impl RelationAmongRelations {
    /// Checks that both sides are the same squarefree monomial with distinct multipliers.
    pub fn new(
        ring: &FaceRingPresentation,
        i: usize,
        multiplier_i: SquarefreeMonomial,
        j: usize,
        multiplier_j: SquarefreeMonomial,
    ) -> Result<Self> {
        let gens = ring.generators();
        let (gi, gj) = match (gens.get(i), gens.get(j)) {
            (Some(a), Some(b)) if i != j => (a, b),
            _ => return invalid(format!("need two distinct generator indices below {}, got {i} and {j}", gens.len())),
        };
        if multiplier_i == multiplier_j {
            return invalid("the two multipliers must differ");
        }
        let lhs = lcm_support(gi, &multiplier_i);
        let rhs = lcm_support(gj, &multiplier_j);
        let squarefree = gi.support().len() + multiplier_i.support().len() == lhs.support().len()
            && gj.support().len() + multiplier_j.support().len() == rhs.support().len();
        if !squarefree || lhs != rhs {
            return invalid(format!(
                "{gi}*{multiplier_i} and {gj}*{multiplier_j} are not the same squarefree monomial"
            ));
        }
        Ok(Self {
            i,
            j,
            multiplier_i,
            multiplier_j,
            degree: lhs.degree(),
        })
    }

    /// The common monomial both sides evaluate to.
    pub fn monomial(&self, ring: &FaceRingPresentation) -> SquarefreeMonomial {
        lcm_support(&ring.generators()[self.i], &self.multiplier_i)
    }

    pub fn display<'a>(&'a self, ring: &'a FaceRingPresentation) -> impl fmt::Display + 'a {
        DisplayRelation { rel: self, ring }
    }
}

struct DisplayRelation<'a> {
    rel: &'a RelationAmongRelations,
    ring: &'a FaceRingPresentation,
}

impl fmt::Display for DisplayRelation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.ring.generators();
        write!(
            f,
            "({})*{} - ({})*{}",
            g[self.rel.i], self.rel.multiplier_i, g[self.rel.j], self.rel.multiplier_j
        )
    }
}

/// The smallest-degree relation among relations, ties broken by the
/// lexicographically first generator pair.
pub fn min_relation_degree(ring: &FaceRingPresentation) -> Result<RelationAmongRelations> {
    let gens = ring.generators();
    if gens.len() < 2 {
        return Err(Error::NoRelations(gens.len()));
    }
    let (i, j) = (0..gens.len())
        .tuple_combinations()
        .min_by_key(|&(i, j)| (gens[i].support().union(gens[j].support()).len(), i, j))
        .expect("at least one pair");
    let lcm = lcm_support(&gens[i], &gens[j]);
    let quotient = |g: &SquarefreeMonomial| {
        SquarefreeMonomial::new(lcm.support().difference(g.support()))
            .expect("distinct minimal generators do not divide each other")
    };
    let rel = RelationAmongRelations {
        i,
        j,
        multiplier_i: quotient(&gens[i]),
        multiplier_j: quotient(&gens[j]),
        degree: lcm.degree(),
    };
    debug_assert_ne!(rel.multiplier_i, rel.multiplier_j);
    Ok(rel)
}
