//! Rational homotopy comparisons between moment-angle complexes of cyclic
//! polytopes and connected sums of products of spheres.
//!
//! The pipeline runs: cyclic polytope faces ([`gale`]) -> Stanley-Reisner
//! ideal ([`complex`]) -> minimal relation degree ([`syzygy`]) -> wedge of
//! spheres and its Hilton-Milnor splitting ([`hilton`]) -> comparison with the
//! homology of a connected sum ([`manifold`], [`report`]).

pub mod complex;
pub mod error;
pub mod gale;
pub mod hilton;
pub mod manifold;
pub mod report;
pub mod syzygy;

pub use complex::{face_ring, minimal_nonfaces, FaceRingPresentation, SimplicialComplex, SquarefreeMonomial};
pub use error::{Error, Result};
pub use gale::{CyclicParams, VertexSubset};
pub use hilton::{Count, SphereSpectrum, WedgeModel};
pub use manifold::{ConnectedSumSpec, GradedRanks, SphereProduct};
pub use report::{Verdict, VerdictReport};
pub use syzygy::{min_relation_degree, RelationAmongRelations};

/// Sphere multiplicities in machine words.
pub type Spectrum = SphereSpectrum<u64>;
/// Sphere multiplicities without overflow, for large weights.
pub type ExactSpectrum = SphereSpectrum<num_bigint::BigUint>;
pub type Model = WedgeModel<u64>;
pub type ExactModel = WedgeModel<num_bigint::BigUint>;
