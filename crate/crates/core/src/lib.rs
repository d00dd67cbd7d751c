//! Ergodic central measures on paths of Cayley graphs of finitely presented
//! commutative semigroups.
//!
//! A presentation is completed to a rewrite system, its equal-length
//! relation pairs give monomial equations on the simplex of generator
//! distributions, and the solution set (the absolute) is described by
//! lattices, a chart of its main part and a stratification of the rest.

pub mod absolute;
pub mod error;
pub mod harness;
pub mod latgeo;
pub mod presentation;
pub mod rational;
pub mod wordcalc;

pub use absolute::{
    centrality_equations, character_from, compare_quotient, describe_absolute, is_precentral, scale_character,
    AbsoluteDescriptor, CentralityEquation, CharacterTable, DescribeOptions, DescriptorDocument, Stratum,
    TopologyClaim,
};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use harness::{simulate, verify_central, verify_shift, SimulationStats, VerificationReport, WalkSample};
pub use latgeo::{
    birch_lift, lambda_membership, project_simplex, segment_root, ChartBasis, DistributionPoint, IntegerLattice,
    ProjectedPolytope,
};
pub use presentation::{parse_presentation, ExponentVector, GeneratorSet, Presentation, RelationPair, SemigroupClass};
pub use rational::{parse_rational, Rational};
pub use wordcalc::{
    central_pairs_exact, complete, CentralPairSet, Limits, MonomialOrder, RewriteSystem,
};
