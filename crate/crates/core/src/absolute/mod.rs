//! Description of the absolute: equations, strata, topology and characters.

pub mod character;
pub mod describe;
pub mod equations;
pub mod json;
pub mod strata;

pub use character::{character_from, scale_character, CharacterTable, ScaledCharacter};
pub use describe::{
    compare_quotient, compare_quotient_with, describe_absolute, presentation_digest, same_absolute,
    AbsoluteDescriptor, DescribeOptions, TopologyClaim,
};
pub use equations::{centrality_equations, first_violation, is_precentral, CentralityEquation};
pub use json::{descriptor_to_json, DescriptorDocument, EquationDoc, StratumDoc};
pub use strata::{strata, strata_with_cap, stratum_for_support, Stratum, MAX_STRATA_GENERATORS};
