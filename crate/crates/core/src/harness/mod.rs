//! Path-space verification and seeded simulation.

pub mod simulate;
pub mod verify;

pub use simulate::{exact_endpoint_law, sample_walk, simulate, SimulationStats, WalkSample};
pub use verify::{verify_central, verify_central_with, verify_shift, VerificationReport, Witness, DEFAULT_DEPTH};
