//! Lattices of relation vectors and the geometry of Λ inside the simplex.

pub mod chart;
pub mod distribution;
pub mod hnf;
pub mod lattice;
pub mod lift;
pub mod polytope;
pub mod segment;

pub use chart::{chart, exp_map, log_map, rational_point, rational_point_on_lambda, ChartBasis};
pub use distribution::{equation_residual, lambda_membership, DistributionPoint};
pub use hnf::{hermite_basis, integer_kernel};
pub use lattice::{
    absolute_dimension, central_sublattice, difference_lattice, group_of_fractions_rank, IntegerLattice,
};
pub use lift::birch_lift;
pub use polytope::{project_simplex, Facet, ProjectedPolytope};
pub use segment::segment_root;
