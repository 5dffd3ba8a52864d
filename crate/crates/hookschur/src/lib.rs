//! Exact combinatorics of hook Schur functors.
//!
//! The crate has four layers, each usable on its own:
//!
//! - [`partitions`]: integer partitions, conjugation, hooks, staircases, the
//!   inverse-triangular `delta` function, and the dominance order generalized
//!   across weights by exact scaling;
//! - [`schur`]: GL_e characters in the Schur basis with Littlewood-Richardson
//!   products, tensor powers, direct-sum branching, dimensions, and an
//!   independent monomial oracle for cross-checking the products;
//! - [`vanishing`]: decision procedures for two cohomology-vanishing criteria
//!   on hook functors of ample (or `m`-ample) bundles, with full report
//!   generation;
//! - [`audit`]: a mechanical verifier for the integer bookkeeping of the
//!   spectral-sequence induction behind the second criterion, over parameter
//!   grids and in both induction modes.
//!
//! [`sweep`] runs deterministic parameter sweeps over the last two layers and
//! [`cli`] exposes everything as a command line (`vanish`, `audit`, `schur`,
//! `dominance`, `ns`, `sweep`). The `examples/` directory has one runnable
//! program per capability; start there.
//!
//! Everything is exact integer arithmetic. There are no floats anywhere.

pub mod audit;
pub mod cli;
pub mod guards;
pub mod partitions;
pub mod schur;
pub mod sweep;
pub mod vanishing;

pub use guards::Guards;
pub use partitions::{
    delta, dominates, hook_partition, staircase_partition, Dominance, HookIndex, Partition,
    PartitionError,
};
pub use schur::{
    branch_direct_sum, dimension, dominance_spot_check, line_summand_multiplicity, lr_product,
    one_dim_multiplicity, oracle_product_monomial, tensor_power, SchurError, SchurVector,
};
pub use vanishing::{evaluate, VanishingQuery, VanishingReport};
