//! Degree sequences of triangular multigraphs.
//!
//! A multigraph is *triangular* when every edge of positive multiplicity has
//! both endpoints adjacent to some common third vertex. For `n >= 3` and a
//! descending sequence `d1 >= ... >= dn >= 4`, such a multigraph exists iff the
//! degree sum is even and `d1 <= sum_{i>=2} (di - 1)`. This crate decides that
//! condition and, when it holds, builds an explicit realization in linear time
//! ([`realize`]), together with a [`ConstructionCertificate`] that replays the
//! construction bit-for-bit.
//!
//! Independent checkers live next to the constructions:
//! [`Multigraph::check_triangular`], [`Multigraph::degree_sequence`], the
//! Erdős–Gallai test in [`sequence`], and the exhaustive search in [`oracle`]
//! for small inputs.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod construct;
pub mod multigraph;
pub mod oracle;
pub mod sequence;

pub use construct::{
    construct_cycle_square, construct_fan, construct_small_n, realize, replay, split_sequences,
    Branch, ConstructError, ConstructionCertificate, ConstructionParams, InternalFault,
    Precondition, Realization, SplitInfo, SplitSequences,
};
pub use multigraph::{GraphError, Multigraph, MultigraphBuilder, TriangularityReport};
pub use oracle::{
    exists_simple_realization, exists_simple_realization_with, exists_triangular_realization,
    exists_triangular_realization_with, proposition_census, proposition_census_with, CensusRow,
    OracleError, OracleLimits, OracleResult,
};
pub use sequence::{
    alternating_sum, canonicalize, check_erdos_gallai, check_triangular_conditions, strip_zeros,
    DegreeSequence, SequenceError, ValidationReport,
};
