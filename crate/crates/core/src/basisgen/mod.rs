//! Markov bases for the S_n toric ideal by fiber connectivity, with the
//! degree-two classification and the combinatorics behind the degree bound.

mod basis;
mod degree2;
mod fiber;
mod file;
mod orbits;
mod theory;
mod verify;

pub use basis::{
    compute_markov_basis, compute_markov_basis_with, expand_classes, norm_threshold, BasisOptions,
    DegreeSummary, MarkovBasis, MoveClass,
};
pub use degree2::{count_classes, d2_count, degree2_moves};
pub use fiber::{enumerate_fiber, fiber_components, FiberGraph, MoveIndex};
pub use file::{render_classes, BasisFile, BASIS_SCHEMA};
pub use orbits::{
    count_squares, enumerate_square_orbits, next_square_orbits, sample_square_orbits, square_orbits_up_to,
};
pub use theory::{
    agreement_matrix, degree_bound, derangement_graph, is_connected, AgreementMatrix, DerangementGraph,
};
pub use verify::{verify_basis, verify_moves_exhaustive, VerifyReport};
