//! Exact checks relating total unimodularity of a hypergraph's incidence
//! matrix, the integer decomposition property of its cover polyhedra, and
//! the generation of its vertex cover algebras in degree one.
//!
//! Everything is exact: determinants use arbitrary precision integers,
//! polyhedron vertices are rationals in lowest terms, and monomial ideals are
//! handled through their minimal exponent vectors.

pub mod covers;
mod error;
pub mod hypergraph;
pub mod ideals;
pub mod linalg;
pub mod mengerian;
pub mod verify;

pub use covers::{
    algebra_generators_up_to, decompose, is_k_cover, is_standard_graded_up_to, minimal_k_covers,
    AlgebraGenerator, CoverVector, GradingReport,
};
pub use error::{Error, Result};
pub use hypergraph::{AlternatingChain, Hypergraph, WeightFunction};
pub use ideals::{
    corollary_points_check, ideal_of, symbolic_power, vertex_prime, CorollaryReport, Monomial,
    MonomialIdeal,
};
pub use linalg::{
    enumerate_vertices, fractional_vertex_search, is_integral_polyhedron, Integrality,
    IntegerMatrix, RationalPoint, TuVerdict, TuWitness, TU_SIZE_CAP,
};
pub use mengerian::{
    blocker_crosscheck, is_mengerian_up_to, max_packing_value, min_cover_value, Agreement,
    CrosscheckReport, MengerianFailure, MengerianReport,
};
pub use verify::{
    find_veronese_degree, verify_main_theorem, witness_from_fractional_vertex, ConverseOutcome,
    TheoremReport,
};
