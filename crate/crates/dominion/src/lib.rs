//! Exact domination analysis of 2-(v,k,λ) block designs.
//!
//! The crate constructs classical designs (projective and affine planes,
//! cyclic developments, complements, residuals, duals), builds their
//! bipartite incidence graphs, computes exact domination numbers with a
//! branch-and-bound solver, enumerates all minimum dominating sets, and
//! evaluates the closed-form bounds and γ relations that hold for such
//! designs — each one checked mechanically against solver ground truth.
//!
//! Module map:
//! - [`field`]: GF(p^e) arithmetic for plane coordinates.
//! - [`design`]: design construction, validation, transforms, file format.
//! - [`incidence`]: incidence graphs, pencils, L(P)/L̂(P), closures I_P,
//!   π(S), domination and neatness predicates.
//! - [`solver`]: exact γ, full enumeration, neatness classification, and an
//!   independent brute-force oracle.
//! - [`bounds`]: every closed-form bound, exact rationals, residual
//!   relations.
//! - [`cli`]: the command layer and the JSON run report.
//!
//! The `examples/` directory shows one runnable program per capability;
//! the `dominion` binary exposes `construct`, `gamma`, and `verify-paper`.

pub mod bitset;
pub mod bounds;
pub mod cli;
pub mod design;
pub mod field;
pub mod incidence;
pub mod solver;

pub use bitset::BitSet;
pub use design::{
    affine_plane, cyclic_design, projective_plane, Design, DesignError, DesignParams, PointSet,
};
pub use field::{Field, FieldElement};
pub use incidence::{IncidenceGraph, VertexSet};
pub use solver::{
    classify_neatness, enumerate_minimum_dominating_sets, epn_certified_mds,
    exhaustive_gamma_oracle, minimum_domination, GammaResult, NeatnessReport, SolverConfig,
    SolverError,
};
