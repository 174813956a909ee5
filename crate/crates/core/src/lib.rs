//! Exact combinatorics of perfect matchings in generalized Petersen graphs `P(n,2)`.
//!
//! The crate is organized around four layers:
//!
//! - [`graph`]: immutable graphs, the `P(n,k)` generator, bridges and
//!   component/parity queries.
//! - [`matchings`]: exhaustive perfect-matching enumeration, the two-type
//!   classification of `P(n,2)` matchings, cyclic chain words over `{A,B}` /
//!   `{C,D}` with an expression grammar, closed-form matching counts, and
//!   dihedral canonicalization.
//! - [`forcing`]: forcing-set decisions through the Kotzig unique-matching
//!   reduction, exact minimum forcing numbers via an implicit hitting-set
//!   loop over alternating cycles, disjoint-cycle packing, and forcing
//!   polynomials / spectra.
//! - [`constructions`]: the closed-form catalog for extremal forcing numbers,
//!   explicit extremal matchings by residue case, chain transformations, and
//!   a machine-checkable verification report against bundled reference data.

pub mod constructions;
pub mod error;
pub mod forcing;
pub mod graph;
pub mod matchings;

pub use error::Error;
pub use forcing::{
    forcing_number, forcing_polynomial, has_unique_pm, is_forcing_set, spectrum, ForcingPolynomial,
    ForcingSet, Spectrum, SweepBudget,
};
pub use graph::{build_generalized_petersen, EdgeId, Graph, VertexId};
pub use matchings::{ChainWord, MatchingCensus, MatchingType, PerfectMatching};

/// Convenient result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
