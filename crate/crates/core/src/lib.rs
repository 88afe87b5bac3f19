//! Exact moment polytopes, lattices and normal fans for the toric varieties
//! attached to trivalent graphs (trinion decompositions of a closed surface).
//!
//! The pipeline is: [`graph::TrivalentGraph`] → [`polytope::build_hrep`] →
//! [`polytope::enumerate_vertices`] → [`lattice::Lattice`] /
//! [`fan::normal_fan`] → [`delzant::delzant_check`]. Everything is computed
//! over the rationals; there is no floating point anywhere.

pub mod delzant;
pub mod error;
pub mod exactmath;
pub mod fan;
pub mod graph;
pub mod lattice;
mod par;
pub mod polytope;
pub mod report;

pub use error::{Error, Result};
pub use exactmath::{QMatrix, Rational};
pub use graph::{TrinionTriple, TrivalentGraph};
pub use polytope::{HPolytope, VPolytope};
