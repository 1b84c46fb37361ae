//! Invariants of links in the 3-torus computed from combinatorial diagrams.
//!
//! A diagram records each link component as a cyclic sequence of events
//! (over/under crossings, punctures of the identified side walls and
//! floor/ceiling vertices). From it the crate builds a presentation of the
//! fundamental group of the complement, the first homology group, and
//! Alexander and twisted Alexander polynomials via Fox calculus. A move
//! engine rewrites diagrams by generalized Reidemeister and vertex moves so
//! that invariance can be exercised.

pub mod algebra;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod fox;
pub mod invariants;
pub mod moves;
pub mod presentation;

pub use error::{Error, Result};
