//! Link diagrams on closed surfaces.
//!
//! Diagrams are 4-valent signed rotation systems with an over-strand chosen at
//! every crossing. The crate traces faces and classifies the surface, checks
//! alternation and cellularity, removes nugatory crossings, decides obvious
//! primeness by enumerating every curve meeting the diagram twice, builds
//! orientation double covers, and combines the results into a hyperbolicity
//! certificate for the link complement in the thickened surface.

pub mod catalog;
pub mod certify;
pub mod diagram;
pub mod error;
pub mod format;
pub mod map;
pub mod prime;
pub mod report;
pub mod weave;

pub use error::{Error, Hypothesis, Result};
