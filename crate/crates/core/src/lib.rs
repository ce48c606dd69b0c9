//! Uniform hypergraphs, their flag complexes, and the combinatorics of
//! linear resolutions: Hochster Betti numbers, Cohen–Macaulay tests, and
//! recognizers for chordal and generalized chordal hypergraphs.

pub mod betti;
pub mod chordality;
pub mod cli;
pub mod complex;
pub mod error;
pub mod homology;
pub mod hypergraph;
pub mod io;
pub mod vertex_set;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use homology::{FieldSpec, HomologyDims};
pub use hypergraph::Hypergraph;
pub use vertex_set::VertexSet;

/// Resource limits for the exponential routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set an exhaustive enumeration will accept.
    pub cap: usize,
    /// Worker threads for subset enumeration.
    pub workers: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { cap: 24, workers: 1 }
    }
}

impl Limits {
    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::CapExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }
}
