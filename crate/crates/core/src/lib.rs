//! Bivariegated graphs and line graphs.
//!
//! A graph on `2n` vertices is bivariegated (2-variegated) when its vertices
//! split into two sets of size `n` such that every vertex has exactly one
//! neighbour on the opposite side. This crate decides the property with
//! checkable certificates, solves the graph equations `L(G) = B` and
//! `L(B1) = B2`, characterizes the degree sequences of bivariegated line
//! graphs constructively, and verifies the spectrum of the complete
//! bivariegated line graph in exact arithmetic.
//!
//! Everything is exhaustive and intended for desk-scale graphs (up to about
//! 16 vertices for the enumerating searches). The [`enumeration`] and
//! [`scan`] modules run the stated properties against every small graph.

pub mod bivariegation;
pub mod cycles;
pub mod degseq;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod line_graph;
pub mod matching;
pub mod matrix;
pub mod scan;
pub mod spectra;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use bivariegation::{
    bivariegation_certificate, is_bivariegated, BivariegationCertificate, PathDecomposition,
};
pub use error::{Error, Result};
pub use graph::{Cycle, Edge, EdgeSet, Family, Graph};
pub use line_graph::{krausz_partition, line_graph, KrauszPartition, LineGraphResult};
pub use matrix::Matrix;

/// Exact integer matrices, used for every spectral identity.
pub type IntMatrix = Matrix<BigInt>;
/// Exact rational matrices.
pub type RatMatrix = Matrix<BigRational>;
/// Machine-integer matrices; fine while entries stay small.
pub type SmallIntMatrix = Matrix<i64>;

/// Resource limits for the exponential searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of simple cycles a single enumeration may produce.
    pub cycle_cap: usize,
    /// Maximum order of any intermediate iterated line graph.
    pub max_line_order: usize,
    /// Maximum iteration count for iterated line graphs.
    pub max_iterations: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cycle_cap: cycles::DEFAULT_CYCLE_CAP,
            max_line_order: 4096,
            max_iterations: 64,
        }
    }
}
