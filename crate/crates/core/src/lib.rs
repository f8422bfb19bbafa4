//! Exact Tutte-polynomial evaluations, coset weight enumerators and
//! parity/eulerian correlation statistics of multigraphs.
//!
//! Every identity is checked by computing both sides independently: one side
//! by exhaustive enumeration over edge subsets, flows or orientations, the
//! other through the Tutte polynomial. All arithmetic is exact (`BigRational`
//! and the cyclotomic field Q(ζ₁₂)); floating point appears only in corpus
//! drawing coordinates and Monte Carlo estimates.

pub mod bias;
pub mod corpus;
pub mod cubic;
pub mod cyclespace;
pub mod cyclotomic;
pub mod embedding;
pub mod enumerators;
pub mod error;
pub mod flows;
pub mod graph;
pub mod montecarlo;
pub mod orientations;
pub mod report;
pub mod tutte;

pub use cyclespace::{CycleSpace, EdgeSubset};
pub use cyclotomic::{Cyc12, Rational};
pub use error::{Error, Result};
pub use graph::{parse_edge_list, MultiGraph, RankProfile, MAX_ENUM_EDGES};
pub use report::Check;
pub use tutte::BivariatePoly;
