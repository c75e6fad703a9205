//! Signed graphs on small simple graphs, classified up to switching
//! isomorphism.
//!
//! A signature is a set of negative edges. Switching at a vertex set flips
//! the sign of every edge leaving it; two signatures are switching
//! equivalent when they differ by a cut, and switching isomorphic when an
//! automorphism of the graph carries one into the switching class of the
//! other.
//!
//! ```
//! use std::sync::Arc;
//! use signed_graphs::{classify::enumerate_isomorphism_classes, Graph};
//!
//! let k4 = Arc::new(Graph::complete(4).unwrap());
//! assert_eq!(enumerate_isomorphism_classes(k4, 1).unwrap().len(), 3);
//! ```

pub mod bits;
pub mod classify;
pub mod cli;
pub mod error;
pub mod graph;
pub mod reference;
pub mod signed;

pub use bits::{EdgeSet, VertexSet};
pub use error::{Error, Result};
pub use graph::{Cycle, Graph, Permutation, PermutationGroup};
pub use signed::{CycleSpectrum, Gf2Basis, Sign, Signature};
