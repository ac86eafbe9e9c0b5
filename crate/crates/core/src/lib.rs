//! Exact counting of colored graph partitions.
//!
//! A k-colored partition of a graph splits its vertices into connected,
//! colored blocks with neighboring blocks colored differently. Such
//! partitions are in bijection with vertex k-colorings (take the maximal
//! monochromatic components), so the block-count distribution of a graph is
//! `sum over colorings of y^(number of monochromatic components)`.
//!
//! Three independent routes compute it:
//!
//! * [`oracle`]: brute-force enumeration of every coloring;
//! * [`closed_forms`]: closed formulas for trees, cycles, complete and
//!   complete bipartite graphs and complete prisms;
//! * [`transfer`]: a profile transfer-matrix engine for `G x P_n`, plus the
//!   reduced color-class system for `K_m x P_n`.
//!
//! [`fixtures`] holds published generating functions for cross-checking.

pub mod algebra;
pub mod closed_forms;
pub mod error;
pub mod fixtures;
pub mod graphs;
pub mod oracle;
pub mod transfer;
mod union_find;

pub use algebra::{BigRational, LaurentPoly, RationalGF};
pub use error::{Error, Result};
pub use graphs::Graph;
pub use oracle::BlockDistribution;
