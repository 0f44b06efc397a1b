//! Exact computations on finite posets around the Greene-Kleitman theorem.
//!
//! The crate computes maximum k-families, k-norms of chain partitions and
//! (jointly) saturated chain partitions by exhaustive search, certifies
//! polyunsaturation pair by pair, and builds polyunsaturated posets with a
//! prescribed difference sequence, height, width and cardinality.
//!
//! ```
//! use polysat::construct::build_pj;
//! use polysat::kfamily::delta_sequence;
//!
//! let (p, _labels) = build_pj(3);
//! assert_eq!(delta_sequence(&p).unwrap().as_slice(), &[3, 3, 2, 1, 1]);
//! ```

pub mod bitset;
pub mod construct;
mod error;
pub mod graphdual;
pub mod io;
pub mod kfamily;
mod limits;
pub mod poset;
pub mod saturation;

pub use error::{Error, Result};
pub use limits::Limits;
pub use poset::{disjoint_union, Antichain, Chain, Poset};
