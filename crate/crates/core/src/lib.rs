//! Exact computation of optimal and `t`-restricted optimal pebbling numbers.
//!
//! The crate decides solvability of pebbling configurations (with replayable
//! move certificates), finds the minimum weight of a solvable configuration
//! under a per-vertex cap, enumerates and counts every optimal configuration,
//! and computes the companion invariants used to cross-check the results:
//! domination and Roman domination numbers, automorphism groups and the
//! distinguishing number.
//!
//! ```
//! use pebbling_core::graph::{named_alkane, AlkaneName};
//! use pebbling_core::optimal::{restricted_optimal_number, SearchOptions};
//!
//! let butane = named_alkane(AlkaneName::Butane);
//! let result = restricted_optimal_number(&butane, 2, &SearchOptions::default()).unwrap();
//! assert_eq!((result.value, result.count), (5, 8));
//! ```

pub mod domination;
pub mod families;
pub mod graph;
pub mod optimal;
pub mod pebbling;
pub mod symmetry;
