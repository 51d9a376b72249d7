//! Exact tools for 3-uniform Turán problems around Berge cycles.
//!
//! The crate is `no_std` (with `alloc`). The default `std` feature adds
//! multi-threaded search and wall-clock budgets.
//!
//! Modules:
//! - [`graph`] and [`hypergraph`]: value types and pair-degree (shadow) data.
//! - [`detect`]: witness-producing detectors for cycles, paths, theta graphs
//!   and Berge cycles.
//! - [`constructions`]: lower-bound constructions.
//! - [`decompose`]: the pair-multiplicity decomposition of a triple system,
//!   derandomized colorings and the triangle-count lemma.
//! - [`bounds`]: closed-form Turán bounds with composable inner terms.
//! - [`search`]: branch-and-bound for small extremal numbers, plus a
//!   brute-force oracle.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod constructions;
pub mod decompose;
pub mod detect;
mod error;
pub mod graph;
pub mod hypergraph;
mod matching;
pub mod search;
pub mod set;

pub use error::{Error, Result};
pub use graph::{BipartiteGraph, Graph};
pub use hypergraph::{BergeCycleWitness, Pair, PairDegreeMap, TripleSystem};
