//! Structural characterizations of k-chordal graphs.
//!
//! A graph is *k-chordal* when its longest induced cycle has at most `k`
//! vertices. This crate decides that property three ways and certifies each
//! answer:
//!
//! * [`chordality`] enumerates induced cycles exactly;
//! * [`simplicial`] builds k-simplicial elimination orderings;
//! * [`separators`] checks path lengths through minimal vertex separators.
//!
//! [`oracle`] cross-checks the three on exhaustive and random corpora.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use kchordal_core::simplicial::{k_simplicial_ordering, verify_ordering};
//! use kchordal_core::{chordality, Graph};
//!
//! let c5 = Graph::cycle(5);
//! let r = chordality(&c5);
//! assert_eq!(r.value, 5);
//! assert_eq!(r.witness.unwrap().vertices(), [0, 1, 2, 3, 4]);
//!
//! assert!(!k_simplicial_ordering(&c5, 4).is_certificate());
//! let cert = k_simplicial_ordering(&c5, 5);
//! let order = &cert.certificate().unwrap().order;
//! assert!(verify_ordering(&c5, order, 5).is_ok());
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod chordality;
pub mod graph;
pub mod oracle;
pub mod paths;
pub mod separators;
pub mod simplicial;

pub use bitset::VertexSet;
pub use chordality::{chordality, is_k_chordal, ChordalityResult, InducedCycle};
pub use graph::{Distance, Graph, GraphError, InducedSubgraph};
pub use paths::InducedPath;
