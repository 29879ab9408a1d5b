//! Symbolic toolkit for the quantum symmetry algebra of a finite directed graph.
//!
//! Given a graph G on n vertices, [`presentation::graph_presentation`] builds the
//! universal unital *-algebra on n² generators X\[i,j\] (a "magic unitary" whose
//! rows and columns are partitions of unity) subject to the edge relations that
//! make the coaction preserve G. Everything downstream is exact: coefficients are
//! arbitrary-precision rationals and every verdict states whether it is certified
//! or merely evidence at a degree bound.
//!
//! The crate is organised around a degree-truncated two-sided noncommutative
//! Groebner engine ([`gbasis`]) used by:
//!
//! - [`hopf`]: coproduct / counit / antipode descent checks on the quotient,
//! - [`autgroup`]: the classical automorphism group by exhaustive search,
//! - [`reps`]: exact matrix representations, commutator witnesses, and the
//!   one-dimensional characters attached to classical automorphisms,
//! - [`presentation`]: generator maps between presentations with reduction
//!   certificates (used for the built-in 8-generator projection presentation).
//!
//! ```
//! use qgs_core::graph::{builtin_graph, GraphFamily};
//! use qgs_core::presentation::graph_presentation;
//! use qgs_core::gbasis::{compute_gb, GbOptions};
//! use alloc::sync::Arc;
//! # extern crate alloc;
//!
//! let g = builtin_graph(GraphFamily::Cycle, 3).unwrap();
//! let p = Arc::new(graph_presentation(&g));
//! let gb = compute_gb(&p, &GbOptions::default()).unwrap();
//! let census = gb.normal_word_census(gb.degree_bound()).unwrap();
//! assert_eq!(census.cumulative, 3); // functions on Z/3
//! ```
//!
//! No floats, no randomness, no global state: identical inputs give identical
//! outputs, byte for byte.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod autgroup;
pub mod gbasis;
pub mod graph;
pub mod hopf;
pub mod ncpoly;
pub mod presentation;
pub mod rat;
pub mod reps;

pub use rat::Rat;
