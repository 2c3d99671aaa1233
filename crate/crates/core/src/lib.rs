//! Exact edge metric dimension of simple undirected graphs, graph products
//! and the structural quantities used by closed-form results about them.
//!
//! The edge metric dimension `edim(G)` is the size of a smallest nonempty
//! vertex set `S` such that any two distinct edges differ in their distance
//! to some vertex of `S`, where the distance from edge `uv` to `w` is
//! `min(d(u, w), d(v, w))`.

pub mod bitset;
pub mod distance;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hitting;
pub mod io;
pub mod products;
pub mod solver;
pub mod structure;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use solver::{edim_exact, edim_exact_with, EdimResult, Method, SolverOptions};
