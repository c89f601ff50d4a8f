//! Cospectral bipartite graph pairs from partitioned tensor products.
//!
//! Given 0/1 matrices `V` and `B`, the graphs with biadjacency `V⊗B` and
//! `V⊗Bᵀ` are compared exactly: characteristic polynomials of the adjacency
//! and of `D⁻¹A` (the normalized Laplacian up to `λ ↦ 1 − λ`), and isomorphism
//! via permutational equivalence of the factors or exhaustive search.

pub mod block;
pub mod charpoly;
pub mod construction;
pub mod error;
pub mod graph;
pub mod iso;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod search;
pub mod spectra;
pub mod text;

pub use construction::{construct_pair, ConstructedPair};
pub use error::{Error, Result};
pub use graph::BipartiteGraph;
pub use matrix::{QMatrix, ZMatrix};
pub use poly::QPoly;
