//! Exact spectral analysis of the non-backtracking edge adjacency matrix
//! and the edge Laplacian of a simple undirected graph.
//!
//! For a graph with m edges, orient the edges and list the 2m directed
//! edges `e_1..e_m, e_1^-1..e_m^-1`. The edge adjacency matrix M has a 1
//! where one directed edge feeds another without immediately backtracking;
//! D is the diagonal matrix of its row sums (`deg(target) - 1` per dart);
//! the edge Laplacian is N = D - M. This crate constructs those matrices,
//! computes characteristic polynomials over the integers with a
//! division-free (Berkowitz) scheme, and mechanically checks the classical
//! identities they satisfy: the bipartiteness criterion via D + M, tree and
//! forest characterizations, closed-form spectra for regular and complete
//! bipartite graphs, block and line-graph identities, and divisibility of
//! the characteristic polynomial under the Kronecker double cover.
//!
//! Everything is exact: no floating point, no eigensolvers, no tolerances.
//! Spectra are handled as integer polynomial identities and integer root
//! multiplicities. The linear algebra is generic over the [`Scalar`]
//! integer trait; the `Int*` aliases below fix the default
//! arbitrary-precision instantiation.

pub mod charpoly;
pub mod edge_matrix;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod orient;
pub mod poly;
pub mod scalar;
pub mod spectrum;
pub mod theorems;

pub use num_bigint::BigInt;

pub use charpoly::charpoly;
pub use graph::{Bipartition, Graph, StructuralSummary};
pub use matrix::{Matrix, RationalVector};
pub use orient::{OrientedEdges, Strategy};
pub use poly::Poly;
pub use scalar::Scalar;
pub use spectrum::SpectrumForm;

/// Default arbitrary-precision matrix.
pub type IntMatrix = Matrix<BigInt>;
/// Default arbitrary-precision polynomial.
pub type IntPoly = Poly<BigInt>;
/// Default arbitrary-precision factored spectrum.
pub type IntSpectrumForm = SpectrumForm<BigInt>;
/// Default arbitrary-precision kernel witness.
pub type IntRationalVector = RationalVector<BigInt>;
