//! The edge adjacency matrix M, its degree matrix D, and the edge
//! Laplacian N = D - M.
//!
//! Directed edge `i` feeds directed edge `j` when `i` ends where `j` starts
//! and `j` is not the immediate reversal of `i`; M is the 2m x 2m 0/1
//! matrix of that relation. D is diagonal with `D_ii = deg(target(i)) - 1`,
//! which equals the out-degree of dart `i` in the feeds-digraph, so every
//! row sum of N = D - M vanishes. The signless companion D + M drives the
//! bipartiteness criterion.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::{Matrix, MatrixError};
use crate::orient::OrientedEdges;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeMatrixError {
    #[error("row {index}: degree formula disagrees with the row sum of M (construction bug)")]
    RowSumMismatch { index: usize },
}

/// M, D, N = D - M, and D + M for one oriented graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMatrices<T> {
    /// Edge adjacency matrix M (0/1, zero diagonal).
    pub adjacency: Matrix<T>,
    /// Diagonal matrix D of the row sums of M.
    pub degree: Matrix<T>,
    /// Edge Laplacian N = D - M.
    pub laplacian: Matrix<T>,
    /// Signless companion D + M.
    pub signless: Matrix<T>,
}

/// The m x m blocks of N, M, and D indexed by forward (`f`, darts `0..m`)
/// and reversed (`r`, darts `m..2m`) halves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition<T> {
    pub lap_ff: Matrix<T>,
    pub lap_fr: Matrix<T>,
    pub lap_rf: Matrix<T>,
    pub lap_rr: Matrix<T>,
    pub adj_ff: Matrix<T>,
    pub adj_fr: Matrix<T>,
    pub adj_rf: Matrix<T>,
    pub adj_rr: Matrix<T>,
    pub deg_f: Matrix<T>,
    pub deg_r: Matrix<T>,
}

/// Flags reported by [`swap_conjugation_check`]; all three hold for
/// regular graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwapSymmetryReport {
    /// Top-left block of N equals the transpose of the bottom-right block.
    pub p_eq_s_transpose: bool,
    /// N^T = J N J for the block swap J = [[0, I], [I, 0]].
    pub n_symmetry: bool,
    /// All column sums of N vanish (row sums always do).
    pub col_sums_zero: bool,
}

/// Build the edge adjacency matrix M over darts `e_1..e_m, e_1^-1..e_m^-1`.
pub fn edge_adjacency<T: Scalar>(oe: &OrientedEdges) -> Matrix<T> {
    let k = oe.dart_count();
    Matrix::from_fn(k, k, |i, j| {
        let (si, ti) = oe.dart(i);
        let (sj, tj) = oe.dart(j);
        if ti == sj && si != tj {
            T::one()
        } else {
            T::zero()
        }
    })
}

/// Build M, D, N, and D + M; D comes from the degree formula and is
/// cross-checked against the literal row sums of M.
pub fn assemble<T: Scalar>(oe: &OrientedEdges) -> Result<EdgeMatrices<T>, EdgeMatrixError> {
    let adjacency = edge_adjacency::<T>(oe);
    let degrees = oe.graph().degrees();
    let k = oe.dart_count();
    let diag: Vec<T> = (0..k)
        .map(|i| T::from_count(degrees[oe.target(i)] - 1))
        .collect();
    for (index, sum) in adjacency.row_sums().into_iter().enumerate() {
        if sum != diag[index] {
            return Err(EdgeMatrixError::RowSumMismatch { index });
        }
    }
    let degree = Matrix::diagonal(diag);
    let laplacian = degree.sub(&adjacency);
    let signless = degree.add(&adjacency);
    Ok(EdgeMatrices {
        adjacency,
        degree,
        laplacian,
        signless,
    })
}

/// Split N, M, and D into their forward/reversed m x m blocks.
pub fn blocks<T: Scalar>(em: &EdgeMatrices<T>) -> BlockDecomposition<T> {
    let k = em.laplacian.rows();
    let m = k / 2;
    let cut = |mat: &Matrix<T>| {
        (
            mat.block(0..m, 0..m),
            mat.block(0..m, m..k),
            mat.block(m..k, 0..m),
            mat.block(m..k, m..k),
        )
    };
    let (lap_ff, lap_fr, lap_rf, lap_rr) = cut(&em.laplacian);
    let (adj_ff, adj_fr, adj_rf, adj_rr) = cut(&em.adjacency);
    let deg_f = em.degree.block(0..m, 0..m);
    let deg_r = em.degree.block(m..k, m..k);
    BlockDecomposition {
        lap_ff,
        lap_fr,
        lap_rf,
        lap_rr,
        adj_ff,
        adj_fr,
        adj_rf,
        adj_rr,
        deg_f,
        deg_r,
    }
}

/// Sums of the four blocks of N and of M. The first equals the vertex
/// Laplacian of the line graph, the second its adjacency matrix.
pub fn block_sum<T: Scalar>(bd: &BlockDecomposition<T>) -> (Matrix<T>, Matrix<T>) {
    let lap = bd.lap_ff.add(&bd.lap_fr).add(&bd.lap_rf).add(&bd.lap_rr);
    let adj = bd.adj_ff.add(&bd.adj_fr).add(&bd.adj_rf).add(&bd.adj_rr);
    (lap, adj)
}

/// True iff the digraph with an arc `i -> j` for every nonzero entry is
/// strongly connected (equivalently, the matrix is irreducible).
pub fn digraph_strongly_connected<T: Scalar>(m: &Matrix<T>) -> Result<bool, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let k = m.rows();
    if k == 0 {
        return Ok(true);
    }
    let reaches_all = |forward: bool| {
        let mut seen = vec![false; k];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for (w, visited) in seen.iter_mut().enumerate() {
                let hit = if forward {
                    !m.get(v, w).is_zero()
                } else {
                    !m.get(w, v).is_zero()
                };
                if hit && !*visited {
                    *visited = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == k
    };
    Ok(reaches_all(true) && reaches_all(false))
}

/// Check the swap symmetries of N that characterize equal endpoint degrees.
pub fn swap_conjugation_check<T: Scalar>(
    em: &EdgeMatrices<T>,
    bd: &BlockDecomposition<T>,
) -> SwapSymmetryReport {
    let p_eq_s_transpose = bd.lap_ff == bd.lap_rr.transpose();
    let k = em.laplacian.rows();
    let m = k / 2;
    // J N J swaps the two block rows and the two block columns
    let swapped = Matrix::from_blocks(&bd.lap_rr, &bd.lap_rf, &bd.lap_fr, &bd.lap_ff);
    let n_symmetry = if m == 0 {
        true
    } else {
        em.laplacian.transpose() == swapped
    };
    let col_sums_zero = em.laplacian.col_sums().iter().all(T::is_zero);
    SwapSymmetryReport {
        p_eq_s_transpose,
        n_symmetry,
        col_sums_zero,
    }
}

/// Vertex adjacency matrix A(X).
pub fn adjacency_matrix<T: Scalar>(g: &Graph) -> Matrix<T> {
    let mut a = Matrix::zero(g.n(), g.n());
    for &(u, v) in g.edges() {
        a.set(u, v, T::one());
        a.set(v, u, T::one());
    }
    a
}

/// Vertex Laplacian: degree diagonal minus adjacency.
pub fn vertex_laplacian<T: Scalar>(g: &Graph) -> Matrix<T> {
    let deg = Matrix::diagonal(g.degrees().into_iter().map(T::from_count).collect());
    deg.sub(&adjacency_matrix(g))
}

/// Render a 2m x 2m edge matrix with `e_i` / `e_i^-1` headers and a rule
/// between the forward and reversed halves.
pub fn render_edge_matrix<T: Scalar>(mat: &Matrix<T>, oe: &OrientedEdges) -> String {
    mat.render(Some(&oe.dart_labels()), Some(oe.edge_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_bipartite_bfs;
    use crate::orient::{orient, OrientedEdges, Strategy};

    type M = Matrix<i64>;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn canonical(graph: &Graph) -> OrientedEdges {
        orient(graph, &Strategy::Canonical).unwrap()
    }

    fn mat(rows: &[&[i64]]) -> M {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_edge_has_zero_edge_adjacency() {
        let k2 = g(2, &[(0, 1)]);
        let em = assemble::<i64>(&canonical(&k2)).unwrap();
        assert_eq!(em.adjacency, M::zero(2, 2));
        assert_eq!(em.laplacian, M::zero(2, 2));
    }

    #[test]
    fn triangle_edge_adjacency_is_two_directed_cycles() {
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let em = assemble::<i64>(&canonical(&c3)).unwrap();
        // e1 -> e3 -> e2^-1 -> e1 and e2 -> e3^-1 -> e1^-1 -> e2
        let expect = mat(&[
            &[0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 0],
            &[0, 1, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0],
        ]);
        assert_eq!(em.adjacency, expect);
        assert_eq!(em.degree, M::identity(6));
        assert_eq!(em.laplacian, M::identity(6).sub(&expect));
    }

    #[test]
    fn path_edge_adjacency_has_exactly_two_entries() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let m = edge_adjacency::<i64>(&canonical(&p3));
        let mut ones = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                if *m.get(i, j) == 1 {
                    ones.push((i, j));
                }
            }
        }
        // e1 feeds e2; e2^-1 feeds e1^-1
        assert_eq!(ones, vec![(0, 1), (3, 2)]);
    }

    #[test]
    fn star_degree_matrix_follows_target_degrees() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let em = assemble::<i64>(&canonical(&star)).unwrap();
        // canonical darts point hub -> leaf, so the forward targets are the
        // leaves (degree 1) and the reversed targets the hub (degree 3)
        let want: Vec<i64> = vec![0, 0, 0, 2, 2, 2];
        let got: Vec<i64> = (0..6).map(|i| *em.degree.get(i, i)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn triangle_blocks_under_cyclic_orientation() {
        // directing the triangle around the cycle decouples the forward and
        // reversed darts, leaving the two circulant diagonal blocks
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let oe = OrientedEdges::new(c3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let em = assemble::<i64>(&oe).unwrap();
        let bd = blocks(&em);
        assert!(bd.lap_fr.is_zero() && bd.lap_rf.is_zero());
        assert_eq!(bd.lap_ff, mat(&[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]]));
        assert_eq!(bd.lap_rr, bd.lap_ff.transpose());
        let report = swap_conjugation_check(&em, &bd);
        assert!(report.p_eq_s_transpose && report.n_symmetry && report.col_sums_zero);
    }

    #[test]
    fn triangle_swap_symmetries_hold_under_canonical_orientation() {
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let em = assemble::<i64>(&canonical(&c3)).unwrap();
        let bd = blocks(&em);
        let report = swap_conjugation_check(&em, &bd);
        assert!(report.p_eq_s_transpose && report.n_symmetry && report.col_sums_zero);
    }

    #[test]
    fn bipartite_orientation_zeroes_diagonal_blocks() {
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let bip = is_bipartite_bfs(&k23).unwrap();
        let oe = orient(&k23, &Strategy::Bipartite(bip)).unwrap();
        let em = assemble::<i64>(&oe).unwrap();
        let bd = blocks(&em);
        assert!(bd.adj_ff.is_zero() && bd.adj_rr.is_zero());
        assert!(!bd.adj_fr.is_zero() && !bd.adj_rf.is_zero());
    }

    #[test]
    fn block_sums_match_line_graph_matrices() {
        // C3: the line graph is C3 itself
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let em = assemble::<i64>(&canonical(&c3)).unwrap();
        let (lap_sum, adj_sum) = block_sum(&blocks(&em));
        assert_eq!(adj_sum, adjacency_matrix::<i64>(&c3));
        assert_eq!(lap_sum, vertex_laplacian::<i64>(&c3));

        // P3: the line graph is K2
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let em = assemble::<i64>(&canonical(&p3)).unwrap();
        let (lap_sum, adj_sum) = block_sum(&blocks(&em));
        assert_eq!(lap_sum, mat(&[&[1, -1], &[-1, 1]]));
        assert_eq!(adj_sum, mat(&[&[0, 1], &[1, 0]]));

        // K2: 1x1 zero blocks
        let k2 = g(2, &[(0, 1)]);
        let em = assemble::<i64>(&canonical(&k2)).unwrap();
        let (lap_sum, adj_sum) = block_sum(&blocks(&em));
        assert_eq!(lap_sum, M::zero(1, 1));
        assert_eq!(adj_sum, M::zero(1, 1));
    }

    #[test]
    fn strong_connectivity_of_edge_digraph() {
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let m = edge_adjacency::<i64>(&canonical(&c3));
        assert!(!digraph_strongly_connected(&m).unwrap());

        let k4 = crate::families::complete(4).unwrap();
        let m = edge_adjacency::<i64>(&canonical(&k4));
        assert!(digraph_strongly_connected(&m).unwrap());

        let p3 = g(3, &[(0, 1), (1, 2)]);
        let m = edge_adjacency::<i64>(&canonical(&p3));
        assert!(!digraph_strongly_connected(&m).unwrap());

        assert!(digraph_strongly_connected(&M::zero(0, 0)).unwrap());
        assert!(!digraph_strongly_connected(&M::zero(2, 2)).unwrap());
    }

    #[test]
    fn path_swap_check_fails_column_sums() {
        let p6 = crate::families::path(6).unwrap();
        let em = assemble::<i64>(&canonical(&p6)).unwrap();
        let bd = blocks(&em);
        let report = swap_conjugation_check(&em, &bd);
        assert!(!report.col_sums_zero);
        assert!(!report.p_eq_s_transpose);
    }

    #[test]
    fn deg_block_sum_matches_line_graph_degrees() {
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let em = assemble::<i64>(&canonical(&k23)).unwrap();
        let bd = blocks(&em);
        let l = crate::graph::line_graph(&k23);
        let both = bd.deg_f.add(&bd.deg_r);
        for i in 0..k23.m() {
            assert_eq!(*both.get(i, i), l.degree(i) as i64);
        }
    }

    #[test]
    fn render_includes_labels_and_rule() {
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let oe = canonical(&c3);
        let em = assemble::<i64>(&oe).unwrap();
        let text = render_edge_matrix(&em.laplacian, &oe);
        assert!(text.contains("e1^-1"));
        assert!(text.contains('|'));
        assert!(text.lines().count() >= 8);
    }
}
