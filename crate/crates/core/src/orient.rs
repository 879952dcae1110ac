//! Edge orientations.
//!
//! An `OrientedEdges` fixes a direction for each edge `e_1..e_m` in
//! canonical edge order and addresses the 2m directed edges by index:
//! `0..m` are the chosen directions, `m..2m` their reversals (dart `m + i`
//! is the inverse of dart `i`). The spectrum downstream never depends on
//! the orientation -- reorienting an edge is a permutation similarity --
//! which the property tests pin down.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Bipartition, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrientError {
    #[error("not a valid bipartition of the graph: {0}")]
    NotABipartition(String),
    #[error("directions do not enumerate the edge set bijectively")]
    DirectionMismatch,
}

/// How to choose edge directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// Direct every edge from its smaller endpoint to its larger one.
    Canonical,
    /// Direct every edge from the left side to the right side; the
    /// resulting edge adjacency matrix has zero diagonal blocks.
    Bipartite(Bipartition),
    /// Flip each canonical direction with a seeded coin; fully deterministic
    /// for a given seed.
    SeededRandom(u64),
}

/// A graph together with one direction per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedEdges {
    graph: Graph,
    dir: Vec<(usize, usize)>,
}

impl OrientedEdges {
    /// Wrap explicit directions: `dir` must enumerate the edge set
    /// bijectively, in any order and with either direction per edge.
    pub fn new(graph: Graph, dir: Vec<(usize, usize)>) -> Result<Self, OrientError> {
        let mut normalized: Vec<(usize, usize)> =
            dir.iter().map(|&(s, t)| (s.min(t), s.max(t))).collect();
        normalized.sort_unstable();
        if normalized != graph.edges() {
            return Err(OrientError::DirectionMismatch);
        }
        Ok(OrientedEdges { graph, dir })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of undirected edges m.
    pub fn edge_count(&self) -> usize {
        self.dir.len()
    }

    /// Number of directed edges 2m.
    pub fn dart_count(&self) -> usize {
        2 * self.dir.len()
    }

    /// Chosen directions of `e_1..e_m`.
    pub fn directions(&self) -> &[(usize, usize)] {
        &self.dir
    }

    /// The directed edge at index `i < 2m` as `(source, target)`.
    pub fn dart(&self, i: usize) -> (usize, usize) {
        let m = self.dir.len();
        if i < m {
            self.dir[i]
        } else {
            let (s, t) = self.dir[i - m];
            (t, s)
        }
    }

    pub fn source(&self, i: usize) -> usize {
        self.dart(i).0
    }

    pub fn target(&self, i: usize) -> usize {
        self.dart(i).1
    }

    /// Human-readable dart labels `e1..em, e1^-1..em^-1` (printed 1-based).
    pub fn dart_labels(&self) -> Vec<String> {
        let m = self.dir.len();
        (0..2 * m)
            .map(|i| {
                if i < m {
                    format!("e{}", i + 1)
                } else {
                    format!("e{}^-1", i - m + 1)
                }
            })
            .collect()
    }
}

/// Orient the edges of a graph with the given strategy.
pub fn orient(g: &Graph, strategy: &Strategy) -> Result<OrientedEdges, OrientError> {
    let dir: Vec<(usize, usize)> = match strategy {
        Strategy::Canonical => g.edges().to_vec(),
        Strategy::Bipartite(bip) => {
            if !bip.is_valid_for(g) {
                return Err(OrientError::NotABipartition(
                    "sides must partition the vertices with every edge crossing".into(),
                ));
            }
            g.edges()
                .iter()
                .map(|&(u, v)| if bip.contains_left(u) { (u, v) } else { (v, u) })
                .collect()
        }
        Strategy::SeededRandom(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            g.edges()
                .iter()
                .map(|&(u, v)| if rng.gen::<bool>() { (u, v) } else { (v, u) })
                .collect()
        }
    };
    Ok(OrientedEdges { graph: g.clone(), dir })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_bipartite_bfs;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_orientation_of_triangle() {
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let oe = orient(&c3, &Strategy::Canonical).unwrap();
        assert_eq!(oe.directions(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(oe.dart(3), (1, 0));
        assert_eq!(oe.dart_labels()[3], "e1^-1");
    }

    #[test]
    fn bipartite_orientation_points_into_right_side() {
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let bip = is_bipartite_bfs(&k23).unwrap();
        let oe = orient(&k23, &Strategy::Bipartite(bip)).unwrap();
        for i in 0..oe.edge_count() {
            let (s, t) = oe.dart(i);
            assert!(s < 2 && t >= 2, "dart {i} = ({s}, {t})");
        }
    }

    #[test]
    fn bipartite_orientation_rejects_bad_partition() {
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let bogus = Bipartition::new(vec![0], vec![1, 2]);
        assert!(matches!(
            orient(&c3, &Strategy::Bipartite(bogus)),
            Err(OrientError::NotABipartition(_))
        ));
    }

    #[test]
    fn seeded_orientation_is_deterministic() {
        let p6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let a = orient(&p6, &Strategy::SeededRandom(7)).unwrap();
        let b = orient(&p6, &Strategy::SeededRandom(7)).unwrap();
        assert_eq!(a, b);
        for (i, &(s, t)) in a.directions().iter().enumerate() {
            assert_eq!(p6.edges()[i], (s.min(t), s.max(t)));
        }
    }

    #[test]
    fn explicit_directions_validated() {
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        // any edge order works as long as the edge set is covered exactly
        assert!(OrientedEdges::new(c3.clone(), vec![(0, 1), (1, 2), (2, 0)]).is_ok());
        assert!(matches!(
            OrientedEdges::new(c3.clone(), vec![(0, 1), (0, 1), (1, 2)]),
            Err(OrientError::DirectionMismatch)
        ));
        assert!(OrientedEdges::new(c3, vec![(0, 1)]).is_err());
    }
}
