//! Simple undirected graphs: representation, text parsing, structural
//! predicates, two-colorings, and the line-graph / tensor-double-cover
//! transforms.
//!
//! Vertices are labeled `0..n`; the edge set is canonically stored with
//! `u < v`, sorted lexicographically. Loops and parallel edges are rejected
//! at construction time. Values are immutable after construction.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validate and canonicalize an edge list: endpoints in range, no loops,
    /// no duplicates (in either order), stored as `u < v` sorted.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            let e = (a.min(b), a.max(b));
            if e.1 >= n {
                return Err(GraphError::EndpointOutOfRange { vertex: e.1, n });
            }
            canon.push(e);
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph { n, edges: canon })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order (`u < v`, lexicographically sorted).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).is_ok()
    }

    /// Position of an edge in the canonical order.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Apply a vertex relabeling; `perm[old] = new` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v]));
        Graph::new(self.n, edges).expect("relabeling a valid graph stays valid")
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }
}

/// A two-sided vertex partition with every edge crossing between the sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Bipartition {
    /// Sorts both sides and swaps them so the smallest vertex sits on the left.
    pub fn new(mut left: Vec<usize>, mut right: Vec<usize>) -> Self {
        left.sort_unstable();
        right.sort_unstable();
        let swap = match (left.first(), right.first()) {
            (Some(l), Some(r)) => r < l,
            (None, Some(_)) => true,
            _ => false,
        };
        if swap {
            std::mem::swap(&mut left, &mut right);
        }
        Bipartition { left, right }
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn contains_left(&self, v: usize) -> bool {
        self.left.binary_search(&v).is_ok()
    }

    pub fn contains_right(&self, v: usize) -> bool {
        self.right.binary_search(&v).is_ok()
    }

    /// Check that the two sides partition `0..n` and every edge crosses.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.left.len() + self.right.len() != g.n() {
            return false;
        }
        let mut side = vec![None; g.n()];
        for &v in &self.left {
            if v >= g.n() || side[v].is_some() {
                return false;
            }
            side[v] = Some(false);
        }
        for &v in &self.right {
            if v >= g.n() || side[v].is_some() {
                return false;
            }
            side[v] = Some(true);
        }
        g.edges().iter().all(|&(u, v)| side[u] != side[v])
    }
}

/// Structural facts used as theorem preconditions and oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralSummary {
    pub connected: bool,
    pub is_tree: bool,
    pub is_forest: bool,
    pub is_cycle_graph: bool,
    pub has_pendant: bool,
    /// Present iff all degrees are equal.
    pub regular_degree: Option<usize>,
    /// Degree of each vertex in label order.
    pub degree_sequence: Vec<usize>,
}

pub fn structural_predicates(g: &Graph) -> StructuralSummary {
    let degree_sequence = g.degrees();
    let components = g.components().len();
    let connected = g.n() <= 1 || components == 1;
    let is_forest = g.m() + components == g.n();
    let is_tree = connected && is_forest;
    let is_cycle_graph =
        connected && g.n() >= 3 && degree_sequence.iter().all(|&d| d == 2);
    let has_pendant = degree_sequence.contains(&1);
    let regular_degree = match degree_sequence.first() {
        Some(&d) if degree_sequence.iter().all(|&x| x == d) => Some(d),
        Some(_) => None,
        None => None,
    };
    StructuralSummary {
        connected,
        is_tree,
        is_forest,
        is_cycle_graph,
        has_pendant,
        regular_degree,
        degree_sequence,
    }
}

/// Breadth-first two-coloring: a valid bipartition if one exists (layered
/// per connected component, component roots on the left), else `None`.
pub fn is_bipartite_bfs(g: &Graph) -> Option<Bipartition> {
    let adj = g.adjacency_lists();
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    for start in 0..g.n() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].expect("colored before queueing");
            for &w in &adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let left = (0..g.n()).filter(|&v| color[v] == Some(false)).collect();
    let right = (0..g.n()).filter(|&v| color[v] == Some(true)).collect();
    Some(Bipartition { left, right })
}

/// Parse the line-oriented edge list format: one `u v` pair per line,
/// `#` starts a comment line, and an optional leading header `n <count>`
/// fixes the vertex count (otherwise `1 + max label` is used).
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut saw_content = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !saw_content && tokens.len() == 2 && tokens[0] == "n" {
            let count = tokens[1].parse::<usize>().map_err(|_| GraphError::Malformed {
                line: lineno,
                message: format!("invalid vertex count {:?}", tokens[1]),
            })?;
            declared_n = Some(count);
            saw_content = true;
            continue;
        }
        saw_content = true;
        if tokens.len() != 2 {
            return Err(GraphError::Malformed {
                line: lineno,
                message: format!("expected \"u v\", got {line:?}"),
            });
        }
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| GraphError::Malformed {
                line: lineno,
                message: format!("invalid vertex label {t:?}"),
            })
        };
        let (u, v) = (parse(tokens[0])?, parse(tokens[1])?);
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        edges.push((u, v));
    }
    let max_label = edges.iter().map(|&(u, v)| u.max(v)).max();
    let n = match (declared_n, max_label) {
        (Some(n), _) => n,
        (None, Some(max)) => max + 1,
        (None, None) => 0,
    };
    Graph::new(n, edges)
}

/// Line graph: one vertex per edge (in canonical edge order), adjacent when
/// the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let m = g.m();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = g.edges()[i];
            let (c, d) = g.edges()[j];
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    Graph::new(m, edges).expect("line graph of a simple graph is simple")
}

/// Tensor (Kronecker) product with a single edge: vertex `(v, layer)` is
/// labeled `layer * n + v`, and each edge `{u, v}` lifts to `{(u,0),(v,1)}`
/// and `{(v,0),(u,1)}`. The result is always bipartite with `2m` edges.
pub fn kronecker_double_cover(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    for &(u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    Graph::new(2 * n, edges).expect("double cover of a simple graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn construction_canonicalizes_and_validates() {
        let t = Graph::new(3, [(2, 0), (1, 0), (1, 2)]).unwrap();
        assert_eq!(t.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::LoopEdge(0)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, [(0, 5)]),
            Err(GraphError::EndpointOutOfRange { vertex: 5, n: 2 })
        );
    }

    #[test]
    fn parse_edge_list_examples() {
        let c3 = parse_edge_list("0 1\n1 2\n0 2").unwrap();
        assert_eq!((c3.n(), c3.m()), (3, 3));
        let k2 = parse_edge_list("0 1").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        assert_eq!(parse_edge_list("0 0"), Err(GraphError::LoopEdge(0)));
    }

    #[test]
    fn parse_edge_list_header_and_comments() {
        let g = parse_edge_list("# a triangle plus isolated vertices\nn 5\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 3));
        // endpoint beyond the declared count
        assert!(matches!(
            parse_edge_list("n 2\n0 2"),
            Err(GraphError::EndpointOutOfRange { vertex: 2, n: 2 })
        ));
        // header only counts at the top
        assert!(parse_edge_list("0 1\nn 4").is_err());
        assert_eq!(parse_edge_list("").unwrap(), Graph::empty(0));
    }

    #[test]
    fn structural_predicates_examples() {
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let s = structural_predicates(&c3);
        assert!(s.connected && s.is_cycle_graph && !s.is_tree && !s.has_pendant);
        assert_eq!(s.regular_degree, Some(2));

        let p6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let s = structural_predicates(&p6);
        assert!(s.connected && s.is_tree && s.has_pendant && !s.is_cycle_graph);
        assert_eq!(s.degree_sequence, vec![1, 2, 2, 2, 2, 1]);

        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let s = structural_predicates(&k23);
        assert!(s.connected && !s.is_tree && !s.has_pendant);
        assert_eq!(s.regular_degree, None);

        let forest = g(4, &[(0, 1), (2, 3)]);
        let s = structural_predicates(&forest);
        assert!(!s.connected && s.is_forest && !s.is_tree);
    }

    #[test]
    fn bipartite_bfs_examples() {
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        assert!(is_bipartite_bfs(&c3).is_none());

        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let b = is_bipartite_bfs(&k23).unwrap();
        assert_eq!((b.left(), b.right()), (&[0, 1][..], &[2, 3, 4][..]));
        assert!(b.is_valid_for(&k23));

        let p6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let b = is_bipartite_bfs(&p6).unwrap();
        assert_eq!((b.left(), b.right()), (&[0, 2, 4][..], &[1, 3, 5][..]));
    }

    #[test]
    fn line_graph_examples() {
        // P3 -> K2
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(line_graph(&p3), g(2, &[(0, 1)]));
        // C3 -> C3
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(line_graph(&c3), g(3, &[(0, 1), (0, 2), (1, 2)]));
        // star K_{1,3} -> C3 (all edges meet at the hub)
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(line_graph(&star), g(3, &[(0, 1), (0, 2), (1, 2)]));
    }

    #[test]
    fn line_graph_degree_identity() {
        let k23 = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let l = line_graph(&k23);
        let deg = k23.degrees();
        for (i, &(u, v)) in k23.edges().iter().enumerate() {
            assert_eq!(l.degree(i), deg[u] + deg[v] - 2);
        }
    }

    #[test]
    fn double_cover_examples() {
        // C3 -> C6
        let c3 = g(3, &[(0, 1), (0, 2), (1, 2)]);
        let cover = kronecker_double_cover(&c3);
        let s = structural_predicates(&cover);
        assert_eq!((cover.n(), cover.m()), (6, 6));
        assert!(s.connected && s.is_cycle_graph);
        assert!(is_bipartite_bfs(&cover).is_some());

        // K2 -> two disjoint edges
        let k2 = g(2, &[(0, 1)]);
        let cover = kronecker_double_cover(&k2);
        assert_eq!(cover.edges(), &[(0, 3), (1, 2)]);
        assert_eq!(cover.components().len(), 2);

        // P3 -> two disjoint paths
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let cover = kronecker_double_cover(&p3);
        let comps = cover.components();
        assert_eq!(comps.len(), 2);
        for comp in comps {
            assert_eq!(comp.len(), 3);
        }
        assert!(is_bipartite_bfs(&cover).is_some());
        assert_eq!(cover.m(), 2 * p3.m());
    }
}
