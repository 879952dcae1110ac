//! Named graph family generators with canonical vertex labelings.
//!
//! The descriptor micro-grammar used by the CLI is `name[:a,b,...]` with
//! comma-separated integers, e.g. `cycle:5`, `kpq:2,3`, `pruefer:1,1,1,1`.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family}: {message}")]
    BadParameters { family: &'static str, message: String },
    #[error("malformed family descriptor {0:?}")]
    MalformedDescriptor(String),
}

fn bad(family: &'static str, message: impl Into<String>) -> FamilyError {
    FamilyError::BadParameters {
        family,
        message: message.into(),
    }
}

/// A parsed family descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Star with the given number of leaves, i.e. `K_{1,leaves}`.
    Star(usize),
    Petersen,
    Hypercube(usize),
    TreeFromPruefer(Vec<usize>),
}

impl Family {
    /// Parse `name[:a,b,...]`.
    pub fn parse(descriptor: &str) -> Result<Family, FamilyError> {
        let (name, args) = match descriptor.split_once(':') {
            Some((name, rest)) => {
                let args = rest
                    .split(',')
                    .map(|t| {
                        t.trim().parse::<usize>().map_err(|_| {
                            FamilyError::MalformedDescriptor(descriptor.to_string())
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                (name.trim(), args)
            }
            None => (descriptor.trim(), Vec::new()),
        };
        let arity = |want: usize, args: &[usize]| -> Result<(), FamilyError> {
            if args.len() == want {
                Ok(())
            } else {
                Err(FamilyError::MalformedDescriptor(descriptor.to_string()))
            }
        };
        match name {
            "path" => {
                arity(1, &args)?;
                Ok(Family::Path(args[0]))
            }
            "cycle" => {
                arity(1, &args)?;
                Ok(Family::Cycle(args[0]))
            }
            "complete" => {
                arity(1, &args)?;
                Ok(Family::Complete(args[0]))
            }
            "kpq" | "complete_bipartite" => {
                arity(2, &args)?;
                Ok(Family::CompleteBipartite(args[0], args[1]))
            }
            "star" => {
                arity(1, &args)?;
                Ok(Family::Star(args[0]))
            }
            "petersen" => {
                arity(0, &args)?;
                Ok(Family::Petersen)
            }
            "hypercube" => {
                arity(1, &args)?;
                Ok(Family::Hypercube(args[0]))
            }
            "pruefer" => Ok(Family::TreeFromPruefer(args)),
            other => Err(FamilyError::UnknownFamily(other.to_string())),
        }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        match self {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Complete(n) => complete(*n),
            Family::CompleteBipartite(p, q) => complete_bipartite(*p, *q),
            Family::Star(leaves) => star(*leaves),
            Family::Petersen => Ok(petersen()),
            Family::Hypercube(d) => hypercube(*d),
            Family::TreeFromPruefer(seq) => tree_from_pruefer(seq),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(p, q) => write!(f, "kpq:{p},{q}"),
            Family::Star(leaves) => write!(f, "star:{leaves}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Hypercube(d) => write!(f, "hypercube:{d}"),
            Family::TreeFromPruefer(seq) => {
                write!(f, "pruefer")?;
                for (i, v) in seq.iter().enumerate() {
                    write!(f, "{}{v}", if i == 0 { ':' } else { ',' })?;
                }
                Ok(())
            }
        }
    }
}

/// Path on `n >= 1` vertices, edges `i - (i+1)`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("path", "need at least 1 vertex"));
    }
    Ok(Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple"))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle", format!("need at least 3 vertices, got {n}")));
    }
    let edges = (0..n).map(|i| (i, (i + 1) % n));
    Ok(Graph::new(n, edges).expect("cycle is simple"))
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("complete", "need at least 1 vertex"));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::new(n, edges).expect("complete graph is simple"))
}

/// Complete bipartite graph: left part `0..p`, right part `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, FamilyError> {
    if p < 1 || q < 1 {
        return Err(bad("kpq", format!("both parts must be nonempty, got ({p}, {q})")));
    }
    let edges = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v)));
    Ok(Graph::new(p + q, edges).expect("complete bipartite graph is simple"))
}

/// Star `K_{1,leaves}` with the hub labeled 0.
pub fn star(leaves: usize) -> Result<Graph, FamilyError> {
    if leaves < 1 {
        return Err(bad("star", "need at least 1 leaf"));
    }
    Ok(Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple"))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`,
/// spokes `i - (i+5)`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::new(10, edges).expect("Petersen graph is simple")
}

/// d-dimensional hypercube: vertices are bit strings, edges flip one bit.
pub fn hypercube(d: usize) -> Result<Graph, FamilyError> {
    if d > 16 {
        return Err(bad("hypercube", format!("dimension {d} too large")));
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(move |&(u, v)| u < v));
    Ok(Graph::new(n, edges).expect("hypercube is simple"))
}

/// Decode a Pruefer sequence into the labeled tree on `len + 2` vertices.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph, FamilyError> {
    let n = seq.len() + 2;
    for &v in seq {
        if v >= n {
            return Err(bad(
                "pruefer",
                format!("label {v} out of range for {n} vertices"),
            ));
        }
    }
    let mut remaining = vec![1usize; n];
    for &v in seq {
        remaining[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| remaining[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in seq {
        let std::cmp::Reverse(leaf) = leaf_heap.pop().expect("a tree always has a leaf");
        edges.push((leaf, v));
        remaining[leaf] -= 1;
        remaining[v] -= 1;
        if remaining[v] == 1 {
            leaf_heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaf_heap.pop().expect("two vertices remain");
    let std::cmp::Reverse(b) = leaf_heap.pop().expect("two vertices remain");
    edges.push((a, b));
    Ok(Graph::new(n, edges).expect("Pruefer decoding yields a tree"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::structural_predicates;

    #[test]
    fn descriptor_parsing() {
        assert_eq!(Family::parse("cycle:3"), Ok(Family::Cycle(3)));
        assert_eq!(Family::parse("kpq:2,3"), Ok(Family::CompleteBipartite(2, 3)));
        assert_eq!(Family::parse("petersen"), Ok(Family::Petersen));
        assert_eq!(Family::parse("pruefer"), Ok(Family::TreeFromPruefer(vec![])));
        assert_eq!(
            Family::parse("pruefer:1,1,1,1"),
            Ok(Family::TreeFromPruefer(vec![1, 1, 1, 1]))
        );
        assert!(matches!(Family::parse("blah:1"), Err(FamilyError::UnknownFamily(_))));
        assert!(matches!(
            Family::parse("cycle:x"),
            Err(FamilyError::MalformedDescriptor(_))
        ));
        assert!(matches!(
            Family::parse("cycle:1,2"),
            Err(FamilyError::MalformedDescriptor(_))
        ));
        assert_eq!(Family::parse("cycle:5").unwrap().to_string(), "cycle:5");
    }

    #[test]
    fn generators_match_expected_shapes() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!((k23.n(), k23.m()), (5, 6));
        assert!(cycle(2).is_err());
        assert!(matches!(complete_bipartite(0, 3), Err(FamilyError::BadParameters { .. })));

        let p = petersen();
        let s = structural_predicates(&p);
        assert_eq!((p.n(), p.m()), (10, 15));
        assert_eq!(s.regular_degree, Some(3));
        assert!(s.connected);
        // girth 5: no triangles or squares through vertex 0
        assert!(!p.has_edge(0, 2));

        let q3 = hypercube(3).unwrap();
        let s = structural_predicates(&q3);
        assert_eq!((q3.n(), q3.m()), (8, 12));
        assert_eq!(s.regular_degree, Some(3));
        assert!(is_bipartite(&q3));
    }

    fn is_bipartite(g: &Graph) -> bool {
        crate::graph::is_bipartite_bfs(g).is_some()
    }

    #[test]
    fn pruefer_decoding() {
        // empty sequence -> K2
        assert_eq!(tree_from_pruefer(&[]).unwrap().edges(), &[(0, 1)]);
        // all-ones sequence -> star around vertex 1 on 6 vertices
        let star6 = tree_from_pruefer(&[1, 1, 1, 1]).unwrap();
        assert_eq!(star6.edges(), &[(0, 1), (1, 2), (1, 3), (1, 4), (1, 5)]);
        assert_eq!(star6.degree(1), 5);
        // classic worked example: (3, 3, 3, 4) on 6 vertices
        let t = tree_from_pruefer(&[3, 3, 3, 4]).unwrap();
        assert_eq!(t.edges(), &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert!(structural_predicates(&t).is_tree);
        assert!(tree_from_pruefer(&[9]).is_err());
    }
}
