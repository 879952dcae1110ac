//! Resolving command-line input into a graph and an orientation strategy.

use std::path::Path;

use edge_spectra::families::Family;
use edge_spectra::graph::{is_bipartite_bfs, parse_edge_list, Graph};
use edge_spectra::graph6;
use edge_spectra::orient::Strategy;

use crate::CliError;

/// A loaded graph plus the human-readable description of where it came from.
#[derive(Debug, Clone)]
pub struct GraphInput {
    pub graph: Graph,
    pub descriptor: String,
}

/// Load from exactly one of the three sources (the argument parser enforces
/// exclusivity; this reports the actual parse failures).
pub fn load(
    edges: Option<&Path>,
    graph6_str: Option<&str>,
    family: Option<&str>,
) -> Result<GraphInput, CliError> {
    if let Some(path) = edges {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        let graph = parse_edge_list(&text)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        return Ok(GraphInput {
            graph,
            descriptor: format!("edges {}", path.display()),
        });
    }
    if let Some(text) = graph6_str {
        let graph = graph6::parse(text.trim())
            .map_err(|e| CliError::input(format!("graph6 {text:?}: {e}")))?;
        return Ok(GraphInput {
            graph,
            descriptor: format!("graph6 {}", text.trim()),
        });
    }
    if let Some(spec) = family {
        let graph = Family::parse(spec)
            .and_then(|f| f.generate())
            .map_err(|e| CliError::input(e.to_string()))?;
        return Ok(GraphInput {
            graph,
            descriptor: format!("family {spec}"),
        });
    }
    Err(CliError::input("one of --edges, --graph6, --family is required"))
}

/// Orientation flag grammar: `canonical` | `bipartite` | `random:SEED`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrientationChoice {
    Canonical,
    Bipartite,
    Random(u64),
}

impl OrientationChoice {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text {
            "canonical" => Ok(OrientationChoice::Canonical),
            "bipartite" => Ok(OrientationChoice::Bipartite),
            other => match other.strip_prefix("random:") {
                Some(seed) => seed
                    .parse::<u64>()
                    .map(OrientationChoice::Random)
                    .map_err(|_| CliError::input(format!("invalid orientation seed {seed:?}"))),
                None => Err(CliError::input(format!(
                    "invalid orientation {other:?}; expected canonical, bipartite, or random:SEED"
                ))),
            },
        }
    }

    /// Turn the choice into a concrete strategy for this graph; the
    /// bipartite orientation of a non-bipartite graph is a usage error.
    pub fn resolve(&self, g: &Graph) -> Result<Strategy, CliError> {
        match self {
            OrientationChoice::Canonical => Ok(Strategy::Canonical),
            OrientationChoice::Random(seed) => Ok(Strategy::SeededRandom(*seed)),
            OrientationChoice::Bipartite => is_bipartite_bfs(g)
                .map(Strategy::Bipartite)
                .ok_or_else(|| CliError::input("graph is not bipartite")),
        }
    }

    pub fn label(&self) -> String {
        match self {
            OrientationChoice::Canonical => "canonical".into(),
            OrientationChoice::Bipartite => "bipartite".into(),
            OrientationChoice::Random(seed) => format!("random:{seed}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_grammar() {
        assert_eq!(
            OrientationChoice::parse("canonical").unwrap(),
            OrientationChoice::Canonical
        );
        assert_eq!(
            OrientationChoice::parse("random:7").unwrap(),
            OrientationChoice::Random(7)
        );
        assert!(OrientationChoice::parse("random:x").is_err());
        assert!(OrientationChoice::parse("sideways").is_err());
    }

    #[test]
    fn bipartite_resolution_requires_a_bipartite_graph() {
        let c3 = Family::parse("cycle:3").unwrap().generate().unwrap();
        assert!(OrientationChoice::Bipartite.resolve(&c3).is_err());
        let p4 = Family::parse("path:4").unwrap().generate().unwrap();
        assert!(OrientationChoice::Bipartite.resolve(&p4).is_ok());
    }

    #[test]
    fn family_and_graph6_inputs_load() {
        let input = load(None, None, Some("kpq:2,3")).unwrap();
        assert_eq!(input.graph.m(), 6);
        let input = load(None, Some("Bw"), None).unwrap();
        assert_eq!(input.graph.m(), 3);
        assert!(load(None, Some("B"), None).is_err());
        assert!(load(None, None, Some("cycle:2")).is_err());
    }
}
