//! Cross-cutting theorem-suite invariants beyond the per-checker unit
//! tests: no checker ever fails on an exhaustive small-graph corpus, and
//! the regular closed form holds for every regular graph the enumerator
//! can reach at n <= 8.

use edge_spectra::charpoly::charpoly;
use edge_spectra::edge_matrix::assemble;
use edge_spectra::enumerate::connected_graphs;
use edge_spectra::graph::{structural_predicates, Graph};
use edge_spectra::graph6;
use edge_spectra::orient::{orient, Strategy};
use edge_spectra::theorems::{regular_charpoly_closed_form, Checker};
use edge_spectra::{BigInt, IntPoly};

fn phi_n(g: &Graph) -> IntPoly {
    let oe = orient(g, &Strategy::Canonical).unwrap();
    let em = assemble::<BigInt>(&oe).unwrap();
    charpoly(&em.laplacian).unwrap()
}

#[test]
fn no_checker_fails_on_any_connected_graph_up_to_six_vertices() {
    for n in 1..=6 {
        for g in connected_graphs(n) {
            for checker in Checker::ALL {
                let v = checker.run(&g);
                assert!(
                    !v.failed(),
                    "{} failed on {}: {v:?}",
                    checker.name(),
                    graph6::encode(&g)
                );
            }
        }
    }
}

#[test]
fn regular_closed_form_holds_for_every_regular_graph_up_to_eight_vertices() {
    let mut seen = 0usize;
    for n in 3..=8 {
        for g in connected_graphs(n) {
            let s = structural_predicates(&g);
            if !s.regular_degree.is_some_and(|k| k >= 2) {
                continue;
            }
            seen += 1;
            assert_eq!(
                regular_charpoly_closed_form(&g).unwrap(),
                phi_n(&g),
                "closed form differs on {}",
                graph6::encode(&g)
            );
        }
    }
    // 1 + 2 + 2 + 5 + 4 + 17 regular graphs with degree >= 2 at n = 3..8
    assert!(seen >= 30, "expected dozens of regular graphs, saw {seen}");
}
