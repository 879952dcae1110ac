//! Exhaustive small-graph enumeration up to isomorphism.
//!
//! Canonical forms come from an individualize-and-refine search: equitable
//! partition refinement by neighbor counts, branching on the first
//! non-singleton cell, taking the minimum adjacency bit string over the
//! discrete leaves. Enumeration then augments one vertex at a time --
//! every connected graph arises from a connected graph with one
//! non-cutvertex removed, every tree from a tree plus a leaf -- rejecting
//! isomorphs by canonical-form hashing. Intended for the desk-scale sweeps
//! (n up to 9 or so); vertex counts are capped at 16.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Largest vertex count the canonical-form machinery accepts.
pub const MAX_VERTICES: usize = 16;

fn masks_from_graph(g: &Graph) -> Vec<u16> {
    let mut masks = vec![0u16; g.n()];
    for &(u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

fn graph_from_masks(masks: &[u16]) -> Graph {
    let n = masks.len();
    let edges = (0..n).flat_map(|u| {
        (u + 1..n).filter_map(move |v| (masks[u] >> v & 1 == 1).then_some((u, v)))
    });
    Graph::new(n, edges).expect("bit masks encode a simple graph")
}

// Upper-triangle bits in column-major order, most significant first.
fn key_under_order(masks: &[u16], order: &[usize]) -> u128 {
    let n = order.len();
    let mut key = 0u128;
    for col in 1..n {
        for row in 0..col {
            key = (key << 1) | u128::from(masks[order[row]] >> order[col] & 1);
        }
    }
    key
}

fn masks_from_key(n: usize, key: u128) -> Vec<u16> {
    let mut masks = vec![0u16; n];
    let total = n * (n - 1) / 2;
    let mut bit = total;
    for col in 1..n {
        for row in 0..col {
            bit -= 1;
            if key >> bit & 1 == 1 {
                masks[row] |= 1 << col;
                masks[col] |= 1 << row;
            }
        }
    }
    masks
}

/// Split every cell by neighbor counts into every other cell until stable.
fn refine(masks: &[u16], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    'restart: loop {
        for t in 0..cells.len() {
            let tmask: u16 = cells[t].iter().fold(0, |acc, &v| acc | 1 << v);
            for c in 0..cells.len() {
                if cells[c].len() <= 1 {
                    continue;
                }
                let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
                for &v in &cells[c] {
                    groups
                        .entry((masks[v] & tmask).count_ones())
                        .or_default()
                        .push(v);
                }
                if groups.len() > 1 {
                    cells.splice(c..c + 1, groups.into_values());
                    continue 'restart;
                }
            }
        }
        return cells;
    }
}

fn search(masks: &[u16], cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let cells = refine(masks, cells);
    match cells.iter().position(|c| c.len() > 1) {
        Some(idx) => {
            for &v in &cells[idx] {
                let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
                next.extend(cells[..idx].iter().cloned());
                next.push(vec![v]);
                next.push(cells[idx].iter().copied().filter(|&w| w != v).collect());
                next.extend(cells[idx + 1..].iter().cloned());
                search(masks, next, best);
            }
        }
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let key = key_under_order(masks, &order);
            if best.as_ref().is_none_or(|(b, _)| key < *b) {
                *best = Some((key, order));
            }
        }
    }
}

fn canonical_masks(masks: &[u16]) -> (u128, Vec<u16>) {
    let n = masks.len();
    if n <= 1 {
        return (0, masks.to_vec());
    }
    let mut best = None;
    search(masks, vec![(0..n).collect()], &mut best);
    let (key, _) = best.expect("search visits at least one leaf");
    (key, masks_from_key(n, key))
}

/// Canonical-form hash of a graph; equal keys mean isomorphic graphs
/// (for equal vertex counts).
pub fn canonical_key(g: &Graph) -> u128 {
    assert!(g.n() <= MAX_VERTICES, "canonical forms support n <= {MAX_VERTICES}");
    canonical_masks(&masks_from_graph(g)).0
}

/// The canonically labeled representative of a graph's isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    assert!(g.n() <= MAX_VERTICES, "canonical forms support n <= {MAX_VERTICES}");
    graph_from_masks(&canonical_masks(&masks_from_graph(g)).1)
}

fn augment_levels(n: usize, neighborhoods: impl Fn(usize) -> Vec<u16>) -> Vec<Graph> {
    assert!(
        (1..=MAX_VERTICES).contains(&n),
        "enumeration supports 1 <= n <= {MAX_VERTICES}"
    );
    let mut level: Vec<Vec<u16>> = vec![vec![0u16]];
    for k in 2..=n {
        let subsets = neighborhoods(k - 1);
        let mut next: BTreeMap<u128, Vec<u16>> = BTreeMap::new();
        for parent in &level {
            for &subset in &subsets {
                let mut child = parent.clone();
                child.push(subset);
                for (v, row) in child.iter_mut().enumerate().take(k - 1) {
                    if subset >> v & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                let (key, canon) = canonical_masks(&child);
                next.entry(key).or_insert(canon);
            }
        }
        level = next.into_values().collect();
    }
    level.iter().map(|masks| graph_from_masks(masks)).collect()
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// in canonical-key order.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    // join the new vertex to a nonempty subset of the old ones
    augment_levels(n, |k| (1..1u32 << k).map(|s| s as u16).collect())
}

/// All graphs on exactly `n` vertices (disconnected included), one per
/// isomorphism class, in canonical-key order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    augment_levels(n, |k| (0..1u32 << k).map(|s| s as u16).collect())
}

/// All trees on exactly `n` vertices, one per isomorphism class, in
/// canonical-key order.
pub fn trees(n: usize) -> Vec<Graph> {
    // attach the new vertex as a leaf
    augment_levels(n, |k| (0..k).map(|v| 1u16 << v).collect())
}
