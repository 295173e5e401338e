//! Isomorph-free generation by canonical augmentation.
//!
//! A graph on `k + 1` vertices is produced from its parent (the graph minus
//! its canonical deletion vertex) only. A child `parent + v` is accepted iff
//! `v` lies in the automorphism orbit of the vertex at the last canonical
//! position; children of one parent that are isomorphic to each other are
//! collapsed by canonical code.

use std::collections::HashSet;

use super::canon::{canonical_form, marked_code};
use super::small::{SmallGraph, MAX_SMALL_N};

/// A generated graph with its canonical code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Generated {
    pub graph: SmallGraph,
    pub code: u128,
}

/// All non-isomorphic one-vertex extensions whose canonical parent is `parent`.
pub fn canonical_children(parent: &SmallGraph) -> Vec<Generated> {
    let k = parent.n();
    assert!(k < MAX_SMALL_N, "cannot extend past {MAX_SMALL_N} vertices");
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0..(1u32 << k) {
        let child = parent.with_vertex(mask as u16);
        let cf = canonical_form(&child);
        let last = cf.order[k];
        let accepted = last == k
            || (child.degree(last) == child.degree(k)
                && marked_code(&child, last) == marked_code(&child, k));
        if accepted && seen.insert(cf.code) {
            out.push(Generated {
                graph: child,
                code: cf.code,
            });
        }
    }
    out
}

/// Every graph on `n` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Vec<Generated> {
    if n == 0 {
        return vec![Generated {
            graph: SmallGraph::new(0),
            code: 0,
        }];
    }
    let mut level = vec![Generated {
        graph: SmallGraph::new(1),
        code: 0,
    }];
    for _ in 1..n {
        level = level
            .iter()
            .flat_map(|g| canonical_children(&g.graph))
            .collect();
    }
    level
}
