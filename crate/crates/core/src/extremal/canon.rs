//! Canonical labeling of small graphs by individualization and refinement.
//!
//! The canonical code is the largest upper-triangle bit string over all
//! leaves of the search tree. Refinement splits cells by neighbor counts into
//! every other cell until stable; branching skips twins of already-tried
//! vertices because swapping twins is an automorphism fixing the partition.

use super::small::SmallGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: u128,
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    canonical_form_with(g, vec![(0..g.n()).collect()])
}

/// Canonical code of `g` with vertex `v` distinguished. Two vertices lie in
/// the same automorphism orbit iff their marked codes agree.
pub fn marked_code(g: &SmallGraph, v: usize) -> u128 {
    let rest = (0..g.n()).filter(|&x| x != v).collect();
    canonical_form_with(g, vec![vec![v], rest]).code
}

/// Canonical form relative to an ordered initial partition.
pub fn canonical_form_with(g: &SmallGraph, cells: Vec<Vec<usize>>) -> CanonicalForm {
    let cells: Vec<Vec<usize>> = cells.into_iter().filter(|c| !c.is_empty()).collect();
    let mut best = None;
    search(g, cells, &mut best);
    let (code, order) = best.unwrap_or((0, Vec::new()));
    CanonicalForm { code, order }
}

pub fn encode(g: &SmallGraph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

fn refine(g: &SmallGraph, cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u16, |m, &v| m | 1 << v);
            for t in 0..cells.len() {
                if cells[t].len() < 2 {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[t]
                    .iter()
                    .map(|&v| ((g.neighbors(v) & splitter).count_ones(), v))
                    .collect();
                if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                    continue;
                }
                keyed.sort_by_key(|&(k, _)| k);
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        parts.push(Vec::new());
                        last = Some(k);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(t..=t, parts);
                continue 'restart;
            }
        }
        return;
    }
}

fn search(g: &SmallGraph, mut cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(t) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = encode(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[t] {
        if tried.iter().any(|&w| g.twins(v, w)) {
            continue;
        }
        tried.push(v);
        let rest: Vec<usize> = cells[t].iter().copied().filter(|&x| x != v).collect();
        let mut next = cells.clone();
        next.splice(t..=t, [vec![v], rest]);
        search(g, next, best);
    }
}
