//! Exact rainbow Turán numbers `ex*(n, F)` for tiny `n`.
//!
//! Graphs are generated isomorph-free by canonical augmentation, one vertex at
//! a time. Being colorable without a rainbow `F` is inherited by induced
//! subgraphs and every generated graph's parent is an induced subgraph, so
//! only colorable parents are extended. On the last layer, edge counts are
//! tried from the cap downwards and the first colorable count is the answer
//! (deleting an edge never creates a rainbow copy).

pub mod augment;
pub mod canon;
pub mod coloring;
pub mod small;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::constructions::theoretical_bounds;
use crate::graph::{Color, ColoredGraph, Edge, GraphError};
use crate::rainbow::{
    find_rainbow, find_rainbow_through_edge, Pattern, PatternKind, RainbowWitness,
};

use augment::{canonical_children, Generated};
use canon::canonical_form;
use coloring::{search_coloring, ColoringOptions, ColoringOutcome, MAX_COLORING_N};
use small::{SmallGraph, MAX_SMALL_N};

/// `ex_star_exact` refuses larger `n` unless forced.
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("n = {n} exceeds the default limit {limit}; pass force to run anyway (cost grows exponentially)")]
    Refused { n: usize, limit: usize },
    #[error("n = {n} exceeds the enumeration limit {MAX_SMALL_N}")]
    TooLarge { n: usize },
    #[error("n must be at least 1")]
    NoVertices,
    #[error("edge cap {cap} is below the known lower bound {lower}")]
    CapBelowLowerBound { cap: usize, lower: usize },
    #[error("graph is not properly colored")]
    NotProper,
    #[error("graph already contains a rainbow copy: {0}")]
    NotRainbowFree(RainbowWitness),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    /// Highest edge count to try; defaults to the known upper bound.
    pub edge_cap: Option<usize>,
    /// Lift the [`DEFAULT_MAX_N`] guard.
    pub force: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Canonical graphs produced by augmentation.
    pub graphs_enumerated: u64,
    /// Coloring searches started.
    pub colorings_attempted: u64,
    /// Backtracking nodes over all coloring searches.
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalResult {
    pub n: usize,
    pub pattern: Pattern,
    pub value: usize,
    pub witness: ColoredGraph,
    pub edge_cap: usize,
    pub stats: SearchStats,
}

impl ExtremalResult {
    /// True when the value equals a cap below `n(n-1)/2`; the search then
    /// only shows `ex* >= value`.
    pub fn hit_cap(&self) -> bool {
        self.value == self.edge_cap && self.edge_cap < self.n * self.n.saturating_sub(1) / 2
    }
}

impl fmt::Display for ExtremalResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ex*({}, {}) = {}", self.n, self.pattern, self.value)?;
        writeln!(
            f,
            "edge_cap {}{}",
            self.edge_cap,
            if self.hit_cap() { " (reached)" } else { "" }
        )?;
        writeln!(f, "graphs_enumerated {}", self.stats.graphs_enumerated)?;
        writeln!(f, "colorings_attempted {}", self.stats.colorings_attempted)?;
        writeln!(f, "nodes_explored {}", self.stats.nodes_explored)?;
        write!(f, "wall_time_ms {}", self.stats.elapsed.as_millis())
    }
}

/// A lower bound on `ex*(n, p)` that needs no search.
pub fn known_lower_bound(n: usize, p: Pattern) -> usize {
    match (p.kind(), p.len()) {
        (PatternKind::Path, 1) => 0,
        (PatternKind::Path, 2) => n / 2,
        (PatternKind::Path, len) => theoretical_bounds(n as u64, len)
            .map(|b| b.lower.to_integer() as usize)
            .unwrap_or(0),
        // a spanning path has no cycles
        (PatternKind::Cycle, _) => n.saturating_sub(1),
    }
}

/// The cap used when none is given: the known upper bound for paths of length
/// at least 3, otherwise `n(n-1)/2`.
pub fn default_edge_cap(n: usize, p: Pattern) -> usize {
    let complete = n * n.saturating_sub(1) / 2;
    match p.kind() {
        PatternKind::Path if p.len() >= 3 => theoretical_bounds(n as u64, p.len())
            .map(|b| b.upper.floor().to_integer() as usize)
            .unwrap_or(complete)
            .min(complete),
        _ => complete,
    }
}

#[derive(Default)]
struct Counters {
    colorings: AtomicU64,
    nodes: AtomicU64,
}

impl Counters {
    fn color(&self, g: &SmallGraph, p: Pattern) -> ColoringOutcome {
        let out = search_coloring(g.n(), &g.edges(), p, ColoringOptions::default());
        self.colorings.fetch_add(1, Ordering::Relaxed);
        self.nodes.fetch_add(out.nodes, Ordering::Relaxed);
        out
    }
}

/// Exact maximum edge count of an `n`-vertex graph admitting a proper
/// coloring without a rainbow copy of `p`, with the canonically least
/// maximizer as witness.
pub fn ex_star_exact(
    n: usize,
    p: Pattern,
    opts: SearchOptions,
) -> Result<ExtremalResult, ExtremalError> {
    let start = Instant::now();
    if n == 0 {
        return Err(ExtremalError::NoVertices);
    }
    if n > MAX_SMALL_N {
        return Err(ExtremalError::TooLarge { n });
    }
    if n > DEFAULT_MAX_N && !opts.force {
        return Err(ExtremalError::Refused {
            n,
            limit: DEFAULT_MAX_N,
        });
    }
    let complete = n * (n - 1) / 2;
    let cap = opts
        .edge_cap
        .unwrap_or_else(|| default_edge_cap(n, p))
        .min(complete);
    let lower = known_lower_bound(n, p);
    if cap < lower {
        return Err(ExtremalError::CapBelowLowerBound { cap, lower });
    }

    let counters = Counters::default();
    let mut enumerated = 1u64;
    let mut level = vec![Generated {
        graph: SmallGraph::new(1),
        code: 0,
    }];
    for size in 2..=n {
        let children: Vec<Generated> = level
            .par_iter()
            .flat_map_iter(|g| canonical_children(&g.graph))
            .filter(|g| g.graph.edge_count() <= cap)
            .collect();
        enumerated += children.len() as u64;
        level = if size < n {
            children
                .into_par_iter()
                .filter(|g| counters.color(&g.graph, p).coloring.is_some())
                .collect()
        } else {
            children
        };
    }

    let mut buckets: Vec<Vec<Generated>> = vec![Vec::new(); cap + 1];
    for g in level {
        buckets[g.graph.edge_count()].push(g);
    }
    for m in (0..=cap).rev() {
        let mut bucket = std::mem::take(&mut buckets[m]);
        bucket.sort_by_key(|g| g.code);
        let hit = bucket
            .par_iter()
            .map(|g| g.graph.reordered(&canonical_form(&g.graph).order))
            .find_first(|g| counters.color(g, p).coloring.is_some());
        if let Some(graph) = hit {
            let coloring =
                search_coloring(graph.n(), &graph.edges(), p, ColoringOptions::default())
                    .coloring
                    .expect("feasible graph recolors deterministically");
            let witness = ColoredGraph::new(n, coloring)?;
            return Ok(ExtremalResult {
                n,
                pattern: p,
                value: m,
                witness,
                edge_cap: cap,
                stats: SearchStats {
                    graphs_enumerated: enumerated,
                    colorings_attempted: counters.colorings.load(Ordering::Relaxed),
                    nodes_explored: counters.nodes.load(Ordering::Relaxed),
                    elapsed: start.elapsed(),
                },
            });
        }
    }
    unreachable!("the edgeless graph is always rainbow-free")
}

/// A proper coloring of the simple graph `(n, edges)` with no rainbow copy of
/// `p`, if one exists. The search is complete.
pub fn admits_rainbow_free_coloring(
    n: usize,
    edges: &[(usize, usize)],
    p: Pattern,
) -> Result<Option<ColoredGraph>, ExtremalError> {
    admits_rainbow_free_coloring_with(n, edges, p, ColoringOptions::default())
}

pub fn admits_rainbow_free_coloring_with(
    n: usize,
    edges: &[(usize, usize)],
    p: Pattern,
    opts: ColoringOptions,
) -> Result<Option<ColoredGraph>, ExtremalError> {
    if n > MAX_COLORING_N {
        return Err(ExtremalError::TooLarge { n });
    }
    // Validates simplicity and ranges.
    ColoredGraph::new(n, edges.iter().map(|&(u, v)| (u, v, 1)))?;
    let out = search_coloring(n, edges, p, opts);
    out.coloring
        .map(|c| ColoredGraph::new(n, c).map_err(ExtremalError::from))
        .transpose()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Maximality {
    /// Every non-edge under every legal color creates a rainbow copy.
    Maximal,
    /// This edge can be added without creating a rainbow copy.
    Extendable(Edge),
}

impl Maximality {
    pub fn is_maximal(&self) -> bool {
        matches!(self, Maximality::Maximal)
    }
}

/// Checks that no single edge can be added, under any used color or one
/// fresh color that keeps the coloring proper, without creating a rainbow
/// copy of `p`.
pub fn certify_maximal(g: &ColoredGraph, p: Pattern) -> Result<Maximality, ExtremalError> {
    if !g.is_proper() {
        return Err(ExtremalError::NotProper);
    }
    if let Some(w) = find_rainbow(g, p, None).expect("unanchored search") {
        return Err(ExtremalError::NotRainbowFree(w));
    }
    let mut palette: Vec<Color> = g.colors().into_iter().collect();
    palette.push(g.max_color() + 1);
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            for &c in &palette {
                let clash = |x: usize| g.neighbors(x).iter().any(|&(_, cx)| cx == c);
                if clash(u) || clash(v) {
                    continue;
                }
                let h = g.with_edge(u, v, c)?;
                let created = find_rainbow_through_edge(&h, p, u, v).expect("edge was just added");
                if created.is_none() {
                    return Ok(Maximality::Extendable(Edge::new(u, v, c)));
                }
            }
        }
    }
    Ok(Maximality::Maximal)
}
