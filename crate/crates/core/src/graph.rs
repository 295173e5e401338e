//! Simple undirected graphs with one positive integer color per edge.
//!
//! Vertices are the dense range `0..n`; isolated vertices are allowed. The
//! value is immutable once built: every transformation returns a new graph.

use std::collections::{BTreeSet, VecDeque};

use num_rational::Ratio;
use thiserror::Error;

/// Opaque edge color id. Valid colors are `>= 1`.
pub type Color = u32;

/// Exact rational used for every degree average and threshold.
pub type Rational = Ratio<u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: Color,
}

impl Edge {
    /// Builds an edge with endpoints normalized so that `u < v`.
    pub fn new(a: usize, b: usize, color: Color) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
            color,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {{{0}, {1}}} has color 0 (colors start at 1)")]
    ZeroColor(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    n: usize,
    /// Sorted by `(u, v)`.
    edges: Vec<Edge>,
    /// Per vertex, `(neighbor, color)` sorted by neighbor.
    adj: Vec<Vec<(usize, Color)>>,
}

impl ColoredGraph {
    /// Validates and builds a graph. Endpoint order within a triple does not
    /// matter; the stored edge list is canonical (sorted by `(u, v)`).
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let mut list = Vec::new();
        for (a, b, color) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            if color == 0 {
                return Err(GraphError::ZeroColor(a.min(b), a.max(b)));
            }
            list.push(Edge::new(a, b, color));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if (w[0].u, w[0].v) == (w[1].u, w[1].v) {
                return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        Ok(Self::from_sorted(n, list))
    }

    pub fn empty(n: usize) -> Self {
        ColoredGraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    // `edges` must already be valid and sorted.
    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push((e.v, e.color));
            adj[e.v].push((e.u, e.color));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        ColoredGraph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Incident `(neighbor, color)` pairs in ascending neighbor order.
    pub fn neighbors(&self, v: usize) -> &[(usize, Color)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.color(u, v).is_some()
    }

    pub fn colors(&self) -> BTreeSet<Color> {
        self.edges.iter().map(|e| e.color).collect()
    }

    pub fn max_color(&self) -> Color {
        self.edges.iter().map(|e| e.color).max().unwrap_or(0)
    }

    /// `None` for the graph on zero vertices.
    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `2|E| / n` exactly; zero for the graph on zero vertices.
    pub fn average_degree(&self) -> Rational {
        average(2 * self.edges.len() as u64, self.n as u64)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &(y, _) in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let components = self
            .components()
            .into_iter()
            .map(|vertices| {
                let degree_sum: u64 = vertices.iter().map(|&v| self.degree(v) as u64).sum();
                ComponentSummary {
                    edges: (degree_sum / 2) as usize,
                    avg_degree: average(degree_sum, vertices.len() as u64),
                    vertices,
                }
            })
            .collect();
        DegreeSummary {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            avg_degree: self.average_degree(),
            components,
        }
    }

    /// True iff no two edges sharing a vertex have the same color.
    pub fn is_proper(&self) -> bool {
        self.adj.iter().all(|list| {
            let mut seen: Vec<Color> = list.iter().map(|&(_, c)| c).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Subgraph induced by `keep`, relabeled onto `0..keep.len()` in the
    /// order given. Colors are preserved.
    pub fn induced_subgraph(&self, keep: &[usize]) -> ColoredGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| Edge::new(index[e.u], index[e.v], e.color))
            .collect();
        edges.sort_unstable();
        Self::from_sorted(keep.len(), edges)
    }

    /// Copy of this graph with one more edge.
    pub fn with_edge(&self, a: usize, b: usize, color: Color) -> Result<ColoredGraph, GraphError> {
        let extra = std::iter::once((a, b, color));
        ColoredGraph::new(
            self.n,
            self.edges.iter().map(|e| (e.u, e.v, e.color)).chain(extra),
        )
    }

    /// Same colored graph with vertex ids mapped through `perm` (old → new).
    pub fn relabeled(&self, perm: &[usize]) -> Result<ColoredGraph, GraphError> {
        ColoredGraph::new(
            self.n,
            self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.color)),
        )
    }
}

fn average(sum: u64, count: u64) -> Rational {
    if count == 0 {
        Rational::from_integer(0)
    } else {
        Rational::new(sum, count)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    pub vertices: Vec<usize>,
    pub edges: usize,
    pub avg_degree: Rational,
}

/// Degree statistics; every average is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSummary {
    pub min_degree: Option<usize>,
    pub max_degree: usize,
    pub avg_degree: Rational,
    pub components: Vec<ComponentSummary>,
}

pub fn is_proper(g: &ColoredGraph) -> bool {
    g.is_proper()
}

/// Vertices (ascending, original ids) of the maximal subgraph with minimum
/// degree at least `k`.
pub fn k_core_vertices(g: &ColoredGraph, k: usize) -> Vec<usize> {
    let mut degree: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; g.n];
    let mut stack: Vec<usize> = (0..g.n).filter(|&v| degree[v] < k).collect();
    for &v in &stack {
        removed[v] = true;
    }
    while let Some(v) = stack.pop() {
        for &(w, _) in g.neighbors(v) {
            if removed[w] {
                continue;
            }
            degree[w] -= 1;
            if degree[w] < k {
                removed[w] = true;
                stack.push(w);
            }
        }
    }
    (0..g.n).filter(|&v| !removed[v]).collect()
}

/// Iteratively deletes vertices of degree `< k` until none remain. The
/// survivors are relabeled onto `0..` in their original relative order.
pub fn prune_min_degree(g: &ColoredGraph, k: usize) -> ColoredGraph {
    g.induced_subgraph(&k_core_vertices(g, k))
}

/// Vertices (ascending) of components whose average degree exceeds `threshold`.
pub fn heavy_component_vertices(g: &ColoredGraph, threshold: Rational) -> Vec<usize> {
    let mut keep: Vec<usize> = g
        .degree_summary()
        .components
        .into_iter()
        .filter(|c| c.avg_degree > threshold)
        .flat_map(|c| c.vertices)
        .collect();
    keep.sort_unstable();
    keep
}

/// Removes every component whose average degree is at most `threshold`.
pub fn drop_light_components(g: &ColoredGraph, threshold: Rational) -> ColoredGraph {
    g.induced_subgraph(&heavy_component_vertices(g, threshold))
}

/// Original ids of the vertices that survive [`preprocess`].
pub fn preprocess_vertices(g: &ColoredGraph) -> Vec<usize> {
    let core = k_core_vertices(g, 3);
    let pruned = g.induced_subgraph(&core);
    heavy_component_vertices(&pruned, Rational::from_integer(5))
        .into_iter()
        .map(|i| core[i])
        .collect()
}

/// Min-degree-3 pruning followed by deletion of components with average
/// degree at most 5.
pub fn preprocess(g: &ColoredGraph) -> ColoredGraph {
    drop_light_components(&prune_min_degree(g, 3), Rational::from_integer(5))
}

/// Places the inputs side by side on consecutive vertex ranges. With
/// `share_colors` the color ids are kept; otherwise each copy's colors are
/// shifted past every color used by the copies before it.
pub fn disjoint_union(gs: &[ColoredGraph], share_colors: bool) -> ColoredGraph {
    let n = gs.iter().map(|g| g.n).sum();
    let mut edges = Vec::with_capacity(gs.iter().map(|g| g.edges.len()).sum());
    let mut vertex_offset = 0;
    let mut color_offset: Color = 0;
    for g in gs {
        let shift = if share_colors { 0 } else { color_offset };
        edges.extend(
            g.edges
                .iter()
                .map(|e| Edge::new(e.u + vertex_offset, e.v + vertex_offset, e.color + shift)),
        );
        vertex_offset += g.n;
        color_offset += g.max_color();
    }
    // Ranges are consecutive, so sorting per copy keeps the whole list sorted.
    ColoredGraph::from_sorted(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> ColoredGraph {
        ColoredGraph::new(
            4,
            [
                (0, 1, 1),
                (2, 3, 1),
                (0, 2, 2),
                (1, 3, 2),
                (0, 3, 3),
                (1, 2, 3),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(ColoredGraph::new(3, [(1, 1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            ColoredGraph::new(3, [(0, 1, 1), (1, 0, 2)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            ColoredGraph::new(3, [(0, 3, 1)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            ColoredGraph::new(3, [(2, 0, 0)]),
            Err(GraphError::ZeroColor(0, 2))
        );
    }

    #[test]
    fn properness() {
        assert!(k4().is_proper());
        let tri = ColoredGraph::new(3, [(0, 1, 1), (1, 2, 1), (0, 2, 2)]).unwrap();
        assert!(!tri.is_proper());
        assert!(ColoredGraph::empty(5).is_proper());
    }

    #[test]
    fn exact_averages() {
        assert_eq!(k4().average_degree(), Rational::from_integer(3));
        let s = k4().degree_summary();
        assert_eq!(s.min_degree, Some(3));
        assert_eq!(s.components.len(), 1);
        assert_eq!(
            ColoredGraph::empty(0).average_degree(),
            Rational::from_integer(0)
        );
        assert_eq!(ColoredGraph::empty(0).min_degree(), None);
    }

    #[test]
    fn pruning_examples() {
        let p4 = ColoredGraph::new(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1)]).unwrap();
        assert!(prune_min_degree(&p4, 3).is_empty());

        let mut edges: Vec<_> = k4().edges().iter().map(|e| (e.u, e.v, e.color)).collect();
        edges.push((3, 4, 4));
        let pendant = ColoredGraph::new(5, edges).unwrap();
        assert_eq!(prune_min_degree(&pendant, 3), k4());
    }

    #[test]
    fn light_components() {
        assert!(drop_light_components(&k4(), Rational::from_integer(5)).is_empty());
        assert_eq!(drop_light_components(&k4(), Rational::new(5, 2)), k4());
        assert!(preprocess(&ColoredGraph::empty(0)).is_empty());
    }

    #[test]
    fn union_colors() {
        let e = ColoredGraph::new(2, [(0, 1, 1)]).unwrap();
        let u = disjoint_union(&[e.clone(), e.clone()], false);
        assert_eq!(u.vertex_count(), 4);
        assert_eq!(u.colors().len(), 2);
        assert_eq!(
            disjoint_union(&[e.clone(), e.clone()], true).colors().len(),
            1
        );
        assert_eq!(disjoint_union(&[k4()], true), k4());
    }

    #[test]
    fn distances() {
        let p = ColoredGraph::new(4, [(0, 1, 1), (1, 2, 2)]).unwrap();
        assert_eq!(p.distances_from(0), vec![Some(0), Some(1), Some(2), None]);
    }
}
