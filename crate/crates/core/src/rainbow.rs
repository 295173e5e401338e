//! Rainbow path and cycle search.
//!
//! Every query is a depth-first extension of partial paths. Colors are
//! re-indexed densely per call so the used-color set is a flat bitmask, and
//! neighbors are explored in ascending order, which makes the first witness
//! found the lexicographically least one.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Color, ColoredGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    Path,
    Cycle,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::Path => "path",
            PatternKind::Cycle => "cycle",
        })
    }
}

/// A path `P_len` (len edges, len + 1 vertices) or a cycle `C_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    kind: PatternKind,
    len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("a path needs at least 1 edge")]
    EmptyPath,
    #[error("a cycle needs at least 3 edges, got {0}")]
    ShortCycle(usize),
    #[error("cannot parse pattern {0:?}; expected P<len> or C<len>")]
    Parse(String),
}

impl Pattern {
    pub fn path(len: usize) -> Result<Self, PatternError> {
        if len == 0 {
            return Err(PatternError::EmptyPath);
        }
        Ok(Pattern {
            kind: PatternKind::Path,
            len,
        })
    }

    pub fn cycle(len: usize) -> Result<Self, PatternError> {
        if len < 3 {
            return Err(PatternError::ShortCycle(len));
        }
        Ok(Pattern {
            kind: PatternKind::Cycle,
            len,
        })
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    /// Number of edges (never zero).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn vertex_count(&self) -> usize {
        match self.kind {
            PatternKind::Path => self.len + 1,
            PatternKind::Cycle => self.len,
        }
    }

    /// Ordered vertex sequences per unlabeled copy: 2 for a path, 2·len for a cycle.
    pub fn automorphisms(&self) -> u64 {
        match self.kind {
            PatternKind::Path => 2,
            PatternKind::Cycle => 2 * self.len as u64,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            PatternKind::Path => 'P',
            PatternKind::Cycle => 'C',
        };
        write!(f, "{tag}{}", self.len)
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PatternError::Parse(s.to_string());
        let mut chars = s.trim().chars();
        let tag = chars.next().ok_or_else(bad)?;
        let len: usize = chars.as_str().parse().map_err(|_| bad())?;
        match tag {
            'P' | 'p' => Pattern::path(len),
            'C' | 'c' => Pattern::cycle(len),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnchorRole {
    /// The anchor is the first vertex of the witness path.
    Endpoint,
    /// The anchor is any vertex of the witness.
    Member,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchor {
    pub vertex: usize,
    pub role: AnchorRole,
}

impl Anchor {
    pub fn endpoint(vertex: usize) -> Self {
        Anchor {
            vertex,
            role: AnchorRole::Endpoint,
        }
    }

    pub fn member(vertex: usize) -> Self {
        Anchor {
            vertex,
            role: AnchorRole::Member,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error("anchor {anchor} out of range for a graph on {n} vertices")]
    AnchorOutOfRange { anchor: usize, n: usize },
    #[error("endpoint anchoring applies to path patterns only")]
    EndpointOnCycle,
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
}

/// An explicit rainbow copy: `colors[i]` joins `vertices[i]` to
/// `vertices[i + 1]`; for cycles the last color closes back to `vertices[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RainbowWitness {
    pub kind: PatternKind,
    pub vertices: Vec<usize>,
    pub colors: Vec<Color>,
}

impl RainbowWitness {
    pub fn pattern(&self) -> Pattern {
        Pattern {
            kind: self.kind,
            len: self.colors.len(),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Re-checks the witness against `g` from scratch: adjacency, recorded
    /// colors, distinct vertices and distinct colors.
    pub fn is_valid_in(&self, g: &ColoredGraph) -> bool {
        let k = self.vertices.len();
        let expected_colors = match self.kind {
            PatternKind::Path => k.saturating_sub(1),
            PatternKind::Cycle => k,
        };
        if k == 0 || self.colors.len() != expected_colors {
            return false;
        }
        if self.kind == PatternKind::Cycle && k < 3 {
            return false;
        }
        if self.vertices.iter().any(|&v| v >= g.vertex_count()) {
            return false;
        }
        let distinct_v: BTreeSet<_> = self.vertices.iter().collect();
        let distinct_c: BTreeSet<_> = self.colors.iter().collect();
        if distinct_v.len() != k || distinct_c.len() != self.colors.len() {
            return false;
        }
        self.colors.iter().enumerate().all(|(i, &c)| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % k];
            g.color(a, b) == Some(c)
        })
    }
}

impl fmt::Display for RainbowWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "witness {} {}:", self.kind, self.colors.len())?;
        for (i, v) in self.vertices.iter().enumerate() {
            write!(f, " {v}")?;
            if let Some(c) = self.colors.get(i) {
                write!(f, " -{c}-")?;
            }
        }
        if self.kind == PatternKind::Cycle {
            write!(f, " {}", self.vertices[0])?;
        }
        Ok(())
    }
}

/// Adjacency with colors re-indexed onto `0..palette.len()`.
struct ColorIndex {
    adj: Vec<Vec<(usize, usize)>>,
    palette: Vec<Color>,
}

impl ColorIndex {
    fn new(g: &ColoredGraph) -> Self {
        let palette: Vec<Color> = g.colors().into_iter().collect();
        let dense = |c: Color| palette.binary_search(&c).expect("color in palette");
        let adj = (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().map(|&(w, c)| (w, dense(c))).collect())
            .collect();
        ColorIndex { adj, palette }
    }

    fn color(&self, u: usize, v: usize) -> Option<usize> {
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }
}

struct ColorSet(Vec<u64>);

impl ColorSet {
    fn new(colors: usize) -> Self {
        ColorSet(vec![0; colors.div_ceil(64).max(1)])
    }

    #[inline]
    fn contains(&self, c: usize) -> bool {
        self.0[c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    fn flip(&mut self, c: usize) {
        self.0[c / 64] ^= 1 << (c % 64);
    }
}

type Visit<'v, 'a> = dyn FnMut(&mut Walker<'a>) -> ControlFlow<()> + 'v;

/// One partial rainbow path plus its used-vertex and used-color sets.
struct Walker<'a> {
    idx: &'a ColorIndex,
    on_path: Vec<bool>,
    used: ColorSet,
    verts: Vec<usize>,
    cols: Vec<usize>,
    /// Vertices below `floor` may not be appended.
    floor: usize,
    /// Vertex that must end up on the path, with BFS distances to it.
    target: Option<(usize, Vec<usize>)>,
}

impl<'a> Walker<'a> {
    fn new(idx: &'a ColorIndex) -> Self {
        Walker {
            idx,
            on_path: vec![false; idx.adj.len()],
            used: ColorSet::new(idx.palette.len()),
            verts: Vec::new(),
            cols: Vec::new(),
            floor: 0,
            target: None,
        }
    }

    fn start(&mut self, v: usize) {
        self.clear();
        self.verts.push(v);
        self.on_path[v] = true;
    }

    fn clear(&mut self) {
        while !self.cols.is_empty() {
            self.pop();
        }
        for v in self.verts.drain(..) {
            self.on_path[v] = false;
        }
    }

    fn push(&mut self, v: usize, c: usize) {
        self.verts.push(v);
        self.cols.push(c);
        self.on_path[v] = true;
        self.used.flip(c);
    }

    fn pop(&mut self) {
        let v = self.verts.pop().expect("non-empty walk");
        let c = self.cols.pop().expect("non-empty walk");
        self.on_path[v] = false;
        self.used.flip(c);
    }

    fn reverse(&mut self) {
        self.verts.reverse();
        self.cols.reverse();
    }

    /// Extends the walk from its last vertex by exactly `steps` rainbow
    /// edges, calling `visit` on every completed walk in lexicographic order.
    fn walk(&mut self, steps: usize, visit: &mut Visit<'_, 'a>) -> ControlFlow<()> {
        if steps == 0 {
            return visit(self);
        }
        let end = *self.verts.last().expect("started walk");
        if let Some((t, dist)) = &self.target {
            if !self.on_path[*t] && dist[end] > steps {
                return ControlFlow::Continue(());
            }
        }
        let idx = self.idx;
        for &(w, c) in &idx.adj[end] {
            if w < self.floor || self.on_path[w] || self.used.contains(c) {
                continue;
            }
            self.push(w, c);
            let flow = self.walk(steps - 1, visit);
            self.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn witness(&self, kind: PatternKind, closing: Option<usize>) -> RainbowWitness {
        RainbowWitness {
            kind,
            vertices: self.verts.clone(),
            colors: self
                .cols
                .iter()
                .chain(closing.iter())
                .map(|&c| self.idx.palette[c])
                .collect(),
        }
    }

    /// Dense color of the edge closing the walk into a rainbow cycle, if any.
    fn closing_color(&self) -> Option<usize> {
        let first = self.verts[0];
        let last = *self.verts.last()?;
        self.idx
            .color(last, first)
            .filter(|&c| !self.used.contains(c))
    }
}

fn check_anchor(g: &ColoredGraph, p: Pattern, anchor: Option<Anchor>) -> Result<(), RainbowError> {
    if let Some(a) = anchor {
        if a.vertex >= g.vertex_count() {
            return Err(RainbowError::AnchorOutOfRange {
                anchor: a.vertex,
                n: g.vertex_count(),
            });
        }
        if a.role == AnchorRole::Endpoint && p.kind == PatternKind::Cycle {
            return Err(RainbowError::EndpointOnCycle);
        }
    }
    Ok(())
}

fn target_distances(g: &ColoredGraph, t: usize) -> Vec<usize> {
    g.distances_from(t)
        .into_iter()
        .map(|d| d.unwrap_or(usize::MAX))
        .collect()
}

/// Finds a rainbow copy of `p`, optionally containing `anchor` in the given
/// role. Unanchored and member-anchored results are the lexicographically
/// least vertex sequence among all copies (cycles start at their smallest
/// vertex, towards its smaller neighbor); endpoint-anchored paths start at the
/// anchor and are least among those.
pub fn find_rainbow(
    g: &ColoredGraph,
    p: Pattern,
    anchor: Option<Anchor>,
) -> Result<Option<RainbowWitness>, RainbowError> {
    check_anchor(g, p, anchor)?;
    let idx = ColorIndex::new(g);
    let mut w = Walker::new(&idx);
    let mut found = None;
    let member = match anchor {
        Some(Anchor {
            vertex,
            role: AnchorRole::Member,
        }) => Some(vertex),
        _ => None,
    };
    if let Some(t) = member {
        w.target = Some((t, target_distances(g, t)));
    }

    match (p.kind, anchor) {
        (
            PatternKind::Path,
            Some(Anchor {
                vertex,
                role: AnchorRole::Endpoint,
            }),
        ) => {
            w.start(vertex);
            let _ = w.walk(p.len, &mut |w| {
                found = Some(w.witness(PatternKind::Path, None));
                ControlFlow::Break(())
            });
        }
        (PatternKind::Path, _) => {
            for s in 0..g.vertex_count() {
                w.start(s);
                let flow = w.walk(p.len, &mut |w| {
                    if member.is_some_and(|t| !w.on_path[t]) {
                        return ControlFlow::Continue(());
                    }
                    found = Some(w.witness(PatternKind::Path, None));
                    ControlFlow::Break(())
                });
                if flow.is_break() {
                    break;
                }
            }
        }
        (PatternKind::Cycle, _) => {
            let last_root = member.unwrap_or(g.vertex_count().saturating_sub(1));
            for s in 0..g.vertex_count().min(last_root + 1) {
                w.start(s);
                w.floor = s + 1;
                let flow = w.walk(p.len - 1, &mut |w| {
                    if w.verts[1] > *w.verts.last().unwrap() {
                        return ControlFlow::Continue(());
                    }
                    if member.is_some_and(|t| !w.on_path[t]) {
                        return ControlFlow::Continue(());
                    }
                    match w.closing_color() {
                        Some(c) => {
                            found = Some(w.witness(PatternKind::Cycle, Some(c)));
                            ControlFlow::Break(())
                        }
                        None => ControlFlow::Continue(()),
                    }
                });
                if flow.is_break() {
                    break;
                }
            }
        }
    }
    Ok(found)
}

pub fn is_rainbow_free(g: &ColoredGraph, p: Pattern) -> bool {
    matches!(find_rainbow(g, p, None), Ok(None))
}

/// Ordered rainbow walks of the pattern rooted at `s` (for cycles: with `s`
/// as the smallest vertex, both directions).
fn ordered_from_root(idx: &ColorIndex, p: Pattern, s: usize) -> u64 {
    let mut w = Walker::new(idx);
    w.start(s);
    let mut count = 0u64;
    match p.kind {
        PatternKind::Path => {
            let _ = w.walk(p.len, &mut |_| {
                count += 1;
                ControlFlow::Continue(())
            });
        }
        PatternKind::Cycle => {
            w.floor = s + 1;
            let _ = w.walk(p.len - 1, &mut |w| {
                if w.closing_color().is_some() {
                    count += 1;
                }
                ControlFlow::Continue(())
            });
        }
    }
    count
}

/// Number of rainbow copies of `p`, each unlabeled subgraph counted once.
/// Root vertices are split across the current rayon pool.
pub fn count_rainbow(g: &ColoredGraph, p: Pattern) -> u64 {
    let idx = ColorIndex::new(g);
    let ordered: u64 = (0..g.vertex_count())
        .into_par_iter()
        .map(|s| ordered_from_root(&idx, p, s))
        .sum();
    // Paths are seen from both ends; cycles from their minimum in both directions.
    ordered / 2
}

/// Every rainbow copy of `p` once, in canonical orientation (paths with
/// `v0 < v_last`, cycles from their smallest vertex towards the smaller
/// neighbor), sorted lexicographically.
pub fn enumerate_rainbow(g: &ColoredGraph, p: Pattern) -> Vec<RainbowWitness> {
    let idx = ColorIndex::new(g);
    let per_root: Vec<Vec<RainbowWitness>> = (0..g.vertex_count())
        .into_par_iter()
        .map(|s| {
            let mut out = Vec::new();
            let mut w = Walker::new(&idx);
            w.start(s);
            match p.kind {
                PatternKind::Path => {
                    let _ = w.walk(p.len, &mut |w| {
                        if w.verts[0] < *w.verts.last().unwrap() {
                            out.push(w.witness(PatternKind::Path, None));
                        }
                        ControlFlow::Continue(())
                    });
                }
                PatternKind::Cycle => {
                    w.floor = s + 1;
                    let _ = w.walk(p.len - 1, &mut |w| {
                        if w.verts[1] < *w.verts.last().unwrap() {
                            if let Some(c) = w.closing_color() {
                                out.push(w.witness(PatternKind::Cycle, Some(c)));
                            }
                        }
                        ControlFlow::Continue(())
                    });
                }
            }
            out
        })
        .collect();
    per_root.into_iter().flatten().collect()
}

/// Vertices lying on at least one rainbow cycle of length `len`.
pub fn rainbow_cycle_membership(g: &ColoredGraph, len: usize) -> BTreeSet<usize> {
    let Ok(p) = Pattern::cycle(len) else {
        return BTreeSet::new();
    };
    enumerate_rainbow(g, p)
        .into_iter()
        .flat_map(|w| w.vertices)
        .collect()
}

/// The set V' of vertices lying on some rainbow 5-cycle.
pub fn rainbow_c5_membership(g: &ColoredGraph) -> BTreeSet<usize> {
    rainbow_cycle_membership(g, 5)
}

/// Finds a rainbow copy of `p` that uses the edge `{u, v}`. Useful when `g`
/// is known to be rainbow-free apart from that edge.
pub fn find_rainbow_through_edge(
    g: &ColoredGraph,
    p: Pattern,
    u: usize,
    v: usize,
) -> Result<Option<RainbowWitness>, RainbowError> {
    let n = g.vertex_count();
    if u >= n || v >= n {
        return Err(RainbowError::AnchorOutOfRange {
            anchor: u.max(v),
            n,
        });
    }
    let idx = ColorIndex::new(g);
    let c = idx.color(u, v).ok_or(RainbowError::NotAnEdge(u, v))?;
    let mut w = Walker::new(&idx);
    w.start(v);
    w.push(u, c);
    let mut found = None;
    match p.kind {
        PatternKind::Cycle => {
            // Walk from u back around to v; the closing edge is the last color.
            w.reverse();
            let _ = w.walk(p.len - 2, &mut |w| match w.closing_color() {
                Some(c) => {
                    found = Some(w.witness(PatternKind::Cycle, Some(c)));
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            });
        }
        PatternKind::Path => {
            // Extend past u by `left` edges, then flip and extend past v.
            for left in 0..p.len {
                let right = p.len - 1 - left;
                let flow = w.walk(left, &mut |w| {
                    w.reverse();
                    let flow = w.walk(right, &mut |w| {
                        found = Some(w.witness(PatternKind::Path, None));
                        ControlFlow::Break(())
                    });
                    w.reverse();
                    flow
                });
                if flow.is_break() {
                    break;
                }
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(colors: &[Color]) -> ColoredGraph {
        ColoredGraph::new(
            colors.len() + 1,
            colors.iter().enumerate().map(|(i, &c)| (i, i + 1, c)),
        )
        .unwrap()
    }

    fn cycle_graph(colors: &[Color]) -> ColoredGraph {
        let k = colors.len();
        ColoredGraph::new(
            k,
            colors.iter().enumerate().map(|(i, &c)| (i, (i + 1) % k, c)),
        )
        .unwrap()
    }

    #[test]
    fn pattern_parsing() {
        assert_eq!("P5".parse::<Pattern>().unwrap(), Pattern::path(5).unwrap());
        assert_eq!("c4".parse::<Pattern>().unwrap(), Pattern::cycle(4).unwrap());
        assert!("C2".parse::<Pattern>().is_err());
        assert!("P0".parse::<Pattern>().is_err());
        assert!("X3".parse::<Pattern>().is_err());
        assert!("P".parse::<Pattern>().is_err());
        assert_eq!(Pattern::cycle(5).unwrap().to_string(), "C5");
        assert_eq!(Pattern::path(5).unwrap().vertex_count(), 6);
        assert_eq!(Pattern::cycle(5).unwrap().vertex_count(), 5);
    }

    #[test]
    fn whole_graph_is_the_copy() {
        let g = path_graph(&[1, 2, 3, 4, 5]);
        let w = find_rainbow(&g, Pattern::path(5).unwrap(), None)
            .unwrap()
            .unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(w.colors, vec![1, 2, 3, 4, 5]);
        assert!(w.is_valid_in(&g));
        assert_eq!(
            w.to_string(),
            "witness path 5: 0 -1- 1 -2- 2 -3- 3 -4- 4 -5- 5"
        );
    }

    #[test]
    fn repeated_colors_block_the_path() {
        let g = path_graph(&[1, 2, 1, 2, 1]);
        assert!(is_rainbow_free(&g, Pattern::path(5).unwrap()));
        assert_eq!(count_rainbow(&g, Pattern::path(2).unwrap()), 4);
        assert_eq!(count_rainbow(&g, Pattern::path(3).unwrap()), 0);
    }

    #[test]
    fn cycle_witness_is_canonical() {
        let g = cycle_graph(&[1, 2, 3, 4, 5]);
        let p = Pattern::cycle(5).unwrap();
        let w = find_rainbow(&g, p, None).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(
            w.to_string(),
            "witness cycle 5: 0 -1- 1 -2- 2 -3- 3 -4- 4 -5- 0"
        );
        assert_eq!(count_rainbow(&g, p), 1);
        assert_eq!(rainbow_c5_membership(&g).len(), 5);
        let m = find_rainbow(&g, p, Some(Anchor::member(3)))
            .unwrap()
            .unwrap();
        assert_eq!(m, w);
    }

    #[test]
    fn anchors() {
        let g = path_graph(&[1, 2, 3, 4]);
        let p3 = Pattern::path(3).unwrap();
        let w = find_rainbow(&g, p3, Some(Anchor::endpoint(4)))
            .unwrap()
            .unwrap();
        assert_eq!(w.vertices, vec![4, 3, 2, 1]);
        assert!(find_rainbow(&g, p3, Some(Anchor::endpoint(2)))
            .unwrap()
            .is_none());
        let w = find_rainbow(&g, p3, Some(Anchor::member(4)))
            .unwrap()
            .unwrap();
        assert_eq!(w.vertices, vec![1, 2, 3, 4]);
        assert_eq!(
            find_rainbow(&g, p3, Some(Anchor::member(9))),
            Err(RainbowError::AnchorOutOfRange { anchor: 9, n: 5 })
        );
        assert_eq!(
            find_rainbow(&g, Pattern::cycle(3).unwrap(), Some(Anchor::endpoint(0))),
            Err(RainbowError::EndpointOnCycle)
        );
    }

    #[test]
    fn through_edge() {
        let g = path_graph(&[1, 2, 3, 4, 5]);
        let p = Pattern::path(5).unwrap();
        for i in 0..5 {
            let w = find_rainbow_through_edge(&g, p, i, i + 1).unwrap().unwrap();
            assert!(w.is_valid_in(&g));
        }
        assert!(
            find_rainbow_through_edge(&g, Pattern::path(6).unwrap(), 0, 1)
                .unwrap()
                .is_none()
        );
        assert_eq!(
            find_rainbow_through_edge(&g, p, 0, 2),
            Err(RainbowError::NotAnEdge(0, 2))
        );
        let c = cycle_graph(&[1, 2, 3, 4]);
        let w = find_rainbow_through_edge(&c, Pattern::cycle(4).unwrap(), 2, 3)
            .unwrap()
            .unwrap();
        assert!(w.is_valid_in(&c));
    }

    #[test]
    fn tree_has_no_c5_members() {
        let g = ColoredGraph::new(5, [(0, 1, 1), (0, 2, 2), (0, 3, 3), (3, 4, 1)]).unwrap();
        assert!(rainbow_c5_membership(&g).is_empty());
    }

    #[test]
    fn witness_validation_rejects_tampering() {
        let g = cycle_graph(&[1, 2, 3, 4, 5]);
        let mut w = find_rainbow(&g, Pattern::cycle(5).unwrap(), None)
            .unwrap()
            .unwrap();
        w.colors[0] = 9;
        assert!(!w.is_valid_in(&g));
    }
}
