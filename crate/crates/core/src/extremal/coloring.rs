//! Backtracking search for a proper edge coloring with no rainbow copy of a
//! path or cycle.
//!
//! Edges are colored in a fixed breadth-first order so that short paths and
//! cycles close early. After each assignment only copies through the new
//! edge are searched for, since every earlier copy was already excluded.

use crate::graph::Color;
use crate::rainbow::{Pattern, PatternKind};

/// Hard limit on colors (they live in a `u64` mask, bit 0 unused).
pub const MAX_COLORS: usize = 63;
pub const MAX_COLORING_N: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoringOptions {
    /// Only allow color `k + 1` once colors `1..=k` are in use.
    pub symmetry_breaking: bool,
    /// Overrides the default palette size.
    pub max_colors: Option<usize>,
}

impl Default for ColoringOptions {
    fn default() -> Self {
        ColoringOptions {
            symmetry_breaking: true,
            max_colors: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringOutcome {
    /// `(u, v, color)` for every input edge, in input order.
    pub coloring: Option<Vec<(usize, usize, Color)>>,
    pub nodes: u64,
    pub palette: usize,
}

/// Enough colors to realize some rainbow-free proper coloring whenever one
/// exists. Two color classes that never meet at a vertex can be merged
/// without breaking properness or creating a rainbow copy, so a coloring with
/// the fewest colors has every pair of classes meeting at some vertex; hence
/// `k(k-1)/2 <= sum_v d(v)(d(v)-1)/2`.
pub fn sufficient_palette(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut degree = vec![0usize; n];
    for &(u, v) in edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let pairs: usize = degree.iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
    let mut k = 1;
    while (k + 1) * k / 2 <= pairs {
        k += 1;
    }
    k.min(edges.len().max(1))
}

/// Breadth-first vertex order, each component started from its highest
/// degree vertex; edges sorted by their later endpoint, then earlier.
pub fn heuristic_edge_order(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut pos = vec![usize::MAX; n];
    let mut next = 0;
    while next < n {
        let root = (0..n)
            .filter(|&v| pos[v] == usize::MAX)
            .max_by_key(|&v| (adj[v].len(), std::cmp::Reverse(v)))
            .expect("unvisited vertex");
        pos[root] = next;
        next += 1;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if pos[y] == usize::MAX {
                    pos[y] = next;
                    next += 1;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut idx: Vec<usize> = (0..edges.len()).collect();
    idx.sort_by_key(|&i| {
        let (a, b) = (pos[edges[i].0], pos[edges[i].1]);
        (a.max(b), a.min(b))
    });
    idx
}

struct Search {
    pattern: Pattern,
    n: usize,
    order: Vec<(usize, usize)>,
    palette: usize,
    symmetry_breaking: bool,
    /// Colors present at each vertex.
    at: Vec<u64>,
    /// Colored adjacency, push/pop in assignment order.
    nbr: Vec<Vec<(usize, usize)>>,
    /// Color of each colored pair, 0 when absent.
    mat: Vec<usize>,
    assigned: Vec<usize>,
    nodes: u64,
}

impl Search {
    fn assign(&mut self, u: usize, v: usize, c: usize) {
        self.at[u] |= 1 << c;
        self.at[v] |= 1 << c;
        self.nbr[u].push((v, c));
        self.nbr[v].push((u, c));
        self.mat[u * self.n + v] = c;
        self.mat[v * self.n + u] = c;
    }

    fn unassign(&mut self, u: usize, v: usize, c: usize) {
        self.at[u] &= !(1 << c);
        self.at[v] &= !(1 << c);
        self.nbr[u].pop();
        self.nbr[v].pop();
        self.mat[u * self.n + v] = 0;
        self.mat[v * self.n + u] = 0;
    }

    fn dfs(&mut self, i: usize, max_used: usize) -> bool {
        self.nodes += 1;
        if i == self.order.len() {
            return true;
        }
        let (u, v) = self.order[i];
        let limit = if self.symmetry_breaking {
            (max_used + 1).min(self.palette)
        } else {
            self.palette
        };
        let blocked = self.at[u] | self.at[v];
        for c in 1..=limit {
            if blocked >> c & 1 == 1 {
                continue;
            }
            self.assign(u, v, c);
            if !self.rainbow_through(u, v, c) {
                self.assigned[i] = c;
                if self.dfs(i + 1, max_used.max(c)) {
                    return true;
                }
            }
            self.unassign(u, v, c);
        }
        false
    }

    fn rainbow_through(&self, u: usize, v: usize, c: usize) -> bool {
        let vis = 1u64 << u | 1u64 << v;
        let cols = 1u64 << c;
        match self.pattern.kind() {
            PatternKind::Path => self.grow_right(v, u, 1, vis, cols),
            PatternKind::Cycle => self.close(v, u, self.pattern.len() - 2, vis, cols),
        }
    }

    /// Path through the new edge: extend past `end` on one side, then past
    /// `u` on the other for the remaining length.
    fn grow_right(&self, end: usize, u: usize, have: usize, vis: u64, cols: u64) -> bool {
        if self.grow_left(u, self.pattern.len() - have, vis, cols) {
            return true;
        }
        for &(w, cw) in &self.nbr[end] {
            if vis >> w & 1 == 0
                && cols >> cw & 1 == 0
                && self.grow_right(w, u, have + 1, vis | 1 << w, cols | 1 << cw)
            {
                return true;
            }
        }
        false
    }

    fn grow_left(&self, end: usize, need: usize, vis: u64, cols: u64) -> bool {
        if need == 0 {
            return true;
        }
        self.nbr[end].iter().any(|&(w, cw)| {
            vis >> w & 1 == 0
                && cols >> cw & 1 == 0
                && self.grow_left(w, need - 1, vis | 1 << w, cols | 1 << cw)
        })
    }

    fn close(&self, end: usize, home: usize, steps: usize, vis: u64, cols: u64) -> bool {
        if steps == 0 {
            let c = self.mat[end * self.n + home];
            return c != 0 && cols >> c & 1 == 0;
        }
        self.nbr[end].iter().any(|&(w, cw)| {
            vis >> w & 1 == 0
                && cols >> cw & 1 == 0
                && self.close(w, home, steps - 1, vis | 1 << w, cols | 1 << cw)
        })
    }
}

/// Complete search: returns a coloring iff one exists within the palette.
/// `edges` must be a simple graph on `0..n` with `n <= 64`.
pub fn search_coloring(
    n: usize,
    edges: &[(usize, usize)],
    pattern: Pattern,
    opts: ColoringOptions,
) -> ColoringOutcome {
    assert!(n <= MAX_COLORING_N);
    let palette = opts
        .max_colors
        .unwrap_or_else(|| sufficient_palette(n, edges))
        .min(MAX_COLORS);
    let perm = heuristic_edge_order(n, edges);
    let mut s = Search {
        pattern,
        n,
        order: perm.iter().map(|&i| edges[i]).collect(),
        palette,
        symmetry_breaking: opts.symmetry_breaking,
        at: vec![0; n],
        nbr: vec![Vec::new(); n],
        mat: vec![0; n * n],
        assigned: vec![0; edges.len()],
        nodes: 0,
    };
    let found = s.dfs(0, 0);
    let coloring = found.then(|| {
        let mut out = vec![(0, 0, 0); edges.len()];
        for (k, &i) in perm.iter().enumerate() {
            out[i] = (edges[i].0, edges[i].1, s.assigned[k] as Color);
        }
        out
    });
    ColoringOutcome {
        coloring,
        nodes: s.nodes,
        palette,
    }
}
