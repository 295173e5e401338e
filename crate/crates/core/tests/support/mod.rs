//! Brute-force oracles that share no code with the library's search.
#![allow(dead_code)]

use rainbow_core::{Color, ColoredGraph};

/// Colored adjacency matrix, 0 for no edge.
pub fn matrix(g: &ColoredGraph) -> Vec<Vec<Color>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0; n]; n];
    for e in g.edges() {
        m[e.u][e.v] = e.color;
        m[e.v][e.u] = e.color;
    }
    m
}

fn distinct(colors: &[Color]) -> bool {
    (0..colors.len()).all(|i| (i + 1..colors.len()).all(|j| colors[i] != colors[j]))
}

/// Every sequence of `k` distinct vertices from `0..n`.
fn sequences(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, k: usize, seq: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if seq.len() == k {
            f(seq);
            return;
        }
        for v in 0..n {
            if !seq.contains(&v) {
                seq.push(v);
                rec(n, k, seq, f);
                seq.pop();
            }
        }
    }
    rec(n, k, &mut Vec::new(), f);
}

/// Ordered vertex sequences forming a rainbow path with `len` edges.
pub fn ordered_rainbow_paths(m: &[Vec<Color>], len: usize) -> u64 {
    let mut count = 0;
    sequences(m.len(), len + 1, &mut |s| {
        let colors: Vec<Color> = s.windows(2).map(|w| m[w[0]][w[1]]).collect();
        if colors.iter().all(|&c| c != 0) && distinct(&colors) {
            count += 1;
        }
    });
    count
}

/// Ordered vertex sequences forming a rainbow cycle with `len` edges.
pub fn ordered_rainbow_cycles(m: &[Vec<Color>], len: usize) -> u64 {
    let mut count = 0;
    sequences(m.len(), len, &mut |s| {
        let colors: Vec<Color> = (0..len).map(|i| m[s[i]][s[(i + 1) % len]]).collect();
        if colors.iter().all(|&c| c != 0) && distinct(&colors) {
            count += 1;
        }
    });
    count
}

/// Unlabeled rainbow copies: ordered sequences over the pattern's
/// automorphism count.
pub fn naive_count(g: &ColoredGraph, cycle: bool, len: usize) -> u64 {
    let m = matrix(g);
    if cycle {
        ordered_rainbow_cycles(&m, len) / (2 * len as u64)
    } else {
        ordered_rainbow_paths(&m, len) / 2
    }
}

/// All proper colorings of `edges`, as restricted growth strings (color
/// classes up to renaming), filtered for properness only at the end.
pub fn proper_colorings(
    n: usize,
    edges: &[(usize, usize)],
    f: &mut dyn FnMut(&[Color]) -> bool,
) -> bool {
    fn rec(
        n: usize,
        edges: &[(usize, usize)],
        colors: &mut Vec<Color>,
        max: Color,
        f: &mut dyn FnMut(&[Color]) -> bool,
    ) -> bool {
        if colors.len() == edges.len() {
            let proper = (0..edges.len()).all(|i| {
                (i + 1..edges.len()).all(|j| {
                    let (a, b) = (edges[i], edges[j]);
                    let touch = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
                    !touch || colors[i] != colors[j]
                })
            });
            let _ = n;
            return proper && f(colors);
        }
        for c in 1..=max + 1 {
            colors.push(c);
            if rec(n, edges, colors, max.max(c), f) {
                return true;
            }
            colors.pop();
        }
        false
    }
    rec(n, edges, &mut Vec::new(), 0, f)
}

fn colored_matrix(n: usize, edges: &[(usize, usize)], colors: &[Color]) -> Vec<Vec<Color>> {
    let mut m = vec![vec![0; n]; n];
    for (&(u, v), &c) in edges.iter().zip(colors) {
        m[u][v] = c;
        m[v][u] = c;
    }
    m
}

pub fn has_rainbow(m: &[Vec<Color>], cycle: bool, len: usize) -> bool {
    if cycle {
        ordered_rainbow_cycles(m, len) > 0
    } else {
        ordered_rainbow_paths(m, len) > 0
    }
}

/// Does some proper coloring of the graph avoid a rainbow copy?
pub fn naive_admits(n: usize, edges: &[(usize, usize)], cycle: bool, len: usize) -> bool {
    proper_colorings(n, edges, &mut |colors| {
        !has_rainbow(&colored_matrix(n, edges, colors), cycle, len)
    })
}

/// `ex*(n, F)` over every labeled graph on `n` vertices.
pub fn naive_ex_star(n: usize, cycle: bool, len: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut best = 0;
    for mask in 0u32..(1 << pairs.len()) {
        let m = mask.count_ones() as usize;
        if m <= best {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        if naive_admits(n, &edges, cycle, len) {
            best = m;
        }
    }
    best
}

/// Deterministic random colored graph (proper or not) for oracle
/// comparisons; a tiny LCG keeps this independent of the library's RNG use.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    pub fn below(&mut self, k: u64) -> u64 {
        self.next() % k
    }
}

/// Random properly colored graph: random edges with random colors from a
/// palette, dropped when they would break properness.
pub fn random_proper(
    rng: &mut Lcg,
    n: usize,
    density_percent: u64,
    palette: Color,
) -> ColoredGraph {
    let mut at = vec![Vec::<Color>::new(); n];
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(100) >= density_percent {
                continue;
            }
            let c = 1 + rng.below(palette as u64) as Color;
            if at[u].contains(&c) || at[v].contains(&c) {
                continue;
            }
            at[u].push(c);
            at[v].push(c);
            edges.push((u, v, c));
        }
    }
    ColoredGraph::new(n, edges).unwrap()
}

/// Random colored graph with no properness guarantee.
pub fn random_colored(
    rng: &mut Lcg,
    n: usize,
    density_percent: u64,
    palette: Color,
) -> ColoredGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(100) < density_percent {
                edges.push((u, v, 1 + rng.below(palette as u64) as Color));
            }
        }
    }
    ColoredGraph::new(n, edges).unwrap()
}

/// Is `h` isomorphic to `g` as an uncolored graph? Tries every permutation.
pub fn isomorphic_uncolored(g: &ColoredGraph, h: &ColoredGraph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut found = false;
    sequences(n, n, &mut |perm| {
        if !found && g.edges().iter().all(|e| h.has_edge(perm[e.u], perm[e.v])) {
            found = true;
        }
    });
    found
}
