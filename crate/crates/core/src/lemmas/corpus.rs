//! Seeded random corpus of properly colored rainbow-`P5`-free graphs on at
//! most 12 vertices.
//!
//! Instance `i` of seed `s` is drawn from its own ChaCha stream, so instances
//! can be generated independently and in any order. Three families rotate by
//! instance id:
//!
//! - `uniform`: `m` uniformly random edges, colored greedily (first legal
//!   color from a random palette size); rejected and redrawn until
//!   rainbow-`P5`-free.
//! - `blocks`: two or three properly 3-colored `K4`s glued at single vertices
//!   with random palettes, plus a few random extra edges and vertices. Glue
//!   vertices have degree 6 and usually sit on no rainbow `C5`, so this family
//!   reaches the high-degree hypotheses that uniform sampling almost never
//!   does.
//! - `saturated`: edges offered in random order with random colors from a
//!   palette of 4 to 7, kept whenever the graph stays proper and
//!   rainbow-`P5`-free. These are the densest instances.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::graph::{Color, ColoredGraph};
use crate::rainbow::{find_rainbow_through_edge, is_rainbow_free, Pattern};

pub const MAX_CORPUS_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Uniform,
    Blocks,
    Saturated,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Uniform, Family::Blocks, Family::Saturated];

    fn of(id: u64) -> Family {
        Family::ALL[(id % 3) as usize]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Uniform => "uniform",
            Family::Blocks => "blocks",
            Family::Saturated => "saturated",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub id: u64,
    pub family: Family,
    pub graph: ColoredGraph,
}

fn p5() -> Pattern {
    Pattern::path(5).expect("valid pattern")
}

fn rng_for(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

pub fn instance(seed: u64, id: u64) -> Instance {
    let mut rng = rng_for(seed, id);
    let family = Family::of(id);
    let graph = match family {
        Family::Uniform => uniform(&mut rng),
        Family::Blocks => blocks(&mut rng),
        Family::Saturated => saturated(&mut rng),
    };
    Instance { id, family, graph }
}

/// Instances `0..count`, in id order.
pub fn corpus(seed: u64, count: u64) -> Vec<Instance> {
    (0..count)
        .into_par_iter()
        .map(|id| instance(seed, id))
        .collect()
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Colors `edges` in order with the first color in `1..=palette` unused at
/// both endpoints; `None` if some edge has no such color.
fn greedy_color(n: usize, edges: &[(usize, usize)], palette: Color) -> Option<ColoredGraph> {
    let mut used = vec![0u64; n];
    let mut colored = Vec::with_capacity(edges.len());
    for &(u, v) in edges {
        let c = (1..=palette).find(|&c| (used[u] | used[v]) >> c & 1 == 0)?;
        used[u] |= 1 << c;
        used[v] |= 1 << c;
        colored.push((u, v, c));
    }
    Some(ColoredGraph::new(n, colored).expect("distinct pairs"))
}

fn uniform(rng: &mut ChaCha8Rng) -> ColoredGraph {
    loop {
        let n = rng.gen_range(5..=MAX_CORPUS_N);
        let pairs = all_pairs(n);
        let m = rng.gen_range(n / 2..=n + n / 2);
        let edges: Vec<(usize, usize)> = index::sample(rng, pairs.len(), m)
            .into_iter()
            .map(|i| pairs[i])
            .collect();
        let mut degree = vec![0; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let delta = degree.into_iter().max().unwrap_or(0).max(1) as Color;
        let palette = rng.gen_range(delta..=2 * delta - 1);
        if let Some(g) = greedy_color(n, &edges, palette) {
            if is_rainbow_free(&g, p5()) {
                return g;
            }
        }
    }
}

/// A legal color for `{u, v}` drawn from `1..=palette` in random order.
fn random_legal(
    g: &ColoredGraph,
    u: usize,
    v: usize,
    palette: Color,
    rng: &mut ChaCha8Rng,
) -> Option<Color> {
    let mut colors: Vec<Color> = (1..=palette).collect();
    colors.shuffle(rng);
    let taken = |x: usize, c: Color| g.neighbors(x).iter().any(|&(_, cx)| cx == c);
    colors.into_iter().find(|&c| !taken(u, c) && !taken(v, c))
}

fn blocks(rng: &mut ChaCha8Rng) -> ColoredGraph {
    // a glue vertex carries at most 6 colors, leaving 3 for the next block
    const PALETTE: Color = 9;
    loop {
        let count = rng.gen_range(2..=3);
        let mut edges: Vec<(usize, usize, Color)> = Vec::new();
        let mut n = 0;
        for b in 0..count {
            // the first block is new; later ones reuse one existing vertex
            let glue = (b > 0).then(|| rng.gen_range(0..n));
            let mut vs: Vec<usize> = glue.into_iter().collect();
            while vs.len() < 4 {
                vs.push(n);
                n += 1;
            }
            let at_glue: Vec<Color> = match glue {
                Some(x) => edges
                    .iter()
                    .filter(|e| e.0 == x || e.1 == x)
                    .map(|e| e.2)
                    .collect(),
                None => Vec::new(),
            };
            let free: Vec<Color> = (1..=PALETTE).filter(|c| !at_glue.contains(c)).collect();
            let cs: Vec<Color> = free.choose_multiple(rng, 3).copied().collect();
            let [a, b2, c, d] = [vs[0], vs[1], vs[2], vs[3]];
            edges.extend([
                (a, b2, cs[0]),
                (c, d, cs[0]),
                (a, c, cs[1]),
                (b2, d, cs[1]),
                (a, d, cs[2]),
                (b2, c, cs[2]),
            ]);
        }
        n += rng.gen_range(0..=2);
        let mut g = ColoredGraph::new(n, edges).expect("blocks are simple");
        for _ in 0..rng.gen_range(0..=3) {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u == v || g.has_edge(u, v) {
                continue;
            }
            if let Some(c) = random_legal(&g, u, v, PALETTE, rng) {
                g = g.with_edge(u, v, c).expect("new pair");
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let g = g.relabeled(&perm).expect("permutation");
        if is_rainbow_free(&g, p5()) {
            return g;
        }
    }
}

fn saturated(rng: &mut ChaCha8Rng) -> ColoredGraph {
    let n = rng.gen_range(6..=MAX_CORPUS_N);
    let palette = rng.gen_range(4..=7);
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    let mut g = ColoredGraph::empty(n);
    for (u, v) in pairs {
        let mut colors: Vec<Color> = (1..=palette).collect();
        colors.shuffle(rng);
        for c in colors {
            let taken = |x: usize| g.neighbors(x).iter().any(|&(_, cx)| cx == c);
            if taken(u) || taken(v) {
                continue;
            }
            let h = g.with_edge(u, v, c).expect("new pair");
            if find_rainbow_through_edge(&h, p5(), u, v)
                .expect("edge exists")
                .is_none()
            {
                g = h;
                break;
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_valid() {
        let a = corpus(7, 30);
        let b = corpus(7, 30);
        assert_eq!(a, b);
        for inst in &a {
            assert!(inst.graph.vertex_count() <= MAX_CORPUS_N);
            assert!(inst.graph.is_proper());
            assert!(is_rainbow_free(&inst.graph, p5()), "instance {}", inst.id);
        }
        assert_ne!(corpus(8, 30), a);
    }

    #[test]
    fn instances_are_independent_of_count() {
        assert_eq!(instance(3, 17), corpus(3, 20)[17]);
    }

    #[test]
    fn blocks_reach_degree_six() {
        let hubs = (0..30)
            .map(|i| instance(1, 3 * i + 1))
            .filter(|inst| inst.graph.max_degree() >= 6)
            .count();
        assert!(hubs > 10, "only {hubs} block instances with a hub");
    }
}
