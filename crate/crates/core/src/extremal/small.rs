//! Uncolored graphs on at most 16 vertices as adjacency bitmasks.

pub const MAX_SMALL_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: u8,
    adj: [u16; MAX_SMALL_N],
}

impl SmallGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_SMALL_N, "at most {MAX_SMALL_N} vertices");
        SmallGraph {
            n: n as u8,
            adj: [0; MAX_SMALL_N],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SmallGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n()]
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Adds vertex `n` adjacent to the vertices in `mask`.
    pub fn with_vertex(&self, mask: u16) -> SmallGraph {
        let mut g = SmallGraph::new(self.n() + 1);
        g.adj = self.adj;
        let v = self.n();
        for u in 0..v {
            if mask >> u & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `a` and `b` have the same neighbors apart from each other, so swapping
    /// them is an automorphism.
    #[inline]
    pub fn twins(&self, a: usize, b: usize) -> bool {
        let strip = !((1u16 << a) | (1u16 << b));
        self.adj[a] & strip == self.adj[b] & strip
    }

    /// The graph with vertex `order[i]` moved to position `i`.
    pub fn reordered(&self, order: &[usize]) -> SmallGraph {
        let mut g = SmallGraph::new(self.n());
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}
