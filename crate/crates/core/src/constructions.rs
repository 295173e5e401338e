//! Lower-bound constructions: the colored hypercube with antipodal diagonals
//! (the folded cube `D*` on `2^(len-1)` vertices) and disjoint unions of it.

use thiserror::Error;

use crate::graph::{disjoint_union, Color, ColoredGraph, Rational};

/// Largest supported path length for explicit constructions (2^19 vertices).
pub const MAX_CONSTRUCTION_LEN: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("path length must be at least 3, got {0}")]
    LengthTooSmall(usize),
    #[error("path length {0} exceeds the supported maximum {MAX_CONSTRUCTION_LEN}")]
    LengthTooLarge(usize),
}

/// Parameters of the folded cube for forbidden path length `len`.
///
/// Vertex ids are the integers whose binary digits are the cube's 01-strings.
/// Bit `i` (least significant first) carries color `i + 1`; diagonals carry
/// color `len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FoldedCubeSpec {
    len: usize,
}

impl FoldedCubeSpec {
    pub fn new(len: usize) -> Result<Self, ConstructionError> {
        if len < 3 {
            return Err(ConstructionError::LengthTooSmall(len));
        }
        if len > MAX_CONSTRUCTION_LEN {
            return Err(ConstructionError::LengthTooLarge(len));
        }
        Ok(FoldedCubeSpec { len })
    }

    pub fn path_len(&self) -> usize {
        self.len
    }

    pub fn dimension(&self) -> usize {
        self.len - 1
    }

    pub fn vertex_count(&self) -> usize {
        1 << self.dimension()
    }

    pub fn edge_count(&self) -> usize {
        self.len << (self.len - 2)
    }

    pub fn antipode(&self, x: usize) -> usize {
        !x & (self.vertex_count() - 1)
    }

    pub fn diagonal_color(&self) -> Color {
        self.len as Color
    }

    pub fn build(&self) -> ColoredGraph {
        let n = self.vertex_count();
        let mut edges = Vec::with_capacity(self.edge_count());
        for x in 0..n {
            for bit in 0..self.dimension() {
                let y = x ^ (1 << bit);
                if x < y {
                    edges.push((x, y, bit as Color + 1));
                }
            }
            let y = self.antipode(x);
            if x < y {
                edges.push((x, y, self.diagonal_color()));
            }
        }
        ColoredGraph::new(n, edges).expect("folded cube is simple for len >= 3")
    }
}

/// The folded cube `D*_{2^(len-1)}`: `len`-regular, `len` colors, properly
/// colored and rainbow-`P_len`-free.
pub fn build_folded_cube(len: usize) -> Result<ColoredGraph, ConstructionError> {
    Ok(FoldedCubeSpec::new(len)?.build())
}

/// `floor(n / 2^(len-1))` disjoint folded cubes sharing colors `1..=len`,
/// padded with isolated vertices up to exactly `n` vertices.
pub fn build_lower_bound(n: usize, len: usize) -> Result<ColoredGraph, ConstructionError> {
    let spec = FoldedCubeSpec::new(len)?;
    let copies = n / spec.vertex_count();
    let rest = n % spec.vertex_count();
    let cube = spec.build();
    let mut parts = vec![cube; copies];
    if rest > 0 {
        parts.push(ColoredGraph::empty(rest));
    }
    if parts.is_empty() {
        return Ok(ColoredGraph::empty(0));
    }
    Ok(disjoint_union(&parts, true))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub lower: Rational,
    pub upper: Rational,
}

/// Known bounds on the rainbow Turán number of `P_len` on `n` vertices.
///
/// `lower` is the edge count of [`build_lower_bound`]. `upper` is
/// `(9 len + 5) n / 7`, tightened to `len n / 2` for `len` in 3..=5.
pub fn theoretical_bounds(n: u64, len: usize) -> Result<Bounds, ConstructionError> {
    if len < 3 {
        return Err(ConstructionError::LengthTooSmall(len));
    }
    let block = 1u64.checked_shl((len - 1) as u32);
    let copies = block.map_or(0, |b| n / b);
    let lower = match block {
        Some(b) => Rational::new(len as u64 * b * copies, 2),
        None => Rational::from_integer(0),
    };
    let upper = if len <= 5 {
        Rational::new(len as u64 * n, 2)
    } else {
        Rational::new((9 * len as u64 + 5) * n, 7)
    };
    Ok(Bounds { lower, upper })
}
