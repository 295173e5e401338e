//! Properly edge-colored graphs and rainbow Turán numbers of paths.
//!
//! - [`graph`]: the colored-graph type, degree statistics and pruning.
//! - [`format`]: the `rtg1` text format.
//! - [`rainbow`]: detection, enumeration and counting of rainbow paths and cycles.
//! - [`constructions`]: folded-cube lower-bound constructions and bound formulas.
//! - [`lemmas`]: falsification harnesses for the structural lemmas behind the
//!   `5n/2` bound for rainbow `P_5`.
//! - [`extremal`]: exact `ex*(n, F)` for tiny `n` by exhaustive search.

pub mod constructions;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod lemmas;
pub mod rainbow;

pub use constructions::{build_folded_cube, build_lower_bound, theoretical_bounds, Bounds};
pub use format::{parse_rtg1, write_rtg1, FormatError};
pub use graph::{
    disjoint_union, drop_light_components, is_proper, preprocess, prune_min_degree, Color,
    ColoredGraph, DegreeSummary, Edge, GraphError, Rational,
};
pub use rainbow::{
    count_rainbow, find_rainbow, is_rainbow_free, rainbow_c5_membership, Anchor, AnchorRole,
    Pattern, PatternKind, RainbowWitness,
};
