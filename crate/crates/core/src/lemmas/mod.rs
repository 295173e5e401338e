//! Falsification checks for the structural facts behind `ex*(n, P5) <= 5n/2`.
//!
//! Every check works on one concrete graph, refuses graphs outside its
//! hypotheses with [`LemmaError::Domain`], and returns a [`LemmaReport`]
//! whose violation witness can be re-checked with [`LemmaReport::revalidate`].
//!
//! Throughout, `V'` is the set of vertices on some rainbow `C5`, and a vertex
//! qualifies when it lies outside `V'` and has degree at least 6.

pub mod corpus;
pub mod harness;
mod pairing;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{heavy_component_vertices, preprocess_vertices, ColoredGraph, Rational};
use crate::rainbow::{
    find_rainbow, is_rainbow_free, rainbow_c5_membership, Anchor, Pattern, RainbowWitness,
};

pub use pairing::{find_local_pairing, pairing_census, LocalPairing, PairingCensus};

/// Degree from which a vertex counts as high.
pub const HIGH_DEGREE: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    /// Average degree over `V'` is at most 5.
    Cycle,
    /// A qualifying vertex has all neighbors outside `V'`.
    Neighbor,
    /// A qualifying vertex is not the endpoint of a rainbow `P4`.
    P4Endpoint,
    /// High-degree vertices at distance 2 from a qualifying vertex are outside `V'`.
    Distance2,
    /// Every vertex is the endpoint of a rainbow `P3`.
    P3Endpoint,
    /// Local pairings are disjoint and, when they cover every qualifying
    /// vertex, bound the average degree outside `V'` by 5.
    Pairing,
    /// Preprocessing deletes everything.
    Main,
}

impl LemmaId {
    pub const ALL: [LemmaId; 7] = [
        LemmaId::Cycle,
        LemmaId::Neighbor,
        LemmaId::P4Endpoint,
        LemmaId::Distance2,
        LemmaId::P3Endpoint,
        LemmaId::Pairing,
        LemmaId::Main,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LemmaId::Cycle => "cycle",
            LemmaId::Neighbor => "neighbor",
            LemmaId::P4Endpoint => "p4-endpoint",
            LemmaId::Distance2 => "distance2",
            LemmaId::P3Endpoint => "p3-endpoint",
            LemmaId::Pairing => "pairing",
            LemmaId::Main => "main",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown lemma `{0}` (expected one of cycle, neighbor, p4-endpoint, distance2, p3-endpoint, pairing, main)")]
pub struct UnknownLemma(pub String);

impl FromStr for LemmaId {
    type Err = UnknownLemma;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownLemma(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precondition {
    Proper,
    RainbowP5Free,
    MinDegree3,
    ComponentsAboveFive,
    VertexInRange(usize),
    OutsideCycleSet(usize),
    HighDegree(usize),
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::Proper => f.write_str("proper coloring"),
            Precondition::RainbowP5Free => f.write_str("rainbow-P5-free"),
            Precondition::MinDegree3 => f.write_str("minimum degree at least 3"),
            Precondition::ComponentsAboveFive => {
                f.write_str("every component has average degree above 5")
            }
            Precondition::VertexInRange(v) => write!(f, "vertex {v} exists"),
            Precondition::OutsideCycleSet(v) => write!(f, "vertex {v} lies on no rainbow C5"),
            Precondition::HighDegree(v) => {
                write!(f, "vertex {v} has degree at least {HIGH_DEGREE}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("{lemma}: precondition failed: {precondition}")]
    Domain {
        lemma: LemmaId,
        precondition: Precondition,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Violation,
}

/// Evidence against a lemma on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    CycleAverage {
        degree_sum: u64,
        vertices: usize,
    },
    NeighborOnCycle {
        v: usize,
        neighbor: usize,
        cycle: RainbowWitness,
    },
    P4Endpoint {
        v: usize,
        path: RainbowWitness,
    },
    Distance2OnCycle {
        v: usize,
        u: usize,
        cycle: RainbowWitness,
    },
    NoP3Endpoint {
        v: usize,
    },
    PairingOverlap {
        first: LocalPairing,
        second: LocalPairing,
        shared: usize,
    },
    PairingLedger {
        degree_sum: u64,
        vertices: usize,
    },
    Survivors {
        vertices: Vec<usize>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Violation::CycleAverage {
                degree_sum,
                vertices,
            } => {
                write!(f, "degree_sum={degree_sum}/vertices={vertices}")
            }
            Violation::NeighborOnCycle { v, neighbor, cycle } => {
                write!(
                    f,
                    "v={v},neighbor={neighbor},cycle={}",
                    list(&cycle.vertices)
                )
            }
            Violation::P4Endpoint { v, path } => write!(f, "v={v},path={}", list(&path.vertices)),
            Violation::Distance2OnCycle { v, u, cycle } => {
                write!(f, "v={v},u={u},cycle={}", list(&cycle.vertices))
            }
            Violation::NoP3Endpoint { v } => write!(f, "v={v}"),
            Violation::PairingOverlap {
                first,
                second,
                shared,
            } => {
                write!(
                    f,
                    "centers={},{},shared={shared}",
                    first.center, second.center
                )
            }
            Violation::PairingLedger {
                degree_sum,
                vertices,
            } => {
                write!(f, "degree_sum={degree_sum}/vertices={vertices}")
            }
            Violation::Survivors { vertices } => write!(f, "survivors={}", list(vertices)),
        }
    }
}

fn c5() -> Pattern {
    Pattern::cycle(5).expect("valid pattern")
}

fn p(len: usize) -> Pattern {
    Pattern::path(len).expect("valid pattern")
}

fn outside_high(g: &ColoredGraph, in_c5: &BTreeSet<usize>, v: usize) -> bool {
    !in_c5.contains(&v) && g.degree(v) >= HIGH_DEGREE
}

fn degree_sum(g: &ColoredGraph, vs: impl IntoIterator<Item = usize>) -> (u64, usize) {
    vs.into_iter()
        .fold((0, 0), |(s, k), v| (s + g.degree(v) as u64, k + 1))
}

impl Violation {
    /// Re-checks the evidence from scratch with graph and rainbow-search
    /// primitives only.
    pub fn revalidate(&self, g: &ColoredGraph) -> bool {
        let n = g.vertex_count();
        let is_c5_through =
            |w: &RainbowWitness, x: usize| w.pattern() == c5() && w.is_valid_in(g) && w.contains(x);
        let qualifies = |v: usize| {
            v < n
                && g.degree(v) >= HIGH_DEGREE
                && find_rainbow(g, c5(), Some(Anchor::member(v)))
                    .ok()
                    .flatten()
                    .is_none()
        };
        match self {
            Violation::CycleAverage {
                degree_sum: s,
                vertices,
            } => {
                let (sum, k) = degree_sum(g, rainbow_c5_membership(g));
                sum == *s && k == *vertices && sum > 5 * k as u64
            }
            Violation::NeighborOnCycle { v, neighbor, cycle } => {
                qualifies(*v) && g.has_edge(*v, *neighbor) && is_c5_through(cycle, *neighbor)
            }
            Violation::P4Endpoint { v, path } => {
                qualifies(*v)
                    && path.pattern() == p(4)
                    && path.is_valid_in(g)
                    && (path.vertices.first() == Some(v) || path.vertices.last() == Some(v))
            }
            Violation::Distance2OnCycle { v, u, cycle } => {
                qualifies(*v)
                    && *u < n
                    && g.degree(*u) >= HIGH_DEGREE
                    && g.distances_from(*v)[*u] == Some(2)
                    && is_c5_through(cycle, *u)
            }
            Violation::NoP3Endpoint { v } => {
                *v < n
                    && find_rainbow(g, p(3), Some(Anchor::endpoint(*v)))
                        .ok()
                        .flatten()
                        .is_none()
            }
            Violation::PairingOverlap {
                first,
                second,
                shared,
            } => {
                let in_c5 = rainbow_c5_membership(g);
                first.center != second.center
                    && first.is_valid_in(g, &in_c5)
                    && second.is_valid_in(g, &in_c5)
                    && first.members().contains(shared)
                    && second.members().contains(shared)
            }
            Violation::PairingLedger {
                degree_sum: s,
                vertices,
            } => {
                let in_c5 = rainbow_c5_membership(g);
                let (sum, k) = degree_sum(g, (0..n).filter(|v| !in_c5.contains(v)));
                sum == *s && k == *vertices && sum > 5 * k as u64
            }
            Violation::Survivors { vertices } => {
                !vertices.is_empty() && preprocess_vertices(g) == *vertices
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub status: Status,
    pub witness: Option<Violation>,
    /// Configurations the lemma made a claim about (qualifying vertices,
    /// vertex pairs, or 1 for whole-graph claims).
    pub checked: usize,
}

impl LemmaReport {
    fn pass(lemma: LemmaId, checked: usize) -> Self {
        LemmaReport {
            lemma,
            status: Status::Pass,
            witness: None,
            checked,
        }
    }

    fn violation(lemma: LemmaId, checked: usize, witness: Violation) -> Self {
        LemmaReport {
            lemma,
            status: Status::Violation,
            witness: Some(witness),
            checked,
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// A pass needs no evidence; a violation must carry a witness that
    /// re-validates against `g`.
    pub fn revalidate(&self, g: &ColoredGraph) -> bool {
        match (&self.status, &self.witness) {
            (Status::Pass, None) => true,
            (Status::Violation, Some(w)) => w.revalidate(g),
            _ => false,
        }
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Violation => "violation",
        };
        write!(
            f,
            "lemma {} {} checked={}",
            self.lemma, status, self.checked
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Gate {
    RainbowFree,
    MinDegree,
    Full,
}

fn gate(g: &ColoredGraph, lemma: LemmaId, level: Gate) -> Result<(), LemmaError> {
    let fail = |precondition| {
        Err(LemmaError::Domain {
            lemma,
            precondition,
        })
    };
    if !g.is_proper() {
        return fail(Precondition::Proper);
    }
    if !is_rainbow_free(g, p(5)) {
        return fail(Precondition::RainbowP5Free);
    }
    if level >= Gate::MinDegree && g.min_degree().is_some_and(|d| d < 3) {
        return fail(Precondition::MinDegree3);
    }
    if level >= Gate::Full
        && heavy_component_vertices(g, Rational::from_integer(5)).len() != g.vertex_count()
    {
        return fail(Precondition::ComponentsAboveFive);
    }
    Ok(())
}

fn qualifying(g: &ColoredGraph, in_c5: &BTreeSet<usize>) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| outside_high(g, in_c5, v))
        .collect()
}

fn c5_through(g: &ColoredGraph, v: usize) -> RainbowWitness {
    find_rainbow(g, c5(), Some(Anchor::member(v)))
        .expect("vertex in range")
        .expect("vertex lies on a rainbow C5")
}

pub fn check_cycle_lemma(g: &ColoredGraph) -> Result<LemmaReport, LemmaError> {
    let lemma = LemmaId::Cycle;
    gate(g, lemma, Gate::RainbowFree)?;
    let in_c5 = rainbow_c5_membership(g);
    let (sum, k) = degree_sum(g, in_c5.iter().copied());
    Ok(if sum <= 5 * k as u64 {
        LemmaReport::pass(lemma, k)
    } else {
        LemmaReport::violation(
            lemma,
            k,
            Violation::CycleAverage {
                degree_sum: sum,
                vertices: k,
            },
        )
    })
}

pub fn check_neighbor_lemma(g: &ColoredGraph) -> Result<LemmaReport, LemmaError> {
    let lemma = LemmaId::Neighbor;
    gate(g, lemma, Gate::MinDegree)?;
    let in_c5 = rainbow_c5_membership(g);
    let qs = qualifying(g, &in_c5);
    for &v in &qs {
        if let Some(&(u, _)) = g.neighbors(v).iter().find(|(u, _)| in_c5.contains(u)) {
            let cycle = c5_through(g, u);
            return Ok(LemmaReport::violation(
                lemma,
                qs.len(),
                Violation::NeighborOnCycle {
                    v,
                    neighbor: u,
                    cycle,
                },
            ));
        }
    }
    Ok(LemmaReport::pass(lemma, qs.len()))
}

pub fn check_p4_endpoint_lemma(g: &ColoredGraph) -> Result<LemmaReport, LemmaError> {
    let lemma = LemmaId::P4Endpoint;
    gate(g, lemma, Gate::MinDegree)?;
    let in_c5 = rainbow_c5_membership(g);
    let qs = qualifying(g, &in_c5);
    for &v in &qs {
        if let Some(path) =
            find_rainbow(g, p(4), Some(Anchor::endpoint(v))).expect("vertex in range")
        {
            return Ok(LemmaReport::violation(
                lemma,
                qs.len(),
                Violation::P4Endpoint { v, path },
            ));
        }
    }
    Ok(LemmaReport::pass(lemma, qs.len()))
}

pub fn check_distance2_corollary(g: &ColoredGraph) -> Result<LemmaReport, LemmaError> {
    let lemma = LemmaId::Distance2;
    gate(g, lemma, Gate::MinDegree)?;
    let in_c5 = rainbow_c5_membership(g);
    let mut checked = 0;
    for v in qualifying(g, &in_c5) {
        for (u, d) in g.distances_from(v).into_iter().enumerate() {
            if d != Some(2) || g.degree(u) < HIGH_DEGREE {
                continue;
            }
            checked += 1;
            if in_c5.contains(&u) {
                let cycle = c5_through(g, u);
                return Ok(LemmaReport::violation(
                    lemma,
                    checked,
                    Violation::Distance2OnCycle { v, u, cycle },
                ));
            }
        }
    }
    Ok(LemmaReport::pass(lemma, checked))
}

/// Vertices that start some rainbow `P3`, with no hypotheses checked.
pub fn p3_endpoint_scan(g: &ColoredGraph) -> BTreeSet<usize> {
    (0..g.vertex_count())
        .filter(|&v| {
            find_rainbow(g, p(3), Some(Anchor::endpoint(v)))
                .expect("vertex in range")
                .is_some()
        })
        .collect()
}

pub fn check_p3_endpoint_lemma(g: &ColoredGraph) -> Result<LemmaReport, LemmaError> {
    let lemma = LemmaId::P3Endpoint;
    gate(g, lemma, Gate::Full)?;
    let ends = p3_endpoint_scan(g);
    let n = g.vertex_count();
    Ok(match (0..n).find(|v| !ends.contains(v)) {
        Some(v) => LemmaReport::violation(lemma, n, Violation::NoP3Endpoint { v }),
        None => LemmaReport::pass(lemma, n),
    })
}

pub fn check_pairing_lemma(g: &ColoredGraph) -> Result<LemmaReport, LemmaError> {
    let lemma = LemmaId::Pairing;
    gate(g, lemma, Gate::MinDegree)?;
    let census = pairing::census_unchecked(g);
    let checked = census.high.len();
    if let Some((first, second, shared)) = census.overlap() {
        return Ok(LemmaReport::violation(
            lemma,
            checked,
            Violation::PairingOverlap {
                first: first.clone(),
                second: second.clone(),
                shared,
            },
        ));
    }
    if census.covered() && !census.ledger_holds() {
        return Ok(LemmaReport::violation(
            lemma,
            checked,
            Violation::PairingLedger {
                degree_sum: census.outside_degree_sum,
                vertices: census.outside_count,
            },
        ));
    }
    Ok(LemmaReport::pass(lemma, checked))
}

pub fn check_main_theorem(g: &ColoredGraph) -> Result<LemmaReport, LemmaError> {
    let lemma = LemmaId::Main;
    gate(g, lemma, Gate::RainbowFree)?;
    let survivors = preprocess_vertices(g);
    Ok(if survivors.is_empty() {
        LemmaReport::pass(lemma, 1)
    } else {
        LemmaReport::violation(
            lemma,
            1,
            Violation::Survivors {
                vertices: survivors,
            },
        )
    })
}

pub fn check(lemma: LemmaId, g: &ColoredGraph) -> Result<LemmaReport, LemmaError> {
    match lemma {
        LemmaId::Cycle => check_cycle_lemma(g),
        LemmaId::Neighbor => check_neighbor_lemma(g),
        LemmaId::P4Endpoint => check_p4_endpoint_lemma(g),
        LemmaId::Distance2 => check_distance2_corollary(g),
        LemmaId::P3Endpoint => check_p3_endpoint_lemma(g),
        LemmaId::Pairing => check_pairing_lemma(g),
        LemmaId::Main => check_main_theorem(g),
    }
}

/// Sets of vertices on / off rainbow `C5` copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    pub in_c5: Vec<usize>,
    pub out_c5: Vec<usize>,
}

impl VertexPartition {
    pub fn of(g: &ColoredGraph) -> Self {
        let in_set = rainbow_c5_membership(g);
        let out_c5 = (0..g.vertex_count())
            .filter(|v| !in_set.contains(v))
            .collect();
        VertexPartition {
            in_c5: in_set.into_iter().collect(),
            out_c5,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_folded_cube, build_lower_bound};

    fn k4() -> ColoredGraph {
        build_folded_cube(3).unwrap()
    }

    /// Two properly 3-colored K4s sharing vertex 0, with disjoint palettes.
    fn bowtie() -> ColoredGraph {
        ColoredGraph::new(
            7,
            [
                (0, 1, 1),
                (2, 3, 1),
                (0, 2, 2),
                (1, 3, 2),
                (0, 3, 3),
                (1, 2, 3),
                (0, 4, 4),
                (5, 6, 4),
                (0, 5, 5),
                (4, 6, 5),
                (0, 6, 6),
                (4, 5, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn folded_cube_reports() {
        let g = build_folded_cube(5).unwrap();
        assert_eq!(
            check_cycle_lemma(&g).unwrap(),
            LemmaReport::pass(LemmaId::Cycle, 16)
        );
        for lemma in [
            LemmaId::Neighbor,
            LemmaId::P4Endpoint,
            LemmaId::Distance2,
            LemmaId::Pairing,
        ] {
            assert_eq!(check(lemma, &g).unwrap(), LemmaReport::pass(lemma, 0));
        }
        assert!(check_main_theorem(&g).unwrap().is_pass());
        assert_eq!(
            check_p3_endpoint_lemma(&g),
            Err(LemmaError::Domain {
                lemma: LemmaId::P3Endpoint,
                precondition: Precondition::ComponentsAboveFive
            })
        );
        assert!(check_main_theorem(&build_lower_bound(48, 5).unwrap())
            .unwrap()
            .is_pass());
    }

    #[test]
    fn vacuous_cases() {
        assert_eq!(
            check_cycle_lemma(&ColoredGraph::empty(4)).unwrap().checked,
            0
        );
        assert_eq!(check_cycle_lemma(&k4()).unwrap().checked, 0);
        assert!(check_neighbor_lemma(&ColoredGraph::empty(0))
            .unwrap()
            .is_pass());
    }

    #[test]
    fn domain_gates() {
        let path = ColoredGraph::new(6, (0..5).map(|i| (i, i + 1, i as u32 + 1))).unwrap();
        assert_eq!(
            check_neighbor_lemma(&path),
            Err(LemmaError::Domain {
                lemma: LemmaId::Neighbor,
                precondition: Precondition::RainbowP5Free
            })
        );
        let c5 = ColoredGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5, i as u32 + 1))).unwrap();
        assert!(matches!(
            check_distance2_corollary(&c5),
            Err(LemmaError::Domain {
                precondition: Precondition::MinDegree3,
                ..
            })
        ));
        let improper = ColoredGraph::new(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        assert!(matches!(
            check_main_theorem(&improper),
            Err(LemmaError::Domain {
                precondition: Precondition::Proper,
                ..
            })
        ));
    }

    #[test]
    fn k4_needs_the_component_hypothesis() {
        assert!(p3_endpoint_scan(&k4()).is_empty());
        assert_eq!(
            check_p3_endpoint_lemma(&k4()),
            Err(LemmaError::Domain {
                lemma: LemmaId::P3Endpoint,
                precondition: Precondition::ComponentsAboveFive
            })
        );
    }

    #[test]
    fn bowtie_triggers_the_hypotheses() {
        let g = bowtie();
        assert!(is_rainbow_free(&g, p(5)));
        for lemma in [LemmaId::Neighbor, LemmaId::P4Endpoint, LemmaId::Pairing] {
            let r = check(lemma, &g).unwrap();
            assert_eq!((r.status, r.checked), (Status::Pass, 1), "{lemma}");
        }
        let pairing = find_local_pairing(&g, 0).unwrap().unwrap();
        assert_eq!(pairing.leaves, vec![1]);
    }

    #[test]
    fn violations_revalidate() {
        // a rainbow C5 makes the whole cycle count
        let g = ColoredGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5, i as u32 + 1))).unwrap();
        let forged = Violation::CycleAverage {
            degree_sum: 10,
            vertices: 5,
        };
        assert!(!forged.revalidate(&g));
        let survivors = Violation::Survivors { vertices: vec![0] };
        assert!(!survivors.revalidate(&g));
        let report = LemmaReport::pass(LemmaId::Main, 1);
        assert!(report.revalidate(&g));
    }

    #[test]
    fn names_round_trip() {
        for l in LemmaId::ALL {
            assert_eq!(l.name().parse::<LemmaId>().unwrap(), l);
        }
        assert!("lemma7".parse::<LemmaId>().is_err());
    }

    #[test]
    fn report_line() {
        let r = LemmaReport::violation(LemmaId::P3Endpoint, 4, Violation::NoP3Endpoint { v: 2 });
        assert_eq!(
            r.to_string(),
            "lemma p3-endpoint violation checked=4 witness=v=2"
        );
    }
}
