//! Local pairings: a qualifying vertex `v` with a set of low-degree
//! neighbors `L(v)` such that `{v} ∪ L(v)` has average degree at most 5 and
//! every `u` in `L(v)` has `v` as its only high neighbor outside `V'`.

use std::collections::BTreeSet;

use crate::graph::{ColoredGraph, Rational};
use crate::rainbow::{find_rainbow, rainbow_c5_membership, Anchor, Pattern};

use super::{gate, outside_high, Gate, LemmaError, LemmaId, Precondition, HIGH_DEGREE};

/// Above this many neighbors the subset search is replaced by a direct
/// construction.
const EXHAUSTIVE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalPairing {
    pub center: usize,
    /// Ascending.
    pub leaves: Vec<usize>,
}

impl LocalPairing {
    pub fn members(&self) -> Vec<usize> {
        let mut m = vec![self.center];
        m.extend(&self.leaves);
        m
    }

    pub fn average_degree(&self, g: &ColoredGraph) -> Rational {
        let sum: usize = self.members().iter().map(|&v| g.degree(v)).sum();
        Rational::new(sum as u64, self.leaves.len() as u64 + 1)
    }

    /// Checks every defining condition against `g`, given the rainbow `C5`
    /// vertex set.
    pub fn is_valid_in(&self, g: &ColoredGraph, in_c5: &BTreeSet<usize>) -> bool {
        let n = g.vertex_count();
        let v = self.center;
        if v >= n || !outside_high(g, in_c5, v) || self.leaves.is_empty() {
            return false;
        }
        let distinct: BTreeSet<_> = self.leaves.iter().collect();
        distinct.len() == self.leaves.len()
            && self
                .leaves
                .iter()
                .all(|&u| u < n && g.has_edge(v, u) && leaf_ok(g, in_c5, v, u))
            && self.average_degree(g) <= Rational::from_integer(5)
    }
}

fn leaf_ok(g: &ColoredGraph, in_c5: &BTreeSet<usize>, v: usize, u: usize) -> bool {
    !in_c5.contains(&u)
        && g.degree(u) < HIGH_DEGREE
        && g.neighbors(u)
            .iter()
            .all(|&(x, _)| x == v || !outside_high(g, in_c5, x))
}

/// Smallest `L(v)` (then lexicographically least) when `d(v) <= 16`;
/// otherwise the set suggested by a rainbow `C4` or `P3` at `v`, falling
/// back to all eligible neighbors. Adding a neighbor of degree at most 5
/// never pushes the average above 5, so a pairing exists iff the set of all
/// eligible neighbors is one, and the fallback misses nothing.
pub fn find_local_pairing(g: &ColoredGraph, v: usize) -> Result<Option<LocalPairing>, LemmaError> {
    let lemma = LemmaId::Pairing;
    gate(g, lemma, Gate::RainbowFree)?;
    let fail = |precondition| {
        Err(LemmaError::Domain {
            lemma,
            precondition,
        })
    };
    if v >= g.vertex_count() {
        return fail(Precondition::VertexInRange(v));
    }
    let in_c5 = rainbow_c5_membership(g);
    if in_c5.contains(&v) {
        return fail(Precondition::OutsideCycleSet(v));
    }
    if g.degree(v) < HIGH_DEGREE {
        return fail(Precondition::HighDegree(v));
    }
    Ok(pairing_for(g, &in_c5, v))
}

fn pairing_for(g: &ColoredGraph, in_c5: &BTreeSet<usize>, v: usize) -> Option<LocalPairing> {
    let eligible: Vec<usize> = g
        .neighbors(v)
        .iter()
        .map(|&(u, _)| u)
        .filter(|&u| leaf_ok(g, in_c5, v, u))
        .collect();
    let budget = |k: usize| 5 * (k + 1) as i64 - g.degree(v) as i64;
    let fits = |leaves: &[usize]| {
        leaves.iter().map(|&u| g.degree(u) as i64).sum::<i64>() <= budget(leaves.len())
    };
    let make = |leaves: Vec<usize>| LocalPairing { center: v, leaves };

    if g.degree(v) <= EXHAUSTIVE_LIMIT {
        let mut degrees: Vec<i64> = eligible.iter().map(|&u| g.degree(u) as i64).collect();
        degrees.sort_unstable();
        let mut prefix = 0;
        let k = (1..=degrees.len()).find(|&k| {
            prefix += degrees[k - 1];
            prefix <= budget(k)
        })?;
        let mut chosen = Vec::with_capacity(k);
        return first_combination(&eligible, k, 0, &mut chosen, &fits).then(|| make(chosen));
    }

    if let Some(leaves) = recipe(g, v, &eligible).filter(|l| !l.is_empty() && fits(l)) {
        return Some(make(leaves));
    }
    (!eligible.is_empty() && fits(&eligible)).then(|| make(eligible))
}

fn first_combination(
    pool: &[usize],
    k: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    fits: &dyn Fn(&[usize]) -> bool,
) -> bool {
    if chosen.len() == k {
        return fits(chosen);
    }
    for i in from..pool.len() {
        if pool.len() - i < k - chosen.len() {
            break;
        }
        chosen.push(pool[i]);
        if first_combination(pool, k, i + 1, chosen, fits) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Neighbors off a rainbow `C4` through `v` (or else a rainbow `P3` from
/// `v`) joined to `v` by a color that copy does not use.
fn recipe(g: &ColoredGraph, v: usize, eligible: &[usize]) -> Option<Vec<usize>> {
    let c4 = Pattern::cycle(4).expect("valid pattern");
    let p3 = Pattern::path(3).expect("valid pattern");
    let copy = find_rainbow(g, c4, Some(Anchor::member(v)))
        .ok()
        .flatten()
        .or_else(|| {
            find_rainbow(g, p3, Some(Anchor::endpoint(v)))
                .ok()
                .flatten()
        })?;
    Some(
        eligible
            .iter()
            .copied()
            .filter(|&u| {
                !copy.contains(u) && g.color(v, u).is_some_and(|c| !copy.colors.contains(&c))
            })
            .collect(),
    )
}

/// Pairings for every qualifying vertex of one graph, plus the exact
/// degree totals outside `V'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingCensus {
    /// Qualifying vertices, ascending.
    pub high: Vec<usize>,
    pub pairings: Vec<LocalPairing>,
    /// Qualifying vertices without a pairing.
    pub missing: Vec<usize>,
    pub outside_degree_sum: u64,
    pub outside_count: usize,
}

impl PairingCensus {
    pub fn covered(&self) -> bool {
        self.missing.is_empty()
    }

    pub fn ledger_holds(&self) -> bool {
        self.outside_degree_sum <= 5 * self.outside_count as u64
    }

    /// The first two pairings sharing a vertex, if any.
    pub fn overlap(&self) -> Option<(&LocalPairing, &LocalPairing, usize)> {
        let mut owner: std::collections::HashMap<usize, usize> = Default::default();
        for (i, pairing) in self.pairings.iter().enumerate() {
            for x in pairing.members() {
                if let Some(&j) = owner.get(&x) {
                    return Some((&self.pairings[j], pairing, x));
                }
                owner.insert(x, i);
            }
        }
        None
    }
}

pub fn pairing_census(g: &ColoredGraph) -> Result<PairingCensus, LemmaError> {
    gate(g, LemmaId::Pairing, Gate::RainbowFree)?;
    Ok(census_unchecked(g))
}

pub(super) fn census_unchecked(g: &ColoredGraph) -> PairingCensus {
    let in_c5 = rainbow_c5_membership(g);
    let n = g.vertex_count();
    let high: Vec<usize> = (0..n).filter(|&v| outside_high(g, &in_c5, v)).collect();
    let mut pairings = Vec::new();
    let mut missing = Vec::new();
    for &v in &high {
        match pairing_for(g, &in_c5, v) {
            Some(p) => pairings.push(p),
            None => missing.push(v),
        }
    }
    let (outside_degree_sum, outside_count) =
        super::degree_sum(g, (0..n).filter(|v| !in_c5.contains(v)));
    PairingCensus {
        high,
        pairings,
        missing,
        outside_degree_sum,
        outside_count,
    }
}
