//! Runs every check over a seeded corpus and tallies the outcomes.
//!
//! Per instance: the whole-graph checks (`main`, `cycle`) run on the raw
//! graph; the others run on its 3-core, where minimum degree 3 holds unless
//! the core is empty. Instances are checked in parallel and merged in id
//! order, so the report depends only on the seed and the instance count.

use std::fmt;

use rayon::prelude::*;

use super::corpus::{instance, Family};
use super::{check, pairing, LemmaError, LemmaId, LemmaReport, Status, Violation, HIGH_DEGREE};
use crate::graph::prune_min_degree;
use crate::rainbow::rainbow_c5_membership;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaTally {
    pub lemma: LemmaId,
    pub passes: u64,
    pub violations: u64,
    pub domain_errors: u64,
    /// Sum of `checked` over all reports.
    pub checked: u64,
    /// Instance id and witness of the first violation.
    pub first_violation: Option<(u64, Violation)>,
    /// Violations whose witness failed to re-validate (a harness bug).
    pub unconfirmed: u64,
}

impl LemmaTally {
    fn new(lemma: LemmaId) -> Self {
        LemmaTally {
            lemma,
            passes: 0,
            violations: 0,
            domain_errors: 0,
            checked: 0,
            first_violation: None,
            unconfirmed: 0,
        }
    }
}

impl fmt::Display for LemmaTally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.violations == 0 {
            "pass"
        } else {
            "violation"
        };
        write!(
            f,
            "lemma {} {} checked={} passes={} violations={} domain_errors={}",
            self.lemma, status, self.checked, self.passes, self.violations, self.domain_errors
        )?;
        if let Some((id, w)) = &self.first_violation {
            write!(f, " witness=instance:{id}:{w}")?;
        }
        if self.unconfirmed > 0 {
            write!(f, " unconfirmed={}", self.unconfirmed)?;
        }
        Ok(())
    }
}

/// How often the hypotheses were actually met.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TriggerStats {
    pub instances: u64,
    pub per_family: [u64; 3],
    /// Instances with at least one rainbow `C5`.
    pub with_c5: u64,
    /// Instances whose 3-core is non-empty.
    pub nonempty_core: u64,
    /// Instances whose 3-core has a vertex off every rainbow `C5` with
    /// degree at least 6.
    pub with_qualifying: u64,
    pub qualifying_vertices: u64,
    /// Instances meeting every hypothesis of the `P3`-endpoint check.
    pub full_domain: u64,
    pub pairings_found: u64,
    pub pairings_missing: u64,
    /// Instances where pairings covered every qualifying vertex.
    pub covered: u64,
}

impl fmt::Display for TriggerStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "triggers instances={} uniform={} blocks={} saturated={} with_c5={} nonempty_core={} \
             with_qualifying={} qualifying_vertices={} full_domain={} pairings_found={} \
             pairings_missing={} covered={}",
            self.instances,
            self.per_family[0],
            self.per_family[1],
            self.per_family[2],
            self.with_c5,
            self.nonempty_core,
            self.with_qualifying,
            self.qualifying_vertices,
            self.full_domain,
            self.pairings_found,
            self.pairings_missing,
            self.covered
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarnessReport {
    pub seed: u64,
    pub tallies: Vec<LemmaTally>,
    pub stats: TriggerStats,
}

impl HarnessReport {
    pub fn tally(&self, lemma: LemmaId) -> &LemmaTally {
        self.tallies
            .iter()
            .find(|t| t.lemma == lemma)
            .expect("every lemma is tallied")
    }

    pub fn total_violations(&self) -> u64 {
        self.tallies.iter().map(|t| t.violations).sum()
    }
}

impl fmt::Display for HarnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "corpus seed={} instances={}",
            self.seed, self.stats.instances
        )?;
        for t in &self.tallies {
            writeln!(f, "{t}")?;
        }
        write!(f, "{}", self.stats)
    }
}

struct Outcome {
    id: u64,
    family: Family,
    /// In [`LemmaId::ALL`] order, each paired with whether a violation
    /// re-validated.
    reports: Vec<(Result<LemmaReport, LemmaError>, bool)>,
    with_c5: bool,
    nonempty_core: bool,
    qualifying: u64,
    full_domain: bool,
    pairings_found: u64,
    pairings_missing: u64,
}

fn run_instance(seed: u64, id: u64) -> Outcome {
    let inst = instance(seed, id);
    let raw = &inst.graph;
    let core = prune_min_degree(raw, 3);
    let reports = LemmaId::ALL
        .iter()
        .map(|&lemma| {
            let g = match lemma {
                LemmaId::Main | LemmaId::Cycle => raw,
                _ => &core,
            };
            let r = check(lemma, g);
            let confirmed = r.as_ref().map_or(true, |r| r.revalidate(g));
            (r, confirmed)
        })
        .collect::<Vec<_>>();
    let in_c5 = rainbow_c5_membership(&core);
    let qualifying = (0..core.vertex_count())
        .filter(|v| !in_c5.contains(v) && core.degree(*v) >= HIGH_DEGREE)
        .count() as u64;
    let census = pairing::census_unchecked(&core);
    let p3_index = LemmaId::ALL
        .iter()
        .position(|&l| l == LemmaId::P3Endpoint)
        .unwrap();
    Outcome {
        id,
        family: inst.family,
        with_c5: !rainbow_c5_membership(raw).is_empty(),
        nonempty_core: !core.is_empty(),
        qualifying,
        full_domain: !core.is_empty() && reports[p3_index].0.is_ok(),
        pairings_found: census.pairings.len() as u64,
        pairings_missing: census.missing.len() as u64,
        reports,
    }
}

/// Checks instances `0..instances` of the corpus for `seed`.
pub fn run_harness(seed: u64, instances: u64) -> HarnessReport {
    let outcomes: Vec<Outcome> = (0..instances)
        .into_par_iter()
        .map(|id| run_instance(seed, id))
        .collect();
    let mut tallies: Vec<LemmaTally> = LemmaId::ALL.iter().map(|&l| LemmaTally::new(l)).collect();
    let mut stats = TriggerStats::default();
    for o in outcomes {
        stats.instances += 1;
        stats.per_family[Family::ALL.iter().position(|&f| f == o.family).unwrap()] += 1;
        stats.with_c5 += o.with_c5 as u64;
        stats.nonempty_core += o.nonempty_core as u64;
        stats.with_qualifying += (o.qualifying > 0) as u64;
        stats.qualifying_vertices += o.qualifying;
        stats.full_domain += o.full_domain as u64;
        stats.pairings_found += o.pairings_found;
        stats.pairings_missing += o.pairings_missing;
        stats.covered += (o.qualifying > 0 && o.pairings_missing == 0) as u64;
        for (t, (r, confirmed)) in tallies.iter_mut().zip(o.reports) {
            match r {
                Err(_) => t.domain_errors += 1,
                Ok(r) => {
                    t.checked += r.checked as u64;
                    match r.status {
                        Status::Pass => t.passes += 1,
                        Status::Violation => {
                            t.violations += 1;
                            t.unconfirmed += (!confirmed) as u64;
                            if t.first_violation.is_none() {
                                t.first_violation = r.witness.map(|w| (o.id, w));
                            }
                        }
                    }
                }
            }
        }
    }
    HarnessReport {
        seed,
        tallies,
        stats,
    }
}
