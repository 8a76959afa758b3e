//! Exhaustive property scans over the small-graph corpus.
//!
//! Each scan classifies every subject (a graph, a partition or a degree
//! sequence) as not applicable, confirmed, a counterexample, or skipped for
//! hitting a resource cap. Subjects are processed in parallel but results
//! are merged in corpus order, so reports are identical for any job count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bivariegation::{
    bivariegation_certificate, fixed_point_check, is_bivariegated, iterated_bivariegated_profile,
    lemma1_obstruction, lemma2_obstruction, solve_nested_equation, theorem1_paths,
    FixedPointConclusion,
};
use crate::cycles::enumerate_simple_cycles;
use crate::degseq::{
    admissible_partitions, degree_sequence_of_partition, enumerate_realizations, extract_partition,
    forcibly_bivariegated_line_graphic, potentially_bivariegated_line_graphic, realize_partition,
    DegreeSequence,
};
use crate::enumeration::{
    connected_graphs_of_size, corpus, oracle_is_bivariegated, MAX_CORPUS_ORDER, MAX_CORPUS_SIZE,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::line_graph::{is_line_graph, krausz_partition, line_graph};
use crate::Limits;

/// The scannable properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanProperty {
    /// Fast detector agrees with the reference decider.
    Oracle,
    /// An edge joining degrees `>=3, >=3` or `>=3, 1` rules out `L(G)`.
    Lemma1,
    /// A cycle of length not divisible by 4 rules out `L(G)`.
    Lemma2,
    /// Path decomposition exists exactly when `L(G)` is bivariegated.
    Theorem1Equiv,
    /// `L(G)` and `L²(G)` both bivariegated only for cycles `C_{4k}`.
    Cor12,
    /// Bivariegated fixed points of `L` are cycles `C_{4k}`.
    Cor13,
    /// Nested solutions with `2n` vertices and edges are unicyclic `C_{4k}`.
    Remark11,
    /// Realized admissible partitions are bivariegated line graphs.
    Thm21Forward,
    /// Bivariegated line graphs yield an admissible partition.
    Thm21Converse,
    /// The sequence decider agrees with exhaustive realization.
    Thm21Decision,
    /// The listed families have only bivariegated line graph realizations.
    Forcibly,
}

impl ScanProperty {
    pub const ALL: [ScanProperty; 11] = [
        ScanProperty::Oracle,
        ScanProperty::Lemma1,
        ScanProperty::Lemma2,
        ScanProperty::Theorem1Equiv,
        ScanProperty::Cor12,
        ScanProperty::Cor13,
        ScanProperty::Remark11,
        ScanProperty::Thm21Forward,
        ScanProperty::Thm21Converse,
        ScanProperty::Thm21Decision,
        ScanProperty::Forcibly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScanProperty::Oracle => "oracle",
            ScanProperty::Lemma1 => "lemma1",
            ScanProperty::Lemma2 => "lemma2",
            ScanProperty::Theorem1Equiv => "theorem1_equiv",
            ScanProperty::Cor12 => "cor12",
            ScanProperty::Cor13 => "cor13",
            ScanProperty::Remark11 => "remark11",
            ScanProperty::Thm21Forward => "thm21_forward",
            ScanProperty::Thm21Converse => "thm21_converse",
            ScanProperty::Thm21Decision => "thm21_decision",
            ScanProperty::Forcibly => "forcibly",
        }
    }

    /// What the scan bound limits: `order`, `edges` (the path criterion
    /// scans connected graphs by edge count) or `n` (half the order of the
    /// realized partitions).
    pub fn bound_kind(self) -> &'static str {
        match self {
            ScanProperty::Theorem1Equiv => "edges",
            ScanProperty::Thm21Forward => "n",
            _ => "order",
        }
    }

    /// Largest accepted bound.
    pub fn max_bound(self) -> usize {
        match self {
            ScanProperty::Theorem1Equiv => MAX_CORPUS_SIZE,
            ScanProperty::Thm21Forward => 7,
            _ => MAX_CORPUS_ORDER,
        }
    }

    fn connected_only(self) -> bool {
        matches!(
            self,
            ScanProperty::Theorem1Equiv
                | ScanProperty::Cor12
                | ScanProperty::Cor13
                | ScanProperty::Remark11
        )
    }

    fn filter(self) -> &'static str {
        match self {
            ScanProperty::Oracle => "all graphs",
            ScanProperty::Lemma1 => "graphs with an obstructing edge",
            ScanProperty::Lemma2 => "line graph order at most 15, with a cycle of length not divisible by 4",
            ScanProperty::Theorem1Equiv => "connected, at least one edge, any order",
            ScanProperty::Cor12 => "connected with at least one edge, L(G) and L^2(G) both bivariegated",
            ScanProperty::Cor13 => "connected, L(G) isomorphic to G and bivariegated",
            ScanProperty::Remark11 => "connected, 2n vertices and 2n edges, nested solution found",
            ScanProperty::Thm21Forward => "admissible partitions, three matchings each",
            ScanProperty::Thm21Converse => "bivariegated line graphs",
            ScanProperty::Thm21Decision => "degree sequences of graphs without isolated vertices",
            ScanProperty::Forcibly => "listed family sequences",
        }
    }
}

impl fmt::Display for ScanProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScanProperty::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = ScanProperty::ALL.iter().map(|p| p.name()).collect();
                Error::InvalidInput(format!("unknown property {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusDescription {
    /// `order`, `edges` or `n`.
    pub bound: &'static str,
    pub max: usize,
    pub connected_only: bool,
    pub filter: &'static str,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanCounts {
    /// Subjects examined, applicable or not.
    pub subjects: usize,
    /// `confirmed + counterexamples`.
    pub checked: usize,
    pub confirmed: usize,
    pub counterexamples: usize,
    pub skipped: usize,
    pub not_applicable: usize,
}

/// A subject that failed, with what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    /// graph6 string, partition, or degree sequence.
    pub subject: String,
    pub diagnostic: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub property: ScanProperty,
    pub corpus: CorpusDescription,
    pub counts: ScanCounts,
    pub counterexamples: Vec<Finding>,
    pub skipped: Vec<Finding>,
    /// Confirmed subjects worth listing, e.g. the fixed points found.
    pub notable: Vec<String>,
}

impl ScanReport {
    pub fn holds(&self) -> bool {
        self.counts.counterexamples == 0
    }
}

enum Outcome {
    NotApplicable,
    Confirmed { notable: Option<String> },
    Counterexample(Finding),
    Skipped(Finding),
}

fn confirmed() -> Outcome {
    Outcome::Confirmed { notable: None }
}

fn check(ok: bool, subject: impl FnOnce() -> String, diagnostic: impl FnOnce() -> String) -> Outcome {
    if ok {
        confirmed()
    } else {
        Outcome::Counterexample(Finding {
            subject: subject(),
            diagnostic: diagnostic(),
        })
    }
}

fn skipped(subject: String, e: Error) -> Outcome {
    Outcome::Skipped(Finding {
        subject,
        diagnostic: e.to_string(),
    })
}

/// Runs `property` over its corpus using `jobs` worker threads.
///
/// `max` bounds the quantity named by [`ScanProperty::bound_kind`].
pub fn scan(property: ScanProperty, max: usize, jobs: usize, limits: &Limits) -> Result<ScanReport> {
    if max > property.max_bound() {
        return Err(Error::InvalidInput(format!(
            "bound {max} exceeds the cap of {} {} for {property}",
            property.max_bound(),
            property.bound_kind()
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot start worker pool: {e}")))?;
    let outcomes = pool.install(|| run(property, max, limits))?;
    Ok(merge(property, max, outcomes))
}

fn merge(property: ScanProperty, max: usize, outcomes: Vec<Outcome>) -> ScanReport {
    let mut counts = ScanCounts {
        subjects: outcomes.len(),
        ..ScanCounts::default()
    };
    let mut counterexamples = Vec::new();
    let mut skipped = Vec::new();
    let mut notable = Vec::new();
    for o in outcomes {
        match o {
            Outcome::NotApplicable => counts.not_applicable += 1,
            Outcome::Confirmed { notable: n } => {
                counts.confirmed += 1;
                notable.extend(n);
            }
            Outcome::Counterexample(f) => {
                counts.counterexamples += 1;
                counterexamples.push(f);
            }
            Outcome::Skipped(f) => {
                counts.skipped += 1;
                skipped.push(f);
            }
        }
    }
    counts.checked = counts.confirmed + counts.counterexamples;
    ScanReport {
        property,
        corpus: CorpusDescription {
            bound: property.bound_kind(),
            max,
            connected_only: property.connected_only(),
            filter: property.filter(),
        },
        counts,
        counterexamples,
        skipped,
        notable,
    }
}

fn over_graphs(
    max_order: usize,
    connected_only: bool,
    f: impl Fn(&Graph) -> Outcome + Sync + Send,
) -> Result<Vec<Outcome>> {
    Ok(corpus(max_order, connected_only)?.par_iter().map(f).collect())
}

fn run(property: ScanProperty, max: usize, limits: &Limits) -> Result<Vec<Outcome>> {
    let cap = limits.cycle_cap;
    let connected = property.connected_only();
    match property {
        ScanProperty::Oracle => over_graphs(max, connected, |g| {
            let (fast, slow) = (is_bivariegated(g), oracle_is_bivariegated(g));
            check(fast == slow, || to_graph6(g), || format!("detector says {fast}, reference says {slow}"))
        }),
        ScanProperty::Lemma1 => over_graphs(max, connected, |g| match lemma1_obstruction(g) {
            None => Outcome::NotApplicable,
            Some(e) => check(
                !is_bivariegated(&line_graph(g).line_graph),
                || to_graph6(g),
                || format!("edge {e} obstructs, yet L(G) is bivariegated"),
            ),
        }),
        ScanProperty::Lemma2 => over_graphs(max, connected, |g| {
            if g.size() > 15 {
                return Outcome::NotApplicable;
            }
            match lemma2_obstruction(g, cap) {
                Err(e) => skipped(to_graph6(g), e),
                Ok(None) => Outcome::NotApplicable,
                Ok(Some(c)) => check(
                    !is_bivariegated(&line_graph(g).line_graph),
                    || to_graph6(g),
                    || format!("cycle {:?} has length {}, yet L(G) is bivariegated", c.vertices(), c.len()),
                ),
            }
        }),
        ScanProperty::Theorem1Equiv => {
            let mut graphs = Vec::new();
            for q in 1..=max {
                graphs.extend_from_slice(connected_graphs_of_size(q)?);
            }
            Ok(graphs.par_iter().map(|g| match theorem1_paths(g, cap) {
                Err(e) => skipped(to_graph6(g), e),
                Ok(paths) => {
                    let direct = is_bivariegated(&line_graph(g).line_graph);
                    check(
                        paths.is_some() == direct,
                        || to_graph6(g),
                        || format!("path decomposition {}, L(G) bivariegated {direct}", paths.is_some()),
                    )
                }
            }).collect())
        }
        ScanProperty::Cor12 => over_graphs(max, connected, |g| {
            // Edgeless graphs have the empty line graph, bivariegated only vacuously.
            if g.size() == 0 {
                return Outcome::NotApplicable;
            }
            let first = is_bivariegated(&line_graph(g).line_graph);
            if !first {
                return Outcome::NotApplicable;
            }
            match iterated_bivariegated_profile(g, 2, limits) {
                Err(p) => skipped(to_graph6(g), p.error),
                Ok(profile) if profile != [true, true] => Outcome::NotApplicable,
                Ok(_) => {
                    let cycle = g.cycle_length().filter(|n| n % 4 == 0);
                    match cycle {
                        Some(_) => Outcome::Confirmed { notable: Some(to_graph6(g)) },
                        None => check(false, || to_graph6(g), || {
                            "L(G) and L^2(G) bivariegated but G is not a cycle of length divisible by 4".into()
                        }),
                    }
                }
            }
        }),
        ScanProperty::Cor13 => over_graphs(max, connected, |g| {
            let v = fixed_point_check(g);
            match v.conclusion {
                FixedPointConclusion::NotFixed | FixedPointConclusion::FixedNotBivariegated => {
                    Outcome::NotApplicable
                }
                FixedPointConclusion::FixedBivariegatedCycle => Outcome::Confirmed {
                    notable: Some(to_graph6(g)),
                },
                FixedPointConclusion::Counterexample => check(false, || to_graph6(g), || {
                    "bivariegated fixed point that is not a cycle of length divisible by 4".into()
                }),
            }
        }),
        ScanProperty::Remark11 => over_graphs(max, connected, |g| {
            if g.order() % 2 == 1 || g.size() != g.order() {
                return Outcome::NotApplicable;
            }
            match solve_nested_equation(g, cap) {
                Err(e) => skipped(to_graph6(g), e),
                Ok(v) if v.nested_witness.is_none() => Outcome::NotApplicable,
                Ok(_) => match enumerate_simple_cycles(g, cap) {
                    Err(e) => skipped(to_graph6(g), e),
                    Ok(cycles) => {
                        let ok = cycles.len() == 1 && cycles[0].len() % 4 == 0;
                        if ok {
                            Outcome::Confirmed { notable: Some(to_graph6(g)) }
                        } else {
                            check(false, || to_graph6(g), || {
                                let lens: Vec<usize> = cycles.iter().map(|c| c.len()).collect();
                                format!("cycle lengths {lens:?}")
                            })
                        }
                    }
                },
            }
        }),
        ScanProperty::Thm21Forward => {
            let cases: Vec<_> = (1..=max)
                .flat_map(|n| {
                    let perms = matching_permutations(n);
                    admissible_partitions(n)
                        .into_iter()
                        .flat_map(move |p| perms.clone().into_iter().map(move |perm| (p.clone(), perm)))
                })
                .collect();
            Ok(cases
                .par_iter()
                .map(|(p, perm)| {
                    let subject = || format!("{p} matching {perm:?}");
                    match realize_partition(p, Some(perm)) {
                        Err(e) => check(false, subject, || e.to_string()),
                        Ok(g) => {
                            let line = is_line_graph(&g);
                            let biv = is_bivariegated(&g);
                            let seq = DegreeSequence::of_graph(&g).ok() == Some(degree_sequence_of_partition(p));
                            check(line && biv && seq, subject, || {
                                format!("{}: line graph {line}, bivariegated {biv}, degree sequence matches {seq}", to_graph6(&g))
                            })
                        }
                    }
                })
                .collect())
        }
        ScanProperty::Thm21Converse => over_graphs(max, connected, |g| {
            if g.order() == 0 {
                return Outcome::NotApplicable;
            }
            let Some(k) = krausz_partition(g) else {
                return Outcome::NotApplicable;
            };
            let Some(c) = bivariegation_certificate(g) else {
                return Outcome::NotApplicable;
            };
            match extract_partition(g, &c, &k) {
                Ok(_) => confirmed(),
                Err(e) => check(false, || to_graph6(g), || e.to_string()),
            }
        }),
        ScanProperty::Thm21Decision => {
            let mut groups: BTreeMap<DegreeSequence, Vec<Graph>> = BTreeMap::new();
            for g in corpus(max, false)? {
                if let Ok(s) = DegreeSequence::of_graph(&g) {
                    groups.entry(s).or_default().push(g);
                }
            }
            let groups: Vec<_> = groups.into_iter().collect();
            Ok(groups
                .par_iter()
                .map(|(s, graphs)| {
                    let witness = graphs.iter().find(|g| is_line_graph(g) && is_bivariegated(g));
                    let decided = potentially_bivariegated_line_graphic(s);
                    check(
                        witness.is_some() == decided.is_some(),
                        || s.to_string(),
                        || match (witness, decided) {
                            (Some(g), None) => format!("realization {} exists but the decider says no", to_graph6(g)),
                            (None, Some(p)) => format!("decider gives {p} but no realization qualifies"),
                            _ => unreachable!(),
                        },
                    )
                })
                .collect())
        }
        ScanProperty::Forcibly => {
            let seqs = family_sequences(max);
            Ok(seqs
                .par_iter()
                .map(|s| {
                    let r = enumerate_realizations(s);
                    let bad: Vec<String> = r
                        .graphs
                        .iter()
                        .filter(|g| !(is_line_graph(g) && is_bivariegated(g)))
                        .map(to_graph6)
                        .collect();
                    check(
                        r.graphical && !r.graphs.is_empty() && bad.is_empty(),
                        || s.to_string(),
                        || format!("{} realizations, failing: {}", r.graphs.len(), bad.join(" ")),
                    )
                })
                .collect())
        }
    }
}

/// Identity, reversal and a cyclic shift (deduplicated).
fn matching_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = vec![
        (0..n).collect::<Vec<_>>(),
        (0..n).rev().collect(),
        (0..n).map(|i| (i + 1) % n).collect(),
    ];
    perms.sort();
    perms.dedup();
    perms
}

/// `{k^k, 1^k}`, `{1^{2k}}` and `{2^4}` with at most `max_order` terms.
pub fn family_sequences(max_order: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    for k in 1..=max_order / 2 {
        let mut both = vec![k; k];
        both.extend(vec![1; k]);
        out.push(DegreeSequence::new(both).expect("positive"));
        out.push(DegreeSequence::new(vec![1; 2 * k]).expect("positive"));
    }
    if max_order >= 4 {
        out.push(DegreeSequence::new(vec![2; 4]).expect("positive"));
    }
    out.sort();
    out.dedup();
    out.retain(forcibly_bivariegated_line_graphic);
    out
}

/// Degree sequences of length at most `max_order` whose every realization
/// is a bivariegated line graph, found by exhaustive realization.
pub fn oracle_forcibly_sequences(max_order: usize) -> Result<Vec<DegreeSequence>> {
    let mut groups: BTreeMap<DegreeSequence, bool> = BTreeMap::new();
    for g in corpus(max_order, false)? {
        if let Ok(s) = DegreeSequence::of_graph(&g) {
            let ok = is_line_graph(&g) && is_bivariegated(&g);
            *groups.entry(s).or_insert(true) &= ok;
        }
    }
    Ok(groups.into_iter().filter(|&(_, all)| all).map(|(s, _)| s).collect())
}
