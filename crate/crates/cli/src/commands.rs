use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use bivarieg_core::bivariegation::{
    fixed_point_check, solve_lg_equation, solve_nested_equation, FixedPointVerdict, LineGraphEquation,
    NestedEquation,
};
use bivarieg_core::degseq::{
    admissible_partitions, degree_sequence_of_partition, enumerate_realizations,
    forcibly_bivariegated_line_graphic, potentially_bivariegated_line_graphic, realize_partition,
    AdmissiblePartition, DegreeSequence,
};
use bivarieg_core::io::to_graph6;
use bivarieg_core::line_graph::{is_line_graph, iterated_line_graph};
use bivarieg_core::scan::{scan, ScanProperty, ScanReport};
use bivarieg_core::spectra::{
    adjacency_matrix, spectrum_complete_bivariegated, verify_polynomial_identity, Eigenvalue,
};
use bivarieg_core::{
    bivariegation_certificate, is_bivariegated, krausz_partition, line_graph, BivariegationCertificate,
    EdgeSet, Error, Graph, KrauszPartition, Limits, Result,
};
use serde::Serialize;

/// What a command produced: its verdict plus both renderings.
pub struct Report {
    pub holds: bool,
    /// Pretty-printed JSON, fields in declaration order.
    pub json: String,
    pub text: String,
}

impl Report {
    fn new(holds: bool, json: impl Serialize, text: String) -> Result<Self> {
        let json = serde_json::to_string_pretty(&json).map_err(|e| Error::InvalidInput(e.to_string()))?;
        Ok(Report { holds, json, text })
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn describe_certificate(c: &BivariegationCertificate) -> String {
    let edges: Vec<String> = c.special_edges.iter().map(|e| e.to_string()).collect();
    format!(
        "special edges: {}\nside U: {:?}\nside W: {:?}",
        edges.join(" "),
        c.side_u,
        c.side_w
    )
}

#[derive(Serialize)]
struct BivariegatedCheck {
    graph6: String,
    bivariegated: bool,
    certificate: Option<BivariegationCertificate>,
}

pub fn check_bivariegated(g: &Graph) -> Result<Report> {
    let certificate = bivariegation_certificate(g);
    let mut text = format!("bivariegated: {}", yes_no(certificate.is_some()));
    if let Some(c) = &certificate {
        write!(text, "\n{}", describe_certificate(c)).unwrap();
    }
    let out = BivariegatedCheck {
        graph6: to_graph6(g),
        bivariegated: certificate.is_some(),
        certificate,
    };
    Report::new(out.bivariegated, &out, text)
}

#[derive(Serialize)]
struct LineCheck {
    graph6: String,
    line_graph: bool,
    krausz: Option<KrauszPartition>,
}

pub fn check_line(g: &Graph) -> Result<Report> {
    let krausz = krausz_partition(g);
    let mut text = format!("line graph: {}", yes_no(krausz.is_some()));
    if let Some(k) = &krausz {
        write!(text, "\ncliques: {:?}\nroot: {}", k.cliques, to_graph6(&k.root)).unwrap();
    }
    let out = LineCheck {
        graph6: to_graph6(g),
        line_graph: krausz.is_some(),
        krausz,
    };
    Report::new(out.line_graph, &out, text)
}

#[derive(Serialize)]
struct Iterated {
    k: usize,
    order: usize,
    size: usize,
    graph6: String,
}

pub fn linegraph(g: &Graph, k: usize, limits: &Limits) -> Result<Report> {
    if k == 1 {
        let lg = line_graph(g);
        let mut text = format!("{}\n", to_graph6(&lg.line_graph));
        for (e, v) in lg.edge_map_pairs() {
            writeln!(text, "{v} <- {e}").unwrap();
        }
        return Report::new(true, &lg, text.trim_end().to_string());
    }
    let lk = iterated_line_graph(g, k, limits)?;
    let out = Iterated {
        k,
        order: lk.order(),
        size: lk.size(),
        graph6: to_graph6(&lk),
    };
    let text = format!("L^{k}: order {}, size {}\n{}", out.order, out.size, out.graph6);
    Report::new(true, &out, text)
}

pub fn solve_lg(g: &Graph, limits: &Limits) -> Result<Report> {
    let eq: LineGraphEquation = solve_lg_equation(g, limits.cycle_cap)?;
    let mut text = format!("L(G) bivariegated: {}", yes_no(eq.solution));
    match (&eq.witness, eq.witness_absent_reason) {
        (Some(w), _) => write!(text, "\npaths: {:?}", w.paths).unwrap(),
        (None, Some(r)) => write!(text, "\nno path decomposition: {r}").unwrap(),
        (None, None) => {}
    }
    if let Some(c) = &eq.certificate {
        write!(text, "\ncertificate on L(G):\n{}", describe_certificate(c)).unwrap();
    }
    if let Some(d) = &eq.discrepancy {
        write!(text, "\nDISCREPANCY: {d}").unwrap();
    }
    Report::new(eq.solution, &eq, text)
}

pub fn solve_nested(g: &Graph, limits: &Limits) -> Result<Report> {
    let eq: NestedEquation = solve_nested_equation(g, limits.cycle_cap)?;
    let holds = eq.g_bivariegated && eq.lg_bivariegated;
    let mut text = format!(
        "G bivariegated: {}\nL(G) bivariegated: {}",
        yes_no(eq.g_bivariegated),
        yes_no(eq.lg_bivariegated)
    );
    if let Some(w) = &eq.nested_witness {
        write!(text, "\npaths: {:?}\n{}", w.paths.paths, describe_certificate(&w.certificate)).unwrap();
    }
    Report::new(holds, &eq, text)
}

pub fn fixed_point(g: &Graph) -> Result<Report> {
    let v: FixedPointVerdict = fixed_point_check(g);
    let text = format!(
        "L(G) = G: {}\nbivariegated: {}\ncycle length: {}\nconclusion: {}",
        yes_no(v.fixed),
        yes_no(v.bivariegated),
        v.cycle_length.map_or("none".to_string(), |n| n.to_string()),
        serde_json::to_value(v.conclusion).unwrap().as_str().unwrap_or_default()
    );
    Report::new(v.fixed && v.bivariegated, &v, text)
}

#[derive(Serialize)]
struct SequenceCheck {
    sequence: DegreeSequence,
    potentially: bool,
    partition: Option<AdmissiblePartition>,
}

pub fn degseq_check(s: DegreeSequence) -> Result<Report> {
    let partition = potentially_bivariegated_line_graphic(&s);
    let text = match &partition {
        Some(p) => format!("{{{s}}} is potentially bivariegated line graphic\npartition: {p}"),
        None => format!("{{{s}}} is not potentially bivariegated line graphic"),
    };
    let out = SequenceCheck {
        potentially: partition.is_some(),
        sequence: s,
        partition,
    };
    Report::new(out.potentially, &out, text)
}

#[derive(Serialize)]
struct Realized {
    sequence: DegreeSequence,
    partition: AdmissiblePartition,
    graph6: String,
    certificate: BivariegationCertificate,
}

pub fn degseq_realize(s: DegreeSequence, perm: Option<&[usize]>) -> Result<Report> {
    let Some(partition) = potentially_bivariegated_line_graphic(&s) else {
        let out = SequenceCheck {
            sequence: s.clone(),
            potentially: false,
            partition: None,
        };
        return Report::new(false, &out, format!("{{{s}}} has no admissible partition"));
    };
    let g = realize_partition(&partition, perm)?;
    let n = partition.n();
    let identity: Vec<usize> = (0..n).collect();
    let perm = perm.unwrap_or(&identity);
    let matching = EdgeSet::new((0..n).map(|i| bivarieg_core::Edge::new(i, n + perm[i])));
    let certificate = bivarieg_core::bivariegation::certificate_for_matching(&g, &matching)
        .ok_or_else(|| Error::InvalidInput("realization lost its special matching".into()))?;
    let text = format!(
        "partition: {partition}\ngraph6: {}\n{}",
        to_graph6(&g),
        describe_certificate(&certificate)
    );
    let out = Realized {
        sequence: s,
        partition,
        graph6: to_graph6(&g),
        certificate,
    };
    Report::new(true, &out, text)
}

#[derive(Serialize)]
struct PartitionListing {
    n: usize,
    count: usize,
    partitions: Vec<PartitionEntry>,
}

#[derive(Serialize)]
struct PartitionEntry {
    partition: AdmissiblePartition,
    sequence: DegreeSequence,
}

pub fn degseq_partitions(n: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let partitions: Vec<PartitionEntry> = admissible_partitions(n)
        .into_iter()
        .map(|p| PartitionEntry {
            sequence: degree_sequence_of_partition(&p),
            partition: p,
        })
        .collect();
    let mut text = String::new();
    for e in &partitions {
        writeln!(text, "{}  ->  {{{}}}", e.partition, e.sequence).unwrap();
    }
    write!(text, "{} admissible partitions of {}", partitions.len(), 2 * n).unwrap();
    let out = PartitionListing {
        n,
        count: partitions.len(),
        partitions,
    };
    Report::new(true, &out, text)
}

#[derive(Serialize)]
struct Forcibly {
    sequence: DegreeSequence,
    forcibly: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<RealizationAudit>,
}

#[derive(Serialize)]
struct RealizationAudit {
    graphical: bool,
    realizations: usize,
    failing: Vec<String>,
}

pub fn degseq_forcibly(s: DegreeSequence, oracle: bool) -> Result<Report> {
    let forcibly = forcibly_bivariegated_line_graphic(&s);
    let mut text = format!("{{{s}}} forcibly bivariegated line graphic: {}", yes_no(forcibly));
    let audit = oracle.then(|| {
        let r = enumerate_realizations(&s);
        let failing: Vec<String> = r
            .graphs
            .iter()
            .filter(|g| !(is_line_graph(g) && is_bivariegated(g)))
            .map(to_graph6)
            .collect();
        RealizationAudit {
            graphical: r.graphical,
            realizations: r.graphs.len(),
            failing,
        }
    });
    if let Some(a) = &audit {
        write!(
            text,
            "\nrealizations: {}, failing: {}",
            a.realizations,
            a.failing.len()
        )
        .unwrap();
        for g in &a.failing {
            write!(text, "\n  {g}").unwrap();
        }
    }
    let out = Forcibly {
        sequence: s,
        forcibly,
        oracle: audit,
    };
    Report::new(forcibly, &out, text)
}

#[derive(Serialize)]
struct Spectra {
    n: usize,
    eigenvalues: BTreeMap<i64, usize>,
    polynomial_identity: bool,
    annihilated: bool,
    all_ones_eigenvector: bool,
    degenerate: bool,
    certified: Vec<Eigenvalue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    adjacency: Option<Vec<Vec<i64>>>,
}

pub fn spectra(n: usize, dump: bool) -> Result<Report> {
    let r = spectrum_complete_bivariegated(n)?;
    let id = verify_polynomial_identity(n)?;
    let holds = r.verified() && id.holds && id.annihilated;
    let a = adjacency_matrix(&bivarieg_core::Family::CompleteBivariegated(n).build()?);
    let mut text = format!("n = {n}, order {}\n", 2 * n);
    for e in &r.eigenvalues {
        writeln!(
            text,
            "eigenvalue {:>3}: claimed {}, nullity {}{}",
            e.value,
            e.claimed,
            e.certified,
            if e.verified { "" } else { "  MISMATCH" }
        )
        .unwrap();
    }
    write!(
        text,
        "all-ones eigenvector: {}\npolynomial identity: {}\nannihilating product vanishes: {}",
        yes_no(r.all_ones_eigenvector),
        yes_no(id.holds),
        yes_no(id.annihilated)
    )
    .unwrap();
    if dump {
        write!(text, "\nadjacency:\n{a}").unwrap();
    }
    let adjacency = dump.then(|| {
        a.to_rows()
            .iter()
            .map(|row| row.iter().map(|x| i64::try_from(x).unwrap_or(i64::MAX)).collect())
            .collect()
    });
    let out = Spectra {
        n,
        eigenvalues: r.multiplicities(),
        polynomial_identity: id.holds,
        annihilated: id.annihilated,
        all_ones_eigenvector: r.all_ones_eigenvector,
        degenerate: r.degenerate,
        certified: r.eigenvalues,
        adjacency,
    };
    Report::new(holds, &out, text.trim_end().to_string())
}

/// A scan with no counterexamples but skipped subjects ran into a cap.
pub struct ScanOutcome {
    pub report: Report,
    pub capped: bool,
}

pub fn run_scan(
    property: ScanProperty,
    max: usize,
    jobs: usize,
    limits: &Limits,
    export: Option<&Path>,
) -> Result<ScanOutcome> {
    let r: ScanReport = scan(property, max, jobs, limits)?;
    if let Some(path) = export {
        let lines: String = r.counterexamples.iter().map(|f| format!("{}\n", f.subject)).collect();
        std::fs::write(path, lines)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
    }
    let c = &r.counts;
    let mut text = format!(
        "{property}: {} <= {} ({})\nsubjects {}, checked {}, confirmed {}, counterexamples {}, skipped {}, not applicable {}",
        r.corpus.bound,
        r.corpus.max,
        r.corpus.filter,
        c.subjects,
        c.checked,
        c.confirmed,
        c.counterexamples,
        c.skipped,
        c.not_applicable
    );
    for f in &r.counterexamples {
        write!(text, "\ncounterexample {}: {}", f.subject, f.diagnostic).unwrap();
    }
    for f in &r.skipped {
        write!(text, "\nskipped {}: {}", f.subject, f.diagnostic).unwrap();
    }
    if !r.notable.is_empty() {
        write!(text, "\nnotable: {}", r.notable.join(" ")).unwrap();
    }
    let capped = r.holds() && c.skipped > 0;
    Ok(ScanOutcome {
        capped,
        report: Report::new(r.holds(), &r, text)?,
    })
}
