//! Degree sequences of bivariegated line graphs.
//!
//! In a bivariegated line graph every vertex lies on one special edge and in
//! one clique on its own side, so a vertex in a side clique of size `c` has
//! degree `c`. Sequences are therefore described by the multiset of side
//! clique sizes split into two halves of equal total: an admissible partition.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bivariegation::{check_certificate_structure, BivariegationCertificate};
use crate::error::{Error, Result};
use crate::graph::{check_permutation, Graph};
use crate::iso::canonical_form;
use crate::line_graph::KrauszPartition;

/// Multiset of clique sizes split into two sides of total `n` each.
///
/// Canonical form: both sides sorted non-increasing and `side_a >= side_b`
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePartition {
    n: usize,
    side_a: Vec<usize>,
    side_b: Vec<usize>,
}

impl AdmissiblePartition {
    /// Validates and canonicalizes.
    pub fn new(mut side_a: Vec<usize>, mut side_b: Vec<usize>) -> Result<Self> {
        let n: usize = side_a.iter().sum();
        if n == 0 || side_b.iter().sum::<usize>() != n {
            return Err(Error::InvalidInput(format!(
                "sides must have equal positive sums, got {side_a:?} and {side_b:?}"
            )));
        }
        if side_a.iter().chain(&side_b).any(|&c| c == 0 || c > n) {
            return Err(Error::InvalidInput(format!("clique sizes must lie in 1..={n}")));
        }
        side_a.sort_unstable_by(|x, y| y.cmp(x));
        side_b.sort_unstable_by(|x, y| y.cmp(x));
        if side_a < side_b {
            std::mem::swap(&mut side_a, &mut side_b);
        }
        Ok(AdmissiblePartition { n, side_a, side_b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side_a(&self) -> &[usize] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[usize] {
        &self.side_b
    }

    /// All clique sizes, non-increasing.
    pub fn clique_sizes(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.side_a.iter().chain(&self.side_b).copied().collect();
        all.sort_unstable_by(|x, y| y.cmp(x));
        all
    }
}

impl fmt::Display for AdmissiblePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &[usize]| s.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{}}}|{{{}}}", side(&self.side_a), side(&self.side_b))
    }
}

impl Serialize for AdmissiblePartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("AdmissiblePartition", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("sides", &[&self.side_a, &self.side_b])?;
        st.end()
    }
}

/// Positive degrees, stored non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Rejects empty sequences and zero degrees.
    pub fn new(mut terms: Vec<usize>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidInput("empty degree sequence".into()));
        }
        if terms.contains(&0) {
            return Err(Error::InvalidInput("degrees must be positive".into()));
        }
        terms.sort_unstable_by(|x, y| y.cmp(x));
        Ok(DegreeSequence(terms))
    }

    /// Degree sequence of a graph without isolated vertices.
    pub fn of_graph(g: &Graph) -> Result<Self> {
        Self::new(g.degree_sequence())
    }

    pub fn terms(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(degree, multiplicity)` pairs, degree decreasing.
    pub fn grouped(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &d in &self.0 {
            match out.last_mut() {
                Some((last, k)) if *last == d => *k += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .grouped()
            .into_iter()
            .map(|(d, k)| if k == 1 { d.to_string() } else { format!("{d}^{k}") })
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// Accepts `"3^3,1^3"`, `"3 3 3 1 1 1"`, or a mix of both.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut terms = Vec::new();
        for token in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (d, k) = match token.split_once('^') {
                Some((d, k)) => (d, k),
                None => (token, "1"),
            };
            let parse = |x: &str| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad degree sequence term {token:?}")))
            };
            let (d, k) = (parse(d)?, parse(k)?);
            if d <= 0 {
                return Err(Error::InvalidInput(format!("degree {d} is not positive")));
            }
            if k <= 0 {
                return Err(Error::InvalidInput(format!("multiplicity {k} is not positive")));
            }
            terms.extend(std::iter::repeat_n(d as usize, k as usize));
        }
        DegreeSequence::new(terms)
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.0)
    }
}

/// Integer partitions of `total` into parts `<= max_part`, non-increasing,
/// in decreasing lexicographic order.
fn partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, max_part, &mut Vec::new(), &mut out);
    out
}

/// Canonical balanced splits of a multiset of clique sizes, `side_a`
/// decreasing.
fn balanced_splits(sizes: &[usize]) -> Vec<AdmissiblePartition> {
    let total: usize = sizes.iter().sum();
    if total % 2 == 1 {
        return Vec::new();
    }
    let n = total / 2;
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in sizes {
        *counts.entry(c).or_default() += 1;
    }
    let groups: Vec<(usize, usize)> = counts.into_iter().rev().collect();
    let mut found = BTreeSet::new();
    let mut pick = vec![0; groups.len()];
    choose(&groups, 0, n, &mut pick, &mut |pick| {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (&(c, k), &t) in groups.iter().zip(pick) {
            a.extend(std::iter::repeat_n(c, t));
            b.extend(std::iter::repeat_n(c, k - t));
        }
        if let Ok(p) = AdmissiblePartition::new(a, b) {
            found.insert(p);
        }
    });
    found.into_iter().rev().collect()
}

fn choose(
    groups: &[(usize, usize)],
    i: usize,
    rest: usize,
    pick: &mut [usize],
    f: &mut impl FnMut(&[usize]),
) {
    if i == groups.len() {
        if rest == 0 {
            f(pick);
        }
        return;
    }
    let (c, k) = groups[i];
    for t in (0..=k.min(rest / c)).rev() {
        pick[i] = t;
        choose(groups, i + 1, rest - t * c, pick, f);
    }
    pick[i] = 0;
}

/// Every admissible partition of `2n`, without duplicates.
///
/// Ordered by clique sizes in decreasing lexicographic order, then by
/// `side_a` decreasing.
pub fn admissible_partitions(n: usize) -> Vec<AdmissiblePartition> {
    if n == 0 {
        return Vec::new();
    }
    partitions(2 * n, n)
        .iter()
        .flat_map(|sizes| balanced_splits(sizes))
        .collect()
}

/// Each clique of size `c` contributes `c` vertices of degree `c`.
pub fn degree_sequence_of_partition(p: &AdmissiblePartition) -> DegreeSequence {
    let terms = p
        .clique_sizes()
        .into_iter()
        .flat_map(|c| std::iter::repeat_n(c, c))
        .collect();
    DegreeSequence::new(terms).expect("clique sizes are positive")
}

/// Two-sided construction: `side_a` cliques on vertices `0..n` in listed
/// order, `side_b` cliques on `n..2n`, and the matching `i -- n + perm[i]`
/// (identity by default).
pub fn realize_partition(p: &AdmissiblePartition, perm: Option<&[usize]>) -> Result<Graph> {
    let n = p.n;
    let identity: Vec<usize> = (0..n).collect();
    let perm = perm.unwrap_or(&identity);
    check_permutation(perm, n)?;
    let mut pairs = Vec::new();
    for (offset, side) in [(0, &p.side_a), (n, &p.side_b)] {
        let mut start = offset;
        for &c in side.iter() {
            for i in start..start + c {
                for j in i + 1..start + c {
                    pairs.push((i, j));
                }
            }
            start += c;
        }
    }
    pairs.extend(perm.iter().enumerate().map(|(i, &j)| (i, n + j)));
    Graph::from_edge_list(2 * n, &pairs)
}

/// The canonical admissible partition whose degree sequence is `s`, if any.
pub fn potentially_bivariegated_line_graphic(s: &DegreeSequence) -> Option<AdmissiblePartition> {
    if s.len() % 2 == 1 {
        return None;
    }
    let n = s.len() / 2;
    let mut sizes = Vec::new();
    for (d, k) in s.grouped() {
        if d > n || k % d != 0 {
            return None;
        }
        sizes.extend(std::iter::repeat_n(d, k / d));
    }
    balanced_splits(&sizes).into_iter().next()
}

/// Reads the admissible partition off a bivariegated line graph.
///
/// Side cliques come from the Krausz partition when its cliques avoid the
/// special edges and stay on one side; otherwise they are re-derived as the
/// components of the graph with the special edges removed.
pub fn extract_partition(
    g: &Graph,
    c: &BivariegationCertificate,
    k: &KrauszPartition,
) -> Result<AdmissiblePartition> {
    check_certificate_structure(g, c)
        .map_err(|e| Error::InvalidInput(format!("certificate rejected: {e}")))?;
    if !k.is_valid_for(g) {
        return Err(Error::InvalidInput("Krausz partition is not valid for the graph".into()));
    }
    if g.order() == 0 {
        return Err(Error::InvalidInput("the empty graph has no admissible partition".into()));
    }
    let mut in_u = vec![false; g.order()];
    for &v in &c.side_u {
        in_u[v] = true;
    }
    let cliques = side_cliques_from_krausz(g, c, k, &in_u).unwrap_or_else(|| {
        let pairs: Vec<(usize, usize)> = g
            .edges()
            .filter(|&e| !c.special_edges.contains(e))
            .map(|e| (e.u(), e.v()))
            .collect();
        Graph::from_edge_list(g.order(), &pairs)
            .expect("subgraph of g")
            .components()
    });
    for q in &cliques {
        let complete = q.iter().all(|&a| q.iter().all(|&b| a == b || g.has_edge(a, b)));
        if !complete {
            return Err(Error::InvalidInput(format!(
                "side component {q:?} is not a clique"
            )));
        }
    }
    let (a, b): (Vec<&Vec<usize>>, Vec<&Vec<usize>>) = cliques.iter().partition(|q| in_u[q[0]]);
    let p = AdmissiblePartition::new(
        a.iter().map(|q| q.len()).collect(),
        b.iter().map(|q| q.len()).collect(),
    )?;
    if degree_sequence_of_partition(&p).terms() != g.degree_sequence() {
        return Err(Error::InvalidInput(
            "extracted partition does not reproduce the degree sequence".into(),
        ));
    }
    Ok(p)
}

fn side_cliques_from_krausz(
    g: &Graph,
    c: &BivariegationCertificate,
    k: &KrauszPartition,
    in_u: &[bool],
) -> Option<Vec<Vec<usize>>> {
    let mut covered = vec![false; g.order()];
    let mut out = Vec::new();
    for q in &k.cliques {
        if q.len() == 2 && c.special_edges.contains(crate::graph::Edge::new(q[0], q[1])) {
            continue;
        }
        if q.iter().any(|&v| in_u[v] != in_u[q[0]] || covered[v]) {
            return None;
        }
        for &v in q {
            covered[v] = true;
        }
        out.push(q.clone());
    }
    out.extend((0..g.order()).filter(|&v| !covered[v]).map(|v| vec![v]));
    out.sort();
    Some(out)
}

/// Membership in `{n^n, 1^n}`, `{1^{2n}}` or `{2^4}`.
pub fn forcibly_bivariegated_line_graphic(s: &DegreeSequence) -> bool {
    match s.grouped().as_slice() {
        [(1, k)] => k % 2 == 0,
        [(2, 4)] => true,
        [(d, k), (1, j)] => d == k && k == j,
        _ => false,
    }
}

/// Havel–Erdős–Gallai feasibility for a non-increasing sequence.
pub fn erdos_gallai(terms: &[usize]) -> bool {
    let mut d = terms.to_vec();
    d.sort_unstable_by(|x, y| y.cmp(x));
    let total: usize = d.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    let p = d.len();
    let mut prefix = 0;
    for k in 1..=p {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// All realizations of a degree sequence up to isomorphism.
#[derive(Debug, Clone)]
pub struct Realizations {
    pub graphical: bool,
    /// Pairwise non-isomorphic, sorted by canonical form.
    pub graphs: Vec<Graph>,
}

/// Exhaustive labelled search, deduplicated by canonical form.
pub fn enumerate_realizations(s: &DegreeSequence) -> Realizations {
    if !erdos_gallai(s.terms()) {
        return Realizations {
            graphical: false,
            graphs: Vec::new(),
        };
    }
    let p = s.len();
    let mut search = RealizationSearch {
        residual: s.terms().to_vec(),
        adjacent: vec![vec![false; p]; p],
        edges: Vec::new(),
    };
    let mut seen = BTreeMap::new();
    search.run(&mut |h| {
        seen.entry(canonical_form(h)).or_insert_with(|| h.clone());
    });
    Realizations {
        graphical: true,
        graphs: seen.into_values().collect(),
    }
}

struct RealizationSearch {
    residual: Vec<usize>,
    adjacent: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

impl RealizationSearch {
    /// Saturates the lowest vertex with positive residual degree using
    /// later vertices only; earlier vertices are already complete.
    fn run(&mut self, found: &mut impl FnMut(&Graph)) {
        let p = self.residual.len();
        let Some(v) = self.residual.iter().position(|&r| r > 0) else {
            found(&Graph::from_edge_list(p, &self.edges).expect("simple edges"));
            return;
        };
        let candidates: Vec<usize> = (v + 1..p)
            .filter(|&w| self.residual[w] > 0 && !self.adjacent[v][w])
            .collect();
        let need = self.residual[v];
        if candidates.len() < need {
            return;
        }
        let mut chosen = Vec::with_capacity(need);
        combos(&candidates, need, 0, &mut chosen, &mut |set| {
            self.residual[v] = 0;
            for &w in set {
                self.residual[w] -= 1;
                self.adjacent[v][w] = true;
                self.adjacent[w][v] = true;
                self.edges.push((v, w));
            }
            self.run(found);
            for &w in set {
                self.residual[w] += 1;
                self.adjacent[v][w] = false;
                self.adjacent[w][v] = false;
                self.edges.pop();
            }
            self.residual[v] = need;
        });
    }
}

fn combos(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..items.len() {
        if items.len() - i < k - cur.len() {
            break;
        }
        cur.push(items[i]);
        combos(items, k, i + 1, cur, f);
        cur.pop();
    }
}
