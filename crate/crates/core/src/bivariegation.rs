//! Bivariegation certificates and the executable forms of the structural
//! results about line graphs that are bivariegated.
//!
//! A perfect matching `S` (the special edges) witnesses bivariegation when
//! the vertices can be two-coloured so that special edges join different
//! colours and all other edges join equal colours. Each vertex then has
//! exactly one neighbour on the other side, namely its partner in `S`, and
//! every cycle crosses an even number of special edges.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::cycles::find_cycle;
use crate::error::{Error, Result};
use crate::graph::{Cycle, Edge, EdgeSet, Graph};
use crate::iso::is_isomorphic;
use crate::line_graph::{iterate, line_graph, LineGraphResult};
use crate::Limits;

/// Special edges plus the two sides of a 2-variegation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariegationCertificate {
    pub special_edges: EdgeSet,
    pub side_u: Vec<usize>,
    pub side_w: Vec<usize>,
}

impl BivariegationCertificate {
    /// Half the order of the host graph.
    pub fn n(&self) -> usize {
        self.special_edges.len()
    }

    /// True for the empty certificate of the order-0 graph.
    pub fn is_vacuous(&self) -> bool {
        self.special_edges.is_empty() && self.side_u.is_empty() && self.side_w.is_empty()
    }
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateFailure {
    #[error("special edge {0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("special edges are not a matching")]
    NotAMatching,
    #[error("special edges do not cover every vertex")]
    NotPerfect,
    #[error("sides do not partition the vertex set")]
    SidesNotPartition,
    #[error("sides have sizes {0} and {1}")]
    UnbalancedSides(usize, usize),
    #[error("special edge {0} does not cross the sides")]
    SpecialEdgeWithinSide(Edge),
    #[error("non-special edge {0} crosses the sides")]
    NonSpecialEdgeAcrossSides(Edge),
    #[error("cycle {0:?} contains an odd number of special edges")]
    OddSpecialCycle(Cycle),
    #[error("cycle enumeration cap of {0} exceeded")]
    CycleCapExceeded(usize),
}

impl CertificateFailure {
    /// Stable short code for reports.
    pub fn code(&self) -> &'static str {
        match self {
            CertificateFailure::NotAnEdge(_) => "not_an_edge",
            CertificateFailure::NotAMatching => "not_a_matching",
            CertificateFailure::NotPerfect => "not_perfect",
            CertificateFailure::SidesNotPartition => "sides_not_partition",
            CertificateFailure::UnbalancedSides(..) => "unbalanced_sides",
            CertificateFailure::SpecialEdgeWithinSide(_) => "special_edge_within_side",
            CertificateFailure::NonSpecialEdgeAcrossSides(_) => "non_special_edge_across_sides",
            CertificateFailure::OddSpecialCycle(_) => "odd_special_cycle",
            CertificateFailure::CycleCapExceeded(_) => "cycle_cap_exceeded",
        }
    }
}

/// Union-find carrying the parity of each vertex relative to its root.
#[derive(Debug, Clone)]
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            parity: vec![0; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, u8) {
        let p = self.parent[x];
        if p == x {
            return (x, 0);
        }
        let (root, up) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= up;
        (root, self.parity[x])
    }

    /// Records `side(a) xor side(b) == rel`; false on contradiction.
    fn relate(&mut self, a: usize, b: usize, rel: u8) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == rel;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        self.parity[hi] = pa ^ pb ^ rel;
        true
    }
}

/// Adds the constraints of pairing `v` with `w`: they are on opposite sides
/// and every other neighbour of either sits on its own side.
fn pair_constraints(g: &Graph, uf: &mut ParityUnionFind, v: usize, w: usize) -> bool {
    uf.relate(v, w, 1)
        && g.neighbors(v).iter().all(|&x| x == w || uf.relate(v, x, 0))
        && g.neighbors(w).iter().all(|&x| x == v || uf.relate(w, x, 0))
}

/// Turns a fully constrained colouring into balanced sides.
///
/// Each component offers two orientations; subset-sum picks orientations
/// whose side-`u` total is `n`, preferring the one that puts each
/// component's minimum vertex in `side_u`.
fn sides_from(g: &Graph, uf: &mut ParityUnionFind) -> Option<(Vec<usize>, Vec<usize>)> {
    let order = g.order();
    let comps = g.components();
    let parts: Vec<(Vec<usize>, Vec<usize>)> = comps
        .iter()
        .map(|comp| {
            let base = uf.find(comp[0]).1;
            comp.iter()
                .copied()
                .partition(|&v| uf.find(v).1 == base)
        })
        .collect();
    let target = order / 2;
    if order % 2 == 1 {
        return None;
    }
    // reach[i][s]: side_u total s is achievable with the first i components.
    let mut reach = vec![vec![false; target + 1]; parts.len() + 1];
    reach[0][0] = true;
    for (i, (a, b)) in parts.iter().enumerate() {
        for s in 0..=target {
            if !reach[i][s] {
                continue;
            }
            for add in [a.len(), b.len()] {
                if s + add <= target {
                    reach[i + 1][s + add] = true;
                }
            }
        }
    }
    if !reach[parts.len()][target] {
        return None;
    }
    let mut side_u = Vec::with_capacity(target);
    let mut side_w = Vec::with_capacity(target);
    let mut s = target;
    for i in (0..parts.len()).rev() {
        let (a, b) = &parts[i];
        let keep = s >= a.len() && reach[i][s - a.len()];
        let (to_u, to_w) = if keep { (a, b) } else { (b, a) };
        s -= to_u.len();
        side_u.extend_from_slice(to_u);
        side_w.extend_from_slice(to_w);
    }
    side_u.sort_unstable();
    side_w.sort_unstable();
    Some((side_u, side_w))
}

/// Visits every perfect matching that admits a consistent side assignment,
/// in lexicographic order, with constraint propagation pruning the search.
fn for_each_consistent_matching<F>(g: &Graph, mut visit: F)
where
    F: FnMut(&EdgeSet, &mut ParityUnionFind) -> ControlFlow<()>,
{
    if g.order() % 2 == 1 {
        return;
    }
    let mut matched = vec![false; g.order()];
    let mut current = Vec::new();
    let uf = ParityUnionFind::new(g.order());
    let _ = matching_search(g, &mut matched, &mut current, uf, &mut visit);
}

fn matching_search<F>(
    g: &Graph,
    matched: &mut [bool],
    current: &mut Vec<Edge>,
    uf: ParityUnionFind,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&EdgeSet, &mut ParityUnionFind) -> ControlFlow<()>,
{
    let Some(v) = matched.iter().position(|&m| !m) else {
        let mut uf = uf;
        return visit(&EdgeSet::new(current.iter().copied()), &mut uf);
    };
    matched[v] = true;
    for &w in g.neighbors(v) {
        if matched[w] {
            continue;
        }
        let mut next = uf.clone();
        if !pair_constraints(g, &mut next, v, w) {
            continue;
        }
        matched[w] = true;
        current.push(Edge::new(v, w));
        let flow = matching_search(g, matched, current, next, visit);
        current.pop();
        matched[w] = false;
        if flow.is_break() {
            matched[v] = false;
            return flow;
        }
    }
    matched[v] = false;
    ControlFlow::Continue(())
}

/// The first (lexicographically least special-edge set) certificate, if any.
///
/// Odd order gives `None`; the order-0 graph gets the vacuous certificate.
pub fn bivariegation_certificate(g: &Graph) -> Option<BivariegationCertificate> {
    let mut found = None;
    for_each_consistent_matching(g, |s, uf| match sides_from(g, uf) {
        Some((side_u, side_w)) => {
            found = Some(BivariegationCertificate {
                special_edges: s.clone(),
                side_u,
                side_w,
            });
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    });
    found
}

/// Every certificate, one per admissible special-edge set.
pub fn all_bivariegation_certificates(g: &Graph) -> Vec<BivariegationCertificate> {
    let mut out = Vec::new();
    for_each_consistent_matching(g, |s, uf| {
        if let Some((side_u, side_w)) = sides_from(g, uf) {
            out.push(BivariegationCertificate {
                special_edges: s.clone(),
                side_u,
                side_w,
            });
        }
        ControlFlow::Continue(())
    });
    out
}

pub fn is_bivariegated(g: &Graph) -> bool {
    bivariegation_certificate(g).is_some()
}

/// Builds the certificate for a given special-edge set, if it works.
pub fn certificate_for_matching(g: &Graph, s: &EdgeSet) -> Option<BivariegationCertificate> {
    if !crate::matching::is_perfect_matching(g, s) {
        return None;
    }
    let mut uf = ParityUnionFind::new(g.order());
    for e in s.iter() {
        if !pair_constraints(g, &mut uf, e.u(), e.v()) {
            return None;
        }
    }
    let (side_u, side_w) = sides_from(g, &mut uf)?;
    Some(BivariegationCertificate {
        special_edges: s.clone(),
        side_u,
        side_w,
    })
}

/// Checks the matching and side invariants of a certificate.
pub fn check_certificate_structure(
    g: &Graph,
    c: &BivariegationCertificate,
) -> std::result::Result<(), CertificateFailure> {
    for e in c.special_edges.iter() {
        if !g.has_edge(e.u(), e.v()) {
            return Err(CertificateFailure::NotAnEdge(e));
        }
    }
    if !c.special_edges.is_independent() {
        return Err(CertificateFailure::NotAMatching);
    }
    if c.special_edges.len() * 2 != g.order() {
        return Err(CertificateFailure::NotPerfect);
    }
    let mut side = vec![None; g.order()];
    for (list, tag) in [(&c.side_u, 0u8), (&c.side_w, 1u8)] {
        for &v in list.iter() {
            if v >= g.order() || side[v].is_some() {
                return Err(CertificateFailure::SidesNotPartition);
            }
            side[v] = Some(tag);
        }
    }
    if side.iter().any(Option::is_none) {
        return Err(CertificateFailure::SidesNotPartition);
    }
    if c.side_u.len() != c.side_w.len() {
        return Err(CertificateFailure::UnbalancedSides(c.side_u.len(), c.side_w.len()));
    }
    for e in g.edges() {
        let crosses = side[e.u()] != side[e.v()];
        let special = c.special_edges.contains(e);
        if special && !crosses {
            return Err(CertificateFailure::SpecialEdgeWithinSide(e));
        }
        if !special && crosses {
            return Err(CertificateFailure::NonSpecialEdgeAcrossSides(e));
        }
    }
    Ok(())
}

/// Full check: structure plus an independent pass over every simple cycle
/// confirming an even number of special edges on each.
pub fn check_certificate(
    g: &Graph,
    c: &BivariegationCertificate,
    cycle_cap: usize,
) -> std::result::Result<(), CertificateFailure> {
    check_certificate_structure(g, c)?;
    check_cycle_parity(g, &c.special_edges, cycle_cap)
}

/// Every simple cycle of `g` contains an even number of edges from `s`.
pub fn check_cycle_parity(
    g: &Graph,
    s: &EdgeSet,
    cycle_cap: usize,
) -> std::result::Result<(), CertificateFailure> {
    let bad = find_cycle(g, cycle_cap, |c| c.edges().filter(|&e| s.contains(e)).count() % 2 == 1)
        .map_err(|_| CertificateFailure::CycleCapExceeded(cycle_cap))?;
    match bad {
        Some(c) => Err(CertificateFailure::OddSpecialCycle(c)),
        None => Ok(()),
    }
}

pub fn verify_certificate(g: &Graph, c: &BivariegationCertificate, cycle_cap: usize) -> bool {
    check_certificate(g, c, cycle_cap).is_ok()
}

/// An edge `uv` with `d(u) >= 3` and `d(v) >= 3`, or `d(u) >= 3` and
/// `d(v) = 1`. When one exists, `L(g)` is not bivariegated.
pub fn lemma1_obstruction(g: &Graph) -> Option<Edge> {
    g.edges().find(|e| {
        let (a, b) = (g.degree(e.u()), g.degree(e.v()));
        (a >= 3 && (b >= 3 || b == 1)) || (b >= 3 && a == 1)
    })
}

/// A simple cycle whose length is not a multiple of 4. When one exists,
/// `L(g)` is not bivariegated.
pub fn lemma2_obstruction(g: &Graph, cycle_cap: usize) -> Result<Option<Cycle>> {
    find_cycle(g, cycle_cap, |c| c.len() % 4 != 0)
}

/// Edge-disjoint induced paths `x-y-z` with `deg(y) = 2` covering all edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathDecomposition {
    /// Triples `[x, y, z]` with `x < z`, sorted.
    pub paths: Vec<[usize; 3]>,
}

impl PathDecomposition {
    /// The two edges of each path.
    pub fn edge_pairs(&self) -> impl Iterator<Item = (Edge, Edge)> + '_ {
        self.paths
            .iter()
            .map(|&[x, y, z]| (Edge::new(x, y), Edge::new(y, z)))
    }

    /// Checks every invariant against `g`, cycle parity included.
    pub fn is_valid_for(&self, g: &Graph, cycle_cap: usize) -> Result<bool> {
        let mut used = std::collections::HashSet::new();
        for &[x, y, z] in &self.paths {
            let ok = x < g.order()
                && y < g.order()
                && z < g.order()
                && x != z
                && g.has_edge(x, y)
                && g.has_edge(y, z)
                && !g.has_edge(x, z)
                && g.degree(y) == 2
                && used.insert(Edge::new(x, y))
                && used.insert(Edge::new(y, z));
            if !ok {
                return Ok(false);
            }
        }
        if used.len() != g.size() {
            return Ok(false);
        }
        Ok(self.cycle_parity_violation(g, cycle_cap)?.is_none())
    }

    /// A simple cycle containing an odd number of whole paths, if any.
    pub fn cycle_parity_violation(&self, g: &Graph, cycle_cap: usize) -> Result<Option<Cycle>> {
        let pairs: Vec<(Edge, Edge)> = self.edge_pairs().collect();
        find_cycle(g, cycle_cap, |c| {
            let on: std::collections::HashSet<Edge> = c.edges().collect();
            let k = pairs
                .iter()
                .filter(|(a, b)| on.contains(a) && on.contains(b))
                .count();
            k % 2 == 1
        })
    }
}

/// Why no admissible path decomposition exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PathsAbsent {
    OddEdgeCount,
    NoDecomposition,
    /// Decompositions exist, but each puts an odd number of paths on some cycle.
    OddCycleParity,
}

impl PathsAbsent {
    pub fn reason(&self) -> &'static str {
        match self {
            PathsAbsent::OddEdgeCount => "odd edge count",
            PathsAbsent::NoDecomposition => "no decomposition into induced paths through degree-2 vertices",
            PathsAbsent::OddCycleParity => "every decomposition has a cycle carrying an odd number of paths",
        }
    }
}

/// Enumerates decompositions of the edge set into `x-y-z` paths with
/// `deg(y) = 2` and `x` not adjacent to `z`, ignoring cycle parity.
fn for_each_path_decomposition<F>(g: &Graph, mut visit: F) -> Result<()>
where
    F: FnMut(&PathDecomposition) -> Result<ControlFlow<()>>,
{
    let edges = g.edge_vec();
    let mut covered = vec![false; edges.len()];
    let mut paths = Vec::new();
    let _ = decompose(g, &edges, &mut covered, &mut paths, &mut visit)?;
    Ok(())
}

fn decompose<F>(
    g: &Graph,
    edges: &[Edge],
    covered: &mut [bool],
    paths: &mut Vec<[usize; 3]>,
    visit: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&PathDecomposition) -> Result<ControlFlow<()>>,
{
    let Some(i) = covered.iter().position(|&c| !c) else {
        let mut sorted = paths.clone();
        sorted.sort_unstable();
        return visit(&PathDecomposition { paths: sorted });
    };
    let e = edges[i];
    for y in e.endpoints() {
        if g.degree(y) != 2 {
            continue;
        }
        let x = e.other(y).unwrap();
        let z = *g.neighbors(y).iter().find(|&&w| w != x).unwrap();
        let f = Edge::new(y, z);
        let j = edges.binary_search(&f).unwrap();
        if covered[j] || g.has_edge(x, z) {
            continue;
        }
        covered[i] = true;
        covered[j] = true;
        paths.push([x.min(z), y, x.max(z)]);
        let flow = decompose(g, edges, covered, paths, visit)?;
        paths.pop();
        covered[i] = false;
        covered[j] = false;
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Outcome of the search for an admissible path decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathSearch {
    Found(PathDecomposition),
    Absent(PathsAbsent),
}

/// Searches for `q/2` edge-disjoint `<xyz>` paths such that no simple cycle
/// carries an odd number of them.
pub fn theorem1_search(g: &Graph, cycle_cap: usize) -> Result<PathSearch> {
    if g.size() % 2 == 1 {
        return Ok(PathSearch::Absent(PathsAbsent::OddEdgeCount));
    }
    let mut any = false;
    let mut found = None;
    for_each_path_decomposition(g, |d| {
        any = true;
        if d.cycle_parity_violation(g, cycle_cap)?.is_none() {
            found = Some(d.clone());
            Ok(ControlFlow::Break(()))
        } else {
            Ok(ControlFlow::Continue(()))
        }
    })?;
    Ok(match (found, any) {
        (Some(d), _) => PathSearch::Found(d),
        (None, true) => PathSearch::Absent(PathsAbsent::OddCycleParity),
        (None, false) => PathSearch::Absent(PathsAbsent::NoDecomposition),
    })
}

pub fn theorem1_paths(g: &Graph, cycle_cap: usize) -> Result<Option<PathDecomposition>> {
    Ok(match theorem1_search(g, cycle_cap)? {
        PathSearch::Found(d) => Some(d),
        PathSearch::Absent(_) => None,
    })
}

/// Special edges of `L(g)` induced by a path decomposition of `g`.
pub fn special_edges_from_paths(lg: &LineGraphResult, d: &PathDecomposition) -> EdgeSet {
    EdgeSet::new(d.edge_pairs().map(|(a, b)| {
        Edge::new(
            lg.vertex_of(a).expect("path edges are host edges"),
            lg.vertex_of(b).expect("path edges are host edges"),
        )
    }))
}

/// Verdict for the equation `L(G) = B` with `B` bivariegated.
#[derive(Debug, Clone, Serialize)]
pub struct LineGraphEquation {
    /// Ground truth: whether `L(g)` is bivariegated.
    pub solution: bool,
    /// Certificate for `L(g)`. Derived from the witness when one exists.
    pub certificate: Option<BivariegationCertificate>,
    pub witness: Option<PathDecomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_absent_reason: Option<&'static str>,
    /// Set when the path criterion and the direct check disagree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<String>,
    #[serde(skip)]
    pub line_graph: LineGraphResult,
}

pub fn solve_lg_equation(g: &Graph, cycle_cap: usize) -> Result<LineGraphEquation> {
    let lg = line_graph(g);
    let search = theorem1_search(g, cycle_cap)?;
    let direct = bivariegation_certificate(&lg.line_graph);
    let solution = direct.is_some();
    let (witness, reason) = match search {
        PathSearch::Found(d) => (Some(d), None),
        PathSearch::Absent(r) => (None, Some(r.reason())),
    };
    let from_witness = witness.as_ref().and_then(|d| {
        let s = special_edges_from_paths(&lg, d);
        certificate_for_matching(&lg.line_graph, &s)
            .filter(|c| check_certificate_structure(&lg.line_graph, c).is_ok())
    });
    let discrepancy = match (witness.is_some(), solution, from_witness.is_some()) {
        (true, false, _) => Some("path decomposition found but L(G) is not bivariegated".to_string()),
        (false, true, _) => Some("L(G) is bivariegated but no admissible path decomposition exists".to_string()),
        (true, true, false) => Some("path decomposition does not induce a valid special-edge set".to_string()),
        _ => None,
    };
    Ok(LineGraphEquation {
        solution,
        certificate: from_witness.or(direct),
        witness,
        witness_absent_reason: reason,
        discrepancy,
        line_graph: lg,
    })
}

/// A path decomposition together with one special edge inside each path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedWitness {
    pub paths: PathDecomposition,
    pub special_edges: EdgeSet,
    pub certificate: BivariegationCertificate,
}

/// Verdict for the equation `L(B1) = B2` with both graphs bivariegated.
#[derive(Debug, Clone, Serialize)]
pub struct NestedEquation {
    pub g_bivariegated: bool,
    pub lg_bivariegated: bool,
    pub nested_witness: Option<NestedWitness>,
}

/// Looks for an admissible path decomposition and a perfect matching of `g`
/// with exactly one matching edge in each path that is also a valid set of
/// special edges for `g`. Both bivariegation flags are decided directly.
pub fn solve_nested_equation(g: &Graph, cycle_cap: usize) -> Result<NestedEquation> {
    let g_bivariegated = is_bivariegated(g);
    let lg_bivariegated = is_bivariegated(&line_graph(g).line_graph);
    let mut witness = None;
    if g.order().is_multiple_of(2) && g.size() == g.order() {
        for_each_path_decomposition(g, |d| {
            if d.cycle_parity_violation(g, cycle_cap)?.is_some() {
                return Ok(ControlFlow::Continue(()));
            }
            let pairs: Vec<(Edge, Edge)> = d.edge_pairs().collect();
            let mut used = vec![false; g.order()];
            let mut chosen = Vec::new();
            if let Some(w) = pick_one_per_path(g, d, &pairs, &mut used, &mut chosen) {
                witness = Some(w);
                Ok(ControlFlow::Break(()))
            } else {
                Ok(ControlFlow::Continue(()))
            }
        })?;
    }
    Ok(NestedEquation {
        g_bivariegated,
        lg_bivariegated,
        nested_witness: witness,
    })
}

fn pick_one_per_path(
    g: &Graph,
    d: &PathDecomposition,
    pairs: &[(Edge, Edge)],
    used: &mut [bool],
    chosen: &mut Vec<Edge>,
) -> Option<NestedWitness> {
    let i = chosen.len();
    if i == pairs.len() {
        let s = EdgeSet::new(chosen.iter().copied());
        return certificate_for_matching(g, &s).map(|certificate| NestedWitness {
            paths: d.clone(),
            special_edges: s,
            certificate,
        });
    }
    let (a, b) = pairs[i];
    for e in [a.min(b), a.max(b)] {
        if used[e.u()] || used[e.v()] {
            continue;
        }
        used[e.u()] = true;
        used[e.v()] = true;
        chosen.push(e);
        let found = pick_one_per_path(g, d, pairs, used, chosen);
        chosen.pop();
        used[e.u()] = false;
        used[e.v()] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// A profile cut short by a resource limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialProfile {
    pub values: Vec<bool>,
    pub error: Error,
}

/// `[is_bivariegated(L^k(g)) for k in 1..=kmax]`.
pub fn iterated_bivariegated_profile(
    g: &Graph,
    kmax: usize,
    limits: &Limits,
) -> std::result::Result<Vec<bool>, PartialProfile> {
    let mut values = Vec::with_capacity(kmax);
    match iterate(g, kmax, limits, |_, lk| values.push(is_bivariegated(lk))) {
        Ok(_) => Ok(values),
        Err(error) => Err(PartialProfile { values, error }),
    }
}

/// How a graph relates to the fixed-point statement for line graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedPointConclusion {
    NotFixed,
    FixedNotBivariegated,
    /// Fixed, bivariegated, and a cycle of length divisible by 4.
    FixedBivariegatedCycle,
    /// Fixed and bivariegated but not a cycle of length divisible by 4.
    Counterexample,
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedPointVerdict {
    pub fixed: bool,
    pub bivariegated: bool,
    pub cycle_length: Option<usize>,
    pub conclusion: FixedPointConclusion,
}

pub fn fixed_point_check(g: &Graph) -> FixedPointVerdict {
    let fixed = g.size() == g.order() && is_isomorphic(g, &line_graph(g).line_graph);
    let bivariegated = is_bivariegated(g);
    let cycle_length = g.cycle_length();
    let conclusion = match (fixed, bivariegated) {
        (false, _) => FixedPointConclusion::NotFixed,
        (true, false) => FixedPointConclusion::FixedNotBivariegated,
        (true, true) if cycle_length.is_some_and(|n| n % 4 == 0) => {
            FixedPointConclusion::FixedBivariegatedCycle
        }
        (true, true) => FixedPointConclusion::Counterexample,
    };
    FixedPointVerdict {
        fixed,
        bivariegated,
        cycle_length,
        conclusion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::DEFAULT_CYCLE_CAP;
    use crate::graph::Family;

    const CAP: usize = DEFAULT_CYCLE_CAP;

    fn fam(f: Family) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn petersen_certificates() {
        let g = fam(Family::Petersen);
        let c = bivariegation_certificate(&g).unwrap();
        assert!(verify_certificate(&g, &c, CAP));
        let spokes = BivariegationCertificate {
            special_edges: EdgeSet::new((0..5).map(|i| Edge::new(i, i + 5))),
            side_u: (0..5).collect(),
            side_w: (5..10).collect(),
        };
        assert!(verify_certificate(&g, &spokes, CAP));
        let all = all_bivariegation_certificates(&g);
        assert_eq!(all.len(), 6);
        assert!(all.iter().any(|c| c.special_edges == spokes.special_edges));
    }

    #[test]
    fn c4_and_c6() {
        let c4 = fam(Family::Cycle(4));
        let c = bivariegation_certificate(&c4).unwrap();
        assert_eq!(c.special_edges.edges(), &[Edge::new(0, 1), Edge::new(2, 3)]);
        assert_eq!((c.side_u.clone(), c.side_w.clone()), (vec![0, 3], vec![1, 2]));
        assert!(verify_certificate(&c4, &c, CAP));
        assert!(bivariegation_certificate(&fam(Family::Cycle(6))).is_none());
    }

    #[test]
    fn simple_verdicts() {
        for n in 1..=5 {
            assert!(is_bivariegated(&fam(Family::Matching(n))));
        }
        assert!(!is_bivariegated(&Graph::empty(1)));
        for n in 1..=6 {
            let g = fam(Family::CompleteBivariegated(n));
            let c = bivariegation_certificate(&g).unwrap();
            assert!(verify_certificate(&g, &c, CAP));
        }
        let empty = bivariegation_certificate(&Graph::empty(0)).unwrap();
        assert!(empty.is_vacuous());
        assert!(!is_bivariegated(&fam(Family::Complete(4))));
    }

    #[test]
    fn certificate_failures() {
        let c4 = fam(Family::Cycle(4));
        let adjacent = BivariegationCertificate {
            special_edges: EdgeSet::new([Edge::new(0, 1), Edge::new(1, 2)]),
            side_u: vec![0, 2],
            side_w: vec![1, 3],
        };
        assert_eq!(
            check_certificate(&c4, &adjacent, CAP),
            Err(CertificateFailure::NotAMatching)
        );
        let off_graph = BivariegationCertificate {
            special_edges: EdgeSet::new([Edge::new(0, 2), Edge::new(1, 3)]),
            side_u: vec![0, 1],
            side_w: vec![2, 3],
        };
        assert_eq!(
            check_certificate(&c4, &off_graph, CAP).unwrap_err().code(),
            "not_an_edge"
        );
        let unbalanced = BivariegationCertificate {
            special_edges: EdgeSet::new([Edge::new(0, 1), Edge::new(2, 3)]),
            side_u: vec![0],
            side_w: vec![1, 2, 3],
        };
        assert_eq!(
            check_certificate(&c4, &unbalanced, CAP),
            Err(CertificateFailure::UnbalancedSides(1, 3))
        );
        let crossing = BivariegationCertificate {
            special_edges: EdgeSet::new([Edge::new(0, 1), Edge::new(2, 3)]),
            side_u: vec![0, 2],
            side_w: vec![1, 3],
        };
        assert_eq!(
            check_certificate(&c4, &crossing, CAP).unwrap_err().code(),
            "non_special_edge_across_sides"
        );
    }

    #[test]
    fn c8_alternating_certificate() {
        let c8 = fam(Family::Cycle(8));
        // Special edges (0,1), (2,3), ...; sides follow the even/odd
        // positions within each special pair.
        let c = BivariegationCertificate {
            special_edges: EdgeSet::new((0..4).map(|i| Edge::new(2 * i, 2 * i + 1))),
            side_u: vec![0, 3, 4, 7],
            side_w: vec![1, 2, 5, 6],
        };
        assert!(verify_certificate(&c8, &c, CAP));
        assert_eq!(check_cycle_parity(&c8, &c.special_edges, CAP), Ok(()));
    }

    #[test]
    fn degree_and_cycle_obstructions() {
        let k4 = fam(Family::Complete(4));
        assert!(lemma1_obstruction(&k4).is_some());
        assert!(lemma1_obstruction(&fam(Family::Cycle(8))).is_none());
        let claw = fam(Family::CompleteBipartite(1, 3));
        let e = lemma1_obstruction(&claw).unwrap();
        let mut degs = [claw.degree(e.u()), claw.degree(e.v())];
        degs.sort_unstable();
        assert_eq!(degs, [1, 3]);

        let c6 = fam(Family::Cycle(6));
        assert_eq!(lemma2_obstruction(&c6, CAP).unwrap().unwrap().len(), 6);
        assert!(lemma2_obstruction(&fam(Family::Cycle(8)), CAP).unwrap().is_none());
        assert_eq!(lemma2_obstruction(&k4, CAP).unwrap().unwrap().len(), 3);
    }

    #[test]
    fn path_decomposition_examples() {
        let p3 = fam(Family::Path(3));
        let d = theorem1_paths(&p3, CAP).unwrap().unwrap();
        assert_eq!(d.paths, vec![[0, 1, 2]]);

        let c8 = fam(Family::Cycle(8));
        let d = theorem1_paths(&c8, CAP).unwrap().unwrap();
        assert_eq!(d.paths.len(), 4);
        assert!(d.is_valid_for(&c8, CAP).unwrap());

        let c4 = fam(Family::Cycle(4));
        let d = theorem1_paths(&c4, CAP).unwrap().unwrap();
        assert_eq!(d.paths.len(), 2);
        assert!(d.is_valid_for(&c4, CAP).unwrap());

        assert_eq!(
            theorem1_search(&fam(Family::Path(4)), CAP).unwrap(),
            PathSearch::Absent(PathsAbsent::OddEdgeCount)
        );
        assert_eq!(
            theorem1_search(&fam(Family::Cycle(6)), CAP).unwrap(),
            PathSearch::Absent(PathsAbsent::OddCycleParity)
        );
        assert_eq!(
            theorem1_search(&fam(Family::Complete(4)), CAP).unwrap(),
            PathSearch::Absent(PathsAbsent::NoDecomposition)
        );
    }

    #[test]
    fn lg_equation_examples() {
        let v = solve_lg_equation(&fam(Family::Path(3)), CAP).unwrap();
        assert!(v.solution && v.witness.is_some() && v.certificate.is_some());
        assert!(v.discrepancy.is_none());
        assert!(!solve_lg_equation(&fam(Family::Cycle(6)), CAP).unwrap().solution);
        let pet = fam(Family::Petersen);
        assert_eq!(lemma2_obstruction(&pet, CAP).unwrap().unwrap().len() % 4, 1);
        let v = solve_lg_equation(&pet, CAP).unwrap();
        assert!(!v.solution && v.discrepancy.is_none());
    }

    #[test]
    fn lg_certificate_matches_witness() {
        let c8 = fam(Family::Cycle(8));
        let v = solve_lg_equation(&c8, CAP).unwrap();
        let cert = v.certificate.unwrap();
        let expected = special_edges_from_paths(&v.line_graph, v.witness.as_ref().unwrap());
        assert_eq!(cert.special_edges, expected);
        assert!(verify_certificate(&v.line_graph.line_graph, &cert, CAP));
    }

    #[test]
    fn nested_examples() {
        for n in [4, 8] {
            let g = fam(Family::Cycle(n));
            let v = solve_nested_equation(&g, CAP).unwrap();
            let w = v.nested_witness.expect("cycle of length 4k has a nested witness");
            assert!(v.g_bivariegated && v.lg_bivariegated);
            assert_eq!(w.special_edges.len(), n / 2);
            for (a, b) in w.paths.edge_pairs() {
                assert_eq!(
                    [a, b].iter().filter(|&&e| w.special_edges.contains(e)).count(),
                    1
                );
            }
            assert!(verify_certificate(&g, &w.certificate, CAP));
        }
        let v = solve_nested_equation(&fam(Family::Path(3)), CAP).unwrap();
        assert!(v.nested_witness.is_none() && !v.g_bivariegated);
    }

    #[test]
    fn profiles() {
        let l = Limits::default();
        assert_eq!(
            iterated_bivariegated_profile(&fam(Family::Cycle(4)), 4, &l).unwrap(),
            vec![true; 4]
        );
        assert_eq!(
            iterated_bivariegated_profile(&fam(Family::Path(5)), 2, &l).unwrap(),
            vec![true, false]
        );
        assert_eq!(
            iterated_bivariegated_profile(&fam(Family::Complete(4)), 2, &l).unwrap(),
            vec![false, false]
        );
        let tight = Limits {
            max_line_order: 10,
            ..Limits::default()
        };
        let p = iterated_bivariegated_profile(&fam(Family::Complete(5)), 3, &tight).unwrap_err();
        assert_eq!(p.values, vec![false]);
        assert!(matches!(p.error, Error::GrowthCapExceeded { k: 2, .. }));
    }

    #[test]
    fn fixed_points() {
        let v = fixed_point_check(&fam(Family::Cycle(8)));
        assert!(v.fixed && v.bivariegated);
        assert_eq!(v.conclusion, FixedPointConclusion::FixedBivariegatedCycle);
        let v = fixed_point_check(&fam(Family::Cycle(5)));
        assert_eq!(v.conclusion, FixedPointConclusion::FixedNotBivariegated);
        let v = fixed_point_check(&fam(Family::Path(4)));
        assert!(!v.fixed);
        assert_eq!(v.conclusion, FixedPointConclusion::NotFixed);
    }
}
