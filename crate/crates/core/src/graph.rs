//! Simple undirected graphs on the vertex set `0..order`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An unordered vertex pair, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Builds the normalized edge `{a, b}`. Panics on `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.u, self.v]
    }

    pub fn contains(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint other than `x`, if `x` is an endpoint.
    pub fn other(self, x: usize) -> Option<usize> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        if a == b {
            return Err(serde::de::Error::custom(format!("self-loop at vertex {a}")));
        }
        Ok(Edge::new(a, b))
    }
}

/// A sorted, duplicate-free set of edges of some host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new(edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut v: Vec<Edge> = edges.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    /// True when no two edges share an endpoint.
    pub fn is_independent(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.0.iter().all(|e| seen.insert(e.u) && seen.insert(e.v))
    }
}

/// A simple cycle in canonical form: starts at its minimum vertex and the
/// second vertex is the smaller of that vertex's two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Canonicalizes a cyclic vertex sequence. Returns `None` for fewer than
    /// three vertices or repeated vertices. Adjacency is not checked here.
    pub fn from_sequence(seq: &[usize]) -> Option<Self> {
        let len = seq.len();
        if len < 3 {
            return None;
        }
        let mut sorted = seq.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let start = (0..len).min_by_key(|&i| seq[i]).unwrap();
        let next = seq[(start + 1) % len];
        let prev = seq[(start + len - 1) % len];
        let out = if next < prev {
            (0..len).map(|i| seq[(start + i) % len]).collect()
        } else {
            (0..len).map(|i| seq[(start + len - i) % len]).collect()
        };
        Some(Cycle(out))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Edges of the cycle, including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let len = self.0.len();
        (0..len).map(move |i| Edge::new(self.0[i], self.0[(i + 1) % len]))
    }
}

/// Simple undirected graph with sorted adjacency lists.
///
/// Vertices are `0..order`. Values are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    size: usize,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); order],
            size: 0,
        }
    }

    /// Builds a graph from a list of vertex pairs. Duplicate pairs collapse.
    pub fn from_edge_list(order: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); order];
        for &(a, b) in pairs {
            for x in [a, b] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = edges.into_iter().map(|e| (e.u, e.v)).collect();
        Self::from_edge_list(order, &pairs)
    }

    /// Sorts and deduplicates neighbour lists; the caller guarantees symmetry
    /// and the absence of loops.
    pub(crate) fn from_raw_adjacency(mut adjacency: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
            twice += nbrs.len();
        }
        debug_assert_eq!(twice % 2, 0);
        Graph {
            adjacency,
            size: twice / 2,
        }
    }

    /// Number of vertices `p`.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges `q`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn edge_vec(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The order-0 graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Length of the cycle when the graph is a single cycle `C_n`.
    pub fn cycle_length(&self) -> Option<usize> {
        let n = self.order();
        (n >= 3 && self.adjacency.iter().all(|a| a.len() == 2) && self.is_connected())
            .then_some(n)
    }

    /// Subgraph induced on `vertices`, relabelled to `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Graph::from_raw_adjacency(adjacency)
    }

    /// Relabels vertex `v` to `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.order())?;
        let mut adjacency = vec![Vec::new(); self.order()];
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            adjacency[perm[v]] = nbrs.iter().map(|&w| perm[w]).collect();
        }
        Ok(Graph::from_raw_adjacency(adjacency))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|nbrs| nbrs.iter().map(|&w| w + shift).collect()),
        );
        Graph::from_raw_adjacency(adjacency)
    }

    /// Adds `order - self.order()` isolated vertices.
    pub fn with_isolated(&self, order: usize) -> Graph {
        let mut adjacency = self.adjacency.clone();
        adjacency.resize(order.max(self.order()), Vec::new());
        Graph::from_raw_adjacency(adjacency)
    }

    /// Flips the adjacency of `a` and `b`.
    pub fn toggle_edge(&self, a: usize, b: usize) -> Result<Graph> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let mut edges = self.edge_vec();
        let e = Edge::new(a, b);
        match edges.binary_search(&e) {
            Ok(i) => {
                edges.remove(i);
            }
            Err(i) => edges.insert(i, e),
        }
        Graph::from_edges(self.order(), edges)
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidInput(format!(
            "permutation has length {} but {n} was expected",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in perm {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidInput(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
    }
    Ok(())
}

/// Named graph families with fixed vertex numbering.
///
/// * `Path(n)`: `P_n` on `n` vertices, edges `(i, i+1)`.
/// * `Cycle(n)`: `C_n`, edges `(i, i+1 mod n)`, `n >= 3`.
/// * `Complete(n)`: `K_n`.
/// * `CompleteBipartite(m, n)`: parts `0..m` and `m..m+n`.
/// * `Petersen`: outer cycle `0..5`, spokes `(i, i+5)`, inner pentagram `(5+i, 5+(i+2)%5)`.
/// * `CompleteBivariegated(n)`: cliques on `0..n` and `n..2n`, rungs `(i, n+i)`.
/// * `Matching(n)`: edges `(2i, 2i+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    CompleteBivariegated(usize),
    Matching(usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        let bad = |what: &str| Err(Error::InvalidParameter(what.to_string()));
        let mut pairs = Vec::new();
        let order = match self {
            Family::Path(n) => {
                if n == 0 {
                    return bad("path needs at least one vertex");
                }
                pairs.extend((1..n).map(|i| (i - 1, i)));
                n
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return bad("cycle needs at least three vertices");
                }
                pairs.extend((0..n).map(|i| (i, (i + 1) % n)));
                n
            }
            Family::Complete(n) => {
                if n == 0 {
                    return bad("complete graph needs at least one vertex");
                }
                clique(&mut pairs, 0..n);
                n
            }
            Family::CompleteBipartite(m, n) => {
                if m == 0 || n == 0 {
                    return bad("complete bipartite parts must be non-empty");
                }
                for a in 0..m {
                    pairs.extend((m..m + n).map(|b| (a, b)));
                }
                m + n
            }
            Family::Petersen => {
                for i in 0..5 {
                    pairs.push((i, (i + 1) % 5));
                    pairs.push((i, i + 5));
                    pairs.push((5 + i, 5 + (i + 2) % 5));
                }
                10
            }
            Family::CompleteBivariegated(n) => {
                if n == 0 {
                    return bad("complete bivariegated graph needs n >= 1");
                }
                clique(&mut pairs, 0..n);
                clique(&mut pairs, n..2 * n);
                pairs.extend((0..n).map(|i| (i, n + i)));
                2 * n
            }
            Family::Matching(n) => {
                if n == 0 {
                    return bad("matching needs at least one edge");
                }
                pairs.extend((0..n).map(|i| (2 * i, 2 * i + 1)));
                2 * n
            }
        };
        Graph::from_edge_list(order, &pairs)
    }
}

fn clique(pairs: &mut Vec<(usize, usize)>, range: std::ops::Range<usize>) {
    for a in range.clone() {
        for b in a + 1..range.end {
            pairs.push((a, b));
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    /// Accepts `petersen`, `cycle:8`, `cycle(8)`, `complete_bipartite:2,3` and similar.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find([':', '(']) {
            Some(i) => (&s[..i], s[i + 1..].trim_end_matches(')')),
            None => (s, ""),
        };
        let nums: Vec<usize> = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| {
                    a.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad family argument {a:?}")))
                })
                .collect::<Result<_>>()?
        };
        let one = |nums: &[usize]| match nums {
            [n] => Ok(*n),
            _ => Err(Error::Parse(format!("family {name} takes one argument"))),
        };
        Ok(match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "path" => Family::Path(one(&nums)?),
            "cycle" => Family::Cycle(one(&nums)?),
            "complete" => Family::Complete(one(&nums)?),
            "complete_bipartite" => match nums[..] {
                [m, n] => Family::CompleteBipartite(m, n),
                _ => return Err(Error::Parse("complete_bipartite takes two arguments".into())),
            },
            "petersen" if nums.is_empty() => Family::Petersen,
            "complete_bivariegated" => Family::CompleteBivariegated(one(&nums)?),
            "matching" => Family::Matching(one(&nums)?),
            _ => return Err(Error::Parse(format!("unknown family {s:?}"))),
        })
    }
}

/// Shorthand for [`Family::build`].
pub fn family(f: Family) -> Result<Graph> {
    f.build()
}
