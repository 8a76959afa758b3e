//! Line graphs, iterated line graphs and Krausz recognition.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::iso::is_isomorphic;
use crate::Limits;

/// `L(G)` together with the edge-to-vertex correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphResult {
    pub line_graph: Graph,
    /// `edge_map[i]` is the host edge represented by line-graph vertex `i`.
    /// Host edges are numbered in lexicographic order, so the map is sorted.
    pub edge_map: Vec<Edge>,
}

impl LineGraphResult {
    /// The line-graph vertex standing for host edge `e`.
    pub fn vertex_of(&self, e: Edge) -> Option<usize> {
        self.edge_map.binary_search(&e).ok()
    }

    /// `(root edge, line vertex)` pairs, the serialized form of the map.
    pub fn edge_map_pairs(&self) -> Vec<(Edge, usize)> {
        self.edge_map.iter().copied().zip(0..).collect()
    }
}

#[derive(Serialize)]
struct EdgeMapEntry {
    edge: Edge,
    vertex: usize,
}

impl Serialize for LineGraphResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let entries: Vec<EdgeMapEntry> = self
            .edge_map_pairs()
            .into_iter()
            .map(|(edge, vertex)| EdgeMapEntry { edge, vertex })
            .collect();
        let mut st = s.serialize_struct("LineGraphResult", 3)?;
        st.serialize_field("order", &self.line_graph.order())?;
        st.serialize_field("graph6", &crate::io::to_graph6(&self.line_graph))?;
        st.serialize_field("edge_map", &entries)?;
        st.end()
    }
}

/// Builds `L(G)`: one vertex per edge of `g`, adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> LineGraphResult {
    let edge_map = g.edge_vec();
    let index = |e: Edge| edge_map.binary_search(&e).unwrap();
    let mut adjacency = vec![Vec::new(); edge_map.len()];
    for v in 0..g.order() {
        let star: Vec<usize> = g.neighbors(v).iter().map(|&w| index(Edge::new(v, w))).collect();
        for (i, &a) in star.iter().enumerate() {
            for &b in &star[i + 1..] {
                adjacency[a].push(b);
                adjacency[b].push(a);
            }
        }
    }
    LineGraphResult {
        line_graph: Graph::from_raw_adjacency(adjacency),
        edge_map,
    }
}

/// Number of edges of `L(G)`, i.e. the sum of `C(deg(v), 2)`.
pub fn line_graph_size(g: &Graph) -> usize {
    (0..g.order())
        .map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2)
        .sum()
}

/// `L^k(G)` with `L^0 = G`.
///
/// Fails when `k` exceeds `limits.max_iterations` or when some intermediate
/// graph would have more than `limits.max_line_order` vertices; the error
/// names the offending iteration.
pub fn iterated_line_graph(g: &Graph, k: usize, limits: &Limits) -> Result<Graph> {
    iterate(g, k, limits, |_, _| {})
}

/// Runs the iteration, calling `each(i, &L^i)` for `i = 1..=k`.
pub(crate) fn iterate(
    g: &Graph,
    k: usize,
    limits: &Limits,
    mut each: impl FnMut(usize, &Graph),
) -> Result<Graph> {
    if k > limits.max_iterations {
        return Err(Error::IterationCapExceeded {
            k,
            cap: limits.max_iterations,
        });
    }
    let mut current = g.clone();
    for i in 1..=k {
        let next_order = current.size();
        if next_order > limits.max_line_order {
            return Err(Error::GrowthCapExceeded {
                k: i,
                order: next_order,
                cap: limits.max_line_order,
            });
        }
        current = line_graph(&current).line_graph;
        each(i, &current);
    }
    Ok(current)
}

/// A Krausz clique partition with the reconstructed root graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KrauszPartition {
    /// Cliques of the analysed graph, each sorted; sizes are at least 2.
    pub cliques: Vec<Vec<usize>>,
    /// A graph whose line graph is isomorphic to the analysed graph.
    #[serde(serialize_with = "serialize_graph6")]
    pub root: Graph,
    /// `root_edge_of[v]` is the root edge corresponding to vertex `v`.
    pub root_edge_of: Vec<Edge>,
}

fn serialize_graph6<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::io::to_graph6(g))
}

impl KrauszPartition {
    /// Checks the two partition invariants directly on `g`: every edge lies
    /// in exactly one clique and every vertex lies in at most two cliques.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut per_vertex = vec![0usize; g.order()];
        let mut covered = std::collections::HashSet::new();
        for c in &self.cliques {
            if c.len() < 2 {
                return false;
            }
            for (i, &a) in c.iter().enumerate() {
                if a >= g.order() {
                    return false;
                }
                per_vertex[a] += 1;
                for &b in &c[i + 1..] {
                    if !g.has_edge(a, b) || !covered.insert(Edge::new(a, b)) {
                        return false;
                    }
                }
            }
        }
        covered.len() == g.size() && per_vertex.iter().all(|&k| k <= 2)
    }
}

/// Searches for a Krausz partition of `g` and reconstructs a root graph.
///
/// Components are handled separately and their roots united. A vertex lying
/// in one clique becomes a root edge to a fresh pendant vertex; an isolated
/// vertex becomes a root `K2`. Roots never contain isolated vertices. The
/// root of a triangle component is ambiguous (`K3` or `K1,3`); `K3` is
/// returned since it is the smaller graph. Intended for up to roughly 14
/// vertices per component, although line graphs of much larger size are
/// handled quickly because clique choices are forced after the first one
/// at each vertex.
pub fn krausz_partition(g: &Graph) -> Option<KrauszPartition> {
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let local = if is_triangle(&sub) {
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        } else {
            component_partition(&sub)?
        };
        cliques.extend(
            local
                .into_iter()
                .map(|c| c.into_iter().map(|i| comp[i]).collect::<Vec<_>>()),
        );
    }
    cliques.sort();
    let (root, root_edge_of) = build_root(g.order(), &cliques);
    Some(KrauszPartition {
        cliques,
        root,
        root_edge_of,
    })
}

pub fn is_line_graph(g: &Graph) -> bool {
    krausz_partition(g).is_some()
}

fn is_triangle(g: &Graph) -> bool {
    g.order() == 3 && g.size() == 3
}

fn build_root(order: usize, cliques: &[Vec<usize>]) -> (Graph, Vec<Edge>) {
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); order];
    for (ci, c) in cliques.iter().enumerate() {
        for &v in c {
            membership[v].push(ci);
        }
    }
    let mut next = cliques.len();
    let mut root_edge_of = Vec::with_capacity(order);
    for m in &membership {
        let e = match m[..] {
            [a, b] => Edge::new(a, b),
            [a] => {
                next += 1;
                Edge::new(a, next - 1)
            }
            [] => {
                next += 2;
                Edge::new(next - 2, next - 1)
            }
            _ => unreachable!("a vertex lies in at most two Krausz cliques"),
        };
        root_edge_of.push(e);
    }
    let root = Graph::from_edges(next, root_edge_of.iter().copied())
        .expect("root edges are distinct pairs of root vertices");
    (root, root_edge_of)
}

struct Search<'a> {
    g: &'a Graph,
    covered: Vec<Vec<bool>>,
    count: Vec<u8>,
    cliques: Vec<Vec<usize>>,
}

/// Backtracking search on a connected graph.
fn component_partition(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let mut s = Search {
        g,
        covered: vec![vec![false; n]; n],
        count: vec![0; n],
        cliques: Vec::new(),
    };
    s.solve().then_some(s.cliques)
}

impl Search<'_> {
    fn uncovered_neighbors(&self, v: usize) -> Vec<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !self.covered[v][w])
            .collect()
    }

    fn first_uncovered_edge(&self) -> Option<(usize, usize)> {
        (0..self.g.order()).find_map(|u| {
            self.g
                .neighbors(u)
                .iter()
                .find(|&&v| v > u && !self.covered[u][v])
                .map(|&v| (u, v))
        })
    }

    fn can_place(&self, clique: &[usize]) -> bool {
        clique.iter().enumerate().all(|(i, &a)| {
            self.count[a] < 2
                && clique[i + 1..]
                    .iter()
                    .all(|&b| self.g.has_edge(a, b) && !self.covered[a][b])
        })
    }

    fn place(&mut self, clique: Vec<usize>, on: bool) {
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                self.covered[a][b] = on;
                self.covered[b][a] = on;
            }
            if on {
                self.count[a] += 1;
            } else {
                self.count[a] -= 1;
            }
        }
        if on {
            self.cliques.push(clique);
        } else {
            self.cliques.pop();
        }
    }

    /// A vertex already in one clique must put all its remaining edges in a
    /// single second clique; a vertex in two cliques must have none left.
    fn consistent(&self) -> bool {
        (0..self.g.order()).all(|v| {
            let rest = self.uncovered_neighbors(v);
            match self.count[v] {
                0 => true,
                1 => rest
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| rest[i + 1..].iter().all(|&b| self.g.has_edge(a, b) && !self.covered[a][b])),
                _ => rest.is_empty(),
            }
        })
    }

    fn solve(&mut self) -> bool {
        let Some((u, v)) = self.first_uncovered_edge() else {
            return true;
        };
        for clique in self.candidates(u, v) {
            if !self.can_place(&clique) {
                continue;
            }
            self.place(clique.clone(), true);
            if self.consistent() && self.solve() {
                return true;
            }
            self.place(clique, false);
        }
        false
    }

    /// Cliques containing edge `uv` built from uncovered edges, largest first.
    fn candidates(&self, u: usize, v: usize) -> Vec<Vec<usize>> {
        for x in [u, v] {
            if self.count[x] == 1 {
                let mut forced = self.uncovered_neighbors(x);
                forced.push(x);
                forced.sort_unstable();
                return vec![forced];
            }
        }
        let common: Vec<usize> = self
            .uncovered_neighbors(u)
            .into_iter()
            .filter(|&w| w != v && self.g.has_edge(v, w) && !self.covered[v][w])
            .collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        extend_cliques(self, &common, 0, &mut chosen, &mut out);
        let mut out: Vec<Vec<usize>> = out
            .into_iter()
            .map(|mut c| {
                c.push(u);
                c.push(v);
                c.sort_unstable();
                c
            })
            .collect();
        out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        out
    }
}

fn extend_cliques(
    s: &Search<'_>,
    pool: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    out.push(chosen.clone());
    for i in from..pool.len() {
        let w = pool[i];
        if chosen
            .iter()
            .all(|&c| s.g.has_edge(c, w) && !s.covered[c][w])
        {
            chosen.push(w);
            extend_cliques(s, pool, i + 1, chosen, out);
            chosen.pop();
        }
    }
}

/// Checks that `line_graph(root)` is isomorphic to `g`.
pub fn root_is_valid(g: &Graph, k: &KrauszPartition) -> bool {
    is_isomorphic(&line_graph(&k.root).line_graph, g)
}
