//! Isomorphism testing and canonical forms for small graphs.
//!
//! Both rest on colour refinement: vertices start coloured by degree and are
//! repeatedly split by the multiset of their neighbours' colours until the
//! partition is stable. Colours are ranks of sorted signatures, so the
//! refined partition does not depend on the input labelling.

use std::collections::HashMap;

use crate::graph::Graph;

/// Stable colouring refined from `initial`.
fn refine(g: &Graph, initial: Vec<u32>) -> Vec<u32> {
    let n = g.order();
    let mut colors = initial;
    let mut classes = count_classes(&colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter_mut()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        let next_classes = distinct.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn degree_coloring(g: &Graph) -> Vec<u32> {
    let mut degs: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut distinct = degs.clone();
    distinct.sort_unstable();
    distinct.dedup();
    degs.iter_mut()
        .map(|d| distinct.binary_search(d).unwrap() as u32)
        .collect()
}

/// Moves `v` into its own colour class just ahead of the rest of its class.
fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let c = colors[v];
    colors
        .iter()
        .enumerate()
        .map(|(u, &x)| if x > c || (x == c && u != v) { x + 1 } else { x })
        .collect()
}

/// Returns a bijection `map` with `g2.has_edge(map[u], map[v]) == g1.has_edge(u, v)`,
/// or `None` when the graphs are not isomorphic.
///
/// Backtracking over vertices of `g1`, restricted to `g2` vertices with the
/// same refined colour (computed jointly on the disjoint union so that colour
/// names agree between the two graphs).
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.order();
    if n != g2.order() || g1.size() != g2.size() || g1.degree_sequence() != g2.degree_sequence()
    {
        return None;
    }
    let union = g1.disjoint_union(g2);
    let colors = refine(&union, degree_coloring(&union));
    let (c1, c2) = colors.split_at(n);
    let mut h1 = c1.to_vec();
    let mut h2 = c2.to_vec();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return None;
    }
    // Visit g1 vertices in BFS order from rarest colours so that each new
    // vertex is constrained by already-mapped neighbours.
    let mut freq: HashMap<u32, usize> = HashMap::new();
    for &c in c1 {
        *freq.entry(c).or_default() += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (freq[&c1[v]], c1[v], v))
            .unwrap();
        placed[root] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in g1.neighbors(x) {
                if !placed[y] {
                    placed[y] = true;
                    order.push(y);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g1, g2, c1, c2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    c1: &[u32],
    c2: &[u32],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for w in 0..g2.order() {
        if used[w] || c2[w] != c1[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&x| g1.has_edge(u, x) == g2.has_edge(w, map[x]));
        if !consistent {
            continue;
        }
        map[u] = w;
        used[w] = true;
        if extend(g1, g2, c1, c2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[u] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// Canonical form of a graph: the order plus the upper-triangle adjacency
/// bits (graph6 column order) under a canonical labelling. Two graphs are
/// isomorphic exactly when their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The graph with canonical vertex numbering.
    pub fn to_graph(&self) -> Graph {
        let mut pairs = Vec::new();
        let mut k = 0;
        for j in 1..self.order {
            for i in 0..j {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    pairs.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edge_list(self.order, &pairs).expect("canonical bits describe a simple graph")
    }
}

fn bits_under(g: &Graph, position: &[usize]) -> Vec<u64> {
    let n = g.order();
    let mut at = vec![0usize; n];
    for (v, &p) in position.iter().enumerate() {
        at[p] = v;
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; nbits.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(at[i], at[j]) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

/// Computes the canonical form and a canonical labelling `label[v]`.
///
/// Individualization-refinement: branch on every vertex of the first
/// smallest non-singleton cell and keep the lexicographically greatest leaf.
/// The only automorphism pruning is skipping twins, which keeps stars,
/// complete and empty graphs cheap; other highly symmetric graphs may still
/// explore many leaves.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let start = refine(g, degree_coloring(g));
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search_leaves(g, start, &mut best);
    let (bits, label) = best.unwrap_or_else(|| (vec![0], Vec::new()));
    (
        CanonicalForm {
            order: g.order(),
            bits,
        },
        label,
    )
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

fn search_leaves(g: &Graph, colors: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let n = g.order();
    let mut sizes: HashMap<u32, usize> = HashMap::new();
    for &c in &colors {
        *sizes.entry(c).or_default() += 1;
    }
    let target = sizes
        .iter()
        .filter(|&(_, &s)| s > 1)
        .min_by_key(|&(&c, &s)| (s, c))
        .map(|(&c, _)| c);
    match target {
        None => {
            let position: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let bits = bits_under(g, &position);
            if best.as_ref().is_none_or(|(b, _)| bits > *b) {
                *best = Some((bits, position));
            }
        }
        Some(c) => {
            // Swapping two twins is an automorphism fixing the colouring, so
            // their subtrees give the same best leaf; branch on one per class.
            let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == c).collect();
            let mut tried: Vec<usize> = Vec::new();
            for &v in &cell {
                if tried.iter().any(|&u| are_twins(g, u, v)) {
                    continue;
                }
                tried.push(v);
                let next = refine(g, individualize(&colors, v));
                search_leaves(g, next, best);
            }
        }
    }
}

/// `N(u) - {v} == N(v) - {u}`.
fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |a: usize, b: usize| g.neighbors(a).iter().copied().filter(move |&x| x != b);
    g.degree(u) == g.degree(v) && strip(u, v).eq(strip(v, u))
}
