//! Exhaustive perfect-matching enumeration.

use crate::graph::{Edge, EdgeSet, Graph};

/// Every perfect matching of `g`, in lexicographic order.
///
/// The search always matches the lowest unmatched vertex next, trying its
/// unmatched neighbours in increasing order. Odd order gives no matchings;
/// the order-0 graph has exactly one, the empty matching.
pub fn enumerate_perfect_matchings(g: &Graph) -> Vec<EdgeSet> {
    let mut out = Vec::new();
    if g.order() % 2 == 1 {
        return out;
    }
    let mut matched = vec![false; g.order()];
    let mut current = Vec::with_capacity(g.order() / 2);
    search(g, &mut matched, &mut current, &mut out);
    out
}

fn search(g: &Graph, matched: &mut [bool], current: &mut Vec<Edge>, out: &mut Vec<EdgeSet>) {
    let Some(v) = matched.iter().position(|&m| !m) else {
        out.push(EdgeSet::new(current.iter().copied()));
        return;
    };
    matched[v] = true;
    for &w in g.neighbors(v) {
        if matched[w] {
            continue;
        }
        matched[w] = true;
        current.push(Edge::new(v, w));
        search(g, matched, current, out);
        current.pop();
        matched[w] = false;
    }
    matched[v] = false;
}

/// True when `s` is a set of edges of `g` covering every vertex exactly once.
pub fn is_perfect_matching(g: &Graph, s: &EdgeSet) -> bool {
    s.len() * 2 == g.order()
        && s.is_independent()
        && s.iter().all(|e| g.has_edge(e.u(), e.v()))
}
