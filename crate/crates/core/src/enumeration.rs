//! Small-graph corpora and deliberately naive reference deciders.

use std::collections::BTreeSet;
use std::ops::ControlFlow;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::cycles::for_each_simple_cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalForm};
use crate::matching::enumerate_perfect_matchings;

/// Largest order the corpus generator accepts.
pub const MAX_CORPUS_ORDER: usize = 9;

static CACHE: [OnceLock<Vec<Graph>>; MAX_CORPUS_ORDER + 1] = [const { OnceLock::new() }; MAX_CORPUS_ORDER + 1];

/// All graphs of order `p` up to isomorphism, in canonical labelling and
/// sorted by canonical form. Cached per order.
///
/// Built from order `p - 1` by adding a vertex joined to every subset of
/// the old vertices, then deduplicating by canonical form.
pub fn graphs_of_order(p: usize) -> Result<&'static [Graph]> {
    if p > MAX_CORPUS_ORDER {
        return Err(Error::InvalidInput(format!(
            "corpus order {p} exceeds the cap of {MAX_CORPUS_ORDER}"
        )));
    }
    if let Some(graphs) = CACHE[p].get() {
        return Ok(graphs);
    }
    let graphs = if p == 0 {
        vec![Graph::empty(0)]
    } else {
        let smaller = graphs_of_order(p - 1)?;
        let forms: BTreeSet<CanonicalForm> = smaller
            .par_iter()
            .map(|h| {
                (0u32..1 << (p - 1))
                    .map(|mask| canonical_form(&extend(h, mask)))
                    .collect::<BTreeSet<_>>()
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        forms.iter().map(CanonicalForm::to_graph).collect()
    };
    Ok(CACHE[p].get_or_init(|| graphs))
}

fn extend(h: &Graph, mask: u32) -> Graph {
    let p = h.order() + 1;
    let mut pairs: Vec<(usize, usize)> = h.edges().map(|e| (e.u(), e.v())).collect();
    pairs.extend((0..h.order()).filter(|v| mask >> v & 1 == 1).map(|v| (v, p - 1)));
    Graph::from_edge_list(p, &pairs).expect("vertices in range")
}

/// Largest edge count for [`connected_graphs_of_size`].
pub const MAX_CORPUS_SIZE: usize = 12;

static SIZE_CACHE: [OnceLock<Vec<Graph>>; MAX_CORPUS_SIZE + 1] =
    [const { OnceLock::new() }; MAX_CORPUS_SIZE + 1];

/// All connected graphs with exactly `q` edges up to isomorphism, any order,
/// sorted by canonical form. Cached per size.
///
/// Every connected graph with an edge loses one and stays connected: drop a
/// cycle edge, or a leaf with its edge. So size `q` comes from size `q - 1`
/// by adding an edge between existing vertices or a new pendant vertex.
pub fn connected_graphs_of_size(q: usize) -> Result<&'static [Graph]> {
    if q > MAX_CORPUS_SIZE {
        return Err(Error::InvalidInput(format!(
            "edge count {q} exceeds the cap of {MAX_CORPUS_SIZE}"
        )));
    }
    if let Some(graphs) = SIZE_CACHE[q].get() {
        return Ok(graphs);
    }
    let graphs = if q == 0 {
        vec![Graph::empty(1)]
    } else {
        let smaller = connected_graphs_of_size(q - 1)?;
        let forms: BTreeSet<CanonicalForm> = smaller
            .par_iter()
            .map(|h| {
                let p = h.order();
                let base: Vec<(usize, usize)> = h.edges().map(|e| (e.u(), e.v())).collect();
                let with = |order: usize, extra: (usize, usize)| {
                    let mut pairs = base.clone();
                    pairs.push(extra);
                    canonical_form(&Graph::from_edge_list(order, &pairs).expect("vertices in range"))
                };
                let mut out = BTreeSet::new();
                for j in 0..p {
                    for i in 0..j {
                        if !h.has_edge(i, j) {
                            out.insert(with(p, (i, j)));
                        }
                    }
                    out.insert(with(p + 1, (j, p)));
                }
                out
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            });
        forms.iter().map(CanonicalForm::to_graph).collect()
    };
    Ok(SIZE_CACHE[q].get_or_init(|| graphs))
}

/// Every graph of order `1..=max_order`, optionally only connected ones,
/// grouped by order.
pub fn corpus(max_order: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for p in 1..=max_order {
        out.extend(
            graphs_of_order(p)?
                .iter()
                .filter(|g| !connected_only || g.is_connected())
                .cloned(),
        );
    }
    Ok(out)
}

/// Reference decider: tries every perfect matching, checks the special-edge
/// parity of every simple cycle, then looks for a balanced side assignment
/// by trying every orientation of every component.
pub fn oracle_is_bivariegated(g: &Graph) -> bool {
    if g.order() == 0 {
        return true;
    }
    enumerate_perfect_matchings(g).iter().any(|s| {
        let mut odd = false;
        let _ = for_each_simple_cycle(g, usize::MAX, |c| {
            if c.edges().filter(|&e| s.contains(e)).count() % 2 == 1 {
                odd = true;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if odd {
            return false;
        }
        // Two-colour with colour changes exactly along special edges.
        let mut color = vec![None; g.order()];
        let comps = g.components();
        let mut counts = Vec::new();
        for comp in &comps {
            let mut stack = vec![comp[0]];
            color[comp[0]] = Some(0u8);
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    let want = color[v].unwrap() ^ u8::from(s.contains(crate::graph::Edge::new(v, w)));
                    match color[w] {
                        None => {
                            color[w] = Some(want);
                            stack.push(w);
                        }
                        Some(c) if c != want => return false,
                        Some(_) => {}
                    }
                }
            }
            let zeros = comp.iter().filter(|&&v| color[v] == Some(0)).count();
            counts.push((zeros, comp.len() - zeros));
        }
        (0u64..1 << counts.len()).any(|flips| {
            let u: usize = counts
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if flips >> i & 1 == 1 { b } else { a })
                .sum();
            2 * u == g.order()
        })
    })
}

/// The definition read literally: some split into two equal halves gives
/// every vertex exactly one neighbour on the other half.
pub fn definitional_is_bivariegated(g: &Graph) -> bool {
    let p = g.order();
    if p % 2 == 1 {
        return false;
    }
    if p == 0 {
        return true;
    }
    (0u64..1 << p)
        .filter(|m| m.count_ones() as usize == p / 2 && m & 1 == 1)
        .any(|m| {
            (0..p).all(|v| {
                let side = m >> v & 1;
                g.neighbors(v).iter().filter(|&&w| m >> w & 1 != side).count() == 1
            })
        })
}
