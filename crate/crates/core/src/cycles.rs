//! Simple-cycle enumeration for undirected graphs.
//!
//! Each cycle is grown from its minimum vertex `s` through vertices larger
//! than `s` only, in the spirit of Johnson's circuit search, and reported in
//! one direction only (second vertex smaller than the last). Before extending
//! a path the search checks that `s` is still reachable through unused
//! vertices, which keeps dead branches short. The cost is proportional to
//! the number of cycles, so the search is meant for graphs of up to roughly
//! 16 vertices and is guarded by a cycle cap.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};

/// Default maximum number of cycles visited before giving up.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// Calls `visit` on every simple cycle (length >= 3) in canonical form.
///
/// Stops early when `visit` breaks. Fails with [`Error::CycleCapExceeded`]
/// once more than `cap` cycles have been produced.
pub fn for_each_simple_cycle<F>(g: &Graph, cap: usize, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&Cycle) -> ControlFlow<()>,
{
    let n = g.order();
    let mut count = 0usize;
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        on_path[s] = true;
        path.push(s);
        let flow = extend(g, s, &mut path, &mut on_path, &mut count, cap, &mut visit)?;
        path.pop();
        on_path[s] = false;
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

fn extend<F>(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    count: &mut usize,
    cap: usize,
    visit: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&Cycle) -> ControlFlow<()>,
{
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == s && path.len() >= 3 && path[1] < last {
            *count += 1;
            if *count > cap {
                return Err(Error::CycleCapExceeded { cap });
            }
            let cycle = Cycle::from_sequence(path).expect("path vertices are distinct");
            if visit(&cycle).is_break() {
                return Ok(ControlFlow::Break(()));
            }
        } else if w > s && !on_path[w] && can_return(g, s, w, on_path, path.len() == 1) {
            on_path[w] = true;
            path.push(w);
            let flow = extend(g, s, path, on_path, count, cap, visit)?;
            path.pop();
            on_path[w] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Whether some vertex adjacent to `s` is reachable from `w` through unused
/// vertices above `s`. On the first step `w` itself does not count, since the
/// edge `s-w` is already used.
fn can_return(g: &Graph, s: usize, w: usize, on_path: &[bool], first_step: bool) -> bool {
    let mut seen = on_path.to_vec();
    seen[w] = true;
    let mut stack = vec![w];
    while let Some(x) = stack.pop() {
        if (x != w || !first_step) && g.has_edge(x, s) {
            return true;
        }
        for &y in g.neighbors(x) {
            if y > s && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

/// All simple cycles, each once, sorted lexicographically by canonical form.
pub fn enumerate_simple_cycles(g: &Graph, cap: usize) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    let _ = for_each_simple_cycle(g, cap, |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// Returns the first cycle (in search order) satisfying `pred`.
pub fn find_cycle<P>(g: &Graph, cap: usize, mut pred: P) -> Result<Option<Cycle>>
where
    P: FnMut(&Cycle) -> bool,
{
    let mut found = None;
    let _ = for_each_simple_cycle(g, cap, |c| {
        if pred(c) {
            found = Some(c.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    /// Counts cycles by checking every cyclic arrangement of every vertex
    /// subset of size >= 3.
    fn brute_force_count(g: &Graph) -> usize {
        let n = g.order();
        let mut found = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if verts.len() < 3 {
                continue;
            }
            permute(&mut verts[1..].to_vec(), 0, &mut |rest| {
                let mut seq = vec![verts[0]];
                seq.extend_from_slice(rest);
                let k = seq.len();
                if (0..k).all(|i| g.has_edge(seq[i], seq[(i + 1) % k])) {
                    found.insert(Cycle::from_sequence(&seq).unwrap());
                }
            });
        }
        found.len()
    }

    fn permute(v: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
        if i == v.len() {
            f(v);
            return;
        }
        for j in i..v.len() {
            v.swap(i, j);
            permute(v, i + 1, f);
            v.swap(i, j);
        }
    }

    #[test]
    fn c4_has_one_cycle() {
        let g = Family::Cycle(4).build().unwrap();
        let cycles = enumerate_simple_cycles(&g, DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn trees_are_acyclic() {
        let g = Family::Path(4).build().unwrap();
        assert!(enumerate_simple_cycles(&g, DEFAULT_CYCLE_CAP).unwrap().is_empty());
    }

    #[test]
    fn k4_has_seven_cycles() {
        let g = Family::Complete(4).build().unwrap();
        assert_eq!(brute_force_count(&g), 7);
        let cycles = enumerate_simple_cycles(&g, DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(cycles.len(), 7);
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let graphs = [
            Family::Complete(5).build().unwrap(),
            Family::Petersen.build().unwrap().induced_subgraph(&[0, 1, 2, 3, 5, 6, 7, 8]),
            Family::CompleteBivariegated(3).build().unwrap(),
            Family::CompleteBipartite(3, 3).build().unwrap(),
        ];
        for g in &graphs {
            let cycles = enumerate_simple_cycles(g, DEFAULT_CYCLE_CAP).unwrap();
            assert_eq!(cycles.len(), brute_force_count(g));
        }
    }

    #[test]
    fn single_cycle_families() {
        for n in 3..=12 {
            let g = Family::Cycle(n).build().unwrap();
            let cycles = enumerate_simple_cycles(&g, DEFAULT_CYCLE_CAP).unwrap();
            assert_eq!(cycles.len(), 1);
            assert_eq!(cycles[0].len(), n);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Family::Complete(6).build().unwrap();
        assert_eq!(
            enumerate_simple_cycles(&g, 10),
            Err(Error::CycleCapExceeded { cap: 10 })
        );
    }

    #[test]
    fn find_stops_early() {
        let g = Family::Complete(7).build().unwrap();
        let c = find_cycle(&g, 5, |c| c.len() == 3).unwrap().unwrap();
        assert_eq!(c.len(), 3);
    }
}
