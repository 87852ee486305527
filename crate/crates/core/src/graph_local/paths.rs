//! Exact `p(e)`: the most edges on a simple path through `e`.
//!
//! Per component, `ends[S]` is the set of vertices `x` such that `G[S]` has a
//! Hamiltonian path ending at `x`. For every vertex `x`, `reach_x[M]` is the
//! largest `|S|` with `S ⊆ M` and `x ∈ ends[S]` (a subset-max transform).
//! A longest path through `uv` splits at the edge into a half-path ending at `u`
//! on some `S` and one ending at `v` on a disjoint set, so
//! `p(uv) = max_S |S| + reach_v[C \ S] - 1` over `S` with `u ∈ ends[S]`, `v ∉ S`.

use super::{EdgeLocalStats, EdgeStatKind};
use crate::bits::ones;
use crate::error::{LocexError, Result};
use crate::graph::SmallGraph;

pub const DEFAULT_PATH_CAP: usize = 14;
/// Above this the per-component tables no longer fit comfortably in memory.
pub const MAX_PATH_CAP: usize = 22;

pub fn path_weights(g: &SmallGraph) -> Result<EdgeLocalStats> {
    path_weights_capped(g, DEFAULT_PATH_CAP)
}

/// Fails with a capacity error if any component has more than `cap` vertices.
pub fn path_weights_capped(g: &SmallGraph, cap: usize) -> Result<EdgeLocalStats> {
    let cap = cap.min(MAX_PATH_CAP);
    let components = g.components();
    if let Some(big) = components.iter().map(|c| c.count_ones() as usize).max() {
        if big > cap {
            return Err(LocexError::capacity("exact-path component size", cap, big));
        }
    }
    let mut values = Vec::with_capacity(g.edge_count());
    let mut states = 0u64;
    for comp in components {
        if comp.count_ones() < 2 {
            continue;
        }
        let (mut vals, s) = component_paths(g, comp);
        values.append(&mut vals);
        states += s;
    }
    values.sort_unstable();
    Ok(EdgeLocalStats {
        kind: EdgeStatKind::Path,
        values,
        nodes: states,
    })
}

type EdgeCounts = Vec<((usize, usize), usize)>;

fn component_paths(g: &SmallGraph, comp: u64) -> (EdgeCounts, u64) {
    let verts: Vec<usize> = ones(comp).collect();
    let k = verts.len();
    let mut local = [usize::MAX; 64];
    for (i, &v) in verts.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<u32> = verts
        .iter()
        .map(|&v| ones(g.neighbors(v)).fold(0u32, |m, w| m | 1 << local[w]))
        .collect();

    let full = 1usize << k;
    let mut ends = vec![0u32; full];
    for s in 1..full {
        let s32 = s as u32;
        if s32.is_power_of_two() {
            ends[s] = s32;
            continue;
        }
        let mut e = 0u32;
        let mut rest = s32;
        while rest != 0 {
            let x = rest.trailing_zeros();
            rest &= rest - 1;
            if ends[(s32 & !(1 << x)) as usize] & adj[x as usize] != 0 {
                e |= 1 << x;
            }
        }
        ends[s] = e;
    }

    let mut reach = vec![0u8; k * full];
    for x in 0..k {
        let table = &mut reach[x * full..(x + 1) * full];
        for (s, slot) in table.iter_mut().enumerate() {
            if ends[s] >> x & 1 == 1 {
                *slot = (s as u32).count_ones() as u8;
            }
        }
        for b in 0..k {
            let bit = 1usize << b;
            for m in 0..full {
                if m & bit != 0 {
                    let sub = table[m ^ bit];
                    if sub > table[m] {
                        table[m] = sub;
                    }
                }
            }
        }
    }

    let mask = (full - 1) as u32;
    let mut out = Vec::new();
    for (i, &u) in verts.iter().enumerate() {
        for j in ones(adj[i] as u64) {
            if j <= i {
                continue;
            }
            let v = verts[j];
            let reach_v = &reach[j * full..(j + 1) * full];
            let mut best = 1usize;
            for s in 1..full {
                if ends[s] >> i & 1 == 0 || s >> j & 1 == 1 {
                    continue;
                }
                let rest = (!(s as u32) & mask) as usize;
                let len = (s as u32).count_ones() as usize + reach_v[rest] as usize - 1;
                if len > best {
                    best = len;
                }
            }
            out.push(((u, v), best));
        }
    }
    (out, (k * full) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gen_construction;

    fn graph(kind: &str, params: &[usize]) -> SmallGraph {
        gen_construction(kind, params).unwrap().into_graph().unwrap()
    }

    #[test]
    fn examples() {
        let p4 = path_weights(&graph("path-graph", &[4])).unwrap();
        assert!(p4.values.iter().all(|&(_, p)| p == 3));
        let k3 = path_weights(&SmallGraph::complete(3).unwrap()).unwrap();
        assert!(k3.values.iter().all(|&(_, p)| p == 2));
        let two = path_weights(&graph("disjoint-cliques", &[3, 3])).unwrap();
        assert_eq!(two.values.len(), 6);
        assert!(two.values.iter().all(|&(_, p)| p == 2));
    }

    #[test]
    fn pendant_edges_of_a_spider() {
        // Center 0 with legs 0-1-2 and 0-3: longest path through 0-3 is 3-0-1-2.
        let g = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        let p = path_weights(&g).unwrap();
        assert_eq!(p.get(0, 3), Some(3));
        assert_eq!(p.get(1, 2), Some(3));
    }

    #[test]
    fn complete_graph_edges_are_hamiltonian() {
        let k7 = SmallGraph::complete(7).unwrap();
        assert!(path_weights(&k7).unwrap().values.iter().all(|&(_, p)| p == 6));
    }

    #[test]
    fn capacity_error_is_per_component() {
        let big = graph("cycle", &[15]);
        assert!(matches!(path_weights(&big), Err(LocexError::Capacity { .. })));
        assert!(path_weights_capped(&big, 15).is_ok());
        // Twenty vertices in small components are fine.
        let many = graph("disjoint-cliques", &[5, 5, 5, 5]);
        assert!(path_weights(&many).is_ok());
    }
}
