//! Exact maximum clique by branch and bound over `u64` candidate sets.
//!
//! Candidates are greedily partitioned into color classes (independent sets);
//! the number of classes left bounds how much a branch can still add, and
//! branches are explored from the highest color down so that bound tightens as
//! the candidate set shrinks.

use crate::bits::ones;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub members: u64,
    /// Search nodes expanded.
    pub nodes: u64,
}

/// Largest clique among the vertices in `candidates` of the graph with rows `adj`.
pub fn max_clique_in(adj: &[u64], candidates: u64) -> CliqueResult {
    max_clique_at_least(adj, candidates, 0)
}

/// Like [`max_clique_in`] but stops exploring branches that cannot beat `floor`.
/// If nothing larger than `floor` exists the returned size is `floor` with
/// `members == 0` (unless `floor == 0`).
pub fn max_clique_at_least(adj: &[u64], candidates: u64, floor: usize) -> CliqueResult {
    let mut s = Search {
        adj,
        best: floor,
        best_set: 0,
        nodes: 0,
    };
    if candidates != 0 {
        s.expand(0, 0, candidates);
    }
    CliqueResult {
        size: s.best,
        members: s.best_set,
        nodes: s.nodes,
    }
}

struct Search<'a> {
    adj: &'a [u64],
    best: usize,
    best_set: u64,
    nodes: u64,
}

impl Search<'_> {
    fn expand(&mut self, current: u64, size: usize, mut cand: u64) {
        self.nodes += 1;
        let mut order = [0u8; 64];
        let mut bound = [0u8; 64];
        let len = color_sort(self.adj, cand, &mut order, &mut bound);
        for i in (0..len).rev() {
            if size + bound[i] as usize <= self.best {
                return;
            }
            let v = order[i] as usize;
            let next = cand & self.adj[v];
            if next == 0 {
                if size + 1 > self.best {
                    self.best = size + 1;
                    self.best_set = current | 1 << v;
                }
            } else {
                self.expand(current | 1 << v, size + 1, next);
            }
            cand &= !(1u64 << v);
        }
    }
}

/// Greedy sequential coloring of `cand`; fills `order` with vertices sorted by
/// color and `bound[i]` with the color (1-based) of `order[i]`.
fn color_sort(adj: &[u64], cand: u64, order: &mut [u8; 64], bound: &mut [u8; 64]) -> usize {
    let mut uncolored = cand;
    let mut color = 0u8;
    let mut len = 0;
    while uncolored != 0 {
        color += 1;
        let mut available = uncolored;
        while available != 0 {
            let v = available.trailing_zeros() as usize;
            available &= !adj[v] & !(1u64 << v);
            uncolored &= !(1u64 << v);
            order[len] = v as u8;
            bound[len] = color;
            len += 1;
        }
    }
    len
}

/// Calls `visit` with every maximal clique inside `candidates`
/// (Bron–Kerbosch with Tomita pivoting).
pub fn for_each_maximal_clique(adj: &[u64], candidates: u64, visit: &mut dyn FnMut(u64)) {
    if candidates == 0 {
        visit(0);
        return;
    }
    bron_kerbosch(adj, 0, candidates, 0, visit);
}

fn bron_kerbosch(adj: &[u64], r: u64, p: u64, x: u64, visit: &mut dyn FnMut(u64)) {
    if p == 0 {
        if x == 0 {
            visit(r);
        }
        return;
    }
    let pivot = ones(p | x)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p is nonempty");
    let mut p = p;
    let mut x = x;
    for v in ones(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], visit);
        p &= !bit;
        x |= bit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SmallGraph;

    fn brute(adj: &[u64], cand: u64) -> usize {
        let verts: Vec<usize> = ones(cand).collect();
        let mut best = 0;
        for sub in 0u64..1 << verts.len() {
            let mask = ones(sub).fold(0u64, |m, i| m | 1 << verts[i]);
            if ones(mask).all(|v| mask & !(1u64 << v) & !adj[v] == 0) {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn known_graphs() {
        let k5 = SmallGraph::complete(5).unwrap();
        assert_eq!(max_clique_in(k5.rows(), k5.vertex_mask()).size, 5);
        let c5 = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = max_clique_in(c5.rows(), c5.vertex_mask());
        assert_eq!(r.size, 2);
        assert!(c5.is_clique(r.members));
        assert_eq!(max_clique_in(c5.rows(), 0).size, 0);
    }

    #[test]
    fn floor_prunes_without_lying() {
        let k4 = SmallGraph::complete(4).unwrap();
        assert_eq!(max_clique_at_least(k4.rows(), 0b1111, 4).size, 4);
        assert_eq!(max_clique_at_least(k4.rows(), 0b1111, 2).size, 4);
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        let mut s = crate::generate::Sampler::new(11);
        for _ in 0..200 {
            let n = 1 + s.below(12) as usize;
            let g = crate::generate::gnp(n, s.unit(), &mut s).unwrap();
            let cand = s.next_u64() & g.vertex_mask();
            let r = max_clique_in(g.rows(), cand);
            assert_eq!(r.size, brute(g.rows(), cand));
            assert_eq!(r.members & !cand, 0);
            assert!(g.is_clique(r.members));
        }
    }

    #[test]
    fn maximal_cliques_of_path() {
        let p = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut found = Vec::new();
        for_each_maximal_clique(p.rows(), p.vertex_mask(), &mut |c| found.push(c));
        found.sort();
        assert_eq!(found, vec![0b0011, 0b0110, 0b1100]);
    }
}
