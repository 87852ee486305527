//! Simple undirected graphs on at most 64 vertices, one `u64` adjacency row per vertex.

use std::fmt;

use crate::bits::{low_mask, ones};
use crate::error::{LocexError, Result};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SmallGraph {
    /// Edgeless graph on `n` vertices, `1 <= n <= 64`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(LocexError::Parameter("graph needs at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(LocexError::capacity("vertex count", MAX_VERTICES, n));
        }
        Ok(SmallGraph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = SmallGraph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SmallGraph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        let g = SmallGraph { n, adj: rows };
        SmallGraph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            if g.adj[v] & !all != 0 {
                return Err(LocexError::Structure(format!("row {v} names a vertex >= {n}")));
            }
            if g.adj[v] >> v & 1 == 1 {
                return Err(LocexError::Structure(format!("self-loop at {v}")));
            }
            for u in ones(g.adj[v]) {
                if g.adj[u] >> v & 1 == 0 {
                    return Err(LocexError::Structure(format!("asymmetric pair {v},{u}")));
                }
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(LocexError::Structure(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(LocexError::Structure(format!("self-loop at {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    /// Copy of `self` with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in ones(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn complement(&self) -> SmallGraph {
        let all = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !(1u64 << v))
            .collect();
        SmallGraph { n: self.n, adj }
    }

    /// Subgraph induced by `mask`, relabeled `0..popcount` in increasing order.
    /// Returns the graph and the original label of each new vertex.
    pub fn induced(&self, mask: u64) -> Result<(SmallGraph, Vec<usize>)> {
        let keep: Vec<usize> = ones(mask & self.vertex_mask()).collect();
        let mut g = SmallGraph::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok((g, keep))
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in ones(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Whether every vertex in `mask` is adjacent to every other vertex in `mask`.
    pub fn is_clique(&self, mask: u64) -> bool {
        ones(mask).all(|v| (mask & !(1u64 << v)) & !self.adj[v] == 0)
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        ones(mask).all(|v| self.adj[v] & mask == 0)
    }

    /// Disjoint union, with `other`'s vertices shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SmallGraph) -> Result<SmallGraph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(LocexError::capacity("vertex count", MAX_VERTICES, n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(SmallGraph { n, adj })
    }

    /// Short stable identifier: vertex count plus the upper-triangle bits in hex.
    pub fn fingerprint(&self) -> String {
        let mut bits = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                bits.push(self.has_edge(u, v));
            }
        }
        let mut hex = String::new();
        for chunk in bits.chunks(4) {
            let nibble = chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | (u8::from(b) << (3 - i)));
            hex.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        format!("g{}:{}", self.n, hex)
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Enumerates every labeled graph on `n` vertices (`2^(n(n-1)/2)` of them).
/// Graph `code` has edge `i` (in lexicographic pair order) iff bit `i` is set.
pub fn labeled_graph(n: usize, code: u64) -> SmallGraph {
    let mut adj = vec![0u64; n];
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    SmallGraph { n, adj }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_query() {
        let g = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.components(), vec![0b1111]);
        let c = g.complement();
        assert_eq!(c.edges(), vec![(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(SmallGraph::from_edges(3, &[(0, 0)]).is_err());
        assert!(SmallGraph::from_edges(3, &[(0, 3)]).is_err());
        assert!(SmallGraph::empty(0).is_err());
        assert!(matches!(SmallGraph::empty(65), Err(LocexError::Capacity { .. })));
        assert!(SmallGraph::from_rows(vec![0b10, 0]).is_err());
    }

    #[test]
    fn induced_relabels() {
        let g = SmallGraph::complete(5).unwrap();
        let (h, map) = g.induced(0b10110).unwrap();
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn components_split() {
        let g = SmallGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(g.components(), vec![0b000111, 0b111000]);
        assert!(g.is_clique(0b111));
        assert!(!g.is_clique(0b1111));
        assert!(g.is_independent(0b1001));
    }

    #[test]
    fn labeled_enumeration_covers_k4() {
        let g = labeled_graph(4, (1 << 6) - 1);
        assert_eq!(g, SmallGraph::complete(4).unwrap());
        assert_eq!(labeled_graph(4, 0).edge_count(), 0);
    }
}
