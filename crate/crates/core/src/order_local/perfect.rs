//! Perfectness by searching for an induced odd cycle of length at least 5 in
//! the graph or its complement, with an exhaustive `ω = χ` check on small inputs.

use crate::bits::{low_mask, ones};
use crate::clique::max_clique_in;
use crate::error::{LocexError, Result};
use crate::graph::SmallGraph;

pub const DEFAULT_PERFECT_CAP: usize = 16;
/// Largest graph for which every induced subgraph is also colored exactly.
pub const DEFINITIONAL_CAP: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    OddHole,
    OddAntihole,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// Vertices in cyclic order (in the complement for an antihole).
    pub cycle: Vec<usize>,
}

impl Certificate {
    pub fn describe(&self) -> String {
        let kind = match self.kind {
            CertificateKind::OddHole => "odd hole",
            CertificateKind::OddAntihole => "odd antihole",
        };
        let verts: Vec<String> = self.cycle.iter().map(|v| v.to_string()).collect();
        format!("{kind} {}", verts.join("-"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectCheck {
    pub perfect: bool,
    pub certificate: Option<Certificate>,
    /// Whether the exhaustive coloring check also ran (and agreed).
    pub cross_checked: bool,
}

pub fn check_perfect(g: &SmallGraph) -> Result<PerfectCheck> {
    check_perfect_capped(g, DEFAULT_PERFECT_CAP)
}

pub fn check_perfect_capped(g: &SmallGraph, cap: usize) -> Result<PerfectCheck> {
    if g.n() > cap {
        return Err(LocexError::capacity("vertices for perfectness check", cap, g.n()));
    }
    let certificate = odd_hole(g)
        .map(|cycle| Certificate {
            kind: CertificateKind::OddHole,
            cycle,
        })
        .or_else(|| {
            odd_hole(&g.complement()).map(|cycle| Certificate {
                kind: CertificateKind::OddAntihole,
                cycle,
            })
        });
    let perfect = certificate.is_none();
    let cross_checked = g.n() <= DEFINITIONAL_CAP;
    if cross_checked && perfect_by_definition(g) != perfect {
        return Err(LocexError::OracleMismatch(format!(
            "odd hole search says perfect={perfect}, coloring every induced subgraph disagrees"
        )));
    }
    Ok(PerfectCheck {
        perfect,
        certificate,
        cross_checked,
    })
}

/// An induced cycle of odd length at least 5, if any. Cycles are grown as
/// induced paths from their smallest vertex.
pub fn odd_hole(g: &SmallGraph) -> Option<Vec<usize>> {
    let mut path = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        let allowed = g.vertex_mask() & !low_mask(s + 1);
        path.clear();
        path.push(s);
        if grow(g, allowed, 1u64 << s, 0, &mut path) {
            return Some(path);
        }
    }
    None
}

/// `inner` holds the path vertices other than the start and the last one.
fn grow(g: &SmallGraph, allowed: u64, on_path: u64, inner: u64, path: &mut Vec<usize>) -> bool {
    let s = path[0];
    let last = *path.last().expect("path nonempty");
    let cand = g.neighbors(last) & allowed & !on_path;
    for w in ones(cand) {
        if g.neighbors(w) & inner != 0 {
            continue;
        }
        let closes = path.len() > 1 && g.has_edge(w, s);
        if closes {
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 {
                path.push(w);
                return true;
            }
            continue;
        }
        let next_inner = if path.len() > 1 { inner | 1u64 << last } else { inner };
        path.push(w);
        if grow(g, allowed, on_path | 1u64 << w, next_inner, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// `ω(H) = χ(H)` for every induced subgraph `H`.
pub fn perfect_by_definition(g: &SmallGraph) -> bool {
    (1u64..1 << g.n()).all(|h| {
        let omega = max_clique_in(g.rows(), h).size;
        colorable(g, h, omega)
    })
}

/// Exact chromatic number of `G[mask]`, starting from the clique lower bound.
pub fn chromatic_number(g: &SmallGraph, mask: u64) -> usize {
    if mask == 0 {
        return 0;
    }
    let mut k = max_clique_in(g.rows(), mask).size;
    while !colorable(g, mask, k) {
        k += 1;
    }
    k
}

fn colorable(g: &SmallGraph, mask: u64, k: usize) -> bool {
    let verts: Vec<usize> = ones(mask).collect();
    let mut colors = vec![usize::MAX; g.n()];
    color_from(g, &verts, 0, k, 0, &mut colors)
}

/// Backtracking; a new color class is opened only in order, which removes
/// color permutations.
fn color_from(g: &SmallGraph, verts: &[usize], i: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    if i == verts.len() {
        return true;
    }
    let v = verts[i];
    for c in 0..k.min(used + 1) {
        if ones(g.neighbors(v)).any(|w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if color_from(g, verts, i + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}
