//! Brute-force reference implementations. Nothing here calls the solvers used
//! by the verifiers: every value comes from direct enumeration.

mod search;
mod stress;
mod turan;

pub use search::{search_counterexample, SearchOutcome, SearchViolation};
pub use stress::{stress, StressParams, StressRow, StressSuite, StressSummary};
pub use turan::{
    canonical_form, exact_turan_number, fill_ex_table, fill_ex_table_from, turan_graph_edges, TuranCache, TURAN_CAP,
};

use crate::error::{LocexError, Result};
use crate::family::SetFamily;
use crate::graph::SmallGraph;
use crate::rational::ExactRational;

pub const CLIQUE_ORACLE_CAP: usize = 16;
pub const PATH_ORACLE_CAP: usize = 10;
pub const MATCHING_ORACLE_SETS: usize = 60;
pub const MATCHING_ORACLE_GROUND: usize = 16;
pub const MONOTONE_ORACLE_CAP: usize = 16;

/// Values from exhaustive enumeration, keyed by object label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub statistic: &'static str,
    pub values: Vec<(String, usize)>,
    pub method: &'static str,
    /// Candidates enumerated, for audit.
    pub enumerated: u64,
}

impl OracleResult {
    fn new(statistic: &'static str) -> Self {
        OracleResult {
            statistic,
            values: Vec::new(),
            method: "exhaustive",
            enumerated: 0,
        }
    }

    pub fn value(&self, label: &str) -> Option<usize> {
        self.values.iter().find(|(l, _)| l == label).map(|&(_, v)| v)
    }
}

fn require_edge(g: &SmallGraph, (u, v): (usize, usize)) -> Result<()> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(LocexError::Parameter(format!("{u}-{v} is not an edge")));
    }
    Ok(())
}

fn cap(what: &str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        return Err(LocexError::Capacity {
            what: what.to_string(),
            limit,
            actual,
        });
    }
    Ok(())
}

fn is_clique_pairwise(g: &SmallGraph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &a)| verts[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

fn is_independent_pairwise(g: &SmallGraph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &a)| verts[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

/// Largest vertex set containing `must` that satisfies `ok`, over all subsets.
fn best_subset(n: usize, must: &[usize], ok: impl Fn(&[usize]) -> bool, count: &mut u64) -> usize {
    let mut best = 0;
    let mut verts = Vec::with_capacity(n);
    for mask in 0u32..1 << n {
        if must.iter().any(|&m| mask >> m & 1 == 0) {
            continue;
        }
        *count += 1;
        verts.clear();
        verts.extend((0..n).filter(|&i| mask >> i & 1 == 1));
        if verts.len() > best && ok(&verts) {
            best = verts.len();
        }
    }
    best
}

pub fn oracle_clique_through_edge(g: &SmallGraph, e: (usize, usize)) -> Result<usize> {
    cap("vertices for clique oracle", CLIQUE_ORACLE_CAP, g.n())?;
    require_edge(g, e)?;
    let mut count = 0;
    Ok(best_subset(g.n(), &[e.0, e.1], |s| is_clique_pairwise(g, s), &mut count))
}

pub fn oracle_edge_cliques(g: &SmallGraph) -> Result<OracleResult> {
    cap("vertices for clique oracle", CLIQUE_ORACLE_CAP, g.n())?;
    let mut out = OracleResult::new("clique-through-edge");
    for (u, v) in g.edges() {
        let c = best_subset(g.n(), &[u, v], |s| is_clique_pairwise(g, s), &mut out.enumerated);
        out.values.push((format!("{u}-{v}"), c));
    }
    Ok(out)
}

/// Most edges on a simple path that uses `e`, over every path from every start.
pub fn oracle_path_through_edge(g: &SmallGraph, e: (usize, usize)) -> Result<usize> {
    cap("vertices for path oracle", PATH_ORACLE_CAP, g.n())?;
    require_edge(g, e)?;
    let mut best = vec![0usize; g.n() * g.n()];
    let mut count = 0;
    all_paths(g, &mut best, &mut count);
    Ok(best[e.0 * g.n() + e.1])
}

pub fn oracle_edge_paths(g: &SmallGraph) -> Result<OracleResult> {
    cap("vertices for path oracle", PATH_ORACLE_CAP, g.n())?;
    let mut out = OracleResult::new("path-through-edge");
    let mut best = vec![0usize; g.n() * g.n()];
    all_paths(g, &mut best, &mut out.enumerated);
    for (u, v) in g.edges() {
        out.values.push((format!("{u}-{v}"), best[u * g.n() + v]));
    }
    Ok(out)
}

/// `best[u*n+v]`: longest path seen through edge `uv` (both orientations).
fn all_paths(g: &SmallGraph, best: &mut [usize], count: &mut u64) {
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        path.push(s);
        extend_path(g, &mut path, best, count);
        path.pop();
    }
}

fn extend_path(g: &SmallGraph, path: &mut Vec<usize>, best: &mut [usize], count: &mut u64) {
    *count += 1;
    let n = g.n();
    let len = path.len() - 1;
    for w in path.windows(2) {
        for (a, b) in [(w[0], w[1]), (w[1], w[0])] {
            if best[a * n + b] < len {
                best[a * n + b] = len;
            }
        }
    }
    let last = path[len];
    for next in 0..n {
        if g.has_edge(last, next) && !path.contains(&next) {
            path.push(next);
            extend_path(g, path, best, count);
            path.pop();
        }
    }
}

/// `max(deg u, deg v)`: every star through `uv` is centered at `u` or `v`.
pub fn oracle_edge_stars(g: &SmallGraph) -> Result<OracleResult> {
    let mut out = OracleResult::new("star-through-edge");
    for (u, v) in g.edges() {
        let mut best = 0;
        for center in [u, v] {
            let leaves = (0..g.n()).filter(|&w| g.has_edge(center, w)).count();
            out.enumerated += 1;
            best = best.max(leaves);
        }
        out.values.push((format!("{u}-{v}"), best));
    }
    Ok(out)
}

pub fn oracle_vertex_cliques(g: &SmallGraph) -> Result<OracleResult> {
    cap("vertices for clique oracle", CLIQUE_ORACLE_CAP, g.n())?;
    let mut out = OracleResult::new("clique-through-vertex");
    for v in 0..g.n() {
        let c = best_subset(g.n(), &[v], |s| is_clique_pairwise(g, s), &mut out.enumerated);
        out.values.push((v.to_string(), c));
    }
    Ok(out)
}

pub fn oracle_vertex_independents(g: &SmallGraph) -> Result<OracleResult> {
    cap("vertices for independent-set oracle", CLIQUE_ORACLE_CAP, g.n())?;
    let mut out = OracleResult::new("independent-through-vertex");
    for v in 0..g.n() {
        let c = best_subset(g.n(), &[v], |s| is_independent_pairwise(g, s), &mut out.enumerated);
        out.values.push((v.to_string(), c));
    }
    Ok(out)
}

/// Largest pairwise-disjoint subfamily containing set `a`, by enumerating all of them.
pub fn oracle_matching_through_set(f: &SetFamily, a: usize) -> Result<usize> {
    cap("family size for matching oracle", MATCHING_ORACLE_SETS, f.len())?;
    cap("ground set for matching oracle", MATCHING_ORACLE_GROUND, f.n())?;
    if a >= f.len() {
        return Err(LocexError::Parameter(format!("no set with index {a}")));
    }
    let mut count = 0;
    Ok(disjoint_families(f.sets(), 0, f.sets()[a], a, &mut count))
}

pub fn oracle_matchings(f: &SetFamily) -> Result<OracleResult> {
    cap("family size for matching oracle", MATCHING_ORACLE_SETS, f.len())?;
    cap("ground set for matching oracle", MATCHING_ORACLE_GROUND, f.n())?;
    let mut out = OracleResult::new("matching-through-set");
    for a in 0..f.len() {
        let m = disjoint_families(f.sets(), 0, f.sets()[a], a, &mut out.enumerated);
        out.values.push((f.label(a), m));
    }
    Ok(out)
}

/// Size of the largest extension of the family `{sets[fixed]} ∪ chosen` (union
/// `used`) by sets of index `>= i`, visiting every disjoint subfamily.
fn disjoint_families(sets: &[u32], i: usize, used: u32, fixed: usize, count: &mut u64) -> usize {
    *count += 1;
    let mut best = 1;
    for j in i..sets.len() {
        if j != fixed && sets[j] & used == 0 {
            best = best.max(1 + disjoint_families(sets, j + 1, used | sets[j], fixed, count));
        }
    }
    best
}

/// Longest chain through each set, by walking every chain explicitly.
pub fn oracle_chains(f: &SetFamily) -> Result<OracleResult> {
    cap("family size for chain oracle", 256, f.len())?;
    let sets = f.sets();
    let mut out = OracleResult::new("chain-through-set");
    for a in 0..sets.len() {
        let down = longest_walk(sets, sets[a], true, &mut out.enumerated);
        let up = longest_walk(sets, sets[a], false, &mut out.enumerated);
        out.values.push((f.label(a), down + up + 1));
    }
    Ok(out)
}

fn longest_walk(sets: &[u32], from: u32, down: bool, count: &mut u64) -> usize {
    *count += 1;
    sets.iter()
        .filter(|&&s| s != from && if down { s & !from == 0 } else { from & !s == 0 })
        .map(|&s| 1 + longest_walk(sets, s, down, count))
        .max()
        .unwrap_or(0)
}

/// Longest strictly increasing / decreasing subsequence through each position,
/// over all subsets of positions.
pub fn oracle_monotone(values: &[ExactRational]) -> Result<(OracleResult, OracleResult)> {
    cap("sequence length for subsequence oracle", MONOTONE_ORACLE_CAP, values.len())?;
    let n = values.len();
    let mut inc = OracleResult::new("increasing-through-position");
    let mut dec = OracleResult::new("decreasing-through-position");
    for x in 0..n {
        let mut count = 0;
        let bi = best_subset(n, &[x], |s| s.windows(2).all(|w| values[w[0]] < values[w[1]]), &mut count);
        let bd = best_subset(n, &[x], |s| s.windows(2).all(|w| values[w[0]] > values[w[1]]), &mut count);
        inc.enumerated += count;
        dec.enumerated += count;
        inc.values.push((x.to_string(), bi));
        dec.values.push((x.to_string(), bd));
    }
    Ok((inc, dec))
}

/// For each edge of `host` (in `host.edges()` order), whether some injective
/// map of `pattern` into `host` covers it. Tries every injection.
pub fn oracle_copy_edges(host: &SmallGraph, pattern: &SmallGraph) -> Result<Vec<bool>> {
    cap("host vertices for copy oracle", PATH_ORACLE_CAP, host.n())?;
    let edges = host.edges();
    let mut covered = vec![false; edges.len()];
    if pattern.n() > host.n() || pattern.edge_count() == 0 {
        return Ok(covered);
    }
    let pedges = pattern.edges();
    let mut image = Vec::with_capacity(pattern.n());
    injections(host.n(), pattern.n(), &mut image, &mut |img| {
        if pedges.iter().all(|&(a, b)| host.has_edge(img[a], img[b])) {
            for &(a, b) in &pedges {
                let key = (img[a].min(img[b]), img[a].max(img[b]));
                let idx = edges.binary_search(&key).expect("host edge");
                covered[idx] = true;
            }
        }
    });
    Ok(covered)
}

fn injections(n: usize, k: usize, image: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if image.len() == k {
        visit(image);
        return;
    }
    for h in 0..n {
        if !image.contains(&h) {
            image.push(h);
            injections(n, k, image, visit);
            image.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gen_construction;

    #[test]
    fn clique_oracle_examples() {
        let k4 = SmallGraph::complete(4).unwrap();
        assert_eq!(oracle_clique_through_edge(&k4, (0, 3)).unwrap(), 4);
        let c5 = gen_construction("cycle", &[5]).unwrap().into_graph().unwrap();
        assert_eq!(oracle_clique_through_edge(&c5, (0, 1)).unwrap(), 2);
        let kb = gen_construction("complete-bipartite-plus-edge", &[3]).unwrap().into_graph().unwrap();
        assert_eq!(oracle_clique_through_edge(&kb, (0, 1)).unwrap(), 3);
        assert!(oracle_clique_through_edge(&c5, (0, 2)).is_err());
        assert!(oracle_clique_through_edge(&SmallGraph::complete(17).unwrap(), (0, 1)).is_err());
    }

    #[test]
    fn path_oracle_examples() {
        let p4 = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(oracle_path_through_edge(&p4, (1, 2)).unwrap(), 3);
        let k3 = SmallGraph::complete(3).unwrap();
        assert_eq!(oracle_path_through_edge(&k3, (0, 2)).unwrap(), 2);
        let two = gen_construction("disjoint-cliques", &[3, 3]).unwrap().into_graph().unwrap();
        let r = oracle_edge_paths(&two).unwrap();
        assert!(r.values.iter().all(|&(_, p)| p == 2));
    }

    #[test]
    fn matching_oracle_examples() {
        let all = SetFamily::new(5, crate::family::level_sets(5, &[2])).unwrap();
        let a = all.sets().iter().position(|&s| s == 0b11).unwrap();
        assert_eq!(oracle_matching_through_set(&all, a).unwrap(), 2);
        let star = SetFamily::from_lists(6, &[&[0, 1], &[0, 2], &[0, 3]]).unwrap();
        assert_eq!(oracle_matching_through_set(&star, 1).unwrap(), 1);
        let two = SetFamily::from_lists(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(oracle_matching_through_set(&two, 0).unwrap(), 2);
    }

    #[test]
    fn copy_oracle_on_bipartite_plus_edge() {
        let kb = gen_construction("complete-bipartite-plus-edge", &[3]).unwrap().into_graph().unwrap();
        let tri = SmallGraph::complete(3).unwrap();
        let cov = oracle_copy_edges(&kb, &tri).unwrap();
        assert_eq!(cov.iter().filter(|&&c| c).count(), 7);
    }

    #[test]
    fn monotone_oracle() {
        let v: Vec<ExactRational> = [2, 1, 4, 3].iter().map(|&x| ExactRational::from_integer(x)).collect();
        let (inc, dec) = oracle_monotone(&v).unwrap();
        assert!(inc.values.iter().all(|&(_, i)| i == 2));
        assert!(dec.values.iter().all(|&(_, d)| d == 2));
    }
}
