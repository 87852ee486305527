//! Edge-local statistics and the localized Turán, Erdős–Gallai and star bounds.
//!
//! For each edge `e`:
//! * `c(e)` is the largest clique containing `e`, weight `c/(c-1)`, total at most `n²/2`;
//! * `p(e)` is the most edges on a path through `e`, weight `1/p`, total at most `n/2`;
//! * `s(e)` is the largest star through `e`, weight `1/s`, total at most `n/2`.

mod paths;
mod sequence;

pub use paths::{path_weights, path_weights_capped, DEFAULT_PATH_CAP, MAX_PATH_CAP};
pub use sequence::{
    named_graph, verify_sequence_bound, GraphSequenceSpec, SequenceBoundReport, TwoPartBound,
};

use crate::clique::max_clique_in;
use crate::error::{LocexError, Result};
use crate::graph::SmallGraph;
use crate::io::write_graph;
use crate::rational::ExactRational;
use crate::report::{ObjectWeight, Theorem, WeightReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeStatKind {
    Clique,
    Path,
    Star,
}

/// One value per edge, edges in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLocalStats {
    pub kind: EdgeStatKind,
    pub values: Vec<((usize, usize), usize)>,
    /// Search effort, for reports.
    pub nodes: u64,
}

impl EdgeLocalStats {
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.values
            .binary_search_by_key(&key, |&(e, _)| e)
            .ok()
            .map(|i| self.values[i].1)
    }

    pub fn max(&self) -> Option<usize> {
        self.values.iter().map(|&(_, c)| c).max()
    }
}

pub(crate) fn edge_label((u, v): (usize, usize)) -> String {
    format!("{u}-{v}")
}

/// `c(e) = 2 + ω(N(u) ∩ N(v))` for every edge `uv`.
pub fn clique_weights(g: &SmallGraph) -> EdgeLocalStats {
    let mut nodes = 0;
    let values = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let r = max_clique_in(g.rows(), g.neighbors(u) & g.neighbors(v));
            nodes += r.nodes;
            ((u, v), 2 + r.size)
        })
        .collect();
    EdgeLocalStats {
        kind: EdgeStatKind::Clique,
        values,
        nodes,
    }
}

/// `s(uv) = max(deg u, deg v)`.
pub fn star_weights(g: &SmallGraph) -> EdgeLocalStats {
    let values = g
        .edges()
        .into_iter()
        .map(|(u, v)| ((u, v), g.degree(u).max(g.degree(v))))
        .collect();
    EdgeLocalStats {
        kind: EdgeStatKind::Star,
        values,
        nodes: 0,
    }
}

/// Number of classes if `g` is complete multipartite with at least two classes
/// of one common size.
pub fn balanced_complete_multipartite(g: &SmallGraph) -> Option<usize> {
    let all = g.vertex_mask();
    let class_of = |v: usize| all & !g.neighbors(v);
    let mut seen = 0u64;
    let mut sizes = Vec::new();
    for v in 0..g.n() {
        let class = class_of(v);
        if crate::bits::ones(class).any(|u| class_of(u) != class) {
            return None;
        }
        if seen & class == 0 {
            seen |= class;
            sizes.push(class.count_ones());
        }
    }
    let balanced = sizes.windows(2).all(|w| w[0] == w[1]);
    (sizes.len() >= 2 && balanced).then_some(sizes.len())
}

/// Every component is a clique on at least two vertices.
pub fn disjoint_nontrivial_cliques(g: &SmallGraph) -> bool {
    g.components()
        .into_iter()
        .all(|c| c.count_ones() >= 2 && g.is_clique(c))
}

/// Every component is regular and no vertex is isolated.
pub fn regular_components_no_isolated(g: &SmallGraph) -> bool {
    g.components().into_iter().all(|c| {
        let mut degs = crate::bits::ones(c).map(|v| g.degree(v));
        let d = degs.next().unwrap_or(0);
        d > 0 && degs.all(|x| x == d)
    })
}

fn check_report(
    g: &SmallGraph,
    report: WeightReport,
    detector: bool,
) -> Result<WeightReport> {
    if !report.holds() {
        let reason = format!("total {} exceeds bound {}", report.total, report.bound);
        return Err(LocexError::violation(report.theorem.id(), reason, write_graph(g), Some(report)));
    }
    if report.equality != detector {
        let reason = format!(
            "equality flag {} but structural detector says {}",
            report.equality, detector
        );
        return Err(LocexError::violation(report.theorem.id(), reason, write_graph(g), Some(report)));
    }
    Ok(report)
}

/// `Σ c(e)/(c(e)-1) <= n²/2`, with equality exactly on balanced complete multipartite graphs.
pub fn verify_turan_local(g: &SmallGraph) -> Result<WeightReport> {
    let stats = clique_weights(g);
    let per = stats
        .values
        .iter()
        .map(|&(e, c)| {
            let c = c as i64;
            ObjectWeight::new(edge_label(e), c.into(), ExactRational::new(c, c - 1))
        })
        .collect();
    let n = g.n() as i64;
    let detector = balanced_complete_multipartite(g);
    let witness = match detector {
        Some(k) => format!("balanced complete multipartite, {k} classes"),
        None => "not balanced complete multipartite".to_string(),
    };
    let report = WeightReport::new(Theorem::Turan, g.fingerprint(), per, ExactRational::new(n * n, 2))
        .witness(witness)
        .stat("clique_nodes", stats.nodes);
    check_report(g, report, detector.is_some())
}

/// `Σ 1/p(e) <= n/2`, with equality exactly when every component is a clique
/// on at least two vertices.
pub fn verify_erdos_gallai_local(g: &SmallGraph) -> Result<WeightReport> {
    verify_erdos_gallai_local_capped(g, DEFAULT_PATH_CAP)
}

pub fn verify_erdos_gallai_local_capped(g: &SmallGraph, cap: usize) -> Result<WeightReport> {
    let stats = path_weights_capped(g, cap)?;
    let per = stats
        .values
        .iter()
        .map(|&(e, p)| ObjectWeight::new(edge_label(e), (p as i64).into(), ExactRational::unit_fraction(p as u64)))
        .collect();
    let detector = disjoint_nontrivial_cliques(g);
    let witness = if detector {
        "disjoint cliques"
    } else {
        "not a disjoint union of cliques on >= 2 vertices"
    };
    let report = WeightReport::new(
        Theorem::ErdosGallai,
        g.fingerprint(),
        per,
        ExactRational::new(g.n() as i64, 2),
    )
    .witness(witness)
    .stat("path_dp_states", stats.nodes);
    check_report(g, report, detector)
}

/// `Σ 1/s(e) <= n/2`, with equality exactly when every component is regular
/// and nonempty of edges.
pub fn verify_stars_local(g: &SmallGraph) -> Result<WeightReport> {
    let stats = star_weights(g);
    let per = stats
        .values
        .iter()
        .map(|&(e, s)| ObjectWeight::new(edge_label(e), (s as i64).into(), ExactRational::unit_fraction(s as u64)))
        .collect();
    let detector = regular_components_no_isolated(g);
    let witness = if detector {
        "components regular"
    } else {
        "some component irregular or an isolated vertex"
    };
    let report = WeightReport::new(Theorem::Stars, g.fingerprint(), per, ExactRational::new(g.n() as i64, 2))
        .witness(witness);
    check_report(g, report, detector)
}
