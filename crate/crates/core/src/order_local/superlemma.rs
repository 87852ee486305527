//! The general statement behind the vertex-local bounds: for a perfect graph
//! and a vertex function `f(H, v)` on induced subgraphs that is monotone in `H`
//! and satisfies `Σ_{v∈H} 1/f(H,v) <= 1` on independent sets,
//! `Σ_{v∈H} 1/(f(H,v) c(H,v)) <= 1` for every induced `H`.
//!
//! Both premises are checked over every induced subgraph before the conclusion.

use rayon::prelude::*;

use super::perfect::check_perfect;
use crate::bits::{ones, set_label};
use crate::clique::max_clique_in;
use crate::error::{LocexError, Result};
use crate::graph::SmallGraph;
use crate::io::write_graph;
use crate::poset::RankedPoset;
use crate::rational::ExactRational;
use crate::report::{ObjectWeight, Theorem, WeightReport};

pub const SUPERLEMMA_CAP: usize = 12;

/// `f(H, v)` for `v ∈ H`, where `H` is a vertex set of the graph.
pub trait FOracle: Sync {
    fn name(&self) -> &str;
    fn eval(&self, g: &SmallGraph, h: u64, v: usize) -> ExactRational;
}

/// `f(H, v) = |H|`.
pub struct ConstantSize;

impl FOracle for ConstantSize {
    fn name(&self) -> &str {
        "constant-size"
    }

    fn eval(&self, _g: &SmallGraph, h: u64, _v: usize) -> ExactRational {
        ExactRational::from(h.count_ones() as u64)
    }
}

/// `f(H, v)` = largest independent set of `G[H]` containing `v`.
pub struct IndependentThroughVertex;

impl FOracle for IndependentThroughVertex {
    fn name(&self) -> &str {
        "independent-through-vertex"
    }

    fn eval(&self, g: &SmallGraph, h: u64, v: usize) -> ExactRational {
        let co = g.complement();
        let rest = h & co.neighbors(v);
        ExactRational::from(1 + max_clique_in(co.rows(), rest).size as u64)
    }
}

/// `f(H, v) = N_{rank(v)}` for a comparability graph of a ranked poset.
pub struct RankLevelCount {
    level_of: Vec<u64>,
}

impl RankLevelCount {
    pub fn from_poset(p: &RankedPoset) -> Result<Self> {
        let (rank, counts) = match (p.rank(), p.level_counts()) {
            (Some(r), Some(c)) => (r, c),
            _ => return Err(LocexError::Parameter("rank-level-count needs a ranked poset".into())),
        };
        Ok(RankLevelCount {
            level_of: rank.iter().map(|&k| counts[k] as u64).collect(),
        })
    }
}

impl FOracle for RankLevelCount {
    fn name(&self) -> &str {
        "rank-level-count"
    }

    fn eval(&self, _g: &SmallGraph, _h: u64, v: usize) -> ExactRational {
        ExactRational::from(self.level_of[v])
    }
}

#[derive(Clone, Debug)]
pub struct SuperlemmaOutcome {
    /// The conclusion on the whole vertex set.
    pub report: WeightReport,
    /// Induced subgraph with the largest total, and that total.
    pub worst: (u64, ExactRational),
    pub subgraphs_checked: u64,
}

pub fn verify_superlemma(g: &SmallGraph, f: &dyn FOracle) -> Result<SuperlemmaOutcome> {
    let n = g.n();
    if n > SUPERLEMMA_CAP {
        return Err(LocexError::capacity("vertices for induced-subgraph sweep", SUPERLEMMA_CAP, n));
    }
    let perfect = check_perfect(g)?;
    if let Some(cert) = perfect.certificate {
        return Err(LocexError::precondition(
            format!("graph is not perfect ({})", cert.describe()),
            cert.cycle.iter().map(|v| v.to_string()).collect(),
        ));
    }
    let subsets = 1usize << n;
    // table[h * n + v] = f(H, v) for v in H.
    let table: Vec<Option<ExactRational>> = (0..subsets * n)
        .into_par_iter()
        .map(|i| {
            let (h, v) = ((i / n) as u64, i % n);
            (h >> v & 1 == 1).then(|| f.eval(g, h, v))
        })
        .collect();
    let at = |h: u64, v: usize| table[h as usize * n + v].as_ref().expect("v in H");

    for h in 1..subsets as u64 {
        for v in ones(h) {
            if !at(h, v).is_positive() {
                return Err(LocexError::precondition(
                    format!("{} is not positive at H={}, v={v}", f.name(), set_label(h)),
                    vec![set_label(h), v.to_string()],
                ));
            }
            for w in ones(g.vertex_mask() & !h) {
                let bigger = h | 1u64 << w;
                if at(h, v) > at(bigger, v) {
                    return Err(LocexError::precondition(
                        format!(
                            "{} is not monotone: f(H,v) = {} > f(H+w,v) = {} at H={}, v={v}, w={w}",
                            f.name(),
                            at(h, v),
                            at(bigger, v),
                            set_label(h)
                        ),
                        vec![set_label(h), v.to_string(), w.to_string()],
                    ));
                }
            }
        }
        if g.is_independent(h) {
            let sum: ExactRational = ones(h).map(|v| at(h, v).recip()).sum();
            if sum > ExactRational::one() {
                return Err(LocexError::precondition(
                    format!("{} sums to {sum} > 1 on independent set {}", f.name(), set_label(h)),
                    vec![set_label(h)],
                ));
            }
        }
    }

    let totals: Vec<ExactRational> = (0..subsets as u64)
        .into_par_iter()
        .map(|h| {
            ones(h)
                .map(|v| {
                    let c = 1 + max_clique_in(g.rows(), h & g.neighbors(v)).size as u64;
                    (at(h, v) * &ExactRational::from(c)).recip()
                })
                .sum()
        })
        .collect();
    let (worst_h, worst_total) = totals
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(h, t)| (h as u64, t.clone()))
        .expect("at least the empty set");

    let full = g.vertex_mask();
    let per = ones(full)
        .map(|v| {
            let c = 1 + max_clique_in(g.rows(), g.neighbors(v)).size as u64;
            let fv = at(full, v).clone();
            let w = (&fv * &ExactRational::from(c)).recip();
            ObjectWeight::new(v.to_string(), fv, w).with_detail(format!("c={c}"))
        })
        .collect();
    let report = WeightReport::new(Theorem::Superlemma, g.fingerprint(), per, ExactRational::one())
        .witness(format!(
            "f={}; premises hold; max total {} on {}",
            f.name(),
            worst_total,
            set_label(worst_h)
        ))
        .stat("subgraphs", subsets as u64);
    if worst_total > ExactRational::one() {
        let reason = format!("total {} exceeds 1 on induced subgraph {}", worst_total, set_label(worst_h));
        return Err(LocexError::violation(Theorem::Superlemma.id(), reason, write_graph(g), Some(report)));
    }
    Ok(SuperlemmaOutcome {
        report,
        worst: (worst_h, worst_total),
        subgraphs_checked: subsets as u64,
    })
}
