//! Counterexample search for the sequence bound. Structured candidates
//! (complete bipartite graphs with edges added inside a class, Turán graphs
//! with one edge changed) come first, then random graphs.

use std::ops::RangeInclusive;

use super::{oracle_copy_edges, PATH_ORACLE_CAP};
use crate::error::{LocexError, Result};
use crate::generate::{gnp, trial_seed, Sampler};
use crate::graph::SmallGraph;
use crate::graph_local::{verify_sequence_bound, GraphSequenceSpec};
use crate::rational::ExactRational;
use crate::subgraph::contains_subgraph;

/// Violations kept in full; further ones are only counted.
const KEEP: usize = 32;

#[derive(Clone, Debug)]
pub struct SearchViolation {
    pub graph: SmallGraph,
    pub total: ExactRational,
    pub f_values: Vec<((usize, usize), usize)>,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub sequence: String,
    pub examined: u64,
    /// Candidates containing the last graph of the sequence, which the
    /// truncated sequence cannot weigh.
    pub skipped: u64,
    pub violation_count: u64,
    pub violations: Vec<SearchViolation>,
    /// Smallest `1 - total` seen, with the graph that produced it.
    pub best_slack: Option<(ExactRational, SmallGraph)>,
}

pub fn search_counterexample(
    spec: &GraphSequenceSpec,
    n_range: RangeInclusive<usize>,
    budget: u64,
    seed: u64,
) -> Result<SearchOutcome> {
    let mut out = SearchOutcome {
        sequence: spec.name.clone(),
        examined: 0,
        skipped: 0,
        violation_count: 0,
        violations: Vec::new(),
        best_slack: None,
    };
    let sizes: Vec<usize> = n_range.collect();
    for &n in &sizes {
        for g in structured(n)? {
            if out.examined >= budget {
                return Ok(out);
            }
            examine(spec, g, &mut out)?;
        }
    }
    let mut trial = 0u64;
    while out.examined < budget && !sizes.is_empty() {
        let mut s = Sampler::new(trial_seed(seed, trial));
        let n = sizes[(trial % sizes.len() as u64) as usize];
        let p = 0.2 + 0.6 * s.unit();
        examine(spec, gnp(n, p, &mut s)?, &mut out)?;
        trial += 1;
    }
    Ok(out)
}

fn examine(spec: &GraphSequenceSpec, g: SmallGraph, out: &mut SearchOutcome) -> Result<()> {
    out.examined += 1;
    let last = spec.graphs().last().expect("sequence nonempty");
    if contains_subgraph(&g, last) {
        out.skipped += 1;
        return Ok(());
    }
    let r = verify_sequence_bound(&g, spec)?;
    let slack = r.report.slack.clone();
    if out.best_slack.as_ref().map_or(true, |(b, _)| slack < *b) {
        out.best_slack = Some((slack, g.clone()));
    }
    if r.holds() {
        return Ok(());
    }
    if g.n() <= PATH_ORACLE_CAP {
        recheck(spec, &g, &r.f_values, &r.report.total)?;
    }
    out.violation_count += 1;
    if out.violations.len() < KEEP {
        out.violations.push(SearchViolation {
            graph: g,
            total: r.report.total,
            f_values: r.f_values,
        });
    }
    Ok(())
}

/// Recomputes `f(e)` by trying every injection of every `F_i` and sums again.
fn recheck(
    spec: &GraphSequenceSpec,
    g: &SmallGraph,
    f_values: &[((usize, usize), usize)],
    total: &ExactRational,
) -> Result<()> {
    let mut f = vec![0usize; g.edge_count()];
    for (i, pattern) in spec.graphs().iter().enumerate() {
        for (j, covered) in oracle_copy_edges(g, pattern)?.into_iter().enumerate() {
            if covered {
                f[j] = i + 1;
            }
        }
    }
    let mut sum = ExactRational::zero();
    for (j, &fe) in f.iter().enumerate() {
        if f_values[j].1 != fe {
            return Err(LocexError::OracleMismatch(format!(
                "f({}-{}) is {} by containment search but {fe} by enumeration",
                f_values[j].0 .0, f_values[j].0 .1, f_values[j].1
            )));
        }
        sum += ExactRational::unit_fraction(spec.ex(g.n(), fe + 1)?);
    }
    if &sum != total {
        return Err(LocexError::OracleMismatch(format!(
            "sequence total {total} but enumeration gives {sum}"
        )));
    }
    Ok(())
}

fn structured(n: usize) -> Result<Vec<SmallGraph>> {
    let mut out = Vec::new();
    // Complete bipartite K_{a,n-a} plus one or two edges inside the first class.
    for a in 1..n {
        let mut base = SmallGraph::empty(n)?;
        for u in 0..a {
            for v in a..n {
                base.add_edge(u, v)?;
            }
        }
        out.push(base.clone());
        for u in 0..a {
            for v in u + 1..a {
                let one = base.with_edge(u, v)?;
                out.push(one.clone());
                for w in v + 1..a {
                    out.push(one.with_edge(u, w)?);
                    out.push(one.with_edge(v, w)?);
                }
                for x in a..n {
                    for y in x + 1..n {
                        out.push(one.with_edge(x, y)?);
                    }
                }
            }
        }
    }
    // Turán graphs with one edge added or removed.
    for r in 2..=n {
        let mut t = SmallGraph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if u % r != v % r {
                    t.add_edge(u, v)?;
                }
            }
        }
        out.push(t.clone());
        for u in 0..n {
            for v in u + 1..n {
                let mut h = t.clone();
                if t.has_edge(u, v) {
                    h.remove_edge(u, v);
                } else {
                    h.add_edge(u, v)?;
                }
                out.push(h);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{fill_ex_table, TuranCache};

    #[test]
    fn finds_bipartite_plus_edge() {
        let mut spec = GraphSequenceSpec::from_names(&["triangle", "bowtie"]).unwrap();
        fill_ex_table(&mut spec, 6, &mut TuranCache::new()).unwrap();
        let out = search_counterexample(&spec, 6..=6, 200, 1).unwrap();
        assert!(out.violation_count > 0);
        let best = out
            .violations
            .iter()
            .map(|v| v.total.clone())
            .max()
            .unwrap();
        assert!(best >= ExactRational::new(31, 30));
        assert!(out.violations.iter().any(|v| v.total == ExactRational::new(31, 30)));
    }

    #[test]
    fn budget_is_respected() {
        let mut spec = GraphSequenceSpec::cliques(5).unwrap();
        fill_ex_table(&mut spec, 5, &mut TuranCache::new()).unwrap();
        let out = search_counterexample(&spec, 5..=5, 7, 0).unwrap();
        assert_eq!(out.examined, 7);
    }
}
