//! The generalized bound `Σ_e 1/ex(n, F_{f(e)+1}) <= 1` for a nested sequence
//! `F_1 ⊂ F_2 ⊂ …`, where `f(e)` is the largest `i` such that `e` lies in a copy
//! of `F_i` (0 if none, in which case the denominator is `ex(n, F_1)`).
//!
//! This bound is not a theorem: it fails for some sequences. Violations are
//! reported, never raised as errors.

use std::collections::BTreeMap;

use super::edge_label;
use crate::error::{LocexError, Result};
use crate::graph::SmallGraph;
use crate::rational::{binomial, ExactRational};
use crate::report::{ObjectWeight, Theorem, WeightReport};
use crate::subgraph::{contains_subgraph, edge_in_copy};

#[derive(Clone, Debug)]
pub struct GraphSequenceSpec {
    pub name: String,
    graphs: Vec<SmallGraph>,
    /// `(n, i) -> ex(n, F_i)`, `i` 1-based.
    ex_table: BTreeMap<(usize, usize), u64>,
}

impl GraphSequenceSpec {
    /// Checks `F_i ⊆ F_{i+1}` by containment search.
    pub fn new(name: impl Into<String>, graphs: Vec<SmallGraph>) -> Result<Self> {
        if graphs.is_empty() {
            return Err(LocexError::Config("graph sequence is empty".into()));
        }
        for (i, pair) in graphs.windows(2).enumerate() {
            if !contains_subgraph(&pair[1], &pair[0]) {
                return Err(LocexError::Config(format!(
                    "F_{} is not a subgraph of F_{}",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(GraphSequenceSpec {
            name: name.into(),
            graphs,
            ex_table: BTreeMap::new(),
        })
    }

    /// Sequence from names such as `triangle`, `bowtie`, `k4`, `p3`, `c5`, `s3`.
    pub fn from_names(names: &[&str]) -> Result<Self> {
        let graphs = names.iter().map(|n| named_graph(n)).collect::<Result<Vec<_>>>()?;
        GraphSequenceSpec::new(names.join(","), graphs)
    }

    /// `K_2, K_3, …, K_{len+1}`.
    pub fn cliques(len: usize) -> Result<Self> {
        let graphs = (2..len + 2).map(SmallGraph::complete).collect::<Result<Vec<_>>>()?;
        GraphSequenceSpec::new("clique", graphs)
    }

    /// `P_1, P_2, …, P_len` (`P_k` has `k` edges).
    pub fn paths(len: usize) -> Result<Self> {
        let graphs = (1..=len).map(path_with_edges).collect::<Result<Vec<_>>>()?;
        GraphSequenceSpec::new("path", graphs)
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graphs(&self) -> &[SmallGraph] {
        &self.graphs
    }

    /// `F_i`, 1-based.
    pub fn graph(&self, i: usize) -> Option<&SmallGraph> {
        i.checked_sub(1).and_then(|j| self.graphs.get(j))
    }

    pub fn set_ex(&mut self, n: usize, i: usize, ex: u64) -> Result<()> {
        if i == 0 || i > self.graphs.len() {
            return Err(LocexError::Config(format!("no F_{i} in a sequence of length {}", self.len())));
        }
        self.ex_table.insert((n, i), ex);
        Ok(())
    }

    pub fn ex(&self, n: usize, i: usize) -> Result<u64> {
        self.ex_table
            .get(&(n, i))
            .copied()
            .ok_or_else(|| LocexError::Config(format!("ex-table has no entry for ex({n}, F_{i})")))
    }

    pub fn has_ex(&self, n: usize, i: usize) -> bool {
        self.ex_table.contains_key(&(n, i))
    }

    /// ex values must be nondecreasing along the sequence for each `n`.
    pub fn check_ex_table(&self) -> Result<()> {
        let mut last: Option<(usize, usize, u64)> = None;
        for (&(n, i), &ex) in &self.ex_table {
            if let Some((pn, pi, pex)) = last {
                if pn == n && ex < pex {
                    return Err(LocexError::Config(format!(
                        "ex({n}, F_{i}) = {ex} < ex({n}, F_{pi}) = {pex}"
                    )));
                }
            }
            last = Some((n, i, ex));
        }
        Ok(())
    }
}

/// Path with `k` edges.
pub fn path_with_edges(k: usize) -> Result<SmallGraph> {
    let edges: Vec<_> = (1..=k).map(|i| (i - 1, i)).collect();
    SmallGraph::from_edges(k + 1, &edges)
}

pub fn named_graph(name: &str) -> Result<SmallGraph> {
    let bad = || LocexError::Config(format!("unknown graph name {name:?}"));
    let lower = name.trim().to_ascii_lowercase();
    match lower.as_str() {
        "triangle" => return SmallGraph::complete(3),
        "bowtie" | "bow-tie" => {
            return SmallGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
        }
        _ => {}
    }
    let (head, num) = lower.split_at(1.min(lower.len()));
    let k: usize = num.parse().map_err(|_| bad())?;
    match head {
        "k" if k >= 1 => SmallGraph::complete(k),
        "p" => path_with_edges(k),
        "c" if k >= 3 => {
            let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
            SmallGraph::from_edges(k, &edges)
        }
        "s" => {
            let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
            SmallGraph::from_edges(k + 1, &edges)
        }
        _ => Err(bad()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPartBound {
    pub index: usize,
    /// Edges lying in a copy of `F_index`.
    pub s: usize,
    pub t: usize,
    /// `|S|/ex(n, F_index) + |T|/C(n, 2)`; `None` when `ex(n, F_index) = 0` and `S` is nonempty.
    pub value: Option<ExactRational>,
}

#[derive(Clone, Debug)]
pub struct SequenceBoundReport {
    pub report: WeightReport,
    pub f_values: Vec<((usize, usize), usize)>,
    pub two_part: Vec<TwoPartBound>,
}

impl SequenceBoundReport {
    pub fn holds(&self) -> bool {
        self.report.holds()
    }
}

pub fn verify_sequence_bound(g: &SmallGraph, spec: &GraphSequenceSpec) -> Result<SequenceBoundReport> {
    spec.check_ex_table()?;
    let n = g.n();
    let edges = g.edges();
    let k = spec.len();

    // in_copy[i][j]: edge j lies in a copy of F_{i+1}.
    let in_copy: Vec<Vec<bool>> = spec
        .graphs
        .iter()
        .map(|f| {
            if f.n() > n || f.edge_count() > edges.len() || f.edge_count() == 0 {
                vec![false; edges.len()]
            } else {
                edges.iter().map(|&e| edge_in_copy(g, f, e)).collect()
            }
        })
        .collect();

    let mut per = Vec::with_capacity(edges.len());
    let mut f_values = Vec::with_capacity(edges.len());
    for (j, &e) in edges.iter().enumerate() {
        let f = (1..=k).rev().find(|&i| in_copy[i - 1][j]).unwrap_or(0);
        if f + 1 > k {
            return Err(LocexError::Config(format!(
                "edge {} lies in F_{f}, the last graph of the sequence; extend it to cover F_{}",
                edge_label(e),
                f + 1
            )));
        }
        let ex = spec.ex(n, f + 1)?;
        if ex == 0 {
            return Err(LocexError::Config(format!(
                "ex({n}, F_{}) = 0 cannot be a denominator",
                f + 1
            )));
        }
        f_values.push((e, f));
        per.push(
            ObjectWeight::new(edge_label(e), ex.into(), ExactRational::unit_fraction(ex))
                .with_detail(format!("f={f}")),
        );
    }

    let pairs = binomial(n as u64, 2) as u64;
    let two_part = (1..=k)
        .filter(|&i| spec.has_ex(n, i))
        .map(|i| {
            let s = in_copy[i - 1].iter().filter(|&&b| b).count();
            let t = edges.len() - s;
            let ex = spec.ex(n, i).expect("filtered");
            let value = if s > 0 && ex == 0 {
                None
            } else {
                let mut v = ExactRational::zero();
                if s > 0 {
                    v += ExactRational::new(s as i64, ex as i64);
                }
                if t > 0 {
                    v += ExactRational::new(t as i64, pairs as i64);
                }
                Some(v)
            };
            TwoPartBound { index: i, s, t, value }
        })
        .collect();

    let report = WeightReport::new(Theorem::SequenceBound, g.fingerprint(), per, ExactRational::one());
    let witness = if report.holds() {
        format!("bound holds for sequence {}", spec.name)
    } else {
        format!("bound violated for sequence {}", spec.name)
    };
    Ok(SequenceBoundReport {
        report: report.witness(witness),
        f_values,
        two_part,
    })
}
