//! Vertex-local bounds on perfect graphs and their poset and sequence forms.
//!
//! `c(v)` is the largest clique containing `v` and `i(v)` the largest
//! independent set containing `v`; on a perfect graph `Σ 1/(c(v) i(v)) <= 1`.

mod perfect;
mod superlemma;

pub use perfect::{
    check_perfect, check_perfect_capped, chromatic_number, odd_hole, perfect_by_definition,
    Certificate, CertificateKind, PerfectCheck, DEFAULT_PERFECT_CAP, DEFINITIONAL_CAP,
};
pub use superlemma::{
    verify_superlemma, ConstantSize, FOracle, IndependentThroughVertex, RankLevelCount,
    SuperlemmaOutcome, SUPERLEMMA_CAP,
};

use std::cmp::Ordering;

use crate::bits::{ones, set_label};
use crate::clique::{for_each_maximal_clique, max_clique_in};
use crate::error::{LocexError, Result};
use crate::graph::SmallGraph;
use crate::io::{write_graph, write_poset, write_sequence};
use crate::poset::RankedPoset;
use crate::rational::ExactRational;
use crate::report::{ObjectWeight, ReportMode, Theorem, WeightReport};
use crate::sequence::RealSequence;

pub const VERTEX_WEIGHT_CAP: usize = 40;
/// Posets up to this size have their level premise checked over maximal antichains.
pub const POSET_PREMISE_CAP: usize = 20;
/// Sequences up to this length are cross-checked through their poset.
pub const SEQUENCE_CROSS_CHECK: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexLocalStats {
    pub clique: Vec<usize>,
    pub indep: Vec<usize>,
    pub nodes: u64,
}

/// Vertices are elements, edges join comparable pairs.
pub fn comparability_graph(p: &RankedPoset) -> SmallGraph {
    let rows = (0..p.m())
        .map(|x| (p.up_set(x) | p.down_set(x)) & !(1u64 << x))
        .collect();
    SmallGraph::from_rows(rows).expect("comparability is symmetric and loopless")
}

pub fn vertex_weights(g: &SmallGraph) -> Result<VertexLocalStats> {
    if g.n() > VERTEX_WEIGHT_CAP {
        return Err(LocexError::capacity("vertices for exact clique search", VERTEX_WEIGHT_CAP, g.n()));
    }
    let co = g.complement();
    let mut nodes = 0;
    let mut clique = Vec::with_capacity(g.n());
    let mut indep = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let c = max_clique_in(g.rows(), g.neighbors(v));
        let i = max_clique_in(co.rows(), co.neighbors(v));
        nodes += c.nodes + i.nodes;
        clique.push(c.size + 1);
        indep.push(i.size + 1);
    }
    Ok(VertexLocalStats { clique, indep, nodes })
}

fn vertex_report(
    theorem: Theorem,
    id: String,
    labels: impl Iterator<Item = String>,
    stats: &VertexLocalStats,
) -> WeightReport {
    let per = labels
        .zip(stats.clique.iter().zip(&stats.indep))
        .map(|(label, (&c, &i))| {
            let prod = (c * i) as u64;
            ObjectWeight::new(label, prod.into(), ExactRational::unit_fraction(prod))
                .with_detail(format!("c={c} i={i}"))
        })
        .collect();
    WeightReport::new(theorem, id, per, ExactRational::one()).stat("clique_nodes", stats.nodes)
}

/// `Σ 1/(c(v) i(v)) <= 1` for perfect graphs. In assert mode a non-perfect
/// input is a precondition error carrying its odd hole or antihole.
pub fn verify_perfect_local(g: &SmallGraph, mode: ReportMode) -> Result<WeightReport> {
    let check = match (mode, check_perfect(g)) {
        (_, Ok(c)) => Some(c),
        (ReportMode::ReportOnly, Err(LocexError::Capacity { .. })) => None,
        (_, Err(e)) => return Err(e),
    };
    let stats = vertex_weights(g)?;
    let witness = match &check {
        Some(c) => match &c.certificate {
            None => "perfect".to_string(),
            Some(cert) => format!("not perfect: {}", cert.describe()),
        },
        None => "perfectness not checked (too large)".to_string(),
    };
    if mode == ReportMode::Assert {
        if let Some(cert) = check.as_ref().and_then(|c| c.certificate.as_ref()) {
            return Err(LocexError::precondition(
                format!("graph is not perfect ({})", cert.describe()),
                cert.cycle.iter().map(|v| v.to_string()).collect(),
            ));
        }
    }
    let report = vertex_report(Theorem::Perfect, g.fingerprint(), (0..g.n()).map(|v| v.to_string()), &stats)
        .witness(witness);
    if mode == ReportMode::Assert && !report.holds() {
        let reason = format!("total {} exceeds 1", report.total);
        return Err(LocexError::violation(Theorem::Perfect.id(), reason, write_graph(g), Some(report)));
    }
    Ok(report)
}

/// Identifier for a poset: size and a hash of its order matrix.
pub fn poset_id(p: &RankedPoset) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for row in p.matrix() {
        for b in row.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    format!("p{}:{h:016x}", p.m())
}

/// `Σ_{x∈T} 1/(N_{|x|} c(T,x)) <= 1` for a ranked poset whose antichains satisfy
/// `Σ 1/N_{|x|} <= 1`; `c(T,x)` is the longest chain inside `T` through `x`.
pub fn verify_poset_lym_local(p: &RankedPoset, t: u64) -> Result<WeightReport> {
    let (rank, counts) = match (p.rank(), p.level_counts()) {
        (Some(r), Some(c)) => (r, c),
        _ => return Err(LocexError::Parameter("poset has no rank function".into())),
    };
    let m = p.m();
    if m > POSET_PREMISE_CAP {
        return Err(LocexError::capacity("poset size for antichain enumeration", POSET_PREMISE_CAP, m));
    }
    let all = crate::bits::low_mask(m);
    if t & !all != 0 {
        return Err(LocexError::Parameter(format!("subset {} has elements outside the poset", set_label(t))));
    }
    let term = |x: usize| ExactRational::unit_fraction(counts[rank[x]] as u64);
    let comp = comparability_graph(p);
    let incomp = comp.complement();
    let mut bad: Option<(u64, ExactRational)> = None;
    for_each_maximal_clique(incomp.rows(), all, &mut |s| {
        if bad.is_none() {
            let sum: ExactRational = ones(s).map(term).sum();
            if sum > ExactRational::one() {
                bad = Some((s, sum));
            }
        }
    });
    if let Some((s, sum)) = bad {
        return Err(LocexError::precondition(
            format!("antichain {} has level sum {sum} > 1", set_label(s)),
            ones(s).map(|x| x.to_string()).collect(),
        ));
    }
    let per = ones(t)
        .map(|x| {
            let c = 1 + max_clique_in(comp.rows(), comp.neighbors(x) & t).size as u64;
            let n = counts[rank[x]] as u64;
            ObjectWeight::new(x.to_string(), (n * c).into(), ExactRational::unit_fraction(n * c))
                .with_detail(format!("N={n} c={c}"))
        })
        .collect();
    let report = WeightReport::new(Theorem::PosetLym, format!("{}|{}", poset_id(p), set_label(t)), per, ExactRational::one())
        .witness("level premise holds on every maximal antichain");
    if !report.holds() {
        let reason = format!("total {} exceeds 1", report.total);
        return Err(LocexError::violation(Theorem::PosetLym.id(), reason, write_poset(p), Some(report)));
    }
    Ok(report)
}

/// `Σ 1/(A(x) C(x)) <= 1` with `A`, `C` the largest antichain and chain through `x`.
pub fn verify_dilworth_local(p: &RankedPoset) -> Result<WeightReport> {
    let g = comparability_graph(p);
    let stats = vertex_weights(&g)?;
    let report = vertex_report(Theorem::Dilworth, poset_id(p), (0..p.m()).map(|x| x.to_string()), &stats)
        .witness("comparability graph");
    if !report.holds() {
        let reason = format!("total {} exceeds 1", report.total);
        return Err(LocexError::violation(Theorem::Dilworth.id(), reason, write_poset(p), Some(report)));
    }
    Ok(report)
}

/// Positions ordered by `i < j` and `x_i < x_j`.
pub fn sequence_poset(s: &RealSequence) -> Result<RankedPoset> {
    let v = s.values();
    let mut rel = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] < v[j] {
                rel.push((i, j));
            }
        }
    }
    RankedPoset::from_relations(v.len(), &rel)
}

/// Longest strictly monotone run (in the sense of `before`) ending at each position.
fn longest_ending<T>(values: &[T], before: impl Fn(&T, &T) -> Ordering) -> Vec<usize> {
    // tails[k]: smallest possible last value of a run of length k+1.
    let mut tails: Vec<&T> = Vec::new();
    let mut out = Vec::with_capacity(values.len());
    for x in values {
        let pos = tails.partition_point(|t| before(t, x) == Ordering::Less);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
        out.push(pos + 1);
    }
    out
}

/// Per position: longest strictly increasing and strictly decreasing subsequence through it.
pub fn monotone_through(values: &[ExactRational]) -> (Vec<usize>, Vec<usize>) {
    let asc = |a: &ExactRational, b: &ExactRational| a.cmp(b);
    let desc = |a: &ExactRational, b: &ExactRational| b.cmp(a);
    let rev: Vec<ExactRational> = values.iter().rev().cloned().collect();
    let inc_end = longest_ending(values, asc);
    let dec_end = longest_ending(values, desc);
    // A run starting at x is, read backwards, a run of the opposite kind ending at x.
    let mut inc_start = longest_ending(&rev, desc);
    let mut dec_start = longest_ending(&rev, asc);
    inc_start.reverse();
    dec_start.reverse();
    let inc = inc_end.iter().zip(&inc_start).map(|(a, b)| a + b - 1).collect();
    let dec = dec_end.iter().zip(&dec_start).map(|(a, b)| a + b - 1).collect();
    (inc, dec)
}

/// `Σ 1/(i(x) d(x)) <= 1`. Asserted only for distinct values; with ties the
/// report is returned unchecked.
pub fn verify_es_local(s: &RealSequence) -> Result<WeightReport> {
    s.require_nonempty()?;
    let (inc, dec) = monotone_through(s.values());
    let per = inc
        .iter()
        .zip(&dec)
        .enumerate()
        .map(|(x, (&i, &d))| {
            let prod = (i * d) as u64;
            ObjectWeight::new(x.to_string(), prod.into(), ExactRational::unit_fraction(prod))
                .with_detail(format!("i={i} d={d}"))
        })
        .collect();
    let distinct = s.is_distinct();
    let witness = if distinct { "distinct values" } else { "repeated values; not asserted" };
    let report = WeightReport::new(Theorem::ErdosSzekeres, format!("seq{}", s.len()), per, ExactRational::one())
        .witness(witness);
    if !distinct {
        return Ok(report);
    }
    if s.len() <= SEQUENCE_CROSS_CHECK {
        let dil = verify_dilworth_local(&sequence_poset(s)?)?;
        if dil.total != report.total {
            return Err(LocexError::OracleMismatch(format!(
                "sequence total {} differs from its poset total {}",
                report.total, dil.total
            )));
        }
    }
    if !report.holds() {
        let reason = format!("total {} exceeds 1", report.total);
        return Err(LocexError::violation(Theorem::ErdosSzekeres.id(), reason, write_sequence(s), Some(report)));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{level_sets, SetFamily};
    use crate::family_local::verify_lym_local;
    use crate::generate::Sampler;

    fn q(a: i64, b: i64) -> ExactRational {
        ExactRational::new(a, b)
    }

    #[test]
    fn comparability_examples() {
        let k3 = comparability_graph(&RankedPoset::chain(3).unwrap());
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(comparability_graph(&RankedPoset::antichain(3).unwrap()).edge_count(), 0);
        let b2 = comparability_graph(&RankedPoset::boolean_lattice(2).unwrap());
        assert_eq!(b2.degree(0), 3);
        assert_eq!(b2.degree(3), 3);
        assert!(!b2.has_edge(1, 2));
    }

    #[test]
    fn vertex_weight_examples() {
        let k4 = SmallGraph::complete(4).unwrap();
        let s = vertex_weights(&k4).unwrap();
        assert_eq!((s.clique, s.indep), (vec![4; 4], vec![1; 4]));
        let c5 = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let s = vertex_weights(&c5).unwrap();
        assert_eq!((s.clique, s.indep), (vec![2; 5], vec![2; 5]));
        let p4 = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = vertex_weights(&p4).unwrap();
        assert_eq!((s.clique, s.indep), (vec![2; 4], vec![2; 4]));
    }

    #[test]
    fn perfect_local_examples() {
        let k4 = SmallGraph::complete(4).unwrap();
        let r = verify_perfect_local(&k4, ReportMode::Assert).unwrap();
        assert!(r.equality);
        let p4 = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(verify_perfect_local(&p4, ReportMode::Assert).unwrap().total, ExactRational::one());
        let c5 = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let r = verify_perfect_local(&c5, ReportMode::ReportOnly).unwrap();
        assert_eq!(r.total, q(5, 4));
        assert!(!r.holds());
        match verify_perfect_local(&c5, ReportMode::Assert) {
            Err(LocexError::Precondition { witness, .. }) => assert_eq!(witness.len(), 5),
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn poset_lym_examples() {
        let b3 = RankedPoset::boolean_lattice(3).unwrap();
        let middle: u64 = (0..8).filter(|x: &u64| (1..=2).contains(&x.count_ones())).fold(0, |m, x| m | 1 << x);
        let r = verify_poset_lym_local(&b3, middle).unwrap();
        let fam = SetFamily::new(3, level_sets(3, &[1, 2])).unwrap();
        assert_eq!(r.total, verify_lym_local(&fam).unwrap().total);
        assert_eq!(r.total, ExactRational::one());

        let chain = RankedPoset::chain(5).unwrap();
        assert_eq!(verify_poset_lym_local(&chain, 0b11111).unwrap().total, ExactRational::one());
        let anti = RankedPoset::antichain(4).unwrap().with_rank(vec![0; 4]).unwrap();
        assert_eq!(verify_poset_lym_local(&anti, 0b1111).unwrap().total, ExactRational::one());
    }

    #[test]
    fn poset_lym_premise_failure() {
        // 0 < 1 and 2 isolated, ranks 0,1,0: N_0 = 2, N_1 = 1.
        let p = RankedPoset::from_relations(3, &[(0, 1)]).unwrap().with_rank(vec![0, 1, 0]).unwrap();
        // Antichain {1,2}: 1/N_1 + 1/N_0 = 1/1 + 1/2 > 1.
        match verify_poset_lym_local(&p, 0b111) {
            Err(LocexError::Precondition { witness, .. }) => assert_eq!(witness, vec!["1", "2"]),
            other => panic!("expected premise failure, got {other:?}"),
        }
    }

    #[test]
    fn dilworth_examples() {
        assert_eq!(verify_dilworth_local(&RankedPoset::chain(6).unwrap()).unwrap().total, ExactRational::one());
        assert_eq!(verify_dilworth_local(&RankedPoset::antichain(6).unwrap()).unwrap().total, ExactRational::one());
        // Bottom and top: chain 3, antichain 1. Middle pair: chain 3, antichain 2.
        let b2 = verify_dilworth_local(&RankedPoset::boolean_lattice(2).unwrap()).unwrap();
        assert_eq!(b2.total, ExactRational::one());
    }

    #[test]
    fn es_examples() {
        let r = verify_es_local(&RealSequence::from_integers(&[2, 1, 4, 3])).unwrap();
        assert_eq!(r.total, ExactRational::one());
        assert!(r.equality);
        assert!(r.per_object.iter().all(|o| o.detail == "i=2 d=2"));
        let inc = RealSequence::from_integers(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(verify_es_local(&inc).unwrap().total, ExactRational::one());
        assert_eq!(verify_es_local(&RealSequence::from_integers(&[7])).unwrap().total, ExactRational::one());
        assert!(verify_es_local(&RealSequence::from_integers(&[])).is_err());
        let tied = verify_es_local(&RealSequence::from_integers(&[1, 1])).unwrap();
        assert_eq!(tied.total, ExactRational::from_integer(2));
    }

    fn brute_through(v: &[i64], x: usize, up: bool) -> usize {
        let n = v.len();
        (0u32..1 << n)
            .filter(|s| s >> x & 1 == 1)
            .filter(|&s| {
                let idx: Vec<usize> = (0..n).filter(|i| s >> i & 1 == 1).collect();
                idx.windows(2).all(|w| if up { v[w[0]] < v[w[1]] } else { v[w[0]] > v[w[1]] })
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn monotone_runs_match_brute_force() {
        let mut s = Sampler::new(99);
        for _ in 0..300 {
            let n = 1 + s.below(10) as usize;
            let v: Vec<i64> = (0..n).map(|_| s.below(6) as i64).collect();
            let vals: Vec<ExactRational> = v.iter().map(|&x| ExactRational::from_integer(x)).collect();
            let (inc, dec) = monotone_through(&vals);
            for x in 0..n {
                assert_eq!(inc[x], brute_through(&v, x, true), "{v:?} at {x}");
                assert_eq!(dec[x], brute_through(&v, x, false), "{v:?} at {x}");
            }
        }
    }
}
