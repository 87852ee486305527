use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde_json::{json, Value};

use locex_core::bits::set_label;
use locex_core::family_local::{
    chain_weights, cyclic_double_count, cyclic_interval_check, interval_count_identity, matching_weights,
    verify_borg_recovery, verify_daykin_frankl, verify_ekr_local, verify_katona_recovery, verify_lym_local,
    CyclicPermutation,
};
use locex_core::generate::{gen_random, gnp, trial_seed, RandomModel, Sampler};
use locex_core::graph::labeled_graph;
use locex_core::graph_local::{
    clique_weights, path_weights, star_weights, verify_erdos_gallai_local, verify_sequence_bound,
    verify_stars_local, verify_turan_local, GraphSequenceSpec,
};
use locex_core::io::{read_sigma, write_graph};
use locex_core::oracle::{
    fill_ex_table, fill_ex_table_from, oracle_chains, oracle_edge_cliques, oracle_edge_paths, oracle_edge_stars,
    oracle_matchings, oracle_monotone, oracle_vertex_cliques, oracle_vertex_independents, search_counterexample,
    stress, OracleResult, StressParams, StressSuite, TuranCache,
};
use locex_core::order_local::{
    comparability_graph, monotone_through, verify_dilworth_local, verify_es_local, verify_perfect_local,
    verify_poset_lym_local, verify_superlemma, vertex_weights, ConstantSize, FOracle, IndependentThroughVertex,
    RankLevelCount,
};
use locex_core::report::{parse_reports, render_reports};
use locex_core::{
    ExactRational, LocexError, ReportFormat, ReportMode, ReportRecord, Result, SetFamily, SmallGraph, WeightReport,
};

use crate::input::{generate, read_file, Source};
use crate::{
    Command, Common, Format, OracleArgs, ReportArgs, SearchArgs, Statistic, StressArgs, SweepArgs, SweepKind, Target,
    VerifyArgs,
};

pub fn run(cmd: &Command) -> Result<()> {
    match cmd {
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => sweep(a),
        Command::Stress(a) => stress_cmd(a),
        Command::Search(a) => search(a),
        Command::Oracle(a) => oracle(a),
        Command::Report(a) => report(a),
    }
}

fn ext(format: Format) -> &'static str {
    match format {
        Format::Json => "json",
        Format::Csv => "csv",
    }
}

fn report_format(format: Format) -> ReportFormat {
    match format {
        Format::Json => ReportFormat::Json,
        Format::Csv => ReportFormat::Csv,
    }
}

/// Writes `<out>/<name>.<ext>`, or to stdout when `--out -`.
fn write_output(common: &Common, name: &str, text: &str) -> Result<()> {
    if common.out.as_os_str() == "-" {
        print!("{text}");
        return Ok(());
    }
    std::fs::create_dir_all(&common.out)
        .map_err(|e| LocexError::Config(format!("cannot create {}: {e}", common.out.display())))?;
    let path = common.out.join(format!("{name}.{}", ext(common.format)));
    std::fs::write(&path, text)
        .map_err(|e| LocexError::Config(format!("cannot write {}: {e}", path.display())))?;
    println!("report: {}", path.display());
    Ok(())
}

/// Progress and summary lines; kept off stdout when the report itself goes there.
fn note(common: &Common, msg: &str) {
    if common.out.as_os_str() == "-" {
        eprintln!("{msg}");
    } else {
        println!("{msg}");
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn summary_line(r: &WeightReport) -> String {
    format!(
        "{} {}: total {} bound {} slack {}{}",
        r.theorem,
        r.instance_id,
        r.total,
        r.bound,
        r.slack,
        if r.equality { " equality" } else { "" }
    )
}

fn mode(common: &Common) -> ReportMode {
    if common.report_only {
        ReportMode::ReportOnly
    } else {
        ReportMode::Assert
    }
}

fn base_config(command: &str, common: &Common) -> BTreeMap<String, String> {
    let mut c = BTreeMap::new();
    c.insert("command".to_string(), command.to_string());
    c.insert("format".to_string(), ext(common.format).to_string());
    c.insert("report_only".to_string(), common.report_only.to_string());
    if let Some(cap) = common.cap_n {
        c.insert("cap_n".to_string(), cap.to_string());
    }
    c
}

/// Sequence names, or `cliques:K` / `paths:K`.
fn parse_seq(text: &str) -> Result<GraphSequenceSpec> {
    let len = |k: &str| -> Result<usize> {
        k.parse()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| LocexError::Config(format!("bad sequence length {k:?}")))
    };
    if let Some(k) = text.strip_prefix("cliques:") {
        return GraphSequenceSpec::cliques(len(k)?);
    }
    if let Some(k) = text.strip_prefix("paths:") {
        return GraphSequenceSpec::paths(len(k)?);
    }
    let names: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if names.is_empty() {
        return Err(LocexError::Config("empty graph sequence".into()));
    }
    GraphSequenceSpec::from_names(&names)
}

fn load_cache(path: Option<&Path>) -> Result<TuranCache> {
    match path {
        Some(p) if p.exists() => TuranCache::load(p),
        _ => Ok(TuranCache::new()),
    }
}

fn verify(a: &VerifyArgs) -> Result<()> {
    let common = &a.common;
    let src = Source {
        graph: a.graph.as_deref(),
        family: a.family.as_deref(),
        poset: a.poset.as_deref(),
        sequence: a.sequence.as_deref(),
        gen: a.gen.as_deref(),
        seed: common.seed,
        cap_n: common.cap_n,
    };
    let target = format!("{:?}", a.target);
    let name = clap::ValueEnum::to_possible_value(&a.target)
        .map(|v| v.get_name().to_string())
        .unwrap_or(target);
    let mut config = base_config("verify", common);
    config.insert("target".to_string(), name.clone());
    config.insert("input".to_string(), src.describe());

    let outcome = verify_target(a, &src, &mut config);
    let (reports, deferred) = match outcome {
        Ok(r) => (r, None),
        Err(LocexError::Violation(v)) => match v.report.clone() {
            Some(r) => {
                config.insert("violation".to_string(), v.reason.clone());
                (vec![r], Some(LocexError::Violation(v)))
            }
            None => return Err(LocexError::Violation(v)),
        },
        Err(e) => return Err(e),
    };
    let records: Vec<ReportRecord> = reports
        .into_iter()
        .map(|r| ReportRecord {
            report: r,
            config: config.clone(),
            seed: Some(common.seed),
        })
        .collect();
    if records.len() == 1 {
        note(common, &summary_line(&records[0].report));
    } else {
        note(common, &format!("{} reports", records.len()));
    }
    let text = render_reports(&records, report_format(common.format))?;
    write_output(common, &format!("verify-{name}"), &text)?;
    match deferred {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn verify_target(a: &VerifyArgs, src: &Source, config: &mut BTreeMap<String, String>) -> Result<Vec<WeightReport>> {
    let m = mode(&a.common);
    let one = |r: Result<WeightReport>| r.map(|r| vec![r]);
    match a.target {
        Target::Turan => one(verify_turan_local(&src.graph()?)),
        Target::ErdosGallai => one(verify_erdos_gallai_local(&src.graph()?)),
        Target::Stars => one(verify_stars_local(&src.graph()?)),
        Target::Sequence => verify_sequence(a, src, config).map(|r| vec![r]),
        Target::Lym => one(verify_lym_local(&src.family()?)),
        Target::Katona => {
            let k = a.k.ok_or_else(|| LocexError::Config("katona needs --k".into()))?;
            config.insert("k".to_string(), k.to_string());
            one(verify_katona_recovery(&src.family()?, k))
        }
        Target::DaykinFrankl => one(verify_daykin_frankl(&src.family()?)),
        Target::Ekr => one(verify_ekr_local(&src.family()?, m)),
        Target::Borg => one(verify_borg_recovery(&src.family()?, m)),
        Target::Cyclic => verify_cyclic(a, &src.family()?, config),
        Target::Perfect => {
            let g = if a.poset.is_some() {
                comparability_graph(&src.poset()?)
            } else {
                src.graph()?
            };
            one(verify_perfect_local(&g, m))
        }
        Target::Superlemma => {
            let (g, poset) = if a.poset.is_some() {
                let p = src.poset()?;
                (comparability_graph(&p), Some(p))
            } else {
                (src.graph()?, None)
            };
            let f: Box<dyn FOracle> = match a.f.as_str() {
                "constant-size" => Box::new(ConstantSize),
                "independent-through-vertex" => Box::new(IndependentThroughVertex),
                "rank-level-count" => match &poset {
                    Some(p) => Box::new(RankLevelCount::from_poset(p)?),
                    None => return Err(LocexError::Config("rank-level-count needs --poset".into())),
                },
                other => return Err(LocexError::Config(format!("unknown f oracle {other:?}"))),
            };
            config.insert("f".to_string(), f.name().to_string());
            let out = verify_superlemma(&g, f.as_ref())?;
            config.insert("worst_subgraph".to_string(), set_label(out.worst.0));
            config.insert("worst_total".to_string(), out.worst.1.to_string());
            Ok(vec![out.report.stat("subgraphs_checked", out.subgraphs_checked)])
        }
        Target::PosetLym => {
            let p = src.poset()?;
            let t = match &a.subset {
                None => locex_core::bits::low_mask(p.m()),
                Some(s) => parse_subset(s, p.m())?,
            };
            config.insert("subset".to_string(), set_label(t));
            one(verify_poset_lym_local(&p, t))
        }
        Target::Dilworth => one(verify_dilworth_local(&src.poset()?)),
        Target::Es => one(verify_es_local(&src.sequence()?)),
    }
}

fn parse_subset(text: &str, m: usize) -> Result<u64> {
    let mut mask = 0u64;
    for tok in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let x: usize = tok
            .parse()
            .map_err(|_| LocexError::Config(format!("bad element {tok:?} in --subset")))?;
        if x >= m {
            return Err(LocexError::Config(format!("element {x} not in the poset (size {m})")));
        }
        mask |= 1 << x;
    }
    Ok(mask)
}

/// The sequence bound is not a theorem: exceeding it is a finding, not a failure.
fn verify_sequence(a: &VerifyArgs, src: &Source, config: &mut BTreeMap<String, String>) -> Result<WeightReport> {
    let seq = a.seq.as_deref().ok_or_else(|| LocexError::Config("sequence needs --seq".into()))?;
    let mut spec = parse_seq(seq)?;
    let g = src.graph()?;
    let ex = a.ex.as_deref().unwrap_or("auto");
    config.insert("seq".to_string(), seq.to_string());
    config.insert("ex".to_string(), ex.to_string());
    if ex == "auto" {
        let mut cache = load_cache(a.ex_cache.as_deref())?;
        fill_ex_table(&mut spec, g.n(), &mut cache)?;
        if let Some(p) = &a.ex_cache {
            cache.save(p)?;
        }
    } else {
        let path = Path::new(ex);
        if !path.exists() {
            return Err(LocexError::Config(format!("{ex} does not exist")));
        }
        fill_ex_table_from(&mut spec, g.n(), &TuranCache::load(path)?)?;
    }
    for i in 1..=spec.len() {
        config.insert(format!("ex_{i}"), spec.ex(g.n(), i)?.to_string());
    }
    let out = verify_sequence_bound(&g, &spec)?;
    for tp in &out.two_part {
        let v = tp.value.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "undefined".into());
        config.insert(format!("two_part_{}", tp.index), v);
    }
    if !out.holds() {
        config.insert("finding".to_string(), format!("sequence bound exceeded: total {} > 1", out.report.total));
        eprintln!("finding: sequence bound exceeded, total {} > 1", out.report.total);
    }
    Ok(out.report)
}

fn verify_cyclic(a: &VerifyArgs, f: &SetFamily, config: &mut BTreeMap<String, String>) -> Result<Vec<WeightReport>> {
    let stats = matching_weights(f)?;
    if let Some(path) = &a.sigma {
        let sigma = CyclicPermutation::new(read_sigma_checked(path)?)?;
        return Ok(vec![cyclic_interval_check(f, &sigma, &stats)?]);
    }
    if !interval_count_identity(f)? {
        return Err(LocexError::OracleMismatch("interval-count identity fails".into()));
    }
    let reports = CyclicPermutation::all(f.n())?
        .map(|sigma| cyclic_interval_check(f, &sigma, &stats))
        .collect::<Result<Vec<_>>>()?;
    let dc = cyclic_double_count(f, &stats)?;
    let (n, r) = (f.n(), stats.r);
    if (0 < r && r < n && dc.sigma_total != dc.expected) || dc.sigma_total > dc.bound {
        return Err(LocexError::OracleMismatch(format!(
            "double count: sum over orders {} vs expected {} (bound {})",
            dc.sigma_total, dc.expected, dc.bound
        )));
    }
    config.insert("orders_checked".to_string(), reports.len().to_string());
    config.insert("double_count".to_string(), dc.sigma_total.to_string());
    Ok(reports)
}

fn read_sigma_checked(path: &Path) -> Result<Vec<usize>> {
    if !path.exists() {
        return Err(LocexError::Config(format!("{} does not exist", path.display())));
    }
    read_sigma(path)
}

#[derive(Default)]
struct Tally {
    checked: u64,
    equality: u64,
    min_slack: Option<ExactRational>,
}

impl Tally {
    fn add(&mut self, r: &WeightReport) {
        self.checked += 1;
        self.equality += r.equality as u64;
        if self.min_slack.as_ref().map_or(true, |m| r.slack < *m) {
            self.min_slack = Some(r.slack.clone());
        }
    }

    fn to_json(&self, theorem: &str) -> Value {
        json!({
            "theorem_id": theorem,
            "checked": self.checked,
            "equality": self.equality,
            "min_slack": self.min_slack.as_ref().map(|s| s.to_string()),
        })
    }
}

const SWEEP_GRAPH_CAP: usize = 7;
const SWEEP_FAMILY_CAP: usize = 4;

fn sweep(a: &SweepArgs) -> Result<()> {
    let common = &a.common;
    let n = a.n;
    let limit = common.cap_n.unwrap_or(usize::MAX);
    let (kind, cap, count) = match a.kind {
        SweepKind::Graphs => ("graphs", SWEEP_GRAPH_CAP, 1u64 << (n * n.saturating_sub(1) / 2)),
        SweepKind::Families => ("families", SWEEP_FAMILY_CAP, if n <= 5 { 1u64 << (1u32 << n) } else { u64::MAX }),
    };
    if n == 0 {
        return Err(LocexError::Parameter("n must be positive".into()));
    }
    if n > cap.min(limit) {
        return Err(LocexError::capacity(format!("n for exhaustive {kind} sweep"), cap.min(limit), n));
    }
    let results: Vec<Result<Vec<WeightReport>>> = (0..count)
        .into_par_iter()
        .map(|code| match a.kind {
            SweepKind::Graphs => {
                let g = labeled_graph(n, code);
                Ok(vec![
                    verify_turan_local(&g)?,
                    verify_erdos_gallai_local(&g)?,
                    verify_stars_local(&g)?,
                ])
            }
            SweepKind::Families => {
                let sets = (0u32..1 << n).filter(|&s| code >> s & 1 == 1).collect();
                Ok(vec![verify_lym_local(&SetFamily::new(n, sets)?)?])
            }
        })
        .collect();
    let mut tallies: BTreeMap<String, Tally> = BTreeMap::new();
    let mut records = Vec::new();
    for r in results {
        for rep in r? {
            tallies.entry(rep.theorem.id().to_string()).or_default().add(&rep);
            if common.format == Format::Csv {
                records.push(ReportRecord::new(rep));
            }
        }
    }
    let text = match common.format {
        Format::Csv => render_reports(&records, ReportFormat::Csv)?,
        Format::Json => json_text(&json!({
            "command": "sweep",
            "kind": kind,
            "n": n,
            "instances": count,
            "violations": 0,
            "theorems": tallies.iter().map(|(t, x)| x.to_json(t)).collect::<Vec<_>>(),
        })),
    };
    for (t, x) in &tallies {
        note(common, &format!("{t}: {} checked, {} equality, 0 violations", x.checked, x.equality));
    }
    write_output(common, &format!("sweep-{kind}-{n}"), &text)
}

fn stress_cmd(a: &StressArgs) -> Result<()> {
    let common = &a.common;
    let suite: StressSuite = a.suite.parse().map_err(|e: LocexError| LocexError::Config(e.to_string()))?;
    if let Some(cap) = common.cap_n {
        if a.n > cap {
            return Err(LocexError::capacity("n for stress instances", cap, a.n));
        }
    }
    let params = StressParams {
        n: a.n,
        p: a.p,
        r: a.r,
        exhaustive: a.exhaustive,
    };
    let s = stress(suite, a.trials, &params, common.seed)?;
    let min = s.min_slack.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "-".into());
    note(common, &format!("{suite}: {} trials, {} equality, min slack {min}", s.trials, s.equality_hits));
    let text = match common.format {
        Format::Csv => s.to_csv(),
        Format::Json => json_text(&json!({
            "command": "stress",
            "suite": suite.name(),
            "seed": common.seed,
            "n": a.n,
            "p": a.p,
            "r": a.r,
            "trials": s.trials,
            "equality_hits": s.equality_hits,
            "min_slack": s.min_slack.as_ref().map(|x| x.to_string()),
            "max_slack": s.max_slack.as_ref().map(|x| x.to_string()),
            "rows": s.rows.iter().map(|r| json!({
                "trial": r.trial,
                "seed": r.seed,
                "n": r.n,
                "total": r.total.to_string(),
                "slack": r.slack.to_string(),
                "equality": r.equality,
            })).collect::<Vec<_>>(),
        })),
    };
    write_output(common, &format!("stress-{suite}"), &text)
}

fn edge_list(g: &SmallGraph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

fn search(a: &SearchArgs) -> Result<()> {
    let common = &a.common;
    if a.n_min == 0 || a.n_min > a.n_max {
        return Err(LocexError::Config(format!("bad size range {}..={}", a.n_min, a.n_max)));
    }
    if let Some(cap) = common.cap_n {
        if a.n_max > cap {
            return Err(LocexError::capacity("n for search", cap, a.n_max));
        }
    }
    let mut spec = parse_seq(&a.seq)?;
    let mut cache = load_cache(a.ex_cache.as_deref())?;
    for n in a.n_min..=a.n_max {
        fill_ex_table(&mut spec, n, &mut cache)?;
    }
    if let Some(p) = &a.ex_cache {
        cache.save(p)?;
    }
    let out = search_counterexample(&spec, a.n_min..=a.n_max, a.budget, common.seed)?;
    note(
        common,
        &format!(
            "{}: {} examined, {} skipped, {} exceed the bound",
            out.sequence, out.examined, out.skipped, out.violation_count
        ),
    );
    let text = match common.format {
        Format::Csv => {
            let mut s = String::from("n,edges,total\n");
            for v in &out.violations {
                s.push_str(&format!("{},{},{}\n", v.graph.n(), edge_list(&v.graph), v.total));
            }
            s
        }
        Format::Json => json_text(&json!({
            "command": "search",
            "sequence": out.sequence,
            "seed": common.seed,
            "n_min": a.n_min,
            "n_max": a.n_max,
            "budget": a.budget,
            "examined": out.examined,
            "skipped": out.skipped,
            "violation_count": out.violation_count,
            "best_slack": out.best_slack.as_ref().map(|(s, _)| s.to_string()),
            "best_graph": out.best_slack.as_ref().map(|(_, g)| write_graph(g)),
            "violations": out.violations.iter().map(|v| json!({
                "n": v.graph.n(),
                "edges": edge_list(&v.graph),
                "total": v.total.to_string(),
                "f": v.f_values.iter().map(|((u, w), f)| format!("{u}-{w}:{f}")).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
    };
    write_output(common, "search", &text)
}

/// Label/value pairs from the optimized solver for one instance.
type Values = Vec<(String, usize)>;

fn compare(expected: &OracleResult, got: &Values, instance: &str, mismatches: &mut Vec<String>) -> u64 {
    if expected.values.len() != got.len() {
        mismatches.push(format!("{instance}: {} objects vs {}", got.len(), expected.values.len()));
        return 0;
    }
    for ((l1, v1), (l2, v2)) in got.iter().zip(&expected.values) {
        if l1 != l2 || v1 != v2 {
            mismatches.push(format!("{instance}: {l1}={v1} but oracle {l2}={v2}"));
        }
    }
    got.len() as u64
}

fn edge_values(values: &[((usize, usize), usize)]) -> Values {
    values.iter().map(|&((u, v), c)| (format!("{u}-{v}"), c)).collect()
}

fn numbered(values: &[usize]) -> Values {
    values.iter().enumerate().map(|(i, &c)| (i.to_string(), c)).collect()
}

fn labeled(f: &SetFamily, values: &[usize]) -> Values {
    values.iter().enumerate().map(|(i, &c)| (f.label(i), c)).collect()
}

fn check_graph(stat: Statistic, g: &SmallGraph, id: &str, mm: &mut Vec<String>) -> Result<u64> {
    Ok(match stat {
        Statistic::CliqueEdge => compare(&oracle_edge_cliques(g)?, &edge_values(&clique_weights(g).values), id, mm),
        Statistic::PathEdge => compare(&oracle_edge_paths(g)?, &edge_values(&path_weights(g)?.values), id, mm),
        Statistic::StarEdge => compare(&oracle_edge_stars(g)?, &edge_values(&star_weights(g).values), id, mm),
        Statistic::CliqueVertex => compare(&oracle_vertex_cliques(g)?, &numbered(&vertex_weights(g)?.clique), id, mm),
        Statistic::IndependentVertex => {
            compare(&oracle_vertex_independents(g)?, &numbered(&vertex_weights(g)?.indep), id, mm)
        }
        _ => unreachable!("graph statistic"),
    })
}

fn check_family(stat: Statistic, f: &SetFamily, id: &str, mm: &mut Vec<String>) -> Result<u64> {
    Ok(match stat {
        Statistic::Matching => compare(&oracle_matchings(f)?, &labeled(f, &matching_weights(f)?.raw), id, mm),
        Statistic::Chain => compare(&oracle_chains(f)?, &labeled(f, &chain_weights(f).values), id, mm),
        _ => unreachable!("family statistic"),
    })
}

fn check_sequence(values: &[ExactRational], id: &str, mm: &mut Vec<String>) -> Result<u64> {
    let (inc, dec) = monotone_through(values);
    let (oi, od) = oracle_monotone(values)?;
    Ok(compare(&oi, &numbered(&inc), id, mm) + compare(&od, &numbered(&dec), id, mm))
}

fn oracle(a: &OracleArgs) -> Result<()> {
    let common = &a.common;
    let src = Source {
        graph: a.graph.as_deref(),
        family: a.family.as_deref(),
        poset: None,
        sequence: a.sequence.as_deref(),
        gen: None,
        seed: common.seed,
        cap_n: common.cap_n,
    };
    let from_file = a.graph.is_some() || a.family.is_some() || a.sequence.is_some();
    if !from_file {
        if let Some(cap) = common.cap_n {
            if a.n > cap {
                return Err(LocexError::capacity("n for oracle instances", cap, a.n));
            }
        }
    }
    let mut mismatches = Vec::new();
    let mut compared = 0u64;
    let instances = if from_file { 1 } else { a.trials };
    let stat = a.statistic;
    for t in 0..instances {
        let id = if from_file { src.describe() } else { format!("trial {t}") };
        let seed = trial_seed(common.seed, t);
        compared += match stat {
            Statistic::CliqueEdge
            | Statistic::PathEdge
            | Statistic::StarEdge
            | Statistic::CliqueVertex
            | Statistic::IndependentVertex => {
                let g = if from_file {
                    src.graph()?
                } else {
                    gnp(a.n, 0.5, &mut Sampler::new(seed))?
                };
                check_graph(stat, &g, &id, &mut mismatches)?
            }
            Statistic::Matching | Statistic::Chain => {
                let f = if from_file {
                    src.family()?
                } else if stat == Statistic::Matching {
                    let model = RandomModel::UniformRFamily {
                        n: a.n,
                        r: 2,
                        density: 0.4,
                    };
                    gen_random(&model, seed)?.into_family()?
                } else {
                    gen_random(&RandomModel::UniformFamily { n: a.n, density: 0.3 }, seed)?.into_family()?
                };
                check_family(stat, &f, &id, &mut mismatches)?
            }
            Statistic::Monotone => {
                let s = if from_file {
                    src.sequence()?
                } else {
                    generate(&format!("permutation:{}", a.n), seed)?.into_sequence()?
                };
                check_sequence(s.values(), &id, &mut mismatches)?
            }
        };
    }
    let stat_name = clap::ValueEnum::to_possible_value(&stat)
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    note(common, &format!("{stat_name}: {instances} instances, {compared} objects, {} mismatches", mismatches.len()));
    let text = match common.format {
        Format::Csv => {
            let mut s = String::from("statistic,instances,objects,mismatches\n");
            s.push_str(&format!("{stat_name},{instances},{compared},{}\n", mismatches.len()));
            s
        }
        Format::Json => json_text(&json!({
            "command": "oracle",
            "statistic": stat_name,
            "method": "exhaustive",
            "seed": common.seed,
            "input": if from_file { src.describe() } else { format!("random n={}", a.n) },
            "instances": instances,
            "objects": compared,
            "mismatches": mismatches,
        })),
    };
    write_output(common, &format!("oracle-{stat_name}"), &text)?;
    if let Some(first) = mismatches.first() {
        return Err(LocexError::OracleMismatch(first.clone()));
    }
    Ok(())
}

fn report(a: &ReportArgs) -> Result<()> {
    let mut records = Vec::new();
    for path in &a.files {
        records.extend(parse_reports(&read_file(path)?)?);
    }
    for r in &records {
        note(&a.common, &summary_line(&r.report));
    }
    let text = render_reports(&records, report_format(a.common.format))?;
    write_output(&a.common, "report", &text)
}
