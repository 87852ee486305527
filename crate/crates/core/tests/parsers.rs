//! Parsers never panic, and writers round-trip through them.

use proptest::prelude::*;

use locex_core::io::{
    parse_ex_cache, parse_family, parse_graph, parse_poset, parse_sequence, parse_sigma, write_ex_cache,
    write_family, write_graph, write_poset, write_sequence, ExCacheEntry,
};
use locex_core::report::{parse_reports, render_reports};
use locex_core::{
    ExactRational, ObjectWeight, RankedPoset, RealSequence, ReportFormat, ReportRecord, SetFamily, SmallGraph,
    Theorem, WeightReport,
};

/// Text biased toward the characters the formats actually use.
fn formatish() -> impl Strategy<Value = String> {
    prop_oneof![
        "[0-9 \\n#.eE+/-]{0,80}",
        "[0-9]{1,2} [0-9]{1,2}\\n([0-9]{1,2} [0-9]{1,2}\\n){0,8}",
        "(rank )?[0-9] [0-9]\\n{0,1}",
        any::<String>(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn no_parser_panics(text in formatish()) {
        let _ = parse_graph(&text);
        let _ = parse_family(&text);
        let _ = parse_sequence(&text);
        let _ = parse_poset(&text);
        let _ = parse_sigma(&text);
        let _ = parse_ex_cache(&text);
        let _ = parse_reports(&text);
        let _ = ExactRational::from_decimal(text.trim());
        let _ = text.trim().parse::<ExactRational>();
    }

    #[test]
    fn graphs_roundtrip(n in 1usize..=20, bits in proptest::collection::vec(any::<bool>(), 190)) {
        let mut g = SmallGraph::empty(n).unwrap();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits[k] {
                    g.add_edge(u, v).unwrap();
                }
                k += 1;
            }
        }
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn families_roundtrip(n in 1usize..=8, picks in proptest::collection::btree_set(0u32..256, 0..40)) {
        let sets: Vec<u32> = picks.into_iter().filter(|&s| s < 1 << n).collect();
        let f = SetFamily::new(n, sets).unwrap();
        prop_assert_eq!(parse_family(&write_family(&f)).unwrap(), f);
    }

    #[test]
    fn sequences_roundtrip(values in proptest::collection::vec((-10_000i64..10_000, 0u32..4), 1..30)) {
        let exact: Vec<ExactRational> = values
            .iter()
            .map(|&(v, d)| ExactRational::new(v, 10i64.pow(d)))
            .collect();
        let s = RealSequence::new(exact);
        prop_assert_eq!(parse_sequence(&write_sequence(&s)).unwrap(), s);
    }

    #[test]
    fn posets_roundtrip(m in 1usize..=10, p in 0.0f64..1.0, seed in any::<u64>()) {
        let mut s = locex_core::generate::Sampler::new(seed);
        let poset: RankedPoset = locex_core::generate::random_poset(m, p, &mut s).unwrap();
        prop_assert_eq!(parse_poset(&write_poset(&poset)).unwrap(), poset);
    }

    #[test]
    fn ex_cache_roundtrip(entries in proptest::collection::vec((1usize..9, "[0-9]:[01]{0,28}", any::<u64>()), 0..10)) {
        let entries: Vec<ExCacheEntry> = entries
            .into_iter()
            .map(|(n, signature, ex)| ExCacheEntry { n, signature, ex })
            .collect();
        prop_assert_eq!(parse_ex_cache(&write_ex_cache(&entries)).unwrap(), entries);
    }

    #[test]
    fn reports_roundtrip(weights in proptest::collection::vec((1i64..1_000_000, 1i64..1_000_000), 1..12), seed in any::<u64>()) {
        let per = weights
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| ObjectWeight::new(format!("o{i}"), ExactRational::from_integer(a), ExactRational::new(b, a)))
            .collect();
        let report = WeightReport::new(Theorem::Lym, "x", per, ExactRational::one()).witness("w, \"quoted\"");
        let mut record = ReportRecord::new(report);
        record.seed = Some(seed);
        let text = render_reports(&[record.clone()], ReportFormat::Json).unwrap();
        prop_assert_eq!(parse_reports(&text).unwrap(), vec![record]);
    }
}

#[test]
fn empty_report_list_is_an_error() {
    assert!(render_reports(&[], ReportFormat::Json).is_err());
}

#[test]
fn tampered_report_is_rejected() {
    let per = vec![ObjectWeight::new("a", ExactRational::one(), ExactRational::new(1, 2))];
    let r = WeightReport::new(Theorem::Stars, "x", per, ExactRational::one());
    let text = render_reports(&[ReportRecord::new(r)], ReportFormat::Json).unwrap();
    let bad = text.replace("\"slack\": \"1/2\"", "\"slack\": \"1/3\"");
    assert_ne!(bad, text);
    assert!(parse_reports(&bad).is_err());
}
