//! Randomized (or exhaustive) runs of a verifier. Trials run in parallel and
//! are merged by trial index, so results depend only on the seed.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{LocexError, Result};
use crate::family::SetFamily;
use crate::family_local::{verify_ekr_local, verify_lym_local};
use crate::generate::{gen_random, gnp, random_poset, trial_seed, RandomModel, Sampler};
use crate::graph_local::{verify_erdos_gallai_local, verify_stars_local, verify_turan_local};
use crate::order_local::{comparability_graph, verify_dilworth_local, verify_es_local, verify_perfect_local};
use crate::rational::ExactRational;
use crate::report::{ReportMode, WeightReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StressSuite {
    Turan,
    ErdosGallai,
    Stars,
    Lym,
    Ekr,
    Perfect,
    Dilworth,
    Es,
}

impl StressSuite {
    pub const ALL: [StressSuite; 8] = [
        StressSuite::Turan,
        StressSuite::ErdosGallai,
        StressSuite::Stars,
        StressSuite::Lym,
        StressSuite::Ekr,
        StressSuite::Perfect,
        StressSuite::Dilworth,
        StressSuite::Es,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StressSuite::Turan => "turan",
            StressSuite::ErdosGallai => "erdos-gallai",
            StressSuite::Stars => "stars",
            StressSuite::Lym => "lym",
            StressSuite::Ekr => "ekr",
            StressSuite::Perfect => "perfect",
            StressSuite::Dilworth => "dilworth",
            StressSuite::Es => "es",
        }
    }
}

impl fmt::Display for StressSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StressSuite {
    type Err = LocexError;

    fn from_str(s: &str) -> Result<Self> {
        StressSuite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| LocexError::Parameter(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StressParams {
    /// Vertices, ground set size, poset size or sequence length.
    pub n: usize,
    /// Edge / relation / set density.
    pub p: f64,
    /// Uniformity for the EKR suite.
    pub r: usize,
    /// Enumerate every family on `[n]` instead of sampling (LYM only, `n <= 4`).
    pub exhaustive: bool,
}

impl Default for StressParams {
    fn default() -> Self {
        StressParams {
            n: 10,
            p: 0.5,
            r: 2,
            exhaustive: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StressRow {
    pub trial: u64,
    pub seed: u64,
    pub n: usize,
    pub total: ExactRational,
    pub slack: ExactRational,
    pub equality: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StressSummary {
    pub suite: StressSuite,
    pub trials: u64,
    pub equality_hits: u64,
    pub min_slack: Option<ExactRational>,
    pub max_slack: Option<ExactRational>,
    pub rows: Vec<StressRow>,
}

impl StressSummary {
    /// `trial,seed,n,total,slack,equality` rows for plotting slack distributions.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,seed,n,total,slack,equality\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.trial, r.seed, r.n, r.total, r.slack, r.equality
            ));
        }
        out
    }
}

/// Runs `trials` instances (all `2^(2^n)` families in exhaustive LYM mode). The
/// first failing trial, by index, aborts the run with its error.
pub fn stress(suite: StressSuite, trials: u64, params: &StressParams, seed: u64) -> Result<StressSummary> {
    let trials = if params.exhaustive {
        if suite != StressSuite::Lym {
            return Err(LocexError::Parameter("exhaustive mode is only available for lym".into()));
        }
        if params.n > 4 {
            return Err(LocexError::capacity("ground set for exhaustive family sweep", 4, params.n));
        }
        1u64 << (1u32 << params.n)
    } else {
        trials
    };
    let results: Vec<Result<StressRow>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let s = trial_seed(seed, trial);
            let report = run_one(suite, params, trial, s)?;
            Ok(StressRow {
                trial,
                seed: s,
                n: params.n,
                total: report.total,
                slack: report.slack,
                equality: report.equality,
            })
        })
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    for r in results {
        rows.push(r?);
    }
    let equality_hits = rows.iter().filter(|r| r.equality).count() as u64;
    let min_slack = rows.iter().map(|r| r.slack.clone()).min();
    let max_slack = rows.iter().map(|r| r.slack.clone()).max();
    Ok(StressSummary {
        suite,
        trials,
        equality_hits,
        min_slack,
        max_slack,
        rows,
    })
}

fn run_one(suite: StressSuite, params: &StressParams, trial: u64, seed: u64) -> Result<WeightReport> {
    let n = params.n;
    let p = params.p;
    match suite {
        StressSuite::Turan => verify_turan_local(&gnp(n, p, &mut Sampler::new(seed))?),
        StressSuite::ErdosGallai => verify_erdos_gallai_local(&gnp(n, p, &mut Sampler::new(seed))?),
        StressSuite::Stars => verify_stars_local(&gnp(n, p, &mut Sampler::new(seed))?),
        StressSuite::Lym => {
            let family = if params.exhaustive {
                let sets = (0u32..1 << n).filter(|&s| trial >> s & 1 == 1).collect();
                SetFamily::new(n, sets)?
            } else {
                gen_random(&RandomModel::UniformFamily { n, density: p }, seed)?.into_family()?
            };
            verify_lym_local(&family)
        }
        StressSuite::Ekr => {
            let model = RandomModel::UniformRFamily {
                n,
                r: params.r,
                density: p,
            };
            verify_ekr_local(&gen_random(&model, seed)?.into_family()?, ReportMode::Assert)
        }
        StressSuite::Perfect => {
            let poset = random_poset(n, p, &mut Sampler::new(seed))?;
            verify_perfect_local(&comparability_graph(&poset), ReportMode::Assert)
        }
        StressSuite::Dilworth => verify_dilworth_local(&random_poset(n, p, &mut Sampler::new(seed))?),
        StressSuite::Es => {
            let model = RandomModel::RandomPermutationSequence { len: n };
            verify_es_local(&gen_random(&model, seed)?.into_sequence()?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let params = StressParams {
            n: 7,
            ..StressParams::default()
        };
        let a = stress(StressSuite::Turan, 40, &params, 7).unwrap();
        let b = stress(StressSuite::Turan, 40, &params, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rows.len(), 40);
        assert!(a.rows.windows(2).all(|w| w[0].trial < w[1].trial));
    }

    #[test]
    fn every_suite_runs() {
        for suite in StressSuite::ALL {
            let params = StressParams {
                n: 6,
                p: 0.4,
                r: 2,
                exhaustive: false,
            };
            let s = stress(suite, 10, &params, 1).unwrap();
            assert_eq!(s.trials, 10, "{suite}");
            assert!(!s.min_slack.unwrap().is_negative());
        }
    }

    #[test]
    fn exhaustive_lym_small() {
        let params = StressParams {
            n: 2,
            exhaustive: true,
            ..StressParams::default()
        };
        let s = stress(StressSuite::Lym, 0, &params, 0).unwrap();
        assert_eq!(s.trials, 16);
        // Nonempty unions of the three levels of [2].
        assert_eq!(s.equality_hits, 7);
        assert!(stress(StressSuite::Turan, 1, &params, 0).is_err());
    }

    #[test]
    fn suite_names_roundtrip() {
        for suite in StressSuite::ALL {
            assert_eq!(suite.name().parse::<StressSuite>().unwrap(), suite);
        }
        assert!("nope".parse::<StressSuite>().is_err());
    }
}
