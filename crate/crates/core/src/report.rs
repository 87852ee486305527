//! Verdict records and their machine-readable serialization.
//!
//! Rationals are written as `"num/den"` strings everywhere; nothing is ever
//! rounded to a float on the way out.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{LocexError, Result};
use crate::rational::{exact_sum, ExactRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    Turan,
    ErdosGallai,
    Stars,
    SequenceBound,
    Lym,
    Katona,
    DaykinFrankl,
    Ekr,
    Borg,
    CyclicInterval,
    Perfect,
    Superlemma,
    PosetLym,
    Dilworth,
    ErdosSzekeres,
}

impl Theorem {
    pub const ALL: [Theorem; 15] = [
        Theorem::Turan,
        Theorem::ErdosGallai,
        Theorem::Stars,
        Theorem::SequenceBound,
        Theorem::Lym,
        Theorem::Katona,
        Theorem::DaykinFrankl,
        Theorem::Ekr,
        Theorem::Borg,
        Theorem::CyclicInterval,
        Theorem::Perfect,
        Theorem::Superlemma,
        Theorem::PosetLym,
        Theorem::Dilworth,
        Theorem::ErdosSzekeres,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Turan => "turan",
            Theorem::ErdosGallai => "erdos-gallai",
            Theorem::Stars => "stars",
            Theorem::SequenceBound => "sequence-bound",
            Theorem::Lym => "lym",
            Theorem::Katona => "katona",
            Theorem::DaykinFrankl => "daykin-frankl",
            Theorem::Ekr => "ekr",
            Theorem::Borg => "borg",
            Theorem::CyclicInterval => "cyclic-interval",
            Theorem::Perfect => "perfect",
            Theorem::Superlemma => "superlemma",
            Theorem::PosetLym => "poset-lym",
            Theorem::Dilworth => "dilworth",
            Theorem::ErdosSzekeres => "erdos-szekeres",
        }
    }

    pub fn from_id(id: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.id() == id)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One row of the per-object table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectWeight {
    pub id: String,
    /// The local statistic the weight is built from, e.g. `c(e)` or `m(A)`.
    pub statistic: ExactRational,
    pub weight: ExactRational,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl ObjectWeight {
    pub fn new(id: impl Into<String>, statistic: ExactRational, weight: ExactRational) -> Self {
        ObjectWeight {
            id: id.into(),
            statistic,
            weight,
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub instance_id: String,
    #[serde(rename = "theorem_id")]
    pub theorem: Theorem,
    pub total: ExactRational,
    pub bound: ExactRational,
    pub slack: ExactRational,
    pub equality: bool,
    pub witness: String,
    pub per_object: Vec<ObjectWeight>,
    #[serde(default)]
    pub solver_stats: BTreeMap<String, u64>,
}

impl WeightReport {
    /// Sums the weights and derives slack and the equality flag from them.
    pub fn new(
        theorem: Theorem,
        instance_id: impl Into<String>,
        per_object: Vec<ObjectWeight>,
        bound: ExactRational,
    ) -> Self {
        let total = exact_sum(per_object.iter().map(|o| o.weight.clone()));
        WeightReport::with_total(theorem, instance_id, per_object, total, bound)
    }

    /// For bounds whose total is not a plain sum of the per-object weights.
    pub fn with_total(
        theorem: Theorem,
        instance_id: impl Into<String>,
        per_object: Vec<ObjectWeight>,
        total: ExactRational,
        bound: ExactRational,
    ) -> Self {
        let slack = &bound - &total;
        let equality = slack.is_zero();
        WeightReport {
            instance_id: instance_id.into(),
            theorem,
            total,
            bound,
            slack,
            equality,
            witness: String::new(),
            per_object,
            solver_stats: BTreeMap::new(),
        }
    }

    pub fn witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = witness.into();
        self
    }

    pub fn stat(mut self, key: &str, value: u64) -> Self {
        self.solver_stats.insert(key.to_string(), value);
        self
    }

    /// `total <= bound`.
    pub fn holds(&self) -> bool {
        !self.slack.is_negative()
    }

    /// Checks the internal arithmetic (used on re-parsed reports).
    pub fn check_consistency(&self) -> Result<()> {
        if self.slack != &self.bound - &self.total {
            return Err(LocexError::Report("slack != bound - total".into()));
        }
        if self.equality != self.slack.is_zero() {
            return Err(LocexError::Report("equality flag disagrees with slack".into()));
        }
        Ok(())
    }
}

/// What ends up in a report file: the verdict plus how it was produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    #[serde(flatten)]
    pub report: WeightReport,
    #[serde(default)]
    pub config: BTreeMap<String, String>,
    #[serde(default)]
    pub seed: Option<u64>,
}

impl ReportRecord {
    pub fn new(report: WeightReport) -> Self {
        ReportRecord {
            report,
            config: BTreeMap::new(),
            seed: None,
        }
    }
}

/// Whether a failed bound is an error or just reported.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReportMode {
    #[default]
    Assert,
    ReportOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = LocexError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(LocexError::Parameter(format!("unknown report format {other:?}"))),
        }
    }
}

/// Renders reports. A single report becomes a JSON object, several become an array.
pub fn render_reports(records: &[ReportRecord], format: ReportFormat) -> Result<String> {
    if records.is_empty() {
        return Err(LocexError::Parameter("no reports to emit".into()));
    }
    match format {
        ReportFormat::Json => {
            let text = if records.len() == 1 {
                serde_json::to_string_pretty(&records[0])
            } else {
                serde_json::to_string_pretty(records)
            };
            text.map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| LocexError::Report(e.to_string()))
        }
        ReportFormat::Csv => {
            let mut out =
                String::from("instance_id,theorem_id,total,bound,slack,equality,witness,seed\n");
            for r in records {
                let w = &r.report;
                let row = [
                    csv_field(&w.instance_id),
                    w.theorem.id().to_string(),
                    w.total.to_string(),
                    w.bound.to_string(),
                    w.slack.to_string(),
                    w.equality.to_string(),
                    csv_field(&w.witness),
                    r.seed.map(|s| s.to_string()).unwrap_or_default(),
                ];
                out.push_str(&row.join(","));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

/// Writes `records` to `path` in `format`.
pub fn emit_report(records: &[ReportRecord], format: ReportFormat, path: &Path) -> Result<()> {
    let text = render_reports(records, format)?;
    std::fs::write(path, text)?;
    Ok(())
}

/// Parses a JSON report file (object or array) and re-checks each report's arithmetic.
pub fn parse_reports(text: &str) -> Result<Vec<ReportRecord>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| LocexError::Report(e.to_string()))?;
    let records: Vec<ReportRecord> = if value.is_array() {
        serde_json::from_value(value)
    } else {
        serde_json::from_value(value).map(|r| vec![r])
    }
    .map_err(|e| LocexError::Report(e.to_string()))?;
    for r in &records {
        r.report.check_consistency()?;
    }
    Ok(records)
}

pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> WeightReport {
        let per = (0..12)
            .map(|i| ObjectWeight::new(format!("e{i}"), ExactRational::from_integer(3), ExactRational::new(3, 2)))
            .collect();
        WeightReport::new(Theorem::Turan, "k222", per, ExactRational::from_integer(18))
            .witness("balanced complete multipartite, 3 classes")
    }

    #[test]
    fn derived_fields() {
        let r = sample();
        assert_eq!(r.total, ExactRational::from_integer(18));
        assert!(r.slack.is_zero());
        assert!(r.equality && r.holds());
    }

    #[test]
    fn json_schema_echo() {
        let text = render_reports(&[ReportRecord::new(sample())], ReportFormat::Json).unwrap();
        assert!(text.contains("\"total\": \"18/1\""));
        assert!(text.contains("\"bound\": \"18/1\""));
        assert!(text.contains("\"equality\": true"));
        assert!(text.contains("\"theorem_id\": \"turan\""));
        let back = parse_reports(&text).unwrap();
        assert_eq!(back[0].report, sample());
    }

    #[test]
    fn empty_list_is_usage_error() {
        assert!(matches!(
            render_reports(&[], ReportFormat::Json),
            Err(LocexError::Parameter(_))
        ));
    }

    #[test]
    fn csv_quotes_witness() {
        let text = render_reports(&[ReportRecord::new(sample())], ReportFormat::Csv).unwrap();
        let row = text.lines().nth(1).unwrap();
        assert_eq!(
            row,
            "k222,turan,18/1,18/1,0/1,true,\"balanced complete multipartite, 3 classes\","
        );
    }

    #[test]
    fn tampered_report_rejected() {
        let text = render_reports(&[ReportRecord::new(sample())], ReportFormat::Json).unwrap();
        let bad = text.replace("\"slack\": \"0/1\"", "\"slack\": \"1/1\"");
        assert!(parse_reports(&bad).is_err());
        assert!(parse_reports("[]").unwrap().is_empty());
        assert!(parse_reports("{").is_err());
    }
}
