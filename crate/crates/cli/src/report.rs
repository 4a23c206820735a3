use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sn_markov::reptheory::{FirstOrderSummary, SecondOrderSummary};
use sn_markov::scalar::round_half_away;
use sn_markov::{Partition, Rational};

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub dataset: String,
    pub source: String,
    pub total: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub config: Value,
}

impl Provenance {
    pub fn new(command: &str, dataset: &sn_markov::Dataset, seed: Option<u64>, config: Value) -> Self {
        Provenance {
            tool: "snmarkov",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            dataset: dataset.name.clone(),
            source: dataset.source.clone(),
            total: dataset.total(),
            seed,
            config,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LengthRow {
    pub partition: String,
    pub value: f64,
    pub rounded: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

pub fn length_rows(lengths: &[(Partition, Rational)], exact: bool) -> Vec<LengthRow> {
    lengths
        .iter()
        .map(|(p, v)| LengthRow {
            partition: p.to_string(),
            value: *v.numer() as f64 / *v.denom() as f64,
            rounded: round_half_away(v) as i64,
            exact: exact.then(|| v.to_string()),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MeanRow {
    pub partition: String,
    pub mean: f64,
    pub rounded: i64,
}

pub fn mean_rows(means: &[(Partition, f64)]) -> Vec<MeanRow> {
    means
        .iter()
        .map(|(p, v)| MeanRow { partition: p.to_string(), mean: *v, rounded: round_half_away(v) as i64 })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainSummary {
    pub label: String,
    pub samples: usize,
    pub means: Vec<MeanRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SecondOrderReport {
    pub pairs: Vec<String>,
    pub rounded: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportBundle {
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_order: Option<FirstOrderReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projection_lengths: Option<Vec<LengthRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub second_order: Option<SecondOrderReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub chain_summaries: Vec<ChainSummary>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FirstOrderReport {
    pub percent: Vec<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<Vec<Vec<String>>>,
}

pub fn first_order_report(s: &FirstOrderSummary, exact: bool) -> FirstOrderReport {
    FirstOrderReport {
        percent: s.percent.clone(),
        exact: exact.then(|| s.exact.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()),
    }
}

pub fn pair_label((a, b): (usize, usize)) -> String {
    format!("{}-{}", a + 1, b + 1)
}

pub fn second_order_report(s: &SecondOrderSummary, exact: bool) -> SecondOrderReport {
    SecondOrderReport {
        pairs: s.pairs.iter().copied().map(pair_label).collect(),
        rounded: s.rounded.clone(),
        exact: exact.then(|| s.exact.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()),
    }
}

pub fn first_order_csv(r: &FirstOrderReport) -> String {
    let n = r.percent.len();
    let mut out = String::from("row");
    for b in 1..=n {
        let _ = write!(out, ",{b}");
    }
    out.push('\n');
    for (a, row) in r.percent.iter().enumerate() {
        let _ = write!(out, "{}", a + 1);
        for v in row {
            let _ = write!(out, ",{v:.1}");
        }
        out.push('\n');
    }
    out
}

pub fn lengths_csv(rows: &[LengthRow]) -> String {
    let with_exact = rows.iter().any(|r| r.exact.is_some());
    let mut out = String::from(if with_exact { "partition,length,rounded,exact\n" } else { "partition,length,rounded\n" });
    for r in rows {
        let _ = write!(out, "\"{}\",{:.4},{}", r.partition, r.value, r.rounded);
        if let Some(e) = &r.exact {
            let _ = write!(out, ",{e}");
        }
        out.push('\n');
    }
    out
}

pub fn second_order_csv(r: &SecondOrderReport) -> String {
    let mut out = String::from("pair");
    for p in &r.pairs {
        let _ = write!(out, ",{p}");
    }
    out.push('\n');
    for (label, row) in r.pairs.iter().zip(&r.rounded) {
        out.push_str(label);
        for v in row {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
    }
    out
}

pub fn means_csv(rows: &[MeanRow]) -> String {
    let mut out = String::from("partition,mean,rounded\n");
    for r in rows {
        let _ = writeln!(out, "\"{}\",{:.4},{}", r.partition, r.mean, r.rounded);
    }
    out
}
