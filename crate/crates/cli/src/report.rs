//! Machine-readable report rows. Exact values are always strings: big
//! integers in decimal, rationals as `p/q`.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistRow {
    pub family: String,
    pub n: u64,
    pub distribution: Vec<String>,
    pub total: String,
    pub avg_exact: String,
}

impl DistRow {
    pub const CSV_HEADER: &'static str = "family,n,distribution,total,avg_exact";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.family,
            self.n,
            self.distribution.join(";"),
            self.total,
            self.avg_exact
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub family: String,
    pub n: u64,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distribution: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub avg_exact: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub avg_decimal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub estimate: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ReportRow {
    pub const CSV_HEADER: &'static str =
        "family,n,method,total,avg_exact,avg_decimal,estimate,residual,error";

    pub fn to_csv(&self) -> String {
        let opt = |s: &Option<String>| s.clone().unwrap_or_default();
        let num = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.family,
            self.n,
            self.method,
            opt(&self.total),
            opt(&self.avg_exact),
            opt(&self.avg_decimal),
            num(self.estimate),
            num(self.residual),
            opt(&self.error).replace(',', ";"),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymRow {
    pub family: String,
    pub n: u64,
    pub avg_decimal: String,
    pub estimate: f64,
    /// `γ_avg − estimate`.
    pub residual: f64,
    /// `γ_avg − ((n+1)/2 − H_{2n}/2)`, bouquet only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stahl_residual: Option<f64>,
    /// `γ_avg(B_n) − γ_avg(D_n) − (1 − ln 2)/2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub difference_residual: Option<f64>,
    /// `γ_avg / max genus`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_genus_ratio: Option<f64>,
}

impl AsymRow {
    pub const CSV_HEADER: &'static str =
        "family,n,avg_decimal,estimate,residual,stahl_residual,difference_residual,max_genus_ratio";

    pub fn to_csv(&self) -> String {
        let num = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.family,
            self.n,
            self.avg_decimal,
            self.estimate,
            self.residual,
            num(self.stahl_residual),
            num(self.difference_residual),
            num(self.max_genus_ratio),
        )
    }
}

/// Whether `|column|` strictly decreases along the ladder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monotone {
    pub residual: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stahl_residual: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub difference_residual: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymReport {
    pub rows: Vec<AsymRow>,
    pub monotone: Monotone,
}

pub fn strictly_decreasing_abs(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[1].abs() < w[0].abs())
}
