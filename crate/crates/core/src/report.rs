//! Certification reports and their JSON/text forms.
//!
//! JSON output sorts object keys and, unless timings were requested, writes
//! `ms` as 0, so a fixed bundle always serializes to the same bytes.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    PrimeCertified,
    NotCertified,
    Certified,
    Failed,
    Inconsistent,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::PrimeCertified => "prime-certified",
            Verdict::NotCertified => "not-certified",
            Verdict::Certified => "certified",
            Verdict::Failed => "failed",
            Verdict::Inconsistent => "inconsistent",
        }
    }

    /// False for `failed` and `inconsistent`.
    pub fn is_success(self) -> bool {
        !matches!(self, Verdict::Failed | Verdict::Inconsistent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    pub witness: String,
}

impl Clause {
    pub fn new(name: impl Into<String>, pass: bool, witness: impl Into<String>) -> Self {
        Clause {
            name: name.into(),
            pass,
            witness: witness.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertReport {
    pub stage: String,
    pub verdict: Verdict,
    pub clauses: Vec<Clause>,
    pub field: String,
    pub seed: Option<u64>,
    pub ms: u64,
}

impl CertReport {
    /// Report whose verdict is `success` when every clause passes and
    /// `failed` otherwise.
    pub fn new(
        stage: impl Into<String>,
        field: impl Into<String>,
        clauses: Vec<Clause>,
        success: Verdict,
    ) -> Self {
        let verdict = if clauses.iter().all(|c| c.pass) {
            success
        } else {
            Verdict::Failed
        };
        CertReport {
            stage: stage.into(),
            verdict,
            clauses,
            field: field.into(),
            seed: None,
            ms: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_ms(mut self, ms: u64) -> Self {
        self.ms = ms;
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_success()
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

/// Milliseconds since `start`, saturating.
pub fn elapsed_ms(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::invalid(format!("unknown format `{s}` (json|text)"))),
        }
    }
}

/// Pretty JSON array with sorted keys and a trailing newline.
pub fn to_json(bundle: &[CertReport]) -> String {
    // serde_json's default map is ordered by key.
    let value = serde_json::to_value(bundle).expect("reports serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
    out.push('\n');
    out
}

pub fn from_json(text: &str) -> Result<Vec<CertReport>> {
    serde_json::from_str(text).map_err(|e| Error::invalid(format!("bad report JSON: {e}")))
}

/// One line per clause: `stage [verdict] clause: PASS|FAIL witness`.
pub fn to_text(bundle: &[CertReport]) -> String {
    let mut out = String::new();
    for r in bundle {
        for c in &r.clauses {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let seed = r.seed.map(|s| format!(" seed={s}")).unwrap_or_default();
            writeln!(
                out,
                "{}{} [{}] {}: {} {}",
                r.stage,
                seed,
                r.verdict.as_str(),
                c.name,
                status,
                c.witness.replace('\n', " ")
            )
            .unwrap();
        }
    }
    out
}

pub fn render(bundle: &[CertReport], format: Format) -> String {
    match format {
        Format::Json => to_json(bundle),
        Format::Text => to_text(bundle),
    }
}

pub fn emit_report(bundle: &[CertReport], format: Format, path: &Path) -> Result<()> {
    std::fs::write(path, render(bundle, format))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<CertReport> {
        vec![
            CertReport::new(
                "hn",
                "Q",
                vec![
                    Clause::new("m-vector", true, "m=(3,4,5) gcd=1"),
                    Clause::new("codim", true, "2"),
                ],
                Verdict::PrimeCertified,
            ),
            CertReport::new("trial", "F_32003", vec![Clause::new("mu", false, "4")], Verdict::Certified)
                .with_seed(9),
        ]
    }

    #[test]
    fn verdict_follows_clauses() {
        let b = sample();
        assert_eq!(b[0].verdict, Verdict::PrimeCertified);
        assert_eq!(b[1].verdict, Verdict::Failed);
        assert!(!b[1].passed());
    }

    #[test]
    fn json_round_trip_and_sorted_keys() {
        let b = sample();
        let text = to_json(&b);
        assert_eq!(from_json(&text).unwrap(), b);
        let first = text.find("\"clauses\"").unwrap();
        assert!(first < text.find("\"field\"").unwrap());
        assert!(text.find("\"field\"").unwrap() < text.find("\"ms\"").unwrap());
        assert!(text.contains("\"verdict\": \"prime-certified\""));
        assert!(text.contains("\"seed\": null"));
        assert_eq!(to_json(&b), text);
    }

    #[test]
    fn text_has_one_line_per_clause() {
        let t = to_text(&sample());
        assert_eq!(t.lines().count(), 3);
        assert!(t.lines().nth(2).unwrap().starts_with("trial seed=9 [failed] mu: FAIL"));
    }

    #[test]
    fn emit_writes_file() {
        let dir = std::env::temp_dir().join(format!("detideal-report-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("r.json");
        emit_report(&sample(), Format::Json, &path).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), to_json(&sample()));
        assert!(emit_report(&sample(), Format::Json, &dir.join("missing/r.json")).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
