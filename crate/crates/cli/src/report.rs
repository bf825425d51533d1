use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use zf_core::predict::Prediction;
use zf_core::structure::KrsBound;

/// One output record per input graph. Every field is always present in JSON
/// output, `null` when the command did not compute it.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Report {
    pub graph6: String,
    pub n: usize,
    /// `ok`, `budget_exhausted` (exact value replaced by `z_interval`) or
    /// `too_large` (exact solving skipped by `--max-n`).
    pub status: Status,
    pub z_exact: Option<usize>,
    pub z_complement_exact: Option<usize>,
    /// Interval for the exact quantity the command asked for, set only when
    /// the search budget ran out.
    pub z_interval: Option<Interval>,
    pub prediction: Option<PredictionOut>,
    pub bounds: Option<BoundsOut>,
    pub agree: Option<bool>,
    /// Why a requested value is missing, e.g. prediction on a disconnected graph.
    pub note: Option<String>,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    BudgetExhausted,
    TooLarge,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::BudgetExhausted => "budget_exhausted",
            Status::TooLarge => "too_large",
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PredictionOut {
    pub lo: usize,
    pub hi: usize,
    pub rule: &'static str,
    pub notes: String,
}

impl From<Prediction> for PredictionOut {
    fn from(p: Prediction) -> Self {
        PredictionOut {
            lo: p.lo,
            hi: p.hi,
            rule: p.rule.as_str(),
            notes: p.notes,
        }
    }
}

/// Lower bounds on `Z` of the complement, plus the forbidden-subgraph test
/// on the complement (`true` means `Z >= n - 2`).
#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct BoundsOut {
    pub krs_bound: usize,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub min_degree_bound: usize,
    pub forbidden_test: bool,
}

impl BoundsOut {
    pub fn new(krs: KrsBound, min_degree_bound: usize, forbidden_test: bool) -> Self {
        BoundsOut {
            krs_bound: krs.bound,
            r: krs.pair.map(|p| p.0),
            s: krs.pair.map(|p| p.1),
            min_degree_bound,
            forbidden_test,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    Json,
    /// Flat CSV with a header row.
    Csv,
}

/// CSV column order.
pub const CSV_COLUMNS: [&str; 18] = [
    "graph6",
    "n",
    "status",
    "z_exact",
    "z_complement_exact",
    "z_lo",
    "z_hi",
    "pred_lo",
    "pred_hi",
    "rule",
    "krs_bound",
    "r",
    "s",
    "min_degree_bound",
    "forbidden_test",
    "agree",
    "elapsed_ms",
    "note",
];

pub struct ReportWriter<W: Write> {
    format: Format,
    json: Option<W>,
    csv: Option<csv::Writer<W>>,
}

impl<W: Write> ReportWriter<W> {
    pub fn new(format: Format, out: W) -> Result<Self> {
        Ok(match format {
            Format::Json => ReportWriter {
                format,
                json: Some(out),
                csv: None,
            },
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(CSV_COLUMNS)?;
                ReportWriter {
                    format,
                    json: None,
                    csv: Some(w),
                }
            }
        })
    }

    pub fn write(&mut self, r: &Report) -> Result<()> {
        match self.format {
            Format::Json => {
                let out = self.json.as_mut().expect("json sink");
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
            Format::Csv => {
                let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
                let p = r.prediction.as_ref();
                let b = r.bounds.as_ref();
                let row = [
                    r.graph6.clone(),
                    r.n.to_string(),
                    r.status.as_str().to_string(),
                    opt(r.z_exact),
                    opt(r.z_complement_exact),
                    opt(r.z_interval.map(|i| i.lo)),
                    opt(r.z_interval.map(|i| i.hi)),
                    opt(p.map(|p| p.lo)),
                    opt(p.map(|p| p.hi)),
                    p.map(|p| p.rule.to_string()).unwrap_or_default(),
                    opt(b.map(|b| b.krs_bound)),
                    opt(b.and_then(|b| b.r)),
                    opt(b.and_then(|b| b.s)),
                    opt(b.map(|b| b.min_degree_bound)),
                    b.map(|b| b.forbidden_test.to_string()).unwrap_or_default(),
                    r.agree.map(|a| a.to_string()).unwrap_or_default(),
                    r.elapsed_ms.map(|t| format!("{t:.3}")).unwrap_or_default(),
                    r.note.clone().unwrap_or_default(),
                ];
                self.csv.as_mut().expect("csv sink").write_record(&row)?;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> Result<()> {
        if let Some(mut w) = self.csv {
            w.flush()?;
        }
        if let Some(mut w) = self.json {
            w.flush()?;
        }
        Ok(())
    }
}
