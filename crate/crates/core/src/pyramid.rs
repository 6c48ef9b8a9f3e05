//! Test-pyramid accounting over a CSV test-run manifest.
//!
//! Manifest format (UTF-8, LF line endings):
//!
//! ```text
//! layer,name,duration_ms,status
//! unit,scalar vector multiplication,10,ok
//! system,"solve 1D heat equation, implicit",120,ok
//! ```
//!
//! `layer` is one of `unit`, `integration`, `system`; `status` is one of
//! `ok`, `expected_fail`, `fail`, `unexpected_pass`, `skipped`, `timeout`.
//! Names containing commas are double-quoted.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::PyramidError;

/// Budget for a single unit test in milliseconds.
pub const DEFAULT_UNIT_BUDGET_MS: f64 = 100.0;

pub const MANIFEST_HEADER: [&str; 4] = ["layer", "name", "duration_ms", "status"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Unit,
    Integration,
    System,
}

impl Layer {
    pub const ALL: [Layer; 3] = [Layer::Unit, Layer::Integration, Layer::System];

    pub fn token(self) -> &'static str {
        match self {
            Layer::Unit => "unit",
            Layer::Integration => "integration",
            Layer::System => "system",
        }
    }
}

impl FromStr for Layer {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Layer::ALL.into_iter().find(|l| l.token() == s).ok_or(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Ok,
    ExpectedFail,
    Fail,
    UnexpectedPass,
    Skipped,
    Timeout,
}

impl Status {
    /// Report order.
    pub const ALL: [Status; 6] = [
        Status::Ok,
        Status::ExpectedFail,
        Status::Fail,
        Status::UnexpectedPass,
        Status::Skipped,
        Status::Timeout,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::ExpectedFail => "expected_fail",
            Status::Fail => "fail",
            Status::UnexpectedPass => "unexpected_pass",
            Status::Skipped => "skipped",
            Status::Timeout => "timeout",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "Ok",
            Status::ExpectedFail => "Expected Fail",
            Status::Fail => "Fail",
            Status::UnexpectedPass => "Unexpected Pass",
            Status::Skipped => "Skipped",
            Status::Timeout => "Timeout",
        }
    }
}

impl FromStr for Status {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Status::ALL.into_iter().find(|st| st.token() == s).ok_or(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TestRecord {
    pub layer: Layer,
    pub name: String,
    pub duration_ms: f64,
    pub status: Status,
}

pub fn parse_manifest(text: &str) -> Result<Vec<TestRecord>, PyramidError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    let mut seen_header = false;
    for row in reader.records() {
        let row = row.map_err(|e| PyramidError::Csv {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = row.position().map_or(0, |p| p.line());
        if !seen_header {
            if row.iter().ne(MANIFEST_HEADER) {
                return Err(PyramidError::BadHeader { line });
            }
            seen_header = true;
            continue;
        }
        if row.len() != 4 {
            return Err(PyramidError::FieldCount {
                line,
                found: row.len(),
            });
        }
        let layer = row[0]
            .trim()
            .parse::<Layer>()
            .map_err(|_| PyramidError::UnknownLayer {
                line,
                value: row[0].to_string(),
            })?;
        let name = row[1].to_string();
        if name.trim().is_empty() {
            return Err(PyramidError::EmptyName { line });
        }
        let duration_ms = row[2]
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|d| d.is_finite() && *d >= 0.0)
            .ok_or_else(|| PyramidError::BadDuration {
                line,
                value: row[2].to_string(),
            })?;
        let status = row[3]
            .trim()
            .parse::<Status>()
            .map_err(|_| PyramidError::UnknownStatus {
                line,
                value: row[3].to_string(),
            })?;
        records.push(TestRecord {
            layer,
            name,
            duration_ms,
            status,
        });
    }
    Ok(records)
}

/// Serializes records in the manifest format accepted by [`parse_manifest`].
pub fn write_manifest(records: &[TestRecord]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer
        .write_record(MANIFEST_HEADER)
        .expect("in-memory write");
    for r in records {
        writer
            .write_record([
                r.layer.token(),
                &r.name,
                &r.duration_ms.to_string(),
                r.status.token(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

#[derive(Debug, Clone, PartialEq)]
pub struct PyramidReport {
    /// Indexed like [`Layer::ALL`].
    pub layer_counts: [usize; 3],
    /// Indexed like [`Status::ALL`].
    pub status_counts: [usize; 6],
    pub pyramid_ok: bool,
    pub unit_budget_ms: f64,
    pub slow_unit_tests: Vec<String>,
}

impl PyramidReport {
    pub fn layer(&self, layer: Layer) -> usize {
        self.layer_counts[layer as usize]
    }

    pub fn status(&self, status: Status) -> usize {
        self.status_counts[status as usize]
    }

    pub fn total(&self) -> usize {
        self.layer_counts.iter().sum()
    }

    /// No `fail` or `timeout` results.
    pub fn all_passed(&self) -> bool {
        self.status(Status::Fail) == 0 && self.status(Status::Timeout) == 0
    }
}

pub fn pyramid_report(
    records: &[TestRecord],
    unit_budget_ms: f64,
) -> Result<PyramidReport, PyramidError> {
    if unit_budget_ms.is_nan() || unit_budget_ms <= 0.0 {
        return Err(PyramidError::BadBudget(unit_budget_ms));
    }
    let mut layer_counts = [0; 3];
    let mut status_counts = [0; 6];
    let mut slow_unit_tests = Vec::new();
    for r in records {
        layer_counts[r.layer as usize] += 1;
        status_counts[r.status as usize] += 1;
        if r.layer == Layer::Unit && r.duration_ms > unit_budget_ms {
            slow_unit_tests.push(r.name.clone());
        }
    }
    let [unit, integration, system] = layer_counts;
    Ok(PyramidReport {
        layer_counts,
        status_counts,
        pyramid_ok: unit >= integration && integration >= system,
        unit_budget_ms,
        slow_unit_tests,
    })
}

pub fn render_report(report: &PyramidReport) -> String {
    report.to_string()
}

impl fmt::Display for PyramidReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for status in Status::ALL {
            writeln!(out, "{}: {}", status.label(), self.status(status))?;
        }
        writeln!(out)?;
        for layer in Layer::ALL {
            writeln!(out, "{}: {}", layer.token(), self.layer(layer))?;
        }
        if !self.slow_unit_tests.is_empty() {
            writeln!(out, "slow unit tests (> {} ms):", self.unit_budget_ms)?;
            for name in &self.slow_unit_tests {
                writeln!(out, "  {name}")?;
            }
        }
        writeln!(
            out,
            "pyramid: {}",
            if self.pyramid_ok { "OK" } else { "VIOLATED" }
        )?;
        f.write_str(&out)
    }
}
