//! Verification reports: a flat list of named numeric checks with a shared
//! pass rule, and byte-stable emitters so identical reports always serialize
//! to identical output.
//!
//! A check passes iff |measured - expected| <= tolerance. Inequality-style
//! checks store the clamped excess max(0, violation) as `measured` against
//! an expected value of 0.

use crate::error::{Error, Result};

/// One named numeric comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub paper_anchor: String,
    pub measured: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Build a check; pass is derived from the stored numbers.
    pub fn measure(
        name: impl Into<String>,
        paper_anchor: impl Into<String>,
        measured: f64,
        expected: f64,
        tolerance: f64,
    ) -> Check {
        Check {
            name: name.into(),
            paper_anchor: paper_anchor.into(),
            measured,
            expected,
            tolerance,
            pass: (measured - expected).abs() <= tolerance,
        }
    }

    /// |measured - expected| at emitted precision. Working from the printed
    /// values keeps the derived summary byte-stable across a serialization
    /// round trip, where full-precision inputs are no longer available.
    pub fn deviation(&self) -> f64 {
        (quantize(self.measured) - quantize(self.expected)).abs()
    }
}

/// The float a reader of the emitted report would recover.
fn quantize(x: f64) -> f64 {
    fmt_float(x)
        .parse()
        .expect("fmt_float always emits a parseable number")
}

/// Aggregate counts over a report.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub max_deviation: f64,
}

/// An ordered list of checks plus the derived summary.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        VerificationReport { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn record(
        &mut self,
        name: impl Into<String>,
        paper_anchor: impl Into<String>,
        measured: f64,
        expected: f64,
        tolerance: f64,
    ) {
        self.push(Check::measure(
            name,
            paper_anchor,
            measured,
            expected,
            tolerance,
        ));
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn summary(&self) -> Summary {
        let pass = self.checks.iter().filter(|c| c.pass).count() as u64;
        let fail = self.checks.len() as u64 - pass;
        let max_deviation = self.checks.iter().map(Check::deviation).fold(0.0, f64::max);
        Summary {
            pass,
            fail,
            max_deviation,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// 0 if every check passes, 1 otherwise (input errors are the caller's 2).
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    /// Concatenate reports and sort the checks by name. Check names carry
    /// their module as a dotted prefix, so the name sort groups by module;
    /// the sort is stable, so merging in any grouping yields the same bytes.
    pub fn merge(reports: impl IntoIterator<Item = VerificationReport>) -> VerificationReport {
        let mut checks: Vec<Check> = reports.into_iter().flat_map(|r| r.checks).collect();
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        VerificationReport { checks }
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"checks\":[");
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!(
                "{{\"expected\":{},\"measured\":{},\"name\":{},\"paper_anchor\":{},\"pass\":{},\"tolerance\":{}}}",
                fmt_float(c.expected),
                fmt_float(c.measured),
                json_string(&c.name),
                json_string(&c.paper_anchor),
                c.pass,
                fmt_float(c.tolerance),
            ));
        }
        let s = self.summary();
        out.push_str(&format!(
            "],\"summary\":{{\"fail\":{},\"max_deviation\":{},\"pass\":{}}}}}",
            s.fail,
            fmt_float(s.max_deviation),
            s.pass
        ));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,paper_anchor,measured,expected,tolerance,pass\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                c.name,
                c.paper_anchor,
                fmt_float(c.measured),
                fmt_float(c.expected),
                fmt_float(c.tolerance),
                c.pass
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {}: measured {} expected {} (tol {}) [{}]\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                fmt_float(c.measured),
                fmt_float(c.expected),
                fmt_float(c.tolerance),
                c.paper_anchor
            ));
        }
        let s = self.summary();
        out.push_str(&format!(
            "summary: {} passed, {} failed, max deviation {}\n",
            s.pass,
            s.fail,
            fmt_float(s.max_deviation)
        ));
        out
    }

    /// Parse a report previously produced by `to_json`.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let checks = value
            .get("checks")
            .and_then(|c| c.as_array())
            .ok_or_else(|| Error::Malformed("missing checks array".into()))?;
        let mut report = VerificationReport::new();
        for (i, c) in checks.iter().enumerate() {
            let field = |key: &str| {
                c.get(key)
                    .ok_or_else(|| Error::Malformed(format!("check {i}: missing {key}")))
            };
            let num = |key: &str| {
                field(key)?
                    .as_f64()
                    .ok_or_else(|| Error::Malformed(format!("check {i}: {key} is not a number")))
            };
            let text = |key: &str| {
                field(key).and_then(|v| {
                    v.as_str().map(str::to_owned).ok_or_else(|| {
                        Error::Malformed(format!("check {i}: {key} is not a string"))
                    })
                })
            };
            report.push(Check {
                name: text("name")?,
                paper_anchor: text("paper_anchor")?,
                measured: num("measured")?,
                expected: num("expected")?,
                tolerance: num("tolerance")?,
                pass: field("pass")?
                    .as_bool()
                    .ok_or_else(|| Error::Malformed(format!("check {i}: pass is not a bool")))?,
            });
        }
        Ok(report)
    }
}

/// Stable float formatting: "0.0" for zero, scientific with 12 significant
/// digits below 1e-4 in magnitude, plain decimal with 12 significant digits
/// otherwise.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        return "0.0".to_string();
    }
    let mag = x.abs();
    if mag < 1e-4 {
        return format!("{:.11e}", x);
    }
    let int_digits = mag.log10().floor() as i64 + 1;
    let precision = (12 - int_digits).max(0) as usize;
    format!("{:.*}", precision, x)
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}
