// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

//! Machine-readable run reports.
//!
//! Everything except `timings` is a pure function of the configuration, so two
//! runs with the same configuration and seed produce identical payloads.

use std::io::Write;

use qcskew_core::skew::ScaleValue;
use qcskew_core::BoundReport;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
    pub map_spec_version: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub report: String,
    pub entry: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings {
    pub total_seconds: f64,
    pub phases: Vec<(String, f64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub command: String,
    pub config: Value,
    pub results: serde_json::Map<String, Value>,
    pub checks: Vec<BoundReport>,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub timings: Timings,
    #[serde(skip)]
    pub tables: Vec<(String, Vec<ScaleValue>)>,
}

impl Report {
    pub fn new(command: impl Into<String>, config: Value) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool: ToolInfo {
                name: env!("CARGO_PKG_NAME"),
                version: env!("CARGO_PKG_VERSION"),
                map_spec_version: crate::mapspec::MAP_SPEC_VERSION,
            },
            command: command.into(),
            config,
            results: serde_json::Map::new(),
            checks: Vec::new(),
            passed: true,
            failures: Vec::new(),
            timings: Timings::default(),
            tables: Vec::new(),
        }
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) -> anyhow::Result<()> {
        self.results.insert(key.to_owned(), serde_json::to_value(value)?);
        Ok(())
    }

    pub fn table(&mut self, name: &str, rows: &[ScaleValue]) {
        self.tables.push((name.to_owned(), rows.to_vec()));
    }

    pub fn check(&mut self, report: BoundReport) {
        for e in report.failures() {
            self.failures.push(Failure {
                report: report.title.clone(),
                entry: e.name.clone(),
                lhs: e.lhs,
                rhs: e.rhs,
                margin: e.margin,
            });
        }
        self.passed &= report.passed();
        self.checks.push(report);
    }

    /// The report without `timings`, the part that must be reproducible.
    pub fn payload(&self) -> anyhow::Result<Value> {
        let mut v = serde_json::to_value(self)?;
        if let Some(o) = v.as_object_mut() {
            o.remove("timings");
        }
        Ok(v)
    }

    pub fn write(&self, format: Format, mut out: impl Write) -> anyhow::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, self)?;
                writeln!(out)?;
            }
            Format::Csv => {
                writeln!(out, "table,radius,value,samples,unreliable")?;
                for (name, rows) in &self.tables {
                    for r in rows {
                        writeln!(out, "{name},{},{},{},{}", r.radius, r.value, r.samples, r.unreliable)?;
                    }
                }
            }
        }
        Ok(())
    }
}
