// Copyright 2026 the qcskew Authors
// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qcskew::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::FAILURE;
        }
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let report = qcskew::run(cli)?;
    match &cli.common.out {
        Some(path) => {
            let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
            report.write(cli.common.format, &mut f)?;
            f.flush()?;
        }
        None => report.write(cli.common.format, std::io::stdout().lock())?,
    }
    if !report.passed {
        for f in &report.failures {
            eprintln!(
                "FAILED {}: {} (lhs {}, rhs {}, margin {})",
                f.report, f.entry, f.lhs, f.rhs, f.margin
            );
        }
    }
    Ok(report.passed)
}
