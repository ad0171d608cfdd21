use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use anyhow::Context;
use clap::ValueEnum;
use eulerstab::eulerian::table1;
use eulerstab::suites::{appendix, d3_star};
use eulerstab::MPoly;
use serde::Serialize;
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    /// Per-element type-B and type-D statistics on D_n.
    Table1,
    /// The polynomial built from the naive type-D tops on D_3.
    D3star,
    /// The thirteen small reference polynomials.
    Appendix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Csv,
    Json,
}

#[derive(clap::Args)]
pub struct ExportArgs {
    what: What,
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ExportFormat::Csv)]
    format: ExportFormat,
    /// Rank for table1.
    #[arg(long, default_value_t = 3)]
    n: usize,
}

#[derive(Serialize)]
struct TermRow {
    monomial: String,
    coefficient: String,
}

#[derive(Serialize)]
struct AppendixRow {
    name: &'static str,
    family: String,
    n: usize,
    polynomial: String,
}

fn term_rows(p: &MPoly) -> Vec<TermRow> {
    p.terms()
        .map(|(m, c)| TermRow {
            monomial: m.to_string(),
            coefficient: c.to_string(),
        })
        .collect()
}

fn write_csv<T: Serialize>(out: Box<dyn Write>, rows: &[T]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn run(a: ExportArgs) -> anyhow::Result<()> {
    if a.what == What::Table1 && !(2..=8).contains(&a.n) {
        anyhow::bail!("table1 needs 2 <= n <= 8");
    }
    let out: Box<dyn Write> = match &a.output {
        Some(p) => Box::new(File::create(p).with_context(|| format!("creating {}", p.display()))?),
        None => Box::new(io::stdout()),
    };
    let result = match a.what {
        What::Table1 => {
            let rows = table1(a.n);
            emit(out, a.format, &rows, || serde_json::to_value(&rows))
        }
        What::D3star => {
            let p = d3_star();
            let rows = term_rows(&p);
            emit(out, a.format, &rows, || {
                Ok(json!({ "text": p.to_string(), "polynomial": serde_json::to_value(&p)? }))
            })
        }
        What::Appendix => {
            let polys = appendix();
            let rows: Vec<_> = polys
                .iter()
                .map(|(name, spec, p)| AppendixRow {
                    name,
                    family: spec.code(),
                    n: spec.n,
                    polynomial: p.to_string(),
                })
                .collect();
            emit(out, a.format, &rows, || {
                let v: Result<Vec<_>, serde_json::Error> = polys
                    .iter()
                    .map(|(name, spec, p)| {
                        Ok(json!({
                            "name": name, "family": spec.code(), "n": spec.n,
                            "q": spec.q.to_string(), "polynomial": serde_json::to_value(p)?,
                        }))
                    })
                    .collect();
                v.map(serde_json::Value::Array)
            })
        }
    };
    result.with_context(|| match &a.output {
        Some(p) => format!("exporting to {}", p.display()),
        None => "exporting to stdout".into(),
    })
}

fn emit<T: Serialize>(
    mut out: Box<dyn Write>,
    format: ExportFormat,
    rows: &[T],
    json: impl FnOnce() -> serde_json::Result<serde_json::Value>,
) -> anyhow::Result<()> {
    match format {
        ExportFormat::Csv => write_csv(out, rows),
        ExportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &json()?)?;
            writeln!(out)?;
            Ok(())
        }
    }
}
