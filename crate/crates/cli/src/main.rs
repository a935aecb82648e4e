use std::fs;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use symquot::bases::{classify_family, expand, BasisFamily, Classification};
use symquot::grobner::GroebnerBasis;
use symquot::quotient::{render_specialized, specialize_elem};
use symquot::{Partition, QuotContext, QuotElem, QuotientRing, Specialization, XPoly};

#[derive(Parser)]
#[command(name = "symquot", version, about = "Exact computation in S/I = Sym[x_1..x_k] / (h_{n-k+i} - a_i)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for table commands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Ring {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// `classical`, `quantum`, or `a1=...,a2=...` with values polynomial in q.
    #[arg(long)]
    spec: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Straighten s_mu into the basis of S/I.
    Straighten {
        #[command(flatten)]
        ring: Ring,
        #[arg(long)]
        mu: Partition,
    },
    /// Multiply two basis elements.
    Multiply {
        #[command(flatten)]
        ring: Ring,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// s_lambda * h_j by the Pieri rule.
    Pieri {
        #[command(flatten)]
        ring: Ring,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        j: usize,
    },
    /// Expand a member of the h, m, e, p or ht family.
    Expand {
        #[command(flatten)]
        ring: Ring,
        #[arg(long)]
        family: BasisFamily,
        #[arg(long)]
        lambda: Partition,
    },
    /// Normal form of a polynomial in x_1..x_k modulo the Groebner basis.
    Nf {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: String,
    },
    /// Check the S3 symmetry of all structure constants.
    S3 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Scan all structure constants for sign-twisted positivity.
    Positivity {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Basis classification grid for 1 <= k < n <= n-max.
    BasisTable {
        #[arg(long)]
        family: BasisFamily,
        #[arg(long)]
        n_max: usize,
    },
}

/// What a command produced: its rendering and whether a verification passed.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

fn ring(k: usize, n: usize) -> Result<QuotientRing> {
    Ok(QuotientRing::new(k, n)?)
}

fn element(r: &Ring, f: QuotElem) -> Result<Outcome> {
    match &r.spec {
        None => Ok(Outcome::ok(f.render(), serde_json::to_value(&f)?)),
        Some(spec) => {
            let s = Specialization::parse(r.k, spec)?;
            let terms = specialize_elem(&f, &s)?;
            let json_terms: Vec<Value> = terms
                .iter()
                .map(|(p, c)| json!({ "partition": p, "coeff": c.to_string() }))
                .collect();
            let json = json!({ "k": r.k, "n": r.n, "basis": "s", "spec": spec, "terms": json_terms });
            Ok(Outcome::ok(render_specialized(&terms), json))
        }
    }
}

fn basis_table(family: BasisFamily, n_max: usize) -> Result<Outcome> {
    if n_max < 2 {
        bail!("--n-max must be at least 2");
    }
    let cells: Vec<(usize, usize)> = (2..=n_max).flat_map(|n| (1..n).map(move |k| (k, n))).collect();
    let labels: Vec<Classification> = cells
        .par_iter()
        .map(|&(k, n)| classify_family(&QuotientRing::new(k, n).expect("1 <= k < n"), family))
        .collect();
    // one width per k column
    let mut widths: Vec<usize> = (1..n_max).map(|k| format!("k={k}").len()).collect();
    for (&(k, _), c) in cells.iter().zip(&labels) {
        widths[k - 1] = widths[k - 1].max(c.label().len());
    }
    let mut text = format!("{:<5}", family.to_string());
    for (i, w) in widths.iter().enumerate() {
        text.push_str(&format!(" {:<w$}", format!("k={}", i + 1)));
    }
    let mut rows = Vec::new();
    let mut it = cells.iter().zip(&labels);
    for n in 2..=n_max {
        text.push('\n');
        text.push_str(&format!("{:<5}", format!("n={n}")));
        let mut row = Vec::new();
        for _ in 1..n {
            let (&(k, _), c) = it.next().expect("one cell per (k, n)");
            text.push_str(&format!(" {:<w$}", c.label(), w = widths[k - 1]));
            row.push(json!({ "k": k, "label": c }));
        }
        rows.push(json!({ "n": n, "cells": row }));
    }
    let text = text.lines().map(str::trim_end).collect::<Vec<_>>().join("\n");
    Ok(Outcome::ok(text, json!({ "family": family.short_name(), "rows": rows })))
}

fn run(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Straighten { ring: r, mu } => {
            let f = ring(r.k, r.n)?.straighten_schur(&mu)?;
            element(&r, f)
        }
        Command::Multiply { ring: r, lambda, mu } => {
            let f = ring(r.k, r.n)?.multiply_basis(&lambda, &mu)?;
            element(&r, f)
        }
        Command::Pieri { ring: r, lambda, j } => {
            let f = ring(r.k, r.n)?.pieri_h(&lambda, j)?;
            element(&r, f)
        }
        Command::Expand { ring: r, family, lambda } => {
            let f = expand(&ring(r.k, r.n)?, family, &lambda)?;
            element(&r, f)
        }
        Command::Nf { k, n, poly } => {
            let ctx = QuotContext::new(k, n)?;
            let p = XPoly::parse(k, &poly)?;
            let nf = GroebnerBasis::new(ctx).normal_form(&p)?;
            let text = nf.to_string();
            Ok(Outcome::ok(text.clone(), json!({ "k": k, "n": n, "input": poly, "normal_form": text })))
        }
        Command::S3 { k, n } => {
            let report = ring(k, n)?.s3_report();
            let text = if report.ok {
                format!("ok: {} triples checked", report.triples_checked)
            } else {
                let mut t = format!("FAILED: {} counterexamples", report.counterexamples.len());
                for c in &report.counterexamples {
                    let vals: Vec<String> = c.values.iter().map(|v| v.to_string()).collect();
                    t.push_str(&format!("\n{} {} {}: {}", c.alpha, c.beta, c.gamma, vals.join(", ")));
                }
                t
            };
            Ok(Outcome { text, ok: report.ok, json: serde_json::to_value(&report)? })
        }
        Command::Positivity { k, n } => {
            let report = ring(k, n)?.positivity_scan();
            let text = if report.ok {
                format!("ok: {} coefficients checked", report.coefficients_checked)
            } else {
                let mut t = format!("FAILED: {} violations", report.violations.len());
                for v in &report.violations {
                    t.push_str(&format!("\n{} {} {}: {}", v.lambda, v.mu, v.nu, v.in_b.to_string().replace('a', "b")));
                }
                t
            };
            Ok(Outcome { text, ok: report.ok, json: serde_json::to_value(&report)? })
        }
        Command::BasisTable { family, n_max } => basis_table(family, n_max),
    }
}

fn emit(out: &Outcome, format: Format, path: Option<&str>) -> Result<()> {
    let mut body = match format {
        Format::Text => out.text.clone(),
        Format::Json => serde_json::to_string_pretty(&out.json)?,
    };
    body.push('\n');
    match path {
        Some(p) => fs::write(p, body).with_context(|| format!("writing {p}"))?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 2 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match run(cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&outcome, cli.format, cli.output.as_deref()) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
