use std::fmt::Write as _;

use anyhow::{bail, Result};
use serde::Serialize;

use minortotals::{
    classify_all, default_window, digit_histogram, empirical_frequencies, enumerate_cases,
    fit_power_law, render_transcript, residue_profile, simulate as run_simulation, to_digits,
    tri_exact, BaseSpec, DividingDynamics, Natural,
};

use crate::render::{approx, brace_set, decimal, exact, Table};
use crate::OutputFormat;

/// Traces longer than this are abbreviated in table output.
const FULL_TRACE_ROWS: usize = 40;
const TRACE_EDGE_ROWS: usize = 10;

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

#[derive(Serialize)]
struct TriRecord {
    n: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    base: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    digits: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    units_digit: Option<u32>,
}

pub fn tri(n: &Natural, base: Option<BaseSpec>, format: OutputFormat) -> Result<String> {
    let value = tri_exact(n);
    let digits = base.map(|b| to_digits(&value, b));
    let record = TriRecord {
        n: n.to_string(),
        value: value.to_string(),
        base: base.map(BaseSpec::get),
        digits: digits.as_ref().map(|d| d.render()),
        units_digit: digits.as_ref().map(|d| d.units()),
    };
    match format {
        OutputFormat::Json => json(&record),
        OutputFormat::Table => {
            let mut out = String::new();
            writeln!(out, "n: {}", record.n)?;
            writeln!(out, "value: {}", record.value)?;
            if let (Some(b), Some(d), Some(u)) = (record.base, &record.digits, record.units_digit) {
                writeln!(out, "base: {b}")?;
                writeln!(out, "digits: {d}")?;
                writeln!(out, "units digit: {u}")?;
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct FrequencyRow {
    digit: u32,
    exact: String,
    approx: f64,
}

#[derive(Serialize)]
struct ResiduesRecord {
    base: u32,
    period: u64,
    reachable: Vec<u32>,
    missing: Vec<u32>,
    frequencies: Vec<FrequencyRow>,
}

pub fn residues(base: BaseSpec, format: OutputFormat) -> Result<String> {
    let profile = residue_profile(base);
    let record = ResiduesRecord {
        base: base.get(),
        period: profile.period,
        reachable: profile.reachable.clone(),
        missing: profile.missing(),
        frequencies: (0..base.get())
            .map(|d| {
                let f = profile.frequency_of(d);
                FrequencyRow {
                    digit: d,
                    exact: exact(f),
                    approx: approx(f),
                }
            })
            .collect(),
    };
    match format {
        OutputFormat::Json => json(&record),
        OutputFormat::Table => {
            let mut out = String::new();
            writeln!(out, "base: {}", record.base)?;
            writeln!(out, "period: {}", record.period)?;
            writeln!(out, "reachable: {}", brace_set(&record.reachable))?;
            writeln!(out, "missing: {}", brace_set(&record.missing))?;
            let mut table = Table::new(&["digit", "exact", "approx"]);
            for row in &record.frequencies {
                table.row(vec![
                    row.digit.to_string(),
                    row.exact.clone(),
                    decimal(row.approx),
                ]);
            }
            table.write_to(&mut out);
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct ClassifyRow {
    base: u32,
    gappy: bool,
    missing: Vec<u32>,
}

pub fn classify(bases: &[BaseSpec], format: OutputFormat) -> Result<String> {
    let rows: Vec<ClassifyRow> = classify_all(bases)
        .into_iter()
        .map(|c| ClassifyRow {
            base: c.base.get(),
            gappy: c.gappy,
            missing: c.missing_digits,
        })
        .collect();
    match format {
        OutputFormat::Json => json(&rows),
        OutputFormat::Table => {
            let mut out = String::new();
            let mut table = Table::new(&["base", "gappy", "missing"]).left_align_last();
            for row in &rows {
                table.row(vec![
                    row.base.to_string(),
                    if row.gappy { "yes" } else { "no" }.to_string(),
                    brace_set(&row.missing),
                ]);
            }
            table.write_to(&mut out);
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct CaseRow {
    input_digit: u32,
    k_parity: &'static str,
    output_digit: u32,
    statement: String,
}

#[derive(Serialize)]
struct ProveRecord {
    base: u32,
    cases: Vec<CaseRow>,
    reachable: Vec<u32>,
    missing: Vec<u32>,
}

pub fn prove(base: BaseSpec, format: OutputFormat) -> Result<String> {
    let transcript = enumerate_cases(base);
    match format {
        OutputFormat::Table => Ok(render_transcript(&transcript)),
        OutputFormat::Json => json(&ProveRecord {
            base: base.get(),
            cases: transcript
                .cases
                .iter()
                .map(|c| CaseRow {
                    input_digit: c.input_digit,
                    k_parity: c.k_parity.as_str(),
                    output_digit: c.output_digit,
                    statement: c.to_string(),
                })
                .collect(),
            reachable: transcript.derived_reachable.clone(),
            missing: transcript.derived_missing.clone(),
        }),
    }
}

#[derive(Serialize)]
struct FreqRow {
    digit: u32,
    count: u64,
    empirical: f64,
    exact: String,
    approx: f64,
    deviation: f64,
}

#[derive(Serialize)]
struct FreqRecord {
    base: u32,
    count: u64,
    digits: Vec<FreqRow>,
    max_deviation: f64,
}

pub fn freq(base: BaseSpec, count: u64, format: OutputFormat) -> Result<String> {
    if count == 0 {
        bail!("--count must be at least 1");
    }
    let profile = residue_profile(base);
    let empirical = empirical_frequencies(base, count)?;
    let deviations = empirical.deviations(&profile);
    let record = FreqRecord {
        base: base.get(),
        count,
        digits: (0..base.get())
            .map(|d| FreqRow {
                digit: d,
                count: empirical.counts[d as usize],
                empirical: approx(empirical.proportion(d)),
                exact: exact(profile.frequency_of(d)),
                approx: approx(profile.frequency_of(d)),
                deviation: approx(deviations[d as usize]),
            })
            .collect(),
        max_deviation: approx(empirical.max_deviation(&profile)),
    };
    match format {
        OutputFormat::Json => json(&record),
        OutputFormat::Table => {
            let mut out = String::new();
            writeln!(out, "base: {}", record.base)?;
            writeln!(out, "count: {}", record.count)?;
            let mut table = Table::new(&[
                "digit",
                "count",
                "empirical",
                "exact",
                "approx",
                "deviation",
            ]);
            for row in &record.digits {
                table.row(vec![
                    row.digit.to_string(),
                    row.count.to_string(),
                    decimal(row.empirical),
                    row.exact.clone(),
                    decimal(row.approx),
                    decimal(row.deviation),
                ]);
            }
            table.write_to(&mut out);
            writeln!(out, "max deviation: {}", decimal(record.max_deviation))?;
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct FitRecord {
    window: [u64; 2],
    exponent: f64,
    offset: f64,
    residual: f64,
}

#[derive(Serialize)]
struct HistogramRecord {
    base: u32,
    counts: Vec<u64>,
    missing: Vec<u32>,
}

#[derive(Serialize)]
struct SimulateRecord {
    dynamics: String,
    steps: u64,
    initial_total: String,
    dividing: Vec<String>,
    total: Vec<String>,
    fit: Option<FitRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fit_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    histogram: Option<HistogramRecord>,
}

pub fn simulate(
    dynamics: DividingDynamics,
    steps: u64,
    initial: Natural,
    base: Option<BaseSpec>,
    format: OutputFormat,
) -> Result<String> {
    let trace = run_simulation(dynamics, steps, initial)?;
    let window = default_window(&trace);
    let (fit, fit_error) = match fit_power_law(&trace, window) {
        Ok(f) => (
            Some(FitRecord {
                window: [*f.fit_window.start(), *f.fit_window.end()],
                exponent: f.exponent,
                offset: f.offset,
                residual: f.residual,
            }),
            None,
        ),
        Err(e) => (None, Some(e.to_string())),
    };
    let histogram = base.map(|b| {
        let h = digit_histogram(&trace, b);
        HistogramRecord {
            base: b.get(),
            missing: (0..b.get())
                .filter(|&d| h.counts[d as usize] == 0)
                .collect(),
            counts: h.counts,
        }
    });
    let record = SimulateRecord {
        dynamics: dynamics.to_string(),
        steps,
        initial_total: trace.initial_total().to_string(),
        dividing: trace.dividing().iter().map(Natural::to_string).collect(),
        total: trace.total().iter().map(Natural::to_string).collect(),
        fit,
        fit_error,
        histogram,
    };

    match format {
        OutputFormat::Json => json(&record),
        OutputFormat::Table => {
            let mut out = String::new();
            writeln!(out, "dynamics: {}", record.dynamics)?;
            writeln!(out, "steps: {}", record.steps)?;
            writeln!(out, "initial total: {}", record.initial_total)?;
            let mut table = Table::new(&["t", "dividing", "total"]);
            let len = record.total.len();
            for (i, (d, n)) in record.dividing.iter().zip(&record.total).enumerate() {
                if len > FULL_TRACE_ROWS && i == TRACE_EDGE_ROWS {
                    table.ellipsis();
                }
                if len > FULL_TRACE_ROWS && (TRACE_EDGE_ROWS..len - TRACE_EDGE_ROWS).contains(&i) {
                    continue;
                }
                table.row(vec![(i + 1).to_string(), d.clone(), n.clone()]);
            }
            table.write_to(&mut out);
            match (&record.fit, &record.fit_error) {
                (Some(fit), _) => {
                    writeln!(out, "fit window: [{}, {}]", fit.window[0], fit.window[1])?;
                    writeln!(out, "exponent: {}", decimal(fit.exponent))?;
                    writeln!(out, "offset: {}", decimal(fit.offset))?;
                    writeln!(out, "residual: {}", decimal(fit.residual))?;
                }
                (None, Some(err)) => writeln!(out, "fit: unavailable ({err})")?,
                (None, None) => unreachable!("fit either succeeds or reports an error"),
            }
            if let Some(h) = &record.histogram {
                writeln!(out, "histogram (base {}):", h.base)?;
                let mut table = Table::new(&["digit", "count"]);
                for (d, c) in h.counts.iter().enumerate() {
                    table.row(vec![d.to_string(), c.to_string()]);
                }
                table.write_to(&mut out);
                writeln!(out, "missing: {}", brace_set(&h.missing))?;
            }
            Ok(out)
        }
    }
}
