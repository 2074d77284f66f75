use std::fmt::Write;

use clap::ValueEnum;
use serde_json::{json, Value};

use sl2_branching::Sl2Decomposition;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
    Plain,
}

/// Result of a verification suite.
pub struct Summary {
    pub target: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
    pub json: Value,
}

fn json_line(value: &Value) -> String {
    format!("{value}\n")
}

/// `a F_j ⊕ ...`, ascending `j`; `0` for the zero representation.
fn irreducible_sum(dec: &Sl2Decomposition) -> String {
    let terms: Vec<String> = dec
        .types()
        .map(|j| {
            let a = dec.mult(j);
            if a == 1u32.into() {
                format!("F_{j}")
            } else {
                format!("{a} F_{j}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub fn decomposition(
    label: &str,
    dec: &Sl2Decomposition,
    value: Value,
    min_dim: Option<usize>,
    format: Format,
) -> String {
    let mut out = String::new();
    match format {
        Format::Json => out = json_line(&value),
        Format::Csv => {
            out.push_str("j,multiplicity\n");
            for (j, a) in dec.mults().iter().enumerate() {
                writeln!(out, "{j},{a}").unwrap();
            }
        }
        Format::Md => {
            writeln!(out, "**{label}** = {}\n", irreducible_sum(dec)).unwrap();
            out.push_str("| j | multiplicity |\n|---:|---:|\n");
            for j in dec.types() {
                writeln!(out, "| {j} | {} |", dec.mult(j)).unwrap();
            }
            writeln!(out, "\ndim = {}", dec.dim()).unwrap();
            if let Some(k) = min_dim {
                writeln!(out, "min_dim = {k}").unwrap();
            }
        }
        Format::Plain => {
            writeln!(out, "{label} = {}", irreducible_sum(dec)).unwrap();
            writeln!(out, "dim {}", dec.dim()).unwrap();
            if let (Some(lo), Some(hi)) = (dec.lowest(), dec.highest()) {
                writeln!(out, "lowest {lo} highest {hi}").unwrap();
            }
            if let Some(k) = min_dim {
                writeln!(out, "min_dim {k}").unwrap();
            }
        }
    }
    out
}

/// `table[m][d]`, rows `m`, columns `d`.
pub fn table(table: &[Vec<u32>], format: Format) -> String {
    let cols = table.first().map_or(0, Vec::len);
    let mut out = String::new();
    match format {
        Format::Json => {
            out = json_line(&json!({
                "max_m": table.len().saturating_sub(1),
                "max_d": cols.saturating_sub(1),
                "rows": table,
            }));
        }
        Format::Csv => {
            for row in table {
                let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                writeln!(out, "{}", cells.join(",")).unwrap();
            }
        }
        Format::Md => {
            out.push_str("| ℓ |");
            for d in 0..cols {
                write!(out, " {d} |").unwrap();
            }
            out.push_str("\n|---:|");
            for _ in 0..cols {
                out.push_str("---:|");
            }
            out.push('\n');
            for (m, row) in table.iter().enumerate() {
                write!(out, "| **{m}** |").unwrap();
                for v in row {
                    write!(out, " {v} |").unwrap();
                }
                out.push('\n');
            }
        }
        Format::Plain => {
            let width = table
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .chain([cols.to_string().len(), table.len().to_string().len()])
                .max()
                .unwrap_or(1);
            write!(out, "{:>width$} |", "m\\d").unwrap();
            for d in 0..cols {
                write!(out, " {d:>width$}").unwrap();
            }
            out.push('\n');
            for (m, row) in table.iter().enumerate() {
                write!(out, "{m:>w$} |", w = width.max(3)).unwrap();
                for v in row {
                    write!(out, " {v:>width$}").unwrap();
                }
                out.push('\n');
            }
        }
    }
    out
}

pub fn summary(s: &Summary, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => out = json_line(&s.json),
        Format::Csv => {
            out.push_str("target,checked,violations\n");
            writeln!(out, "{},{},{}", s.target, s.checked, s.violations.len()).unwrap();
        }
        Format::Md => {
            out.push_str("| target | checked | violations |\n|---|---:|---:|\n");
            writeln!(out, "| {} | {} | {} |", s.target, s.checked, s.violations.len()).unwrap();
            for v in &s.violations {
                writeln!(out, "- `{v}`").unwrap();
            }
        }
        Format::Plain => {
            writeln!(
                out,
                "{}: {} checked, {} violations",
                s.target,
                s.checked,
                s.violations.len()
            )
            .unwrap();
            for v in &s.violations {
                writeln!(out, "  {v}").unwrap();
            }
        }
    }
    out
}
