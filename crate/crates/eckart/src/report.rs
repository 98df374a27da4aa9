//! Table builders and deterministic CSV/JSON renderers for the CLI.
//!
//! Output rules shared by every command: fixed column order, fixed row
//! order, no timestamps, energies rounded to the configured precision in a
//! display column with a parallel full-precision column, nonexistent states
//! rendered as the literal `…` in CSV and `null` in JSON.

use crate::centrifugal::{self, ApproximationScheme};
use crate::config::OutputFormat;
use crate::degeneracy::{PairDegeneracy, ScanEntry};
use crate::model::{EckartModel, QuantumNumbers};
use crate::numerov::ComparisonTable;
use crate::spectrum;
use crate::wavefunction::RadialWavefunction;
use serde_json::{json, Value};

/// CSV sentinel for a nonexistent state.
pub const MISSING: &str = "…";
/// Cell-level code for a scheme failing its admissibility checks.
pub const SCHEME_INVALID: &str = "scheme_invalid";

fn fmt_rounded(x: f64, precision: usize) -> String {
    format!("{x:.precision$}")
}

fn fmt_full(x: f64) -> String {
    format!("{x:.17e}")
}

/// One state under one scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnergyCell {
    /// Bound-state energy (negative).
    Value(f64),
    /// No bound state with these quantum numbers.
    Missing,
    /// The scheme fails its admissibility checks for this state.
    SchemeInvalid,
}

#[derive(Debug, Clone)]
pub struct EnergiesTable {
    pub scheme_names: Vec<String>,
    pub states: Vec<QuantumNumbers>,
    /// `cells[state][scheme]`.
    pub cells: Vec<Vec<EnergyCell>>,
}

/// Closed-form energies for every state under every scheme; inadmissible
/// scheme/state combinations and nonexistent states become cell markers.
pub fn build_energies_table(
    model: &EckartModel,
    schemes: &[(String, ApproximationScheme)],
    states: &[QuantumNumbers],
) -> EnergiesTable {
    let mut cells = Vec::with_capacity(states.len());
    for q in states {
        let mut row = Vec::with_capacity(schemes.len());
        for (_, scheme) in schemes {
            if !centrifugal::validate(scheme, model, q).is_admissible() {
                row.push(EnergyCell::SchemeInvalid);
                continue;
            }
            match spectrum::energy(model, scheme, q) {
                Ok(state) => row.push(EnergyCell::Value(state.energy)),
                Err(_) => row.push(EnergyCell::Missing),
            }
        }
        cells.push(row);
    }
    EnergiesTable {
        scheme_names: schemes.iter().map(|(n, _)| n.clone()).collect(),
        states: states.to_vec(),
        cells,
    }
}

pub fn energies_csv(table: &EnergiesTable, precision: usize) -> String {
    let mut out = String::from("n_r,ell,d");
    for name in &table.scheme_names {
        out.push_str(&format!(",{name}"));
    }
    for name in &table.scheme_names {
        out.push_str(&format!(",{name}_energy"));
    }
    out.push('\n');
    for (q, row) in table.states.iter().zip(&table.cells) {
        out.push_str(&format!("{},{},{}", q.n_r, q.ell, q.d));
        for cell in row {
            match cell {
                EnergyCell::Value(e) => out.push_str(&format!(",{}", fmt_rounded(-e, precision))),
                EnergyCell::Missing => out.push_str(&format!(",{MISSING}")),
                EnergyCell::SchemeInvalid => out.push_str(&format!(",{SCHEME_INVALID}")),
            }
        }
        for cell in row {
            match cell {
                EnergyCell::Value(e) => out.push_str(&format!(",{}", fmt_full(*e))),
                EnergyCell::Missing => out.push_str(&format!(",{MISSING}")),
                EnergyCell::SchemeInvalid => out.push_str(&format!(",{SCHEME_INVALID}")),
            }
        }
        out.push('\n');
    }
    out
}

pub fn energies_json(table: &EnergiesTable, precision: usize) -> String {
    let rows: Vec<Value> = table
        .states
        .iter()
        .zip(&table.cells)
        .map(|(q, row)| {
            let mut cells = serde_json::Map::new();
            for (name, cell) in table.scheme_names.iter().zip(row) {
                let v = match cell {
                    EnergyCell::Value(e) => json!({
                        "minus_energy": fmt_rounded(-e, precision).parse::<f64>().unwrap(),
                        "energy": e,
                    }),
                    EnergyCell::Missing => Value::Null,
                    EnergyCell::SchemeInvalid => json!({ "error": SCHEME_INVALID }),
                };
                cells.insert(name.clone(), v);
            }
            json!({ "n_r": q.n_r, "ell": q.ell, "d": q.d, "cells": Value::Object(cells) })
        })
        .collect();
    let doc = json!({
        "states": table.states,
        "schemes": table.scheme_names,
        "rows": rows,
    });
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

pub fn render_energies(table: &EnergiesTable, format: OutputFormat, precision: usize) -> String {
    match format {
        OutputFormat::Csv => energies_csv(table, precision),
        OutputFormat::Json => energies_json(table, precision),
    }
}

/// Error profiles of several schemes on labelled grids.
#[derive(Debug, Clone)]
pub struct ProfileTable {
    pub scheme_names: Vec<String>,
    /// `(region label, r, per-scheme errors)`.
    pub rows: Vec<(String, f64, Vec<f64>)>,
}

pub fn build_profile_table(
    model: &EckartModel,
    schemes: &[(String, ApproximationScheme)],
    ell: u32,
    d: u32,
    grids: &[(String, Vec<f64>)],
) -> Result<ProfileTable, centrifugal::CentrifugalError> {
    let mut rows = Vec::new();
    for (label, grid) in grids {
        let profiles: Vec<Vec<(f64, f64)>> = schemes
            .iter()
            .map(|(_, s)| centrifugal::error_profile(s, model, ell, d, grid))
            .collect::<Result<_, _>>()?;
        for (i, &r) in grid.iter().enumerate() {
            rows.push((label.clone(), r, profiles.iter().map(|p| p[i].1).collect()));
        }
    }
    Ok(ProfileTable {
        scheme_names: schemes.iter().map(|(n, _)| n.clone()).collect(),
        rows,
    })
}

pub fn profile_csv(table: &ProfileTable) -> String {
    let mut out = String::from("region,r");
    for name in &table.scheme_names {
        out.push_str(&format!(",error_{name}"));
    }
    out.push('\n');
    for (region, r, errs) in &table.rows {
        out.push_str(&format!("{region},{}", fmt_full(*r)));
        for e in errs {
            out.push_str(&format!(",{}", fmt_full(*e)));
        }
        out.push('\n');
    }
    out
}

pub fn profile_json(table: &ProfileTable) -> String {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|(region, r, errs)| {
            let mut m = serde_json::Map::new();
            for (name, e) in table.scheme_names.iter().zip(errs) {
                m.insert(name.clone(), json!(e));
            }
            json!({ "region": region, "r": r, "errors": Value::Object(m) })
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "schemes": table.scheme_names, "rows": rows }))
        .expect("serializable")
        + "\n"
}

/// CSV for a solver-vs-closed-form comparison (exact-mode oracle in the
/// first value column, per-scheme closed forms and absolute differences
/// after it).
pub fn comparison_csv(table: &ComparisonTable, precision: usize) -> String {
    let mut out = String::from("n_r,ell,d");
    for label in &table.mode_labels {
        out.push_str(&format!(",{label}"));
    }
    for label in &table.mode_labels {
        out.push_str(&format!(",{label}_closed,{label}_absdiff"));
    }
    out.push('\n');
    for (q, row) in table.states.iter().zip(&table.cells) {
        out.push_str(&format!("{},{},{}", q.n_r, q.ell, q.d));
        for cell in row {
            match cell.oracle {
                Some(e) => out.push_str(&format!(",{}", fmt_rounded(-e, precision))),
                None => out.push_str(&format!(
                    ",{}",
                    cell.note.as_deref().map_or(MISSING, |n| if n == "missing" { MISSING } else { n })
                )),
            }
        }
        for cell in row {
            match cell.closed_form {
                Some(e) => out.push_str(&format!(",{}", fmt_rounded(-e, precision))),
                None => out.push_str(&format!(",{MISSING}")),
            }
            match cell.difference() {
                Some(d) => out.push_str(&format!(",{}", fmt_full(d.abs()))),
                None => out.push_str(&format!(",{MISSING}")),
            }
        }
        out.push('\n');
    }
    out
}

pub fn comparison_json(table: &ComparisonTable) -> String {
    serde_json::to_string_pretty(&table).expect("serializable") + "\n"
}

/// One row of the degeneracy command's output.
#[derive(Debug, Clone)]
pub enum DegeneracyRow {
    ZeroEnergy { state: QuantumNumbers, a0: f64, residual: f64, energy_at_root: f64 },
    ZeroEnergyFailed { state: QuantumNumbers, note: String },
    Pair { pair: (QuantumNumbers, QuantumNumbers), a12: f64, residual: f64, energy_gap: f64 },
    PairFlagged { pair: (QuantumNumbers, QuantumNumbers), note: String },
}

pub fn degeneracy_csv(rows: &[DegeneracyRow]) -> String {
    let mut out = String::from("kind,state1,state2,a,residual,back_substitution,note\n");
    let state = |q: &QuantumNumbers| format!("({};{};{})", q.n_r, q.ell, q.d);
    for row in rows {
        match row {
            DegeneracyRow::ZeroEnergy { state: q, a0, residual, energy_at_root } => {
                out.push_str(&format!(
                    "zero_energy,{},,{},{},{},\n",
                    state(q),
                    fmt_full(*a0),
                    fmt_full(*residual),
                    fmt_full(*energy_at_root)
                ));
            }
            DegeneracyRow::ZeroEnergyFailed { state: q, note } => {
                out.push_str(&format!("zero_energy,{},,,,,{note}\n", state(q)));
            }
            DegeneracyRow::Pair { pair, a12, residual, energy_gap } => {
                out.push_str(&format!(
                    "pair,{},{},{},{},{},\n",
                    state(&pair.0),
                    state(&pair.1),
                    fmt_full(*a12),
                    fmt_full(*residual),
                    fmt_full(*energy_gap)
                ));
            }
            DegeneracyRow::PairFlagged { pair, note } => {
                out.push_str(&format!("pair,{},{},,,,{note}\n", state(&pair.0), state(&pair.1)));
            }
        }
    }
    out
}

pub fn degeneracy_json(rows: &[DegeneracyRow]) -> String {
    let values: Vec<Value> = rows
        .iter()
        .map(|row| match row {
            DegeneracyRow::ZeroEnergy { state, a0, residual, energy_at_root } => json!({
                "kind": "zero_energy", "state": state, "a": a0,
                "residual": residual, "back_substitution": energy_at_root,
            }),
            DegeneracyRow::ZeroEnergyFailed { state, note } => json!({
                "kind": "zero_energy", "state": state, "a": Value::Null, "note": note,
            }),
            DegeneracyRow::Pair { pair, a12, residual, energy_gap } => json!({
                "kind": "pair", "state1": pair.0, "state2": pair.1, "a": a12,
                "residual": residual, "back_substitution": energy_gap,
            }),
            DegeneracyRow::PairFlagged { pair, note } => json!({
                "kind": "pair", "state1": pair.0, "state2": pair.1, "a": Value::Null, "note": note,
            }),
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "rows": values })).expect("serializable") + "\n"
}

/// Scan entries converted to report rows with back-substitution data.
pub fn scan_entries_to_rows(
    entries: &[ScanEntry],
    beta: f64,
    law: &crate::degeneracy::AlphaLaw,
    constants: &crate::model::PhysicalConstants,
) -> Vec<DegeneracyRow> {
    entries
        .iter()
        .map(|entry| match entry.result {
            PairDegeneracy::Root(a) => {
                let problem = crate::degeneracy::DegeneracyProblem {
                    state1: entry.pair.0,
                    state2: entry.pair.1,
                    sign: crate::degeneracy::SignBranch::Plus,
                    law: law.clone(),
                    beta,
                    constants: *constants,
                };
                let residual = crate::degeneracy::degeneracy_residual(&problem, a);
                let gap = EckartModel::with_constants(law.value(a), beta, a, *constants)
                    .ok()
                    .and_then(|m| {
                        let f1 = centrifugal::make_f1();
                        let e1 = spectrum::energy_formal(&m, &f1, &entry.pair.0).ok()?;
                        let e2 = spectrum::energy_formal(&m, &f1, &entry.pair.1).ok()?;
                        Some(e1 - e2)
                    })
                    .unwrap_or(f64::NAN);
                DegeneracyRow::Pair { pair: entry.pair, a12: a, residual, energy_gap: gap }
            }
            PairDegeneracy::AlwaysDegenerate => DegeneracyRow::PairFlagged {
                pair: entry.pair,
                note: "always_degenerate".to_string(),
            },
        })
        .collect()
}

/// One row of the normalization check.
#[derive(Debug, Clone)]
pub struct NormalizeRow {
    pub scheme: String,
    pub state: QuantumNumbers,
    pub norm_integral: Option<f64>,
    pub nodes: Option<usize>,
}

pub fn build_normalize_rows(
    model: &EckartModel,
    schemes: &[(String, ApproximationScheme)],
    states: &[QuantumNumbers],
    r_max: f64,
) -> Vec<NormalizeRow> {
    let mut rows = Vec::new();
    for (name, scheme) in schemes {
        for q in states {
            match RadialWavefunction::new(model, scheme, q) {
                Ok(w) => rows.push(NormalizeRow {
                    scheme: name.clone(),
                    state: *q,
                    norm_integral: Some(w.norm_integral(model, r_max, 1e-10)),
                    nodes: Some(w.node_count(model, r_max, 10_000)),
                }),
                Err(_) => rows.push(NormalizeRow {
                    scheme: name.clone(),
                    state: *q,
                    norm_integral: None,
                    nodes: None,
                }),
            }
        }
    }
    rows
}

pub fn normalize_csv(rows: &[NormalizeRow]) -> String {
    let mut out = String::from("scheme,n_r,ell,d,norm_integral,norm_abs_dev,nodes,nodes_expected,ok\n");
    for r in rows {
        match (r.norm_integral, r.nodes) {
            (Some(integral), Some(nodes)) => {
                let dev = (integral - 1.0).abs();
                let ok = dev < 1e-8 && nodes == r.state.n_r as usize;
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    r.scheme,
                    r.state.n_r,
                    r.state.ell,
                    r.state.d,
                    fmt_full(integral),
                    fmt_full(dev),
                    nodes,
                    r.state.n_r,
                    ok
                ));
            }
            _ => {
                out.push_str(&format!(
                    "{},{},{},{},{MISSING},{MISSING},{MISSING},{},{}\n",
                    r.scheme, r.state.n_r, r.state.ell, r.state.d, r.state.n_r, "missing"
                ));
            }
        }
    }
    out
}

pub fn normalize_json(rows: &[NormalizeRow]) -> String {
    let values: Vec<Value> = rows
        .iter()
        .map(|r| match (r.norm_integral, r.nodes) {
            (Some(integral), Some(nodes)) => json!({
                "scheme": r.scheme, "state": r.state,
                "norm_integral": integral, "nodes": nodes,
                "nodes_expected": r.state.n_r,
            }),
            _ => json!({
                "scheme": r.scheme, "state": r.state,
                "norm_integral": Value::Null, "nodes": Value::Null,
                "nodes_expected": r.state.n_r,
            }),
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "rows": values })).expect("serializable") + "\n"
}
