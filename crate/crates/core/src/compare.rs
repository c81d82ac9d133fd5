//! Reproduction of the published energy tables: computed closed-form levels
//! against the embedded reference columns, with per-table tolerances.

use crate::error::{Error, Result};
use crate::molecule::{builtin_molecule, MoleculeParams};
use crate::reference::{builtin_reference_tables, Method, ReferenceTable};
use crate::spectrum::energy;
use crate::tolerances::{TABLE_H2_ABS_EV, TABLE_OTHERS_ABS_EV};

/// One compared state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonRow {
    pub n: u32,
    pub l: u32,
    pub computed_ev: f64,
    pub reference_ev: f64,
    pub abs_diff: f64,
}

/// Outcome of comparing one molecule against one reference column.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub molecule: String,
    pub method: Method,
    pub rows: Vec<ComparisonRow>,
    pub max_abs_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Molecule shown in each published table, by table number 1–4.
pub fn table_molecule(table_id: u8) -> Result<&'static str> {
    match table_id {
        1 => Ok("H2"),
        2 => Ok("CO"),
        3 => Ok("HCl"),
        4 => Ok("LiH"),
        other => Err(Error::Domain(format!(
            "table id must be 1..=4, got {other}"
        ))),
    }
}

/// Comparison tolerance for a published table.
pub fn table_tolerance(table_id: u8) -> Result<f64> {
    match table_id {
        1 => Ok(TABLE_H2_ABS_EV),
        2..=4 => Ok(TABLE_OTHERS_ABS_EV),
        other => Err(Error::Domain(format!(
            "table id must be 1..=4, got {other}"
        ))),
    }
}

/// Compares computed energies against every row of a reference column.
pub fn compare_with(
    params: &MoleculeParams<f64>,
    reference: &ReferenceTable,
    tolerance: f64,
) -> Result<ComparisonReport> {
    let mut rows = Vec::with_capacity(reference.entries.len());
    let mut max_abs_diff = 0.0f64;
    for entry in &reference.entries {
        let computed_ev = energy(params, entry.n, entry.l)?;
        let abs_diff = (computed_ev - entry.energy_ev).abs();
        max_abs_diff = max_abs_diff.max(abs_diff);
        rows.push(ComparisonRow {
            n: entry.n,
            l: entry.l,
            computed_ev,
            reference_ev: entry.energy_ev,
            abs_diff,
        });
    }
    Ok(ComparisonReport {
        molecule: reference.molecule.clone(),
        method: reference.method,
        rows,
        max_abs_diff,
        tolerance,
        pass: max_abs_diff <= tolerance,
    })
}

/// Reproduces one published table against the contour-representation column
/// using the shipped molecule parameters.
pub fn compare_table(table_id: u8) -> Result<ComparisonReport> {
    let molecule = table_molecule(table_id)?;
    let params = builtin_molecule::<f64>(molecule)?;
    compare_table_with_params(table_id, &params, &builtin_reference_tables())
}

/// Same as [`compare_table`] with caller-supplied parameters and tables
/// (used when data files are overridden on disk).
pub fn compare_table_with_params(
    table_id: u8,
    params: &MoleculeParams<f64>,
    tables: &[ReferenceTable],
) -> Result<ComparisonReport> {
    let molecule = table_molecule(table_id)?;
    let tolerance = table_tolerance(table_id)?;
    let reference = tables
        .iter()
        .find(|t| t.molecule.eq_ignore_ascii_case(molecule) && t.method == Method::Icr)
        .ok_or_else(|| Error::Domain(format!("no reference column for {molecule}")))?;
    compare_with(params, reference, tolerance)
}
