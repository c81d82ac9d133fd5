//! Embedded reference energies: the published rovibrational levels of H₂,
//! CO, HCl and LiH for the contour-representation result and the seven
//! comparison methods, stored as a plain CSV resource.
//!
//! These are transcription data only; none of the comparison methods is
//! reimplemented here.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Solution method a reference column was produced with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Inverse contour representation (the method implemented by this crate).
    Icr,
    Susy,
    Aim,
    Variational,
    Sne,
    Eqr,
    Nu,
    Msne,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Icr,
        Method::Susy,
        Method::Aim,
        Method::Variational,
        Method::Sne,
        Method::Eqr,
        Method::Nu,
        Method::Msne,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Icr => "ICR",
            Method::Susy => "SUSY",
            Method::Aim => "AIM",
            Method::Variational => "Variational",
            Method::Sne => "SNE",
            Method::Eqr => "EQR",
            Method::Nu => "NU",
            Method::Msne => "MSNE",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                line: 0,
                message: format!("unknown method `{s}`"),
            })
    }
}

/// One (n, l) → energy row of a reference table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceEntry {
    pub n: u32,
    pub l: u32,
    pub energy_ev: f64,
}

/// All rows of one (molecule, method) column.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceTable {
    pub molecule: String,
    pub method: Method,
    pub entries: Vec<ReferenceEntry>,
}

impl ReferenceTable {
    pub fn lookup(&self, n: u32, l: u32) -> Option<f64> {
        self.entries
            .iter()
            .find(|e| e.n == n && e.l == l)
            .map(|e| e.energy_ev)
    }
}

const EMBEDDED_CSV: &str = include_str!("../data/reference_tables.csv");

/// Expected CSV header; the column names are part of the file contract.
pub const CSV_HEADER: &str = "molecule,method,n,l,energy_eV";

/// Parses reference CSV text into per-(molecule, method) tables, preserving
/// file order. Validates key uniqueness and that every energy is a bound
/// (negative) level.
pub fn parse_reference_csv(text: &str) -> Result<Vec<ReferenceTable>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == CSV_HEADER => {}
        other => {
            return Err(Error::Parse {
                line: 1,
                message: format!(
                    "expected header `{CSV_HEADER}`, got `{}`",
                    other.map(|(_, h)| h).unwrap_or("")
                ),
            });
        }
    }

    let mut tables: Vec<ReferenceTable> = Vec::new();
    for (idx, raw) in lines {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 5 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 5 fields, got {}", fields.len()),
            });
        }
        let molecule = fields[0].to_string();
        let method: Method = fields[1].parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("unknown method `{}`", fields[1]),
        })?;
        let parse_num = |s: &str, what: &str| -> Result<f64> {
            s.parse::<f64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("{what} is not a number: `{s}`"),
            })
        };
        let n = parse_num(fields[2], "n")? as u32;
        let l = parse_num(fields[3], "l")? as u32;
        let energy_ev = parse_num(fields[4], "energy_eV")?;
        if energy_ev >= 0.0 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("bound-state energy must be negative, got {energy_ev}"),
            });
        }

        let table = match tables
            .iter_mut()
            .find(|t| t.molecule == molecule && t.method == method)
        {
            Some(t) => t,
            None => {
                tables.push(ReferenceTable {
                    molecule,
                    method,
                    entries: Vec::new(),
                });
                tables.last_mut().expect("just pushed")
            }
        };
        if table.lookup(n, l).is_some() {
            return Err(Error::Parse {
                line: line_no,
                message: format!(
                    "duplicate key ({}, {}, n={n}, l={l})",
                    table.molecule, table.method
                ),
            });
        }
        table.entries.push(ReferenceEntry { n, l, energy_ev });
    }
    Ok(tables)
}

/// The embedded reference tables (all four molecules, every method column).
pub fn builtin_reference_tables() -> Vec<ReferenceTable> {
    parse_reference_csv(EMBEDDED_CSV).expect("embedded reference CSV is valid")
}

/// Raw text of the embedded reference CSV.
pub fn builtin_reference_csv() -> &'static str {
    EMBEDDED_CSV
}

/// Looks up one embedded reference energy.
pub fn lookup_reference(
    tables: &[ReferenceTable],
    molecule: &str,
    method: Method,
    n: u32,
    l: u32,
) -> Option<f64> {
    tables
        .iter()
        .find(|t| t.molecule.eq_ignore_ascii_case(molecule) && t.method == method)
        .and_then(|t| t.lookup(n, l))
}
