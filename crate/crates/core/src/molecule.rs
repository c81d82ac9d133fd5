//! Molecule parameters: validated physical constants of one diatomic
//! species, a line-oriented `key = value` file format, and the four shipped
//! parameter sets.
//!
//! Unit conventions: energies in eV, lengths in Å, masses in amu. The only
//! conversion constants are ħc and the amu mass equivalent from
//! [`crate::real`].

use std::path::Path;

use crate::error::{Error, Result};
use crate::real::{Real, AMU_EV, HBARC_EV_ANGSTROM};

/// Physical constants of one diatomic molecule in the Morse model.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeParams<T = f64> {
    /// Short species label, e.g. `H2`.
    pub name: String,
    /// Dissociation energy V₀ in eV (depth of the well).
    pub v0: T,
    /// Equilibrium bond length r₀ in Å.
    pub r0: T,
    /// Dimensionless width parameter α = a·r₀.
    pub alpha: T,
    /// Reduced mass in amu.
    pub reduced_mass: T,
}

/// Vibrational and rotational quantum numbers of one bound state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
}

impl<T: Real> MoleculeParams<T> {
    /// Builds a parameter set, rejecting non-positive values.
    pub fn new(name: impl Into<String>, v0: T, r0: T, alpha: T, reduced_mass: T) -> Result<Self> {
        let params = Self {
            name: name.into(),
            v0,
            r0,
            alpha,
            reduced_mass,
        };
        params.validate()?;
        Ok(params)
    }

    fn validate(&self) -> Result<()> {
        let check = |field: &'static str, value: T| -> Result<()> {
            if value > T::zero() && value.is_finite() {
                Ok(())
            } else {
                Err(Error::Validation {
                    field,
                    message: format!("must be positive and finite, got {value}"),
                })
            }
        };
        check("V0_eV", self.v0)?;
        check("r0_angstrom", self.r0)?;
        check("alpha", self.alpha)?;
        check("reduced_mass_amu", self.reduced_mass)?;
        let l0 = self.lambda0_sq();
        if !(l0 > T::zero() && l0.is_finite()) {
            return Err(Error::Validation {
                field: "reduced_mass_amu",
                message: format!("derived length scale Λ₀² = {l0} is not finite and positive"),
            });
        }
        Ok(())
    }

    /// Λ₀² = 2 m r₀²/ħ² in 1/eV.
    pub fn lambda0_sq(&self) -> T {
        let mc2 = self.reduced_mass * T::cast(AMU_EV);
        let hbarc = T::cast(HBARC_EV_ANGSTROM);
        (T::one() + T::one()) * mc2 * self.r0 * self.r0 / (hbarc * hbarc)
    }

    /// Λ₀ = r₀ √(2m)/ħ in 1/√eV.
    pub fn lambda0(&self) -> T {
        self.lambda0_sq().sqrt()
    }

    /// Rotational energy scale γ = l(l+1) ħ²/(2 m r₀²) = l(l+1)/Λ₀², in eV.
    pub fn centrifugal_gamma(&self, l: u32) -> T {
        let lf = T::of_u32(l);
        lf * (lf + T::one()) / self.lambda0_sq()
    }

    /// Serializes to the `key = value` text format. `Display` formatting of
    /// the scalar is shortest-round-trip, so re-parsing reproduces the
    /// values bit for bit.
    pub fn to_params_string(&self) -> String {
        format!(
            "name = {}\nV0_eV = {}\nr0_angstrom = {}\nalpha = {}\nreduced_mass_amu = {}\n",
            self.name, self.v0, self.r0, self.alpha, self.reduced_mass
        )
    }
}

/// Parses the line-oriented `key = value` format with `#` comments.
pub fn parse_params_str<T: Real>(text: &str) -> Result<MoleculeParams<T>> {
    let mut name: Option<String> = None;
    let mut v0: Option<T> = None;
    let mut r0: Option<T> = None;
    let mut alpha: Option<T> = None;
    let mut mass: Option<T> = None;

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("expected `key = value`, got `{line}`"),
        })?;
        let key = key.trim();
        let value = value.trim();
        let parse_number = |field: &str| -> Result<T> {
            value
                .parse::<f64>()
                .ok()
                .and_then(T::from_f64)
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: format!("`{field}` is not a number: `{value}`"),
                })
        };
        let assign_once = |slot: &mut Option<T>, field: &str, parsed: T| -> Result<()> {
            if slot.is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("duplicate key `{field}`"),
                });
            }
            *slot = Some(parsed);
            Ok(())
        };
        match key {
            "name" => {
                if name.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "duplicate key `name`".into(),
                    });
                }
                if value.is_empty() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "`name` must not be empty".into(),
                    });
                }
                name = Some(value.to_string());
            }
            "V0_eV" => assign_once(&mut v0, key, parse_number(key)?)?,
            "r0_angstrom" => assign_once(&mut r0, key, parse_number(key)?)?,
            "alpha" => assign_once(&mut alpha, key, parse_number(key)?)?,
            "reduced_mass_amu" => assign_once(&mut mass, key, parse_number(key)?)?,
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("unknown key `{other}`"),
                });
            }
        }
    }

    let line = text.lines().count();
    let require = |field: &'static str| Error::Parse {
        line,
        message: format!("missing required key `{field}`"),
    };
    MoleculeParams::new(
        name.ok_or_else(|| require("name"))?,
        v0.ok_or_else(|| require("V0_eV"))?,
        r0.ok_or_else(|| require("r0_angstrom"))?,
        alpha.ok_or_else(|| require("alpha"))?,
        mass.ok_or_else(|| require("reduced_mass_amu"))?,
    )
}

/// Loads and validates a molecule parameter file.
pub fn load_molecule<T: Real>(path: impl AsRef<Path>) -> Result<MoleculeParams<T>> {
    let text = std::fs::read_to_string(path)?;
    parse_params_str(&text)
}

/// Names of the shipped parameter sets, in reference-table order.
pub const BUILTIN_MOLECULES: [&str; 4] = ["H2", "CO", "HCl", "LiH"];

/// Raw text of a shipped parameter file, if `name` matches (case-insensitive).
pub fn builtin_params_text(name: &str) -> Option<&'static str> {
    match name.to_ascii_uppercase().as_str() {
        "H2" => Some(include_str!("../data/H2.params")),
        "CO" => Some(include_str!("../data/CO.params")),
        "HCL" => Some(include_str!("../data/HCl.params")),
        "LIH" => Some(include_str!("../data/LiH.params")),
        _ => None,
    }
}

/// One of the four shipped molecules by name (case-insensitive).
pub fn builtin_molecule<T: Real>(name: &str) -> Result<MoleculeParams<T>> {
    let text = builtin_params_text(name).ok_or_else(|| Error::UnknownMolecule(name.to_string()))?;
    parse_params_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive_v0() {
        let text = "name = X\nV0_eV = 0\nr0_angstrom = 1\nalpha = 2\nreduced_mass_amu = 1\n";
        match parse_params_str::<f64>(text) {
            Err(Error::Validation { field, .. }) => assert_eq!(field, "V0_eV"),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn missing_r0_is_a_parse_error_naming_the_key() {
        let text = "name = X\nV0_eV = 4\nalpha = 2\nreduced_mass_amu = 1\n";
        match parse_params_str::<f64>(text) {
            Err(Error::Parse { message, .. }) => assert!(message.contains("r0_angstrom")),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_error_reports_line_number() {
        let text = "name = X\nV0_eV == 4\n";
        match parse_params_str::<f64>(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# species\nname = X # trailing\n\nV0_eV = 4.0\nr0_angstrom = 1.0\nalpha = 2.0\nreduced_mass_amu = 1.0\n";
        let params = parse_params_str::<f64>(text).unwrap();
        assert_eq!(params.name, "X");
        assert_eq!(params.v0, 4.0);
    }

    #[test]
    fn duplicate_key_rejected() {
        let text =
            "name = X\nV0_eV = 4\nV0_eV = 5\nr0_angstrom = 1\nalpha = 2\nreduced_mass_amu = 1\n";
        assert!(matches!(
            parse_params_str::<f64>(text),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn builtin_molecules_load() {
        for name in BUILTIN_MOLECULES {
            let params = builtin_molecule::<f64>(name).unwrap();
            assert_eq!(params.name, name);
            assert!(params.lambda0_sq() > 0.0);
        }
        assert!(builtin_molecule::<f64>("hcl").is_ok());
        assert!(matches!(
            builtin_molecule::<f64>("He2"),
            Err(Error::UnknownMolecule(_))
        ));
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let params = builtin_molecule::<f64>("H2").unwrap();
        let reparsed = parse_params_str::<f64>(&params.to_params_string()).unwrap();
        assert_eq!(params, reparsed);

        // awkward values survive too
        let p =
            MoleculeParams::<f64>::new("X", 0.1 + 0.2, 1.0 / 3.0, 2.0_f64.sqrt(), 1e-3).unwrap();
        let q = parse_params_str::<f64>(&p.to_params_string()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn centrifugal_gamma_zero_for_s_states() {
        let params = builtin_molecule::<f64>("CO").unwrap();
        assert_eq!(params.centrifugal_gamma(0), 0.0);
        assert!(params.centrifugal_gamma(10) > 0.0);
    }
}
