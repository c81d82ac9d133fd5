//! Command-line interface: spectra, wavefunction export, published-table
//! comparison and the numerical verification suites.
//!
//! Exit codes: 0 = pass, 1 = comparison/verification failure, 2 = usage or
//! input error. Output contains no timestamps; identical invocations
//! produce byte-identical output.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use morse_icr::compare::{compare_table_with_params, table_molecule, ComparisonReport};
use morse_icr::molecule::{builtin_molecule, load_molecule, MoleculeParams};
use morse_icr::reference::{builtin_reference_tables, parse_reference_csv, ReferenceTable};
use morse_icr::spectrum::energy;
use morse_icr::verify::{suite, Check};
use morse_icr::wavefunction::{
    default_grid, radial_wavefunction, samples_to_csv, DEFAULT_GRID_POINTS,
};
use morse_icr::Error;

/// Environment variable pointing at a directory with `<NAME>.params` files
/// and an optional `reference_tables.csv` that override the built-ins.
const DATA_DIR_ENV: &str = "MORSE_DATA_DIR";

#[derive(Parser)]
#[command(
    name = "morse-icr",
    version,
    about = "Rotating-Morse bound states: spectra, wavefunctions, table reproduction, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print bound-state energies for selected quantum numbers
    Spectrum(SpectrumArgs),
    /// Export a radial wavefunction as CSV
    Wavefunction(WavefunctionArgs),
    /// Reproduce a published energy table (1 = H2, 2 = CO, 3 = HCl, 4 = LiH)
    Compare(CompareArgs),
    /// Run numerical verification suites
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Molecule name (H2, CO, HCl, LiH, or any name with --params)
    #[arg(short, long)]
    molecule: Option<String>,
    /// Molecule name as a bare argument (alternative to --molecule)
    #[arg(value_name = "MOLECULE", conflicts_with = "molecule")]
    molecule_positional: Option<String>,
    /// Vibrational quantum numbers, comma separated
    #[arg(long = "n", value_delimiter = ',', required = true)]
    n_values: Vec<u32>,
    /// Rotational quantum numbers, comma separated
    #[arg(long = "l", value_delimiter = ',', required = true)]
    l_values: Vec<u32>,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    /// Parameter file overriding the built-in molecule data
    #[arg(long)]
    params: Option<PathBuf>,
}

#[derive(Args)]
struct WavefunctionArgs {
    /// Molecule name
    #[arg(short, long)]
    molecule: Option<String>,
    /// Molecule name as a bare argument (alternative to --molecule)
    #[arg(value_name = "MOLECULE", conflicts_with = "molecule")]
    molecule_positional: Option<String>,
    /// Vibrational quantum number
    #[arg(long = "n")]
    n: u32,
    /// Rotational quantum number
    #[arg(long = "l")]
    l: u32,
    /// Output CSV path (written atomically)
    #[arg(short, long)]
    out: PathBuf,
    /// Number of grid points
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    grid_points: usize,
    /// Lower grid radius in Å (default 0.3·r0)
    #[arg(long)]
    r_min: Option<f64>,
    /// Upper grid radius in Å (default 5·r0)
    #[arg(long)]
    r_max: Option<f64>,
    /// Parameter file overriding the built-in molecule data
    #[arg(long)]
    params: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Published table number (1..=4)
    table_id: u8,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: all, pekeris, spectrum, norm, icr, oracle, moment
    #[arg(default_value = "all")]
    suite: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Wavefunction(args) => cmd_wavefunction(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Resolution order: explicit --params file, then $MORSE_DATA_DIR/<name>.params,
/// then the embedded defaults.
fn resolve_molecule(
    name: Option<&str>,
    params_file: Option<&Path>,
) -> Result<MoleculeParams<f64>, Error> {
    if let Some(path) = params_file {
        return load_molecule(path);
    }
    let name = name
        .ok_or_else(|| Error::Domain("a molecule name or --params file is required".to_string()))?;
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        let candidate = Path::new(&dir).join(format!("{name}.params"));
        if candidate.is_file() {
            return load_molecule(candidate);
        }
    }
    builtin_molecule(name)
}

/// Reference tables from $MORSE_DATA_DIR/reference_tables.csv when present,
/// otherwise the embedded copy.
fn resolve_reference_tables() -> Result<Vec<ReferenceTable>, Error> {
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        let candidate = Path::new(&dir).join("reference_tables.csv");
        if candidate.is_file() {
            let text = std::fs::read_to_string(candidate)?;
            return parse_reference_csv(&text);
        }
    }
    Ok(builtin_reference_tables())
}

fn molecule_name(flag: &Option<String>, positional: &Option<String>) -> Option<String> {
    flag.clone().or_else(|| positional.clone())
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<ExitCode, Error> {
    if args.n_values.is_empty() || args.l_values.is_empty() {
        return Err(Error::Domain("--n and --l must be non-empty".to_string()));
    }
    let name = molecule_name(&args.molecule, &args.molecule_positional);
    let params = resolve_molecule(name.as_deref(), args.params.as_deref())?;

    match args.format {
        OutputFormat::Table => {
            println!(
                "# {}: V0 = {} eV, r0 = {} A, alpha = {}, m = {} amu",
                params.name, params.v0, params.r0, params.alpha, params.reduced_mass
            );
            println!("{:>4} {:>4}  {:>12}", "n", "l", "E_eV");
            for &n in &args.n_values {
                for &l in &args.l_values {
                    match energy(&params, n, l) {
                        Ok(e) => println!("{n:>4} {l:>4}  {e:>12.5}"),
                        Err(Error::Unbound { .. } | Error::NoBoundSpectrum { .. }) => {
                            println!("{n:>4} {l:>4}  {:>12}", "unbound")
                        }
                        Err(other) => return Err(other),
                    }
                }
            }
        }
        OutputFormat::Csv => {
            println!("molecule,n,l,energy_eV,status");
            for &n in &args.n_values {
                for &l in &args.l_values {
                    match energy(&params, n, l) {
                        Ok(e) => println!("{},{n},{l},{e},bound", params.name),
                        Err(Error::Unbound { .. } | Error::NoBoundSpectrum { .. }) => {
                            println!("{},{n},{l},,unbound", params.name)
                        }
                        Err(other) => return Err(other),
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_wavefunction(args: WavefunctionArgs) -> Result<ExitCode, Error> {
    let name = molecule_name(&args.molecule, &args.molecule_positional);
    let params = resolve_molecule(name.as_deref(), args.params.as_deref())?;
    if args.grid_points < 2 {
        return Err(Error::Domain("need at least 2 grid points".to_string()));
    }

    let grid = match (args.r_min, args.r_max) {
        (None, None) => default_grid(&params, args.grid_points),
        (r_min, r_max) => {
            let lo = r_min.unwrap_or(0.3 * params.r0);
            let hi = r_max.unwrap_or(5.0 * params.r0);
            if !(lo > 0.0 && lo < hi) {
                return Err(Error::Domain(format!("invalid radial range [{lo}, {hi}]")));
            }
            let step = (hi - lo) / (args.grid_points as f64 - 1.0);
            (0..args.grid_points)
                .map(|i| lo + step * i as f64)
                .collect()
        }
    };

    let samples = radial_wavefunction(&params, args.n, args.l, &grid)?;
    let csv = samples_to_csv(&samples);
    write_atomically(&args.out, &csv)?;
    eprintln!(
        "wrote {} rows to {} (norm estimate {:.9})",
        samples.grid.len(),
        args.out.display(),
        samples.norm_estimate
    );
    Ok(ExitCode::SUCCESS)
}

fn write_atomically(path: &Path, contents: &str) -> Result<(), Error> {
    let directory = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut temp = directory.unwrap_or_else(|| Path::new(".")).to_path_buf();
    temp.push(format!(
        ".{}.tmp",
        path.file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_else(|| "wavefunction.csv".to_string())
    ));
    std::fs::write(&temp, contents)?;
    std::fs::rename(&temp, path)?;
    Ok(())
}

fn cmd_compare(args: CompareArgs) -> Result<ExitCode, Error> {
    let molecule = table_molecule(args.table_id)?;
    let params = resolve_molecule(Some(molecule), None)?;
    let tables = resolve_reference_tables()?;
    let report = compare_table_with_params(args.table_id, &params, &tables)?;
    print_comparison(args.table_id, &report);
    if report.pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn print_comparison(table_id: u8, report: &ComparisonReport) {
    println!(
        "# table {table_id}: {} computed vs {} reference",
        report.molecule, report.method
    );
    println!(
        "{:>4} {:>4}  {:>12} {:>12} {:>10}",
        "n", "l", "computed_eV", "reference_eV", "|diff|"
    );
    for row in &report.rows {
        println!(
            "{:>4} {:>4}  {:>12.5} {:>12.5} {:>10.2e}",
            row.n, row.l, row.computed_ev, row.reference_ev, row.abs_diff
        );
    }
    println!(
        "max |diff| = {:.3e} eV (tolerance {:.1e} eV)",
        report.max_abs_diff, report.tolerance
    );
    println!("RESULT: {}", if report.pass { "PASS" } else { "FAIL" });
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    // the suites always exercise the shipped data, but any override files in
    // $MORSE_DATA_DIR must at least load cleanly before we report health
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        for name in morse_icr::molecule::BUILTIN_MOLECULES {
            let candidate = Path::new(&dir).join(format!("{name}.params"));
            if candidate.is_file() {
                load_molecule::<f64>(&candidate)?;
            }
        }
        let tables = Path::new(&dir).join("reference_tables.csv");
        if tables.is_file() {
            parse_reference_csv(&std::fs::read_to_string(tables)?)?;
        }
    }

    let checks = suite(&args.suite)?;
    let mut failed = 0usize;
    for check in &checks {
        print_check(check);
        if check.gating && !check.pass {
            failed += 1;
        }
    }
    println!("{} checks, {} gating failures", checks.len(), failed);
    if failed == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn print_check(check: &Check) {
    let status = match (check.pass, check.gating) {
        (true, _) => "PASS",
        (false, true) => "FAIL",
        (false, false) => "INFO",
    };
    print!(
        "{status} {}: max err {:.3e} (tol {:.1e})",
        check.name, check.max_error, check.tolerance
    );
    match &check.note {
        Some(note) => println!("  [{note}]"),
        None => println!(),
    }
}
