//! End-to-end tests of the `morse-icr` binary: output shapes, determinism
//! and the exit-code contract (0 pass, 1 verification failure, 2 usage).

use std::path::PathBuf;
use std::process::{Command, Output};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_morse-icr"))
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn spectrum_reproduces_h2_table_column() {
    let output = run(&["spectrum", "-m", "H2", "--n", "0,5,7", "--l", "0,5,10"]);
    assert!(output.status.success());
    let text = stdout(&output);
    // 9 data rows at 5 decimals
    let expected = [
        "-4.47601", "-4.25880", "-3.72195", "-2.22054", "-2.04356", "-1.60393", "-1.53746",
        "-1.37658", "-0.97582",
    ];
    for value in expected {
        assert!(text.contains(value), "missing {value} in:\n{text}");
    }
}

#[test]
fn spectrum_output_is_deterministic() {
    let first = run(&[
        "spectrum", "H2", "--n", "0,1,2", "--l", "0,3", "--format", "csv",
    ]);
    let second = run(&[
        "spectrum", "H2", "--n", "0,1,2", "--l", "0,3", "--format", "csv",
    ]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.starts_with("molecule,n,l,energy_eV,status\n"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn spectrum_marks_unbound_rows() {
    let output = run(&["spectrum", "-m", "H2", "--n", "0,16,17", "--l", "0"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("unbound"), "no unbound marker in:\n{text}");
    // n = 16 is the last bound s-wave level, n = 17 is not
    assert_eq!(text.matches("unbound").count(), 1);
}

#[test]
fn spectrum_rejects_unknown_molecule_with_usage_exit() {
    let output = run(&["spectrum", "-m", "Xe2", "--n", "0", "--l", "0"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn spectrum_requires_quantum_number_lists() {
    let output = run(&["spectrum", "-m", "H2", "--n", "0"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn compare_passes_for_all_tables() {
    for table in ["1", "2", "3", "4"] {
        let output = run(&["compare", table]);
        assert!(
            output.status.success(),
            "table {table}: {}",
            stdout(&output)
        );
        let text = stdout(&output);
        assert!(text.contains("RESULT: PASS"));
        assert!(text.contains("max |diff|"));
    }
}

#[test]
fn compare_rejects_invalid_table_id() {
    let output = run(&["compare", "9"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn wavefunction_writes_csv_with_expected_node_structure() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("morse_icr_cli_test_wf.csv");
    let _ = std::fs::remove_file(&path);

    let output = run(&[
        "wavefunction",
        "-m",
        "H2",
        "--n",
        "3",
        "--l",
        "0",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r_angstrom,R"));
    let values: Vec<f64> = lines
        .map(|line| line.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(values.len(), 2000);
    let peak = values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let sign_changes = values
        .windows(2)
        .filter(|w| w[0].abs() > 1e-9 * peak && w[1].abs() > 1e-9 * peak && w[0] * w[1] < 0.0)
        .count();
    assert_eq!(sign_changes, 3);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn wavefunction_ground_state_is_single_signed() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("morse_icr_cli_test_wf0.csv");
    let _ = std::fs::remove_file(&path);
    let output = run(&[
        "wavefunction",
        "H2",
        "--n",
        "0",
        "--l",
        "0",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let negatives = text
        .lines()
        .skip(1)
        .filter(|line| line.split(',').nth(1).unwrap().starts_with('-'))
        .count();
    assert_eq!(negatives, 0);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn wavefunction_unwritable_path_is_input_error() {
    let output = run(&[
        "wavefunction",
        "-m",
        "H2",
        "--n",
        "0",
        "--l",
        "0",
        "-o",
        "/nonexistent-dir/wf.csv",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn verify_pekeris_suite_passes() {
    let output = run(&["verify", "pekeris"]);
    assert!(output.status.success(), "{}", stdout(&output));
    let text = stdout(&output);
    assert!(text.contains("PASS"));
    assert!(text.contains("0 gating failures"));
}

#[test]
fn verify_icr_suite_passes() {
    let output = run(&["verify", "icr"]);
    assert!(output.status.success(), "{}", stdout(&output));
    let text = stdout(&output);
    for identity in [
        "contour power identity",
        "residue identity",
        "₁F₁(p; p+q; s)",
        "first-order contour equation",
    ] {
        assert!(
            text.contains(&format!("PASS {identity}"))
                || text.lines().any(|l| l.starts_with("PASS") && l.contains(identity)),
            "no passing line for {identity} in:\n{text}"
        );
    }
}

#[test]
fn verify_norm_suite_passes() {
    let output = run(&["verify", "norm"]);
    assert!(output.status.success(), "{}", stdout(&output));
    let text = stdout(&output);
    assert!(text.contains("36 tabulated states"));
    assert!(text.contains("0 gating failures"));
}

#[test]
fn verify_moment_suite_reports_printed_form_verdict() {
    let output = run(&["verify", "moment"]);
    assert!(output.status.success(), "{}", stdout(&output));
    let text = stdout(&output);
    assert!(text.contains("printed double-sum"));
    assert!(text.contains("authoritative"));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let output = run(&["verify", "bogus"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn params_override_and_data_dir_are_honored() {
    let dir = std::env::temp_dir().join("morse_icr_cli_data_dir_test");
    std::fs::create_dir_all(&dir).unwrap();
    // a deliberately different well depth so the override is observable
    std::fs::write(
        dir.join("H2.params"),
        "name = H2\nV0_eV = 2.0\nr0_angstrom = 0.7416\nalpha = 1.440558\nreduced_mass_amu = 0.50391\n",
    )
    .unwrap();

    let builtin = run(&[
        "spectrum", "-m", "H2", "--n", "0", "--l", "0", "--format", "csv",
    ]);
    let overridden = binary()
        .args([
            "spectrum", "-m", "H2", "--n", "0", "--l", "0", "--format", "csv",
        ])
        .env("MORSE_DATA_DIR", &dir)
        .output()
        .unwrap();
    assert!(overridden.status.success());
    assert_ne!(builtin.stdout, overridden.stdout);

    // --params has the same effect without the environment variable
    let via_flag = run(&[
        "spectrum",
        "--params",
        dir.join("H2.params").to_str().unwrap(),
        "--n",
        "0",
        "--l",
        "0",
        "--format",
        "csv",
    ]);
    assert_eq!(via_flag.stdout, overridden.stdout);

    // corrupted file surfaces a load error, in spectrum and in verify
    std::fs::write(dir.join("H2.params"), "name = H2\nV0_eV = -1\n").unwrap();
    let corrupted = binary()
        .args(["spectrum", "-m", "H2", "--n", "0", "--l", "0"])
        .env("MORSE_DATA_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(corrupted.status.code(), Some(2));
    let verify_corrupted = binary()
        .args(["verify", "pekeris"])
        .env("MORSE_DATA_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(verify_corrupted.status.code(), Some(2));

    let _ = std::fs::remove_dir_all(&dir);
}
