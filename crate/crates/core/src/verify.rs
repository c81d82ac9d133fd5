//! Structured verification suites.
//!
//! Each suite returns a list of [`Check`]s with the observed worst error and
//! the tolerance it was held to, so the CLI can print one line per check and
//! the acceptance tests can assert on the same data. Informational checks
//! (`gating = false`) record findings without affecting pass/fail status.

use num_complex::Complex;

use crate::compare::compare_table;
use crate::contour::{
    boundary_vanishing, contour_power_identity, euler_integral_identity, kernel_ode_residual,
    residue_series_check, ContourSpec,
};
use crate::eigensolver::{
    eigenvalues_exact, eigenvalues_pekeris, eigenvalues_pekeris_raw, pekeris_state_nodes, GridSpec,
};
use crate::error::Result;
use crate::molecule::{builtin_molecule, MoleculeParams};
use crate::pekeris::{approx_centrifugal, morse_potential, pekeris_coefficients};
use crate::specfun::{kummer_1f1, kummer_via_laguerre, ln_gamma, pochhammer};
use crate::spectrum::{energy, spectral_setup};
use crate::tolerances as tol;
use crate::wavefunction::{
    count_sign_changes, default_grid, laguerre_moment, laguerre_orthogonality, norm_integral,
    radial_wavefunction, tail_amplitudes,
};

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    /// Worst observed error, in the units the tolerance is stated in.
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Whether a failure should fail the whole verification run.
    pub gating: bool,
    pub note: Option<String>,
}

impl Check {
    fn gate(name: impl Into<String>, max_error: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            max_error,
            tolerance,
            pass: max_error <= tolerance && max_error.is_finite(),
            gating: true,
            note: None,
        }
    }

    fn info(name: impl Into<String>, max_error: f64, tolerance: f64, note: String) -> Self {
        Self {
            name: name.into(),
            max_error,
            tolerance,
            pass: max_error <= tolerance && max_error.is_finite(),
            gating: false,
            note: Some(note),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Suite names accepted by [`suite`], in execution order of `all`.
pub const SUITE_NAMES: [&str; 6] = ["pekeris", "spectrum", "norm", "icr", "oracle", "moment"];

/// The (molecule, n, l) combinations printed in the reference tables.
pub fn table_states() -> Vec<(&'static str, u32, u32)> {
    let mut states = Vec::with_capacity(36);
    for molecule in ["H2", "CO", "HCl", "LiH"] {
        for n in [0u32, 5, 7] {
            for l in [0u32, 5, 10] {
                states.push((molecule, n, l));
            }
        }
    }
    states
}

fn molecules() -> Vec<MoleculeParams<f64>> {
    ["H2", "CO", "HCl", "LiH"]
        .iter()
        .map(|name| builtin_molecule::<f64>(name).expect("builtin molecules are valid"))
        .collect()
}

/// Runs one named suite (or `all`).
pub fn suite(name: &str) -> Result<Vec<Check>> {
    match name {
        "pekeris" => pekeris_suite(),
        "spectrum" => spectrum_suite(),
        "norm" => norm_suite(),
        "icr" => icr_suite(),
        "oracle" => oracle_suite(),
        "moment" => moment_suite(),
        "all" => {
            let mut checks = Vec::new();
            for suite_name in SUITE_NAMES {
                checks.extend(suite(suite_name)?);
            }
            Ok(checks)
        }
        other => Err(crate::error::Error::Domain(format!(
            "unknown suite `{other}` (expected all, pekeris, spectrum, norm, icr, oracle, moment)"
        ))),
    }
}

/// Structural checks of the centrifugal expansion and the Morse well.
pub fn pekeris_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    // coefficient cancellation over the physical α range
    let mut worst_sum = 0.0f64;
    let mut alpha = 0.5f64;
    while alpha <= 10.0 {
        let params = MoleculeParams::<f64>::new("probe", 1.0, 1.0, alpha, 1.0)?;
        let e = pekeris_coefficients(&params, 3);
        worst_sum = worst_sum.max((e.a0 + e.a1 + e.a2 - 1.0).abs());
        alpha += 0.05;
    }
    checks.push(Check::gate(
        "expansion coefficients sum to 1 over α ∈ [0.5, 10]",
        worst_sum,
        tol::PEKERIS_SUM_ABS,
    ));

    // third-order contact with the exact centrifugal term
    let mut worst_bound = 0.0f64;
    let mut worst_settle = 0.0f64;
    for params in molecules() {
        let e = pekeris_coefficients(&params, 5);
        let c = |x: f64| {
            let exact = e.gamma / ((1.0 + x) * (1.0 + x));
            (exact - approx_centrifugal(x, &e, params.alpha)) / (x * x * x)
        };
        let (c1, c2, c3) = (c(1e-2), c(5e-3), c(2.5e-3));
        for v in [c1, c2, c3] {
            worst_bound = worst_bound.max(v.abs() / e.gamma);
        }
        worst_settle =
            worst_settle.max((c3 - c2).abs() / ((c2 - c1).abs() + 1e-9 * e.gamma.max(1.0)));
    }
    checks.push(Check::gate(
        "centrifugal mismatch error(x)/x³ stays bounded as x → 0",
        worst_bound,
        10.0,
    ));
    checks.push(Check::gate(
        "error(x)/x³ settles toward its cubic coefficient",
        worst_settle,
        0.75,
    ));

    // well minimum −V0 exactly at x = 0
    let mut worst_min = 0.0f64;
    let mut derivative_brackets = true;
    for params in molecules() {
        worst_min = worst_min.max((morse_potential(0.0, &params) + params.v0).abs() / params.v0);
        let h = 1e-4;
        derivative_brackets &= morse_potential(-h, &params) > morse_potential(0.0, &params)
            && morse_potential(h, &params) > morse_potential(0.0, &params);
    }
    checks.push(Check::gate(
        "Morse minimum is −V₀ at the equilibrium length",
        worst_min,
        1e-15,
    ));
    checks.push(Check::gate(
        "Morse derivative changes sign across x = 0",
        if derivative_brackets { 0.0 } else { 1.0 },
        0.5,
    ));

    Ok(checks)
}

/// Closed-form spectrum checks including the published-table reproduction.
pub fn spectrum_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    for table_id in 1..=4u8 {
        let report = compare_table(table_id)?;
        checks.push(
            Check::gate(
                format!(
                    "table {table_id} ({}): closed form vs published column",
                    report.molecule
                ),
                report.max_abs_diff,
                report.tolerance,
            )
            .with_note(format!("{} rows compared, eV scale", report.rows.len())),
        );
    }

    let mut worst_consistency = 0.0f64;
    let mut worst_quantization = 0.0f64;
    for (molecule, n, l) in table_states() {
        let params = builtin_molecule::<f64>(molecule)?;
        let sp = spectral_setup(&params, l)?;
        let st = sp.state(n)?;
        let quadratic = sp.energy(n)?;
        let via_epsilon = sp.gamma * sp.a0 - st.epsilon * st.epsilon / sp.lambda0_sq;
        worst_consistency =
            worst_consistency.max((quadratic - via_epsilon).abs() / quadratic.abs());
        worst_quantization = worst_quantization.max((st.p + f64::from(n)).abs());
    }
    checks.push(Check::gate(
        "energy route consistency (quadratic form vs ε route)",
        worst_consistency,
        tol::ENERGY_CONSISTENCY_REL,
    ));
    checks.push(Check::gate(
        "quantization reconstruction p = −n",
        worst_quantization,
        tol::P_QUANTIZATION_ABS,
    ));

    let mut monotone = true;
    for params in molecules() {
        for l in [0u32, 5, 10] {
            let sp = spectral_setup(&params, l)?;
            let count = sp.max_bound_n();
            for n in 1..count {
                monotone &= sp.energy(n)? > sp.energy(n - 1)?;
            }
        }
        for n in [0u32, 5, 7] {
            for l in 0..10u32 {
                monotone &= energy(&params, n, l + 1)? > energy(&params, n, l)?;
            }
        }
    }
    checks.push(Check::gate(
        "energies rise with n (fixed l) and with l (fixed n)",
        if monotone { 0.0 } else { 1.0 },
        0.5,
    ));

    let mut worst_s_wave = 0.0f64;
    for params in molecules() {
        let sp = spectral_setup(&params, 0)?;
        let lambda0 = params.lambda0_sq().sqrt();
        for n in 0..sp.max_bound_n().min(9) {
            let classic = -params.v0
                * (1.0 - (f64::from(n) + 0.5) * params.alpha / (lambda0 * params.v0.sqrt()))
                    .powi(2);
            worst_s_wave = worst_s_wave.max((sp.energy(n)? - classic).abs() / classic.abs());
        }
    }
    checks.push(Check::gate(
        "s-wave energies reduce to the classic Morse formula",
        worst_s_wave,
        tol::S_WAVE_REL,
    ));

    Ok(checks)
}

/// Wavefunction normalization, node structure, orthogonality and decay.
pub fn norm_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut worst_norm = 0.0f64;
    let mut worst_tail = 0.0f64;
    for (molecule, n, l) in table_states() {
        let params = builtin_molecule::<f64>(molecule)?;
        let st = spectral_setup(&params, l)?.state(n)?;
        worst_norm = worst_norm.max((norm_integral(&st)? - 1.0).abs());
        let (left, right) = tail_amplitudes(&st)?;
        worst_tail = worst_tail.max(left).max(right);
    }
    checks.push(Check::gate(
        "quadrature norm of all 36 tabulated states",
        worst_norm,
        tol::NORM_ABS,
    ));
    checks.push(Check::gate(
        "wavefunction magnitude at the quadrature cutoffs",
        worst_tail,
        tol::TAIL_ABS,
    ));

    let mut node_mismatches = 0usize;
    for params in molecules() {
        let grid = default_grid(&params, 2000);
        for n in [0u32, 3, 5, 7] {
            for l in [0u32, 5, 10] {
                let samples = radial_wavefunction(&params, n, l, &grid)?;
                let peak = samples.values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
                if count_sign_changes(&samples.values, 1e-9 * peak) != n as usize {
                    node_mismatches += 1;
                }
            }
        }
    }
    checks.push(Check::gate(
        "radial node count equals n for n ≤ 7",
        node_mismatches as f64,
        0.5,
    ));

    let mut worst_overlap = 0.0f64;
    for &kappa in &[0.75f64, 2.5] {
        for n in 0..4u32 {
            for m in (n + 1)..=4u32 {
                worst_overlap = worst_overlap.max(laguerre_orthogonality(n, m, 2.0 * kappa)?.abs());
            }
        }
    }
    checks.push(Check::gate(
        "weighted Laguerre system is orthogonal (moderate κ)",
        worst_overlap,
        tol::ORTHOGONALITY_ABS,
    ));

    Ok(checks)
}

/// Contour-representation identities.
pub fn icr_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    // kernel solves its first-order equation (finite-difference derivative)
    let mut worst_ode = 0.0f64;
    for (molecule, n, l) in [
        ("H2", 0u32, 0u32),
        ("H2", 2, 5),
        ("CO", 1, 10),
        ("LiH", 3, 0),
    ] {
        let params = builtin_molecule::<f64>(molecule)?;
        let st = spectral_setup(&params, l)?.state(n)?;
        let half_width = st.lambda / 2.0;
        for i in 0..50 {
            let t = half_width * (-0.8 + 1.6 * f64::from(i) / 49.0);
            worst_ode = worst_ode.max(kernel_ode_residual(t, &st)?);
        }
    }
    checks.push(Check::gate(
        "kernel satisfies its first-order contour equation",
        worst_ode,
        tol::KERNEL_ODE_REL,
    ));

    // boundary term vanishes for positive exponents
    let mut worst_boundary = 0.0f64;
    for (p, q) in [(0.5f64, 0.5f64), (1.2, 3.4), (0.1, 7.0)] {
        for xi in [0.0f64, 0.7, 2.0] {
            worst_boundary = worst_boundary.max(boundary_vanishing(p, q, 4.0, xi));
        }
    }
    checks.push(Check::gate(
        "boundary term vanishes at t = ±β₂/α for p, q > 0",
        worst_boundary,
        0.0,
    ));
    let divergent = boundary_vanishing(-0.2f64, 3.4, 4.0, 0.1);
    checks.push(Check::info(
        "negative exponent boundary divergence is detected",
        if divergent.is_infinite() { 0.0 } else { 1.0 },
        0.5,
        "p < 0 must blow up at an endpoint".into(),
    ));

    // contour power identity on the k, n ≤ 5 box at ξ = 0.5
    let xi = Complex::new(0.5f64, 0.0);
    let contour = ContourSpec::new(xi, 1.0, 256)?;
    let mut worst_power = 0.0f64;
    for k in 1..=5u32 {
        for n in 1..=5u32 {
            let value = contour_power_identity(k, n, xi, &contour)?;
            worst_power = worst_power.max((value - xi.powu(k)).norm());
        }
    }
    let xi_c = Complex::new(0.7f64, 0.2);
    let contour_c = ContourSpec::new(xi_c, 0.8, 256)?;
    worst_power =
        worst_power.max((contour_power_identity(4, 2, xi_c, &contour_c)? - xi_c.powu(4)).norm());
    checks.push(Check::gate(
        "contour power identity reproduces ξ^k (256 nodes)",
        worst_power,
        tol::CONTOUR_POWER_ABS,
    ));

    // spectral convergence on node doubling, probed with the pole close to
    // the contour so 128 nodes is not already at the rounding floor
    let xi_near = Complex::new(0.9f64, 0.0);
    let coarse = ContourSpec::origin(1.0, 128)?;
    let fine = ContourSpec::origin(1.0, 256)?;
    let err_coarse = (contour_power_identity(3, 4, xi_near, &coarse)? - xi_near.powu(3)).norm();
    let err_fine = (contour_power_identity(3, 4, xi_near, &fine)? - xi_near.powu(3)).norm();
    let gain = if err_fine == 0.0 {
        f64::INFINITY
    } else {
        err_coarse / err_fine
    };
    checks.push(
        Check::gate(
            "trapezoid error drops ≥ 10× on node doubling",
            if gain.is_infinite() {
                0.0
            } else {
                tol::CONTOUR_SPECTRAL_GAIN / gain
            },
            1.0,
        )
        .with_note(format!("error {err_coarse:.2e} → {err_fine:.2e}")),
    );

    // residue identity over the stated box
    let contour_r = ContourSpec::origin(1.0, 256)?;
    let mut worst_residue = 0.0f64;
    for k in 0..=8u32 {
        for n in 1..=5u32 {
            for xi in [0.3f64, -0.55, 0.8] {
                let factorial: f64 = (1..=k).map(f64::from).product();
                let expected = pochhammer(f64::from(n), k) / factorial * xi.powi(k as i32);
                let got = residue_series_check(k, n, xi, &contour_r)?;
                worst_residue = worst_residue.max((got - Complex::new(expected, 0.0)).norm());
            }
        }
    }
    checks.push(Check::gate(
        "residue identity matches (n)_k/k! · ξ^k",
        worst_residue,
        tol::RESIDUE_ABS,
    ));

    // Euler-integral identity over a 5×5×5 grid
    let mut worst_euler = 0.0f64;
    for &p in &[0.35f64, 0.8, 1.5, 2.7, 4.0] {
        for &q in &[0.35f64, 0.8, 1.5, 2.7, 4.0] {
            for &s in &[-6.0f64, -2.5, 0.0, 2.5, 6.0] {
                let (lhs, rhs) = euler_integral_identity(p, q, s)?;
                worst_euler = worst_euler.max((lhs - rhs).abs() / rhs.abs().max(1.0));
            }
        }
    }
    checks.push(Check::gate(
        "segment integral equals B(p,q)·₁F₁(p; p+q; s)",
        worst_euler,
        tol::EULER_REL,
    ));

    // terminating hypergeometric vs Laguerre route
    let mut worst_identity = 0.0f64;
    for n in 0..=10u32 {
        for &b in &[0.5f64, 1.0, 2.5, 7.0, 20.0] {
            for i in 0..=10 {
                let x = 3.0 * f64::from(i);
                let direct = kummer_1f1(-f64::from(n), b, x)?;
                let via_laguerre = kummer_via_laguerre(n, b, x)?;
                worst_identity =
                    worst_identity.max((direct - via_laguerre).abs() / direct.abs().max(1.0));
            }
        }
    }
    checks.push(Check::gate(
        "₁F₁(−n; b; x) equals its Laguerre rewriting",
        worst_identity,
        tol::KUMMER_LAGUERRE_REL,
    ));

    Ok(checks)
}

/// Finite-difference eigensolver against the closed-form spectrum.
pub fn oracle_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let grid = GridSpec::<f64>::default();

    let mut worst_rel = 0.0f64;
    for params in molecules() {
        for l in [0u32, 5, 10] {
            let numeric = eigenvalues_pekeris(&params, l, 8, &grid)?;
            for n in [0usize, 5, 7] {
                let closed = energy(&params, n as u32, l)?;
                worst_rel = worst_rel.max(((numeric[n] - closed) / closed).abs());
            }
        }
    }
    checks.push(Check::gate(
        "finite-difference spectrum matches the closed form (36 states)",
        worst_rel,
        tol::ORACLE_REL,
    ));

    // discretization convergence order on H2 (0,0)
    let params = builtin_molecule::<f64>("H2")?;
    let exact = energy(&params, 0, 0)?;
    let e_n = eigenvalues_pekeris_raw(&params, 0, 1, &GridSpec::new(-0.8, 12.0, 2000)?)?[0];
    let e_2n = eigenvalues_pekeris_raw(&params, 0, 1, &GridSpec::new(-0.8, 12.0, 4001)?)?[0];
    let ratio = (e_n - exact) / (e_2n - exact);
    checks.push(
        Check::gate("eigenvalue error scales as 1/N²", (ratio - 4.0).abs(), 0.5)
            .with_note(format!("error ratio on halving h: {ratio:.4}")),
    );

    // eigenvector node counts
    let node_grid = GridSpec::new(-0.8, 12.0, 2000)?;
    let mut mismatches = 0usize;
    for n in [0u32, 1, 3] {
        if pekeris_state_nodes(&params, 0, n, &node_grid)? != n as usize {
            mismatches += 1;
        }
    }
    checks.push(Check::gate(
        "eigenvector node counts equal n",
        mismatches as f64,
        0.5,
    ));

    // s-wave: exact and Pekeris potentials coincide
    let mut worst_s = 0.0f64;
    let lih = builtin_molecule::<f64>("LiH")?;
    let pekeris_modes = eigenvalues_pekeris(&lih, 0, 3, &node_grid)?;
    let exact_modes = eigenvalues_exact(&lih, 0, 3, &node_grid)?;
    for (p, e) in pekeris_modes.iter().zip(&exact_modes) {
        worst_s = worst_s.max(((p - e) / e).abs());
    }
    checks.push(Check::gate(
        "s-wave: exact-mode solver equals Pekeris-mode solver",
        worst_s,
        1e-5,
    ));

    // physical approximation error of the centrifugal swap (report only)
    let mut worst_gap = 0.0f64;
    let mut gap_notes = Vec::new();
    for (name, l) in [("H2", 10u32), ("CO", 10)] {
        let params = builtin_molecule::<f64>(name)?;
        let p = eigenvalues_pekeris(&params, l, 1, &node_grid)?[0];
        let e = eigenvalues_exact(&params, l, 1, &node_grid)?[0];
        let gap = (p - e).abs();
        worst_gap = worst_gap.max(gap);
        gap_notes.push(format!("{name} l={l} n=0: {gap:.2e} eV"));
    }
    let gap_note = gap_notes.join(", ");
    checks.push(Check::info(
        "centrifugal-swap physical error |E_exact − E_pekeris|",
        worst_gap,
        0.05,
        gap_note,
    ));

    // boundary truncation: doubling x_max must not move the weakest state
    let h2 = builtin_molecule::<f64>("H2")?;
    let narrow = eigenvalues_pekeris(&h2, 10, 8, &GridSpec::new(-0.8, 12.0, 4000)?)?[7];
    let wide = eigenvalues_pekeris(&h2, 10, 8, &GridSpec::new(-0.8, 24.0, 8000)?)?[7];
    checks.push(Check::info(
        "Dirichlet truncation: doubling x_max leaves E(7,10) fixed",
        ((narrow - wide) / wide).abs(),
        1e-6,
        format!("E = {narrow:.9} vs {wide:.9} eV"),
    ));

    Ok(checks)
}

/// Moment-integral checks, including the printed-closed-form verdict.
pub fn moment_suite() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut worst_numinus1 = 0.0f64;
    let mut worst_nu0 = 0.0f64;
    let mut worst_n0 = 0.0f64;
    for &mu in &[0.5f64, 2.0, 7.3] {
        for n in [0u32, 3, 6] {
            let nf = f64::from(n);
            let m = laguerre_moment(n, mu, -1.0)?;
            let expected = (ln_gamma(mu + nf + 1.0)? - ln_gamma(nf + 1.0)?).exp() / mu;
            worst_numinus1 = worst_numinus1.max((m.quadrature - expected).abs() / expected.abs());

            let m = laguerre_moment(n, mu, 0.0)?;
            let expected = (ln_gamma(mu + nf + 1.0)? - ln_gamma(nf + 1.0)?).exp();
            worst_nu0 = worst_nu0.max((m.quadrature - expected).abs() / expected.abs());
        }
        for &nu in &[-0.5f64, 1.5] {
            let m = laguerre_moment(0, mu, nu)?;
            let expected = ln_gamma(mu + nu + 1.0)?.exp();
            worst_n0 = worst_n0.max((m.quadrature - expected).abs() / expected.abs());
        }
    }
    checks.push(Check::gate(
        "ν = −1 moment equals Γ(μ+n+1)/(μ·n!)",
        worst_numinus1,
        tol::MOMENT_NU_MINUS_ONE_REL,
    ));
    checks.push(Check::gate(
        "ν = 0 moment equals the orthonormality weight",
        worst_nu0,
        1e-9,
    ));
    checks.push(Check::gate("n = 0 moment equals Γ(μ+ν+1)", worst_n0, 1e-9));

    // verdict on the printed double-sum form; quadrature is authoritative
    let mut worst_printed = 0.0f64;
    let mut printed_matches = 0usize;
    let mut printed_total = 0usize;
    for n in 0..=6u32 {
        for &mu in &[0.5f64, 2.0, 7.3] {
            for &nu in &[-1.0f64, -0.5, 0.0, 1.5] {
                let m = laguerre_moment(n, mu, nu)?;
                let dev = m.relative_deviation();
                worst_printed = worst_printed.max(dev);
                printed_total += 1;
                if dev <= 1e-8 {
                    printed_matches += 1;
                }
            }
        }
    }
    checks.push(Check::info(
        "printed double-sum form vs quadrature (informational verdict)",
        worst_printed,
        1e-8,
        format!(
            "{printed_matches}/{printed_total} grid points agree; the printed form deviates \
             elsewhere, so the quadrature value is returned as authoritative"
        ),
    ));

    // closed-form normalization constant against the quadrature norm is
    // covered by the norm suite; here keep one cross-link at high n
    let params = builtin_molecule::<f64>("LiH")?;
    let st = spectral_setup(&params, 10)?.state(7)?;
    checks.push(Check::gate(
        "normalization constant closes the ν = −1 moment (LiH n=7, l=10)",
        (norm_integral(&st)? - 1.0).abs(),
        tol::NORM_ABS,
    ));

    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_dispatch_rejects_unknown() {
        assert!(suite("nonsense").is_err());
    }

    #[test]
    fn pekeris_suite_passes() {
        for check in pekeris_suite().unwrap() {
            assert!(
                check.pass || !check.gating,
                "{}: {:e}",
                check.name,
                check.max_error
            );
        }
    }

    #[test]
    fn spectrum_suite_passes() {
        for check in spectrum_suite().unwrap() {
            assert!(
                check.pass || !check.gating,
                "{}: {:e}",
                check.name,
                check.max_error
            );
        }
    }

    #[test]
    fn moment_suite_gating_checks_pass() {
        for check in moment_suite().unwrap() {
            if check.gating {
                assert!(check.pass, "{}: {:e}", check.name, check.max_error);
            }
        }
    }
}
