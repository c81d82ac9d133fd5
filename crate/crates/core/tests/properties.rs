//! Property tests for the algebraic invariants that must hold for any
//! admissible parameters, not just the shipped molecules.

use proptest::prelude::*;

use morse_icr::molecule::{parse_params_str, MoleculeParams};
use morse_icr::pekeris::pekeris_coefficients;
use morse_icr::specfun::{beta, kummer_1f1, kummer_via_laguerre, ln_gamma, pochhammer};
use morse_icr::spectrum::spectral_setup;

proptest! {
    #[test]
    fn beta_is_symmetric(p in 0.05f64..50.0, q in 0.05f64..50.0) {
        let forward = beta(p, q).unwrap();
        let backward = beta(q, p).unwrap();
        // identical log-domain sums up to addition order
        prop_assert!((forward - backward).abs() <= 1e-15 * forward.abs());
    }

    #[test]
    fn pochhammer_matches_gamma_ratio(a in 0.1f64..30.0, k in 0u32..12) {
        let direct = pochhammer(a, k);
        let via_gamma = (ln_gamma(a + f64::from(k)).unwrap() - ln_gamma(a).unwrap()).exp();
        prop_assert!((direct - via_gamma).abs() <= 1e-12 * via_gamma.abs());
    }

    #[test]
    fn pekeris_coefficients_sum_to_one(alpha in 0.5f64..10.0, l in 0u32..20) {
        let params = MoleculeParams::<f64>::new("probe", 1.0, 1.0, alpha, 1.0).unwrap();
        let e = pekeris_coefficients(&params, l);
        prop_assert!((e.a0 + e.a1 + e.a2 - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn parameter_files_round_trip(
        v0 in 1e-3f64..100.0,
        r0 in 0.1f64..10.0,
        alpha in 0.2f64..12.0,
        mass in 1e-3f64..300.0,
    ) {
        let params = MoleculeParams::<f64>::new("probe", v0, r0, alpha, mass).unwrap();
        let reparsed = parse_params_str::<f64>(&params.to_params_string()).unwrap();
        prop_assert_eq!(params, reparsed);
    }

    #[test]
    fn terminating_kummer_equals_laguerre_route(
        n in 0u32..9,
        b in 0.4f64..15.0,
        x in 0.0f64..25.0,
    ) {
        let direct = kummer_1f1(-f64::from(n), b, x).unwrap();
        let via_laguerre = kummer_via_laguerre(n, b, x).unwrap();
        let scale = direct.abs().max(1.0);
        prop_assert!((direct - via_laguerre).abs() <= 1e-10 * scale);
    }

    #[test]
    fn bound_energies_stay_in_the_well(
        v0 in 0.5f64..20.0,
        r0 in 0.5f64..3.0,
        alpha in 1.0f64..4.0,
        mass in 0.4f64..10.0,
        l in 0u32..11,
    ) {
        let params = MoleculeParams::<f64>::new("probe", v0, r0, alpha, mass).unwrap();
        if let Ok(sp) = spectral_setup(&params, l) {
            let count = sp.max_bound_n();
            let mut previous = f64::NEG_INFINITY;
            for n in 0..count.min(40) {
                let e = sp.energy(n).unwrap();
                // below the centrifugal-shifted dissociation limit, above the
                // well floor shifted by the same offset, and rising with n
                prop_assert!(e < sp.gamma * sp.a0);
                prop_assert!(e > -v0 + sp.gamma * (sp.a0 - 1.0) - 1e-12);
                prop_assert!(e > previous);
                previous = e;
            }
        }
    }
}

/// The shipped domain types are immutable after construction and must be
/// freely shareable across tasks.
#[test]
fn domain_types_are_send_and_sync() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<morse_icr::MoleculeParams64>();
    assert_send_sync::<morse_icr::SpectralParams64>();
    assert_send_sync::<morse_icr::StateParams64>();
    assert_send_sync::<morse_icr::WavefunctionSamples64>();
    assert_send_sync::<morse_icr::BoundState64>();
    assert_send_sync::<morse_icr::reference::ReferenceTable>();
    assert_send_sync::<morse_icr::ContourSpec64>();
    assert_send_sync::<morse_icr::GridSpec64>();
}

/// The numeric core is scalar-generic; run a coarse f32 pass to keep the
/// generic surface honest (tolerances here are f32-scale only).
#[test]
fn f32_instantiation_smoke() {
    use morse_icr::molecule::builtin_molecule;
    use morse_icr::pekeris::morse_potential;
    use morse_icr::specfun::{kummer_1f1, laguerre, ln_gamma};
    use morse_icr::spectrum::{energy, spectral_setup};

    let params = builtin_molecule::<f32>("H2").unwrap();
    assert!((morse_potential(0.0f32, &params) + params.v0).abs() < 1e-6);
    assert!((ln_gamma(1.0f32).unwrap()).abs() < 1e-6);
    assert!((laguerre(1, 0.5f32, 2.0) - (1.0 + 0.5 - 2.0)).abs() < 1e-6);
    assert!((kummer_1f1(-1.0f32, 2.0, 1.0).unwrap() - 0.5).abs() < 1e-6);

    let e32 = energy(&params, 0, 0).unwrap();
    let e64 = energy(&builtin_molecule::<f64>("H2").unwrap(), 0, 0).unwrap();
    assert!((f64::from(e32) - e64).abs() < 1e-3, "{e32} vs {e64}");
    assert!(spectral_setup(&params, 5).unwrap().max_bound_n() >= 8);
}

#[test]
fn bound_numbers_enforces_the_bound_state_invariant() {
    use morse_icr::molecule::builtin_molecule;
    use morse_icr::spectrum::bound_numbers;

    let params = builtin_molecule::<f64>("H2").unwrap();
    assert!(bound_numbers(&params, 7, 10).is_ok());
    assert!(bound_numbers(&params, 40, 0).is_err());
}
