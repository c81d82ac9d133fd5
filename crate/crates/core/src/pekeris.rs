//! Morse and effective potentials, and the Pekeris replacement of the
//! centrifugal barrier.
//!
//! The centrifugal term l(l+1)ħ²/(2mr²) blocks a closed-form solution for
//! l > 0. The Pekeris approximation swaps it for a three-term exponential
//! profile matched to third order at the equilibrium bond length,
//!
//! ```text
//! γ/(1+x)²  ≈  γ (a₀ + a₁ e^{−αx} + a₂ e^{−2αx}),   x = (r − r₀)/r₀
//! ```
//!
//! which keeps the l > 0 problem in exactly solvable Morse form. The `Exact`
//! mode below retains the true 1/r² barrier so the quality of the swap can
//! be measured instead of assumed.

use crate::error::{Error, Result};
use crate::molecule::MoleculeParams;
use crate::real::Real;

/// Coefficients of the exponential centrifugal profile for one (molecule, l).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PekerisExpansion<T = f64> {
    /// Rotational energy scale γ = l(l+1)ħ²/(2mr₀²), in eV. Zero iff l = 0.
    pub gamma: T,
    pub a0: T,
    pub a1: T,
    pub a2: T,
}

/// Which centrifugal term enters the effective potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentrifugalMode {
    /// True l(l+1)ħ²/(2mr²) barrier; not solvable in closed form for l > 0.
    Exact,
    /// Three-term exponential replacement; the closed-form spectrum solves
    /// exactly this potential.
    Pekeris,
}

/// Morse potential V₀(e^{−2αx} − 2e^{−αx}) at dimensionless displacement
/// x = (r − r₀)/r₀, in eV.
pub fn morse_potential<T: Real>(x: T, params: &MoleculeParams<T>) -> T {
    let u = (-params.alpha * x).exp();
    params.v0 * (u * u - (u + u))
}

/// Expansion coefficients for the centrifugal profile:
/// a₀ = 1 − 3/α + 3/α², a₁ = 4/α − 6/α², a₂ = −1/α + 3/α².
pub fn pekeris_coefficients<T: Real>(params: &MoleculeParams<T>, l: u32) -> PekerisExpansion<T> {
    let one = T::one();
    let inv = one / params.alpha;
    let inv_sq = inv * inv;
    let three = T::cast(3.0);
    PekerisExpansion {
        gamma: params.centrifugal_gamma(l),
        a0: one - three * inv + three * inv_sq,
        a1: T::cast(4.0) * inv - T::cast(6.0) * inv_sq,
        a2: -inv + three * inv_sq,
    }
}

/// The approximated centrifugal term γ(a₀ + a₁e^{−αx} + a₂e^{−2αx}), in eV.
pub fn approx_centrifugal<T: Real>(x: T, expansion: &PekerisExpansion<T>, alpha: T) -> T {
    let u = (-alpha * x).exp();
    expansion.gamma * (expansion.a0 + expansion.a1 * u + expansion.a2 * u * u)
}

/// The exact centrifugal term l(l+1)ħ²/(2mr²) at radius r (Å), in eV.
pub fn exact_centrifugal<T: Real>(r: T, params: &MoleculeParams<T>, l: u32) -> Result<T> {
    if !(r > T::zero()) {
        return Err(Error::Domain(format!(
            "centrifugal term requires r > 0, got {r}"
        )));
    }
    let ratio = params.r0 / r;
    Ok(params.centrifugal_gamma(l) * ratio * ratio)
}

/// Effective potential at radius r (Å) for angular momentum l, in eV.
pub fn effective_potential<T: Real>(
    r: T,
    params: &MoleculeParams<T>,
    l: u32,
    mode: CentrifugalMode,
) -> Result<T> {
    let x = (r - params.r0) / params.r0;
    let centrifugal = match mode {
        CentrifugalMode::Exact => exact_centrifugal(r, params, l)?,
        CentrifugalMode::Pekeris => {
            let expansion = pekeris_coefficients(params, l);
            approx_centrifugal(x, &expansion, params.alpha)
        }
    };
    Ok(centrifugal + morse_potential(x, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::molecule::builtin_molecule;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn morse_minimum_and_limits() {
        let params = builtin_molecule::<f64>("H2").unwrap();
        assert_relative_eq!(morse_potential(0.0, &params), -params.v0);
        assert!(morse_potential(50.0, &params).abs() < 1e-12);
        // u = 1/2 ⇒ V = V0 (1/4 − 1) = −(3/4) V0
        let x_half = (2.0f64).ln() / params.alpha;
        assert_relative_eq!(
            morse_potential(x_half, &params),
            -0.75 * params.v0,
            max_relative = 1e-14
        );
    }

    #[test]
    fn morse_minimum_is_a_sign_change_of_the_derivative() {
        let params = builtin_molecule::<f64>("CO").unwrap();
        let h = 1e-4;
        let left = morse_potential(-h, &params);
        let right = morse_potential(h, &params);
        let center = morse_potential(0.0, &params);
        assert!(left > center && right > center);
    }

    #[test]
    fn coefficients_at_alpha_three() {
        let params = MoleculeParams::<f64>::new("X", 1.0, 1.0, 3.0, 1.0).unwrap();
        let exp = pekeris_coefficients(&params, 1);
        assert_relative_eq!(exp.a0, 1.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(exp.a1, 2.0 / 3.0, max_relative = 1e-15);
        assert_abs_diff_eq!(exp.a2, 0.0, epsilon = 1e-16);
    }

    #[test]
    fn coefficient_sum_is_one() {
        let mut alpha = 0.5f64;
        while alpha <= 10.0 {
            let params = MoleculeParams::<f64>::new("X", 1.0, 1.0, alpha, 1.0).unwrap();
            let exp = pekeris_coefficients(&params, 3);
            assert_abs_diff_eq!(exp.a0 + exp.a1 + exp.a2, 1.0, epsilon = 1e-14);
            alpha += 0.1;
        }
    }

    #[test]
    fn centrifugal_zero_for_l_zero() {
        let params = builtin_molecule::<f64>("LiH").unwrap();
        let exp = pekeris_coefficients(&params, 0);
        assert_eq!(exp.gamma, 0.0);
        assert_eq!(approx_centrifugal(0.37, &exp, params.alpha), 0.0);
    }

    #[test]
    fn expansion_exact_at_equilibrium() {
        let params = builtin_molecule::<f64>("H2").unwrap();
        let exp = pekeris_coefficients(&params, 10);
        // at x = 0 the profile reduces to γ(a0+a1+a2) = γ = γ/(1+0)²
        assert_relative_eq!(
            approx_centrifugal(0.0, &exp, params.alpha),
            exp.gamma,
            max_relative = 1e-14
        );
    }

    #[test]
    fn third_order_taylor_match() {
        // the mismatch γ/(1+x)² − profile must vanish to third order:
        // err(x)/x³ approaches a finite constant as x → 0
        for name in ["H2", "CO"] {
            let params = builtin_molecule::<f64>(name).unwrap();
            let exp = pekeris_coefficients(&params, 5);
            let err_over_x3 = |x: f64| {
                let exact = exp.gamma / ((1.0 + x) * (1.0 + x));
                (exact - approx_centrifugal(x, &exp, params.alpha)) / (x * x * x)
            };
            let c1 = err_over_x3(1e-2);
            let c2 = err_over_x3(5e-3);
            let c3 = err_over_x3(2.5e-3);
            assert!(c1.is_finite() && c2.is_finite() && c3.is_finite());
            assert!(c1.abs() <= 10.0 * exp.gamma);
            // successive values settle toward the cubic coefficient
            assert!((c3 - c2).abs() <= (c2 - c1).abs() + 1e-9 * exp.gamma);
        }
    }

    #[test]
    fn effective_potential_modes() {
        let params = builtin_molecule::<f64>("H2").unwrap();
        // l = 0: both modes identical everywhere
        for r in [0.4, 0.7416, 1.3, 2.9] {
            let exact = effective_potential(r, &params, 0, CentrifugalMode::Exact).unwrap();
            let pekeris = effective_potential(r, &params, 0, CentrifugalMode::Pekeris).unwrap();
            assert_relative_eq!(exact, pekeris, max_relative = 1e-15);
        }
        // l > 0: equal at r = r0, close nearby
        let exact = effective_potential(params.r0, &params, 10, CentrifugalMode::Exact).unwrap();
        let pekeris =
            effective_potential(params.r0, &params, 10, CentrifugalMode::Pekeris).unwrap();
        assert_relative_eq!(exact, pekeris, max_relative = 1e-13);

        let r = 1.2 * params.r0;
        let exact = effective_potential(r, &params, 10, CentrifugalMode::Exact).unwrap();
        let pekeris = effective_potential(r, &params, 10, CentrifugalMode::Pekeris).unwrap();
        let gap = (exact - pekeris).abs();
        assert!(gap > 0.0 && gap < 0.05, "unexpected gap {gap}");
    }

    #[test]
    fn exact_mode_rejects_non_positive_radius() {
        let params = builtin_molecule::<f64>("H2").unwrap();
        assert!(effective_potential(0.0, &params, 3, CentrifugalMode::Exact).is_err());
        assert!(effective_potential(-1.0, &params, 3, CentrifugalMode::Exact).is_err());
    }
}
