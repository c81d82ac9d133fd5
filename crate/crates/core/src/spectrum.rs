//! Closed-form spectral parameters and bound-state energies of the
//! Pekeris-transformed rotating Morse potential.
//!
//! With ξ = e^{−αx} the transformed radial equation reads
//!
//! ```text
//! R″ = (β₂² e^{−2αx} − β₁² e^{−αx} + ε²) R,
//! β₂² = Λ₀²(V₀ + γa₂),  β₁² = Λ₀²(2V₀ − γa₁),  ε² = −Λ₀²(E − γa₀)
//! ```
//!
//! and termination of the hypergeometric series quantizes p = −n, giving
//!
//! ```text
//! ε_n = β₁²/(2β₂) − α(n + ½) > 0,
//! E_{n,l} = γa₀ − [β₁²/β₂ − (2n+1)α]² / (4Λ₀²).
//! ```
//!
//! β₂ always means the positive root √(β₂²): positivity of q − p and of
//! λ = 2β₂/α forces it.

use crate::error::{Error, Result};
use crate::molecule::{MoleculeParams, QuantumNumbers};
use crate::pekeris::pekeris_coefficients;
use crate::real::Real;

/// State-independent spectral parameters of one (molecule, l) channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParams<T = f64> {
    /// β₁² = Λ₀²(2V₀ − γa₁), dimensionless.
    pub beta1_sq: T,
    /// β₂² = Λ₀²(V₀ + γa₂), dimensionless.
    pub beta2_sq: T,
    /// Λ₀² = 2mr₀²/ħ² in 1/eV.
    pub lambda0_sq: T,
    /// Width parameter α.
    pub alpha: T,
    /// Rotational scale γ in eV (zero iff l = 0).
    pub gamma: T,
    /// Pekeris coefficient a₀.
    pub a0: T,
    /// Angular momentum of the channel.
    pub l: u32,
}

/// Per-state parameters of a bound level on top of its channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateParams<T = f64> {
    pub base: SpectralParams<T>,
    /// Vibrational quantum number.
    pub n: u32,
    /// ε = β₁²/(2β₂) − α(n + ½) > 0.
    pub epsilon: T,
    /// κ = ε/α.
    pub kappa: T,
    /// λ = 2β₂/α.
    pub lambda: T,
    /// p of the kernel exponents; equals −n at quantization.
    pub p: T,
    /// q of the kernel exponents; q = 2κ + 1 − p.
    pub q: T,
}

impl<T: Real> SpectralParams<T> {
    /// Positive root β₂ = √(β₂²).
    pub fn beta2(&self) -> T {
        self.beta2_sq.sqrt()
    }

    /// β₁²/(2β₂), the ε-intercept of the quantization line.
    pub fn epsilon_intercept(&self) -> T {
        self.beta1_sq / (T::cast(2.0) * self.beta2())
    }

    /// ε for vibrational level n; must be positive for a bound state.
    pub fn epsilon(&self, n: u32) -> Result<T> {
        let half = T::cast(0.5);
        let epsilon = self.epsilon_intercept() - self.alpha * (T::of_u32(n) + half);
        if epsilon > T::zero() {
            Ok(epsilon)
        } else {
            Err(Error::Unbound { n, l: self.l })
        }
    }

    /// Number of bound vibrational levels: #{n ≥ 0 : ε_n > 0}.
    pub fn max_bound_n(&self) -> u32 {
        let half = T::cast(0.5);
        let threshold = self.epsilon_intercept() / self.alpha - half;
        if threshold <= T::zero() {
            return 0;
        }
        let floor = threshold.floor();
        let count = if threshold == floor {
            floor
        } else {
            floor + T::one()
        };
        count.to_u32().unwrap_or(u32::MAX)
    }

    /// Full per-state parameter set (ε, κ, λ, p, q) for level n.
    pub fn state(&self, n: u32) -> Result<StateParams<T>> {
        let epsilon = self.epsilon(n)?;
        let half = T::cast(0.5);
        let two = T::cast(2.0);
        let kappa = epsilon / self.alpha;
        let lambda = two * self.beta2() / self.alpha;
        let shift = self.beta1_sq / (two * self.alpha * self.beta2());
        Ok(StateParams {
            base: *self,
            n,
            epsilon,
            kappa,
            lambda,
            p: kappa + half - shift,
            q: kappa + half + shift,
        })
    }

    /// Bound-state energy of level n in eV.
    ///
    /// Computed as γa₀ − [β₁²/β₂ − (2n+1)α]²/(4Λ₀²); in debug builds the
    /// equivalent route γa₀ − ε²/Λ₀² is asserted to agree to 1e−12
    /// relative.
    pub fn energy(&self, n: u32) -> Result<T> {
        let epsilon = self.epsilon(n)?;
        let two = T::cast(2.0);
        let four = T::cast(4.0);
        let bracket = self.beta1_sq / self.beta2() - (two * T::of_u32(n) + T::one()) * self.alpha;
        let energy = self.gamma * self.a0 - bracket * bracket / (four * self.lambda0_sq);
        let via_epsilon = self.gamma * self.a0 - epsilon * epsilon / self.lambda0_sq;
        debug_assert!(
            (energy - via_epsilon).abs() <= T::cast(1e-12) * energy.abs(),
            "energy route mismatch: {energy} vs {via_epsilon}"
        );
        Ok(energy)
    }
}

/// Channel setup: β₁², β₂², Λ₀², α for one (molecule, l).
///
/// Fails with [`Error::NoBoundSpectrum`] when the Pekeris-shifted well
/// parameters lose positivity (l too large for the molecule).
pub fn spectral_setup<T: Real>(params: &MoleculeParams<T>, l: u32) -> Result<SpectralParams<T>> {
    let expansion = pekeris_coefficients(params, l);
    let lambda0_sq = params.lambda0_sq();
    let two = T::cast(2.0);

    let well = params.v0 + expansion.gamma * expansion.a2;
    if !(well > T::zero()) {
        return Err(Error::NoBoundSpectrum {
            l,
            message: format!("V0 + γa2 = {well} must be positive"),
        });
    }
    let tilt = two * params.v0 - expansion.gamma * expansion.a1;
    if !(tilt > T::zero()) {
        return Err(Error::NoBoundSpectrum {
            l,
            message: format!("2V0 − γa1 = {tilt} must be positive"),
        });
    }

    Ok(SpectralParams {
        beta1_sq: lambda0_sq * tilt,
        beta2_sq: lambda0_sq * well,
        lambda0_sq,
        alpha: params.alpha,
        gamma: expansion.gamma,
        a0: expansion.a0,
        l,
    })
}

/// ε for level n of a channel. Thin wrapper over [`SpectralParams::epsilon`].
pub fn epsilon_of_n<T: Real>(sp: &SpectralParams<T>, n: u32) -> Result<T> {
    sp.epsilon(n)
}

/// Validated quantum numbers: fails unless (n, l) is a bound state of the
/// molecule.
pub fn bound_numbers<T: Real>(
    params: &MoleculeParams<T>,
    n: u32,
    l: u32,
) -> Result<QuantumNumbers> {
    spectral_setup(params, l)?.epsilon(n)?;
    Ok(QuantumNumbers { n, l })
}

/// Bound-state energy E_{n,l} in eV.
pub fn energy<T: Real>(params: &MoleculeParams<T>, n: u32, l: u32) -> Result<T> {
    spectral_setup(params, l)?.energy(n)
}

/// Number of bound vibrational levels for the given l.
pub fn max_bound_n<T: Real>(params: &MoleculeParams<T>, l: u32) -> Result<u32> {
    Ok(spectral_setup(params, l)?.max_bound_n())
}
