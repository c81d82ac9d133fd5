//! Numerical verification of the contour-transform machinery behind the
//! closed-form solution: the transform kernel and its first-order equation,
//! endpoint vanishing, the beta-function contour power identity, the
//! residue series, and the collapsed Euler-integral form of the solution.
//!
//! Circular contours are evaluated by the uniform trapezoid rule, which is
//! spectrally accurate for analytic integrands, so node doubling is itself a
//! convergence diagnostic.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quadrature::integrate_power_singular;
use crate::real::Real;
use crate::specfun::{beta, kummer_1f1};
use crate::spectrum::StateParams;

/// A circular contour: `num_points` trapezoid nodes on |z − center| = radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSpec<T = f64> {
    pub center: Complex<T>,
    pub radius: T,
    pub num_points: usize,
}

impl<T: Real> ContourSpec<T> {
    pub fn new(center: Complex<T>, radius: T, num_points: usize) -> Result<Self> {
        if !(radius > T::zero()) {
            return Err(Error::Contour(format!(
                "radius must be positive, got {radius}"
            )));
        }
        if num_points < 64 {
            return Err(Error::Contour(format!(
                "need at least 64 trapezoid nodes, got {num_points}"
            )));
        }
        Ok(Self {
            center,
            radius,
            num_points,
        })
    }

    /// Circle of given radius centered at the origin.
    pub fn origin(radius: T, num_points: usize) -> Result<Self> {
        Self::new(Complex::new(T::zero(), T::zero()), radius, num_points)
    }

    /// (1/2πi) ∮ f(z) dz by the uniform trapezoid rule, counterclockwise.
    fn cauchy_average<F: Fn(Complex<T>) -> Complex<T>>(&self, f: F) -> Complex<T> {
        let n = self.num_points;
        let two_pi = T::PI() + T::PI();
        let mut sum = Complex::new(T::zero(), T::zero());
        for j in 0..n {
            let theta = two_pi * T::of_usize(j) / T::of_usize(n);
            let direction = Complex::new(theta.cos(), theta.sin());
            let z = self.center + direction.scale(self.radius);
            // dz = i r e^{iθ} dθ; the 1/2πi prefactor cancels i and 2π/N
            sum = sum + f(z) * direction;
        }
        sum.scale(self.radius / T::of_usize(n))
    }
}

/// Transform kernel Q(t) = (β₂/α − t)^{q−1} (β₂/α + t)^{p−1} up to its
/// normalization constant, on the branch-free interval |t| < β₂/α.
pub fn kernel<T: Real>(t: T, st: &StateParams<T>) -> Result<T> {
    let half_width = st.lambda * T::cast(0.5); // β₂/α
    if !(t.abs() < half_width) {
        return Err(Error::Domain(format!(
            "kernel requires |t| < β₂/α = {half_width}, got {t}"
        )));
    }
    Ok((half_width - t).powf(st.q - T::one()) * (half_width + t).powf(st.p - T::one()))
}

/// Relative residual of the kernel's first-order equation
///
/// ```text
/// (t² − β₂²/α²) Q′ + [(1 − 2ε/α) t − β₁²/α²] Q = 0
/// ```
///
/// with Q′ estimated by a central difference, an independent check that the
/// closed-form kernel actually solves the equation it was derived from. The
/// difference is taken on ln Q, so power-function rounding does not swamp
/// the h² truncation term.
pub fn kernel_ode_residual<T: Real>(t: T, st: &StateParams<T>) -> Result<T> {
    let one = T::one();
    let two = T::cast(2.0);
    let half_width = st.lambda * T::cast(0.5);
    if !(t.abs() < half_width) {
        return Err(Error::Domain(format!(
            "kernel ODE residual requires |t| < β₂/α = {half_width}, got {t}"
        )));
    }

    let edge_distance = (half_width - t.abs()).min(half_width);
    let order = st.p.abs().max(st.q.abs()).max(two);
    let h = T::cast(2.4e-5) * edge_distance / order;

    // ln Q(t±h) − ln Q(t), formed directly from the increments so the
    // absolute rounding of ln Q itself never enters the difference
    let delta = |step: T| {
        (st.q - one) * (-step / (half_width - t)).ln_1p()
            + (st.p - one) * (step / (half_width + t)).ln_1p()
    };
    // (Q(t+h) − Q(t−h)) / (2h Q(t)), an estimate of Q′/Q
    let log_derivative = (delta(h).exp() - delta(-h).exp()) / (two * h);

    let alpha = st.base.alpha;
    let coeff_q = (one - two * st.epsilon / alpha) * t - st.base.beta1_sq / (alpha * alpha);
    let term_derivative = (t * t - half_width * half_width) * log_derivative;
    let residual = term_derivative + coeff_q;
    let scale = term_derivative.abs().max(coeff_q.abs());
    Ok(residual.abs() / scale.max(T::min_positive_value()))
}

/// Magnitude of the boundary term (β₂/α − t)^q (β₂/α + t)^p e^{ξt} at the
/// endpoints t = ±β₂/α; exactly 0 for p, q > 0, infinite for a negative
/// exponent (reported as divergence).
pub fn boundary_vanishing<T: Real>(p: T, q: T, half_width: T, xi: T) -> T {
    let zero = T::zero();
    let two = T::cast(2.0);
    let at_plus = zero.powf(q) * (two * half_width).powf(p) * (xi * half_width).exp();
    let at_minus = zero.powf(p) * (two * half_width).powf(q) * (-xi * half_width).exp();
    at_plus.abs().max(at_minus.abs())
}

/// The beta-function contour identity: evaluates
///
/// ```text
/// (k/2πi) B(k, n) ∮ z^{n+k−1}/(z−ξ)^n dz
/// ```
///
/// over the circle, which must reproduce ξ^k when the contour encloses ξ.
pub fn contour_power_identity<T: Real>(
    k: u32,
    n: u32,
    xi: Complex<T>,
    c: &ContourSpec<T>,
) -> Result<Complex<T>> {
    if k == 0 || n == 0 {
        return Err(Error::Contour("identity requires k ≥ 1 and n ≥ 1".into()));
    }
    let margin = T::cast(2.0) * c.radius / T::of_usize(c.num_points);
    let distance = (xi - c.center).norm();
    if distance >= c.radius - margin {
        return Err(Error::Contour(format!(
            "pole at |ξ − center| = {distance} must lie inside the contour (radius {}, margin {margin})",
            c.radius
        )));
    }

    let average = c.cauchy_average(|z| z.powu(n + k - 1) / (z - xi).powu(n));
    let prefactor = T::of_u32(k) * beta(T::of_u32(k), T::of_u32(n))?;
    Ok(average.scale(prefactor))
}

/// The residue identity: evaluates (1/2πi)∮ (1−ξu)^{−n}/u^{k+1} du
/// counterclockwise around u = 0, which must reproduce (n)_k/k! · ξ^k.
///
/// (The clockwise orientation that introduces a minus sign in the u = 1/z
/// substitution is absorbed by integrating counterclockwise and comparing
/// against the positive right-hand side.)
pub fn residue_series_check<T: Real>(
    k: u32,
    n: u32,
    xi: T,
    c: &ContourSpec<T>,
) -> Result<Complex<T>> {
    if n == 0 {
        return Err(Error::Contour("residue check requires n ≥ 1".into()));
    }
    if c.center.norm() != T::zero() {
        return Err(Error::Contour(
            "residue check uses a contour centered at the origin".into(),
        ));
    }
    // (1 − ξu)^{−n} must stay analytic on and inside: r < 1/|ξ| with margin
    if !(c.radius * xi.abs() < T::cast(0.9)) {
        return Err(Error::Contour(format!(
            "radius {} too large for ξ = {xi}: need radius·|ξ| < 0.9",
            c.radius
        )));
    }
    let one = Complex::new(T::one(), T::zero());
    Ok(c.cauchy_average(|u| (one - u.scale(xi)).powu(n).inv() / u.powu(k + 1)))
}

/// Both sides of the collapsed Euler-integral identity
///
/// ```text
/// ∫₀¹ z^{p−1}(1−z)^{q−1} e^{sz} dz  =  B(p, q) ₁F₁(p; p+q; s)
/// ```
///
/// for p, q > 0 (the contour around the [0, 1] cut collapses onto the
/// segment). Left side by adaptive quadrature with both endpoint
/// singularities regularized; right side by the beta function and the
/// Kummer series.
pub fn euler_integral_identity<T: Real>(p: T, q: T, s: T) -> Result<(T, T)> {
    if !(p > T::zero()) || !(q > T::zero()) {
        return Err(Error::Domain(format!(
            "euler integral requires p, q > 0, got ({p}, {q})"
        )));
    }
    let half = T::cast(0.5);
    let one = T::one();
    let rel = T::cast(1e-12);

    // ∫₀^½ z^{p−1} (1−z)^{q−1} e^{sz} dz
    let lower = integrate_power_singular(
        |z: T| (one - z).powf(q - one) * (s * z).exp(),
        p,
        half,
        rel,
        T::zero(),
    )?
    .value;
    // ∫_½^1 … dz = ∫₀^½ w^{q−1} (1−w)^{p−1} e^{s(1−w)} dw
    let upper = integrate_power_singular(
        |w: T| (one - w).powf(p - one) * (s * (one - w)).exp(),
        q,
        half,
        rel,
        T::zero(),
    )?
    .value;

    let lhs = lower + upper;
    let rhs = beta(p, q)? * kummer_1f1(p, p + q, s)?;
    Ok((lhs, rhs))
}
