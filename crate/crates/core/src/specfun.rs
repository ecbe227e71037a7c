//! Special functions behind the closed forms: dilogarithm and complete /
//! incomplete elliptic integrals of the first, second and third kinds.
//!
//! Parameter convention: the parameter `m` multiplies sin²θ directly in
//! every defining integral (so `complete_e(m)` matches Mathematica's
//! `EllipticE[m]` and scipy's `ellipe(m)`, NOT the modulus-k convention
//! with m = k²). This is the single most common source of convention bugs;
//! the convention here is pinned by the test
//! `2(π + 2√2 E(1/2)) = 13.9235808852350105`.
//!
//! All elliptic integrals are evaluated by adaptive quadrature of their
//! defining integrals rather than AGM/Carlson transformations: slower, but
//! free of convention drift and uniformly valid for m < 0 and for m > 1 with
//! a restricted amplitude.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::quad::{integrate_1d, QuadOptions};
use crate::{Error, Result};

/// Absolute accuracy target of this module.
pub const ACCURACY: f64 = 1e-13;

fn quad_opts() -> QuadOptions {
    QuadOptions {
        abs_tol: ACCURACY,
        rel_tol: ACCURACY,
        max_subdivisions: 400,
        ..QuadOptions::default()
    }
}

/// Arguments of an incomplete elliptic integral: amplitude φ ∈ [0, π/2],
/// parameter m (may be negative, or exceed 1 where the integrand stays
/// real), characteristic ν for the third kind.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipticArgs {
    pub phi: f64,
    pub m: f64,
    pub nu: f64,
}

impl EllipticArgs {
    /// Domain validity: 1 - m sin²θ > 0 and 1 - ν sin²θ ≠ 0 on [0, φ].
    pub fn validate(&self) -> Result<()> {
        check_amplitude(self.phi)?;
        check_radicand(self.phi, self.m)?;
        check_characteristic(self.phi, self.nu)
    }
}

fn check_amplitude(phi: f64) -> Result<()> {
    if !(0.0..=FRAC_PI_2 + 1e-15).contains(&phi) {
        return Err(Error::Domain(format!("amplitude must lie in [0, π/2], got {phi}")));
    }
    Ok(())
}

fn check_radicand(phi: f64, m: f64) -> Result<()> {
    // 1 - m sin²θ is minimized at θ = φ for m > 0.
    let s = phi.sin();
    if m * s * s >= 1.0 {
        return Err(Error::Domain(format!(
            "integrand pole inside [0, {phi}]: 1 - m sin²θ vanishes (m = {m})"
        )));
    }
    Ok(())
}

fn check_characteristic(phi: f64, nu: f64) -> Result<()> {
    let s = phi.sin();
    if nu * s * s >= 1.0 {
        return Err(Error::Domain(format!(
            "characteristic pole inside [0, {phi}]: 1 - ν sin²θ vanishes (ν = {nu})"
        )));
    }
    Ok(())
}

/// Dilogarithm Li₂(x) = Σ_{k≥1} x^k / k² for |x| ≤ 1.
///
/// Series for |x| ≤ 1/2; the reflection Li₂(x) + Li₂(1-x) = π²/6 - ln x ln(1-x)
/// for x ∈ (1/2, 1]; the square identity Li₂(x) + Li₂(-x) = Li₂(x²)/2 for
/// x ∈ [-1, -1/2).
pub fn dilog(x: f64) -> Result<f64> {
    if !x.is_finite() || x.abs() > 1.0 {
        return Err(Error::Domain(format!("dilog requires |x| <= 1, got {x}")));
    }
    Ok(dilog_inner(x))
}

fn dilog_inner(x: f64) -> f64 {
    if x == 1.0 {
        return PI * PI / 6.0;
    }
    if x == -1.0 {
        return -PI * PI / 12.0;
    }
    if x.abs() <= 0.5 {
        return dilog_series(x);
    }
    if x > 0.5 {
        // 1 - x ∈ [0, 1/2): series applies.
        return PI * PI / 6.0 - x.ln() * (1.0 - x).ln() - dilog_series(1.0 - x);
    }
    // x ∈ (-1, -1/2): Li₂(x) = Li₂(x²)/2 - Li₂(-x), with -x ∈ (1/2, 1)
    // and x² ∈ (1/4, 1) handled by the branches above.
    0.5 * dilog_inner(x * x) - dilog_inner(-x)
}

fn dilog_series(x: f64) -> f64 {
    debug_assert!(x.abs() <= 0.5);
    let mut sum = 0.0;
    let mut power = x;
    for k in 1..200u32 {
        let term = power / ((k * k) as f64);
        sum += term;
        if term.abs() < 1e-17 {
            break;
        }
        power *= x;
    }
    sum
}

/// Complete elliptic integral of the first kind,
/// K(m) = ∫₀^{π/2} dθ / sqrt(1 - m sin²θ), m < 1.
pub fn complete_k(m: f64) -> Result<f64> {
    incomplete_f(FRAC_PI_2, m)
}

/// Complete elliptic integral of the second kind,
/// E(m) = ∫₀^{π/2} sqrt(1 - m sin²θ) dθ, m ≤ 1.
pub fn complete_e(m: f64) -> Result<f64> {
    if m == 1.0 {
        return Ok(1.0);
    }
    incomplete_e(FRAC_PI_2, m)
}

/// Complete elliptic integral of the third kind,
/// Π(ν, m) = ∫₀^{π/2} dθ / ((1 - ν sin²θ) sqrt(1 - m sin²θ)).
pub fn complete_pi(nu: f64, m: f64) -> Result<f64> {
    incomplete_pi(nu, FRAC_PI_2, m)
}

/// Incomplete elliptic integral of the first kind,
/// F(φ, m) = ∫₀^φ dθ / sqrt(1 - m sin²θ).
pub fn incomplete_f(phi: f64, m: f64) -> Result<f64> {
    check_amplitude(phi)?;
    check_radicand(phi, m)?;
    let r = integrate_1d(|t| 1.0 / radicand(t, m).sqrt(), 0.0, phi, &quad_opts())?;
    Ok(r.value)
}

/// Incomplete elliptic integral of the second kind,
/// E(φ, m) = ∫₀^φ sqrt(1 - m sin²θ) dθ.
pub fn incomplete_e(phi: f64, m: f64) -> Result<f64> {
    check_amplitude(phi)?;
    // E stays finite when the radicand vanishes only at the endpoint.
    let s = phi.sin();
    if m * s * s > 1.0 {
        return Err(Error::Domain(format!(
            "integrand turns imaginary inside [0, {phi}] (m = {m})"
        )));
    }
    let r = integrate_1d(|t| radicand(t, m).max(0.0).sqrt(), 0.0, phi, &quad_opts())?;
    Ok(r.value)
}

/// Incomplete elliptic integral of the third kind,
/// Π(ν, φ, m) = ∫₀^φ dθ / ((1 - ν sin²θ) sqrt(1 - m sin²θ)).
pub fn incomplete_pi(nu: f64, phi: f64, m: f64) -> Result<f64> {
    EllipticArgs { phi, m, nu }.validate()?;
    let r = integrate_1d(
        |t| {
            let s = t.sin();
            1.0 / ((1.0 - nu * s * s) * radicand(t, m).sqrt())
        },
        0.0,
        phi,
        &quad_opts(),
    )?;
    Ok(r.value)
}

fn radicand(theta: f64, m: f64) -> f64 {
    let s = theta.sin();
    1.0 - m * s * s
}
