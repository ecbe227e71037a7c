//! Volume and surface-area quadrature for the two-disk δ-family.
//!
//! The boundary of the hull of the two orthogonal unit circles
//! C₁ = {x² + (y+δ/2)² = 1, z = 0} and C₂ = {(y-δ/2)² + z² = 1, x = 0}
//! is a pair of developable sheets ruled by segments [A(a), B(a)] whose
//! endpoints share a supporting plane. Writing A(a) = (sin a, -δ/2+cos a, 0)
//! and B = (0, δ/2 + cos b, sin b), the common-plane condition reduces to
//!
//!   cos b = cos a / (1 - δ cos a),   valid for cos a ≤ 1/(1+δ),
//!
//! with unit plane normal ν ∝ (ρ₁ sin a, ρ₁ cos a, ρ₂ sin b) and
//! ρ₂ = ρ₁ (1 - δ cos a). Along a ruling the tangent plane is constant, so
//! a strip between nearby rulings has area (|s₁| + |s₂|)/2 da with
//! s₁ = (A' × (B-A))·ν and s₂ = (B' × (B-A))·ν, and the support value
//! h(ν) = ν·A is constant on the ruling, which gives the volume by the
//! divergence theorem: VL = (2/3) ∫ h (|s₁|+|s₂|)/2 da over one sheet.
//!
//! The oloid (δ = 1) and two-circle roller (δ = √2) additionally get the
//! dedicated single-variable θ-integrals.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::bodies::Vec3;
use crate::quad::{integrate_1d, Endpoints, QuadOptions, QuadResult};
use crate::Result;

/// One ruling of the developable sheet, evaluated at the substituted
/// parameter τ ∈ [0, π/2].
///
/// The rim parameter runs over a ∈ [a_min, π] with cos a_min = 1/(1+δ);
/// the direct parametrization loses all relative accuracy near a_min
/// (1 - (1+δ)cos a cancels catastrophically under the 1/sqrt blow-up of
/// the ruling density). Substituting u₁ = cos a = c* - (1+c*) sin²τ with
/// c* = 1/(1+δ) turns every endpoint-critical quantity into a product:
///
///   1 - (1+δ)u₁ = η + (1+δ)(1+c*) sin²τ          (η = 1 - (1+δ)c* ~ ε)
///   1 + u₁      = (1+c*) cos²τ
///   1 - u₂²     = (1 - (1+δ)u₁)(1 + (1-δ)u₁)/(1 - δu₁)²
///
/// and da = 2 sqrt(1+c*) sinτ / sqrt(1-u₁) dτ, which also absorbs the
/// density's inverse-square-root endpoint behaviour: the τ-integrands are
/// smooth on the closed interval.
struct Ruling {
    /// Strip area density times da/dτ.
    density: f64,
    /// Support value of the ruling's tangent plane.
    support: f64,
}

fn ruling(delta: f64, tau: f64) -> Ruling {
    let c_star = 1.0 / (1.0 + delta);
    let eta = 1.0 - (1.0 + delta) * c_star;
    let (s, c) = tau.sin_cos();
    let u1 = c_star - (1.0 + c_star) * s * s;
    let one_plus_u1 = (1.0 + c_star) * c * c;
    let one_minus_u1 = 1.0 - c_star + (1.0 + c_star) * s * s;
    let sin_a = (one_minus_u1 * (1.0 + c_star)).sqrt() * c;

    let denom = 1.0 - delta * u1;
    let u2 = u1 / denom;
    // denom² - u1² = (1 - (1+δ)u1)(1 + (1-δ)u1), both factors positive and
    // cancellation-free on the sheet.
    let f1 = eta + (1.0 + delta) * (1.0 + c_star) * s * s;
    let f2 = 1.0 + (1.0 - delta) * u1;
    let one_minus_u2_sq = (f1 * f2).max(0.0) / (denom * denom);
    let sb = one_minus_u2_sq.sqrt();
    let rho1 = 1.0 / (1.0 + denom * denom * one_minus_u2_sq).sqrt();
    let rho2 = rho1 * denom;
    let nu = Vec3::new(rho1 * sin_a, rho1 * u1, rho2 * sb);

    let a_pt = Vec3::new(sin_a, -delta / 2.0 + u1, 0.0);
    let b_pt = Vec3::new(0.0, delta / 2.0 + u2, sb);
    let a_tan = Vec3::new(u1, -sin_a, 0.0);
    let du2 = -sin_a / (denom * denom);
    let b_tan = Vec3::new(0.0, du2, if sb > 0.0 { -u2 * du2 / sb } else { 0.0 });

    let chord = b_pt - a_pt;
    let s1 = a_tan.cross(chord).dot(nu);
    let s2 = b_tan.cross(chord).dot(nu);
    let strip = 0.5 * (s1.abs() + s2.abs());

    let weight = 2.0 * (1.0 + c_star).sqrt() * s / one_minus_u1.sqrt();
    Ruling { density: strip * weight, support: nu.dot(a_pt) }
    // The x → -x mirror doubles the a-range to [a_min, 2π - a_min] and the
    // z → -z mirror doubles the sheets, so callers scale by 4.
}

/// Surface area of the δ-family hull by quadrature over the rulings
/// (both sheets).
pub fn ruled_area(delta: f64, opts: &QuadOptions) -> Result<QuadResult> {
    let r = integrate_1d(|tau| ruling(delta, tau).density, 0.0, FRAC_PI_2, opts)?;
    Ok(QuadResult { value: 4.0 * r.value, error_estimate: 4.0 * r.error_estimate, ..r })
}

/// Volume of the δ-family hull by the divergence theorem over the rulings.
pub fn ruled_volume(delta: f64, opts: &QuadOptions) -> Result<QuadResult> {
    let r = integrate_1d(
        |tau| {
            let rl = ruling(delta, tau);
            rl.support * rl.density
        },
        0.0,
        FRAC_PI_2,
        opts,
    )?;
    Ok(QuadResult {
        value: 4.0 / 3.0 * r.value,
        error_estimate: 4.0 / 3.0 * r.error_estimate,
        ..r
    })
}

/// Oloid volume as the dedicated θ-integral
/// (2/3) ∫₀^{π/2} (2+cosθ)² / ((1+cosθ) sqrt(1+2cosθ)) dθ.
pub fn oloid_volume_integral(opts: &QuadOptions) -> Result<QuadResult> {
    let r = integrate_1d(
        |t| {
            let c = t.cos();
            (2.0 + c) * (2.0 + c) / ((1.0 + c) * (1.0 + 2.0 * c).sqrt())
        },
        0.0,
        FRAC_PI_2,
        opts,
    )?;
    Ok(QuadResult {
        value: 2.0 / 3.0 * r.value,
        error_estimate: 2.0 / 3.0 * r.error_estimate,
        ..r
    })
}

/// The roller constant γ as its defining θ-integral,
/// (1/(2√2)) ∫₀^{π/2} (2+√2 c)²(1+√2 c+c²) / ((1+√2 c)² sqrt(1+2√2 c+c²)) dθ.
pub fn gamma_integral(opts: &QuadOptions) -> Result<QuadResult> {
    let s2 = 2.0f64.sqrt();
    let r = integrate_1d(
        |t| {
            let c = t.cos();
            let top = (2.0 + s2 * c) * (2.0 + s2 * c) * (1.0 + s2 * c + c * c);
            let bottom = (1.0 + s2 * c) * (1.0 + s2 * c) * (1.0 + 2.0 * s2 * c + c * c).sqrt();
            top / bottom
        },
        0.0,
        FRAC_PI_2,
        opts,
    )?;
    let scale = 1.0 / (2.0 * s2);
    Ok(QuadResult { value: scale * r.value, error_estimate: scale * r.error_estimate, ..r })
}

/// Roller volume (8/(3√2)) γ via the γ θ-integral.
pub fn roller_volume_integral(opts: &QuadOptions) -> Result<QuadResult> {
    let g = gamma_integral(opts)?;
    let scale = 8.0 / (3.0 * 2.0f64.sqrt());
    Ok(QuadResult { value: scale * g.value, error_estimate: scale * g.error_estimate, ..g })
}

/// Roller area 8γ via the γ θ-integral.
pub fn roller_area_integral(opts: &QuadOptions) -> Result<QuadResult> {
    let g = gamma_integral(opts)?;
    Ok(QuadResult { value: 8.0 * g.value, error_estimate: 8.0 * g.error_estimate, ..g })
}
