//! Mean width by the direct route: the definitional spherical average of
//! the support value, reduced per configuration to explicit iterated
//! integrals over the region where one generator circle is the supporting
//! one. The crossover curve ϕ = ξ(θ) solves the equality of the two
//! supporting branches.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::bodies::{BodyConfig, BodyKind};
use crate::metrics::{MetricsReport, Method, Quantity};
use crate::quad::{integrate_2d, Quad2dOptions, QuadOptions, QuadResult};
use crate::{Error, Result};

/// Crossover angle for Example 1: ξ(θ) = arccos(sin θ / sqrt(2 - cos²θ)).
pub fn xi_example1(theta: f64) -> f64 {
    (theta.sin() / (2.0 - theta.cos() * theta.cos()).sqrt()).acos()
}

/// Crossover angle for Example 2: ξ(θ) = π/2 + arctan(sin θ).
pub fn xi_example2(theta: f64) -> f64 {
    FRAC_PI_2 + theta.sin().atan()
}

/// Crossover angle for Example 3 on [0, arccsc 3]:
/// ξ(θ) = arccos(sqrt((1 - 4 sinθ + 3 sin²θ) / (2 - 4 sinθ + 3 sin²θ))).
pub fn xi_example3(theta: f64) -> f64 {
    let s = theta.sin();
    let top = 1.0 - 4.0 * s + 3.0 * s * s;
    let bottom = 2.0 - 4.0 * s + 3.0 * s * s;
    (top.max(0.0) / bottom).sqrt().acos()
}

/// Residual of the crossover equation at ϕ = ξ(θ); zero when ξ solves it.
pub fn crossover_residual(kind: BodyKind, theta: f64) -> Result<f64> {
    match kind {
        BodyKind::Example1 => {
            let phi = xi_example1(theta);
            let (sp, cp) = (phi.sin(), phi.cos());
            let ct = theta.cos();
            Ok(sp - (ct * ct * sp * sp + cp * cp).sqrt())
        }
        BodyKind::Example2 => {
            let phi = xi_example2(theta);
            let (sp, cp) = (phi.sin(), phi.cos());
            let (st, ct) = (theta.sin(), theta.cos());
            Ok((sp - cp) - ((ct * ct * sp * sp + cp * cp).sqrt() + st * sp))
        }
        BodyKind::Example3 => {
            let phi = xi_example3(theta);
            let (sp, cp) = (phi.sin(), phi.cos());
            let st = theta.sin();
            Ok((1.0 - st) * sp - (st * sp + (st * st * sp * sp + cp * cp).sqrt()))
        }
        other => Err(Error::Unsupported(format!(
            "no direct-route crossover equation for {other:?}"
        ))),
    }
}

fn opts2d(opts: &QuadOptions) -> Quad2dOptions {
    Quad2dOptions {
        abs_tol: opts.abs_tol,
        rel_tol: opts.rel_tol,
        max_subdivisions: opts.max_subdivisions,
        ..Quad2dOptions::default()
    }
}

/// Mean width by the direct (reduced spherical integral) route.
pub fn mw_direct_octant(cfg: &BodyConfig, opts: &QuadOptions) -> Result<MetricsReport> {
    let r = match cfg.kind() {
        BodyKind::Example1 => {
            // (8/π) ∫_0^{π/2} ∫_{ξ(θ)}^{π/2} sin²ϕ dϕ dθ
            let r = integrate_2d(
                |_, phi: f64| phi.sin() * phi.sin(),
                0.0,
                FRAC_PI_2,
                xi_example1,
                |_| FRAC_PI_2,
                &opts2d(opts),
            )?;
            QuadResult {
                value: 8.0 / PI * r.value,
                error_estimate: 8.0 / PI * r.error_estimate,
                ..r
            }
        }
        BodyKind::Example2 => {
            // (2/π) ∫_{-π/2}^{π/2} ∫_{ξ(θ)}^{π} (sinϕ - cosϕ) sinϕ dϕ dθ
            let r = integrate_2d(
                |_, phi: f64| (phi.sin() - phi.cos()) * phi.sin(),
                -FRAC_PI_2,
                FRAC_PI_2,
                xi_example2,
                |_| PI,
                &opts2d(opts),
            )?;
            QuadResult {
                value: 2.0 / PI * r.value,
                error_estimate: 2.0 / PI * r.error_estimate,
                ..r
            }
        }
        BodyKind::Example3 => example3_direct(opts)?,
        BodyKind::DeltaFamily(d) if (d - 2.0).abs() < 1e-12 => example3_direct(opts)?,
        other => {
            return Err(Error::Unsupported(format!(
                "no reduced direct-route integral is packaged for {other:?}"
            )))
        }
    };
    Ok(MetricsReport {
        config: cfg.clone(),
        quantity: Quantity::MeanWidth,
        method: Method::DirectOctant,
        value: r.value,
        error_estimate: r.error_estimate,
        evaluations: r.evaluations,
    })
}

fn example3_direct(opts: &QuadOptions) -> Result<QuadResult> {
    // Three pieces with κ = arccsc(3) = arcsin(1/3): below ξ(θ) the
    // vertical-circle branch supports, above it the horizontal one.
    let kappa = (1.0f64 / 3.0).asin();
    let branch2 = |theta: f64, phi: f64| {
        let (sp, cp) = (phi.sin(), phi.cos());
        let st = theta.sin();
        (st * sp + (st * st * sp * sp + cp * cp).sqrt()) * sp
    };
    let p1 = integrate_2d(branch2, 0.0, kappa, |_| 0.0, xi_example3, &opts2d(opts))?;
    let p2 = integrate_2d(
        |theta: f64, phi: f64| {
            let sp = phi.sin();
            (1.0 - theta.sin()) * sp * sp
        },
        0.0,
        kappa,
        xi_example3,
        |_| FRAC_PI_2,
        &opts2d(opts),
    )?;
    let p3 = integrate_2d(branch2, kappa, FRAC_PI_2, |_| 0.0, |_| FRAC_PI_2, &opts2d(opts))?;
    Ok(QuadResult {
        value: 4.0 / PI * (p1.value + p2.value + p3.value),
        error_estimate: 4.0 / PI * (p1.error_estimate + p2.error_estimate + p3.error_estimate),
        evaluations: p1.evaluations + p2.evaluations + p3.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_route_reproduces_the_three_constants() {
        let cases = [
            (BodyConfig::example1(), 1.8697727582861870),
            (BodyConfig::example2(), 2.2779031079814441),
            (BodyConfig::example3(), 2.6451729797138697),
        ];
        for (cfg, want) in cases {
            let r = mw_direct_octant(&cfg, &QuadOptions::default()).unwrap();
            assert!(
                (r.value - want).abs() <= 1e-9,
                "{}: direct MW {} vs {want}",
                cfg.name(),
                r.value
            );
        }
    }

    #[test]
    fn crossover_equations_are_solved_to_1e12() {
        for i in 0..100 {
            let f = (i as f64 + 0.5) / 100.0;
            let r1 = crossover_residual(BodyKind::Example1, f * FRAC_PI_2).unwrap();
            assert!(r1.abs() <= 1e-12, "xi1 residual {r1:e}");
            let r2 = crossover_residual(BodyKind::Example2, -FRAC_PI_2 + f * PI).unwrap();
            assert!(r2.abs() <= 1e-12, "xi2 residual {r2:e}");
            let kappa = (1.0f64 / 3.0).asin();
            let r3 = crossover_residual(BodyKind::Example3, f * kappa).unwrap();
            assert!(r3.abs() <= 1e-12, "xi3 residual {r3:e}");
        }
    }

    #[test]
    fn crossover_branches_swap_across_xi() {
        // Below ξ the square-root branch dominates for Example 1, above it
        // the sin ϕ branch does (that is what the reduction relies on).
        let theta = 0.6;
        let xi = xi_example1(theta);
        let branch = |phi: f64| {
            let (sp, cp) = (phi.sin(), phi.cos());
            let ct = theta.cos();
            (sp, (ct * ct * sp * sp + cp * cp).sqrt())
        };
        let (a_lo, b_lo) = branch(xi - 0.2);
        assert!(b_lo > a_lo);
        let (a_hi, b_hi) = branch(xi + 0.2);
        assert!(a_hi > b_hi);
    }

    #[test]
    fn unsupported_configs() {
        assert!(mw_direct_octant(&BodyConfig::oloid(), &QuadOptions::default()).is_err());
        assert!(crossover_residual(BodyKind::DeltaFamily(1.0), 0.3).is_err());
    }
}
