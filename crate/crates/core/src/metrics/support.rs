//! Mean width as the spherical average of the support function:
//! MW = (1/2π) ∫_{S²} h dΩ, since w(v) = h(v) + h(-v) and the uniform
//! measure is symmetric under v ↦ -v. Works for every configuration,
//! including the δ-family members whose mean width has no closed form.

use std::f64::consts::PI;

use crate::bodies::{BodyConfig, Vec3};
use crate::metrics::{MetricsReport, Method, Quantity};
use crate::quad::{integrate_sphere, QuadOptions, QuadResult};
use crate::Result;

/// Mean width of an arbitrary support function by sphere quadrature.
pub fn support_mean_width<H: Fn(Vec3) -> f64>(h: H, opts: &QuadOptions) -> Result<QuadResult> {
    let r = integrate_sphere(h, opts)?;
    Ok(QuadResult {
        value: r.value / (2.0 * PI),
        error_estimate: r.error_estimate / (2.0 * PI),
        evaluations: r.evaluations,
    })
}

/// Mean width of a configuration by the support-integral route.
pub fn mw_support(cfg: &BodyConfig, opts: &QuadOptions) -> Result<MetricsReport> {
    let r = support_mean_width(|v| cfg.support(v), opts)?;
    Ok(MetricsReport {
        config: cfg.clone(),
        quantity: Quantity::MeanWidth,
        method: Method::SupportIntegral,
        value: r.value,
        error_estimate: r.error_estimate,
        evaluations: r.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{disks_support, Disk};

    fn opts() -> QuadOptions {
        QuadOptions::default()
    }

    #[test]
    fn support_route_reproduces_known_mean_widths() {
        let cases = [
            (BodyConfig::example1(), 1.8697727582861870),
            (BodyConfig::example2(), 2.2779031079814441),
            (BodyConfig::example3(), 2.6451729797138697),
            (BodyConfig::cylinder(2.0, 1.0).unwrap(), (2.0 + PI) / 2.0),
        ];
        for (cfg, want) in cases {
            let r = mw_support(&cfg, &opts()).unwrap();
            assert!(
                (r.value - want).abs() <= 1e-9,
                "{}: support MW {} vs {want}",
                cfg.name(),
                r.value
            );
        }
    }

    #[test]
    fn sphere_integral_of_example2_support() {
        // ∫_{S²} h dΩ = 2π · MW₂ = π(√2 + π).
        let cfg = BodyConfig::example2();
        let r = crate::quad::integrate_sphere(|v| cfg.support(v), &opts()).unwrap();
        let want = PI * (2.0f64.sqrt() + PI);
        assert!((r.value - want).abs() <= 1e-9, "{} vs {want}", r.value);
    }

    #[test]
    fn scaling_law_on_example1() {
        // Scaling radii and centers by λ multiplies MW by λ.
        let lambda = 2.0;
        let base: Vec<Disk> = BodyConfig::example1().disks().unwrap().to_vec();
        let scaled: Vec<Disk> = base
            .iter()
            .map(|d| Disk::new(d.center * lambda, d.normal, d.radius * lambda).unwrap())
            .collect();
        let mw1 = support_mean_width(|v| disks_support(&base, v), &opts()).unwrap();
        let mw2 = support_mean_width(|v| disks_support(&scaled, v), &opts()).unwrap();
        assert!(
            (mw2.value - lambda * mw1.value).abs() < 1e-9,
            "{} vs {}",
            mw2.value,
            lambda * mw1.value
        );
    }

    #[test]
    fn open_problem_values_carry_error_bars() {
        for cfg in [BodyConfig::oloid(), BodyConfig::two_circle_roller()] {
            let r = mw_support(&cfg, &opts()).unwrap();
            assert!(r.value > 0.0);
            assert!(r.error_estimate > 0.0 && r.error_estimate < 1e-8);
        }
    }
}
