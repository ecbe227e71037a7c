//! Volume, surface area and mean width of every configuration by each
//! applicable route, with cross-method agreement as the design contract.

mod closed;
pub mod delta;
mod direct;
mod indirect;
mod quadrature;
mod support;

use std::fmt;
use std::str::FromStr;

pub use closed::{closed_form, eval_registry_entry, registry, ClosedFormEntry};
pub use direct::{crossover_residual, mw_direct_octant, xi_example1, xi_example2, xi_example3};
pub use indirect::{curvature_integral, edge_integral, h_ds_integrand, mw_indirect, mw_indirect_via};
pub use quadrature::{area_quadrature, area_quadrature_via, volume_quadrature, volume_quadrature_via};
pub use support::{mw_support, support_mean_width};

use crate::bodies::BodyConfig;
use crate::hull;
use crate::quad::QuadOptions;
use crate::{Error, Result};

/// Which functional of the body.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Volume,
    Area,
    MeanWidth,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Volume => "vl",
            Quantity::Area => "ar",
            Quantity::MeanWidth => "mw",
        })
    }
}

impl FromStr for Quantity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vl" => Ok(Quantity::Volume),
            "ar" => Ok(Quantity::Area),
            "mw" => Ok(Quantity::MeanWidth),
            other => Err(Error::InvalidInput(format!(
                "unknown quantity {other:?} (expected vl, ar or mw)"
            ))),
        }
    }
}

/// Which computation route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Quadrature,
    Indirect,
    DirectOctant,
    SupportIntegral,
    HullOracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed",
            Method::Quadrature => "quad",
            Method::Indirect => "indirect",
            Method::DirectOctant => "direct",
            Method::SupportIntegral => "support",
            Method::HullOracle => "hull",
        })
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::ClosedForm),
            "quad" => Ok(Method::Quadrature),
            "indirect" => Ok(Method::Indirect),
            "direct" => Ok(Method::DirectOctant),
            "support" => Ok(Method::SupportIntegral),
            "hull" => Ok(Method::HullOracle),
            other => Err(Error::InvalidInput(format!(
                "unknown method {other:?} (expected closed, quad, indirect, direct, support or hull)"
            ))),
        }
    }
}

/// One computed value with its provenance and cost.
#[derive(Clone, Debug)]
pub struct MetricsReport {
    pub config: BodyConfig,
    pub quantity: Quantity,
    pub method: Method,
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

/// Options for [`compute`].
#[derive(Clone, Copy, Debug)]
pub struct ComputeOptions {
    /// Quadrature tolerance (absolute and relative).
    pub tol: f64,
    /// Samples per circle for the hull oracle.
    pub hull_k: usize,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions { tol: 1e-11, hull_k: 4096 }
    }
}

impl ComputeOptions {
    pub fn quad(&self) -> QuadOptions {
        QuadOptions::with_tol(self.tol)
    }
}

/// Compute one (configuration, quantity, method) triple.
pub fn compute(
    cfg: &BodyConfig,
    quantity: Quantity,
    method: Method,
    opts: &ComputeOptions,
) -> Result<MetricsReport> {
    let quad = opts.quad();
    match (method, quantity) {
        (Method::ClosedForm, _) => closed_form(cfg, quantity),
        (Method::Quadrature, Quantity::Volume) => volume_quadrature(cfg, &quad),
        (Method::Quadrature, Quantity::Area) => area_quadrature(cfg, &quad),
        (Method::Quadrature, Quantity::MeanWidth) => Err(Error::Unsupported(
            "mean width has no plain quadrature route; use indirect, direct or support".into(),
        )),
        (Method::Indirect, Quantity::MeanWidth) => mw_indirect(cfg, &quad),
        (Method::DirectOctant, Quantity::MeanWidth) => mw_direct_octant(cfg, &quad),
        (Method::SupportIntegral, Quantity::MeanWidth) => mw_support(cfg, &quad),
        (Method::Indirect | Method::DirectOctant | Method::SupportIntegral, _) => {
            Err(Error::Unsupported(format!(
                "method {method} applies to mean width only"
            )))
        }
        (Method::HullOracle, _) => {
            let m = hull::hull_metrics(cfg, opts.hull_k)?;
            let value = match quantity {
                Quantity::Volume => m.volume,
                Quantity::Area => m.area,
                Quantity::MeanWidth => m.mean_width,
            };
            Ok(MetricsReport {
                config: cfg.clone(),
                quantity,
                method,
                value,
                error_estimate: 0.0,
                evaluations: m.vertices as u64,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::BodyConfig;

    #[test]
    fn cross_method_agreement_on_all_quantities() {
        // Every pair of applicable methods agrees within the sum of their
        // error estimates and within 1e-9 absolute at default tolerances.
        let opts = ComputeOptions::default();
        let configs = [BodyConfig::example1(), BodyConfig::example2(), BodyConfig::example3()];
        for cfg in &configs {
            for quantity in [Quantity::Volume, Quantity::Area, Quantity::MeanWidth] {
                let methods: &[Method] = match quantity {
                    Quantity::MeanWidth => &[
                        Method::ClosedForm,
                        Method::Indirect,
                        Method::DirectOctant,
                        Method::SupportIntegral,
                    ],
                    _ => &[Method::ClosedForm, Method::Quadrature],
                };
                let reports: Vec<MetricsReport> = methods
                    .iter()
                    .map(|&m| compute(cfg, quantity, m, &opts).unwrap())
                    .collect();
                for a in &reports {
                    assert!(a.value > 0.0);
                    for b in &reports {
                        let gap = (a.value - b.value).abs();
                        let budget = (a.error_estimate + b.error_estimate).max(1e-9);
                        assert!(
                            gap <= budget,
                            "{} {quantity:?}: {:?} = {:.15} vs {:?} = {:.15} (gap {gap:e})",
                            cfg.name(),
                            a.method,
                            a.value,
                            b.method,
                            b.value
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_delta() {
        // VL, AR and MW of the δ-family grow with the separation, endpoints
        // matching Examples 1 and 3.
        let opts = ComputeOptions { tol: 1e-10, hull_k: 512 };
        let grid = [0.0, 0.5, 1.0, 2.0f64.sqrt(), 1.5, 2.0];
        let mut prev: Option<(f64, f64, f64)> = None;
        for &d in &grid {
            let cfg = BodyConfig::delta_family(d).unwrap();
            let vl = compute(&cfg, Quantity::Volume, Method::Quadrature, &opts).unwrap().value;
            let ar = compute(&cfg, Quantity::Area, Method::Quadrature, &opts).unwrap().value;
            let mw = compute(&cfg, Quantity::MeanWidth, Method::SupportIntegral, &opts)
                .unwrap()
                .value;
            if let Some((pv, pa, pm)) = prev {
                assert!(vl >= pv - 1e-12, "VL not monotone at delta {d}");
                assert!(ar >= pa - 1e-12, "AR not monotone at delta {d}");
                assert!(mw >= pm - 1e-12, "MW not monotone at delta {d}");
            }
            prev = Some((vl, ar, mw));
        }
        // Endpoint anchors.
        let d0 = BodyConfig::delta_family(0.0).unwrap();
        let vl0 = compute(&d0, Quantity::Volume, Method::Quadrature, &opts).unwrap().value;
        assert!((vl0 - 8.0 / 3.0).abs() < 1e-9);
        let d2 = BodyConfig::delta_family(2.0).unwrap();
        let mw2 = compute(&d2, Quantity::MeanWidth, Method::SupportIntegral, &opts).unwrap().value;
        assert!((mw2 - 2.6451729797138697).abs() < 1e-9);
    }

    #[test]
    fn structured_errors() {
        let opts = ComputeOptions::default();
        assert!(matches!(
            compute(&BodyConfig::oloid(), Quantity::MeanWidth, Method::ClosedForm, &opts),
            Err(Error::NoClosedForm(_))
        ));
        assert!(matches!(
            compute(&BodyConfig::example1(), Quantity::Volume, Method::SupportIntegral, &opts),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            compute(&BodyConfig::example1(), Quantity::MeanWidth, Method::Quadrature, &opts),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn hull_oracle_method_compute() {
        let opts = ComputeOptions { tol: 1e-10, hull_k: 512 };
        let r = compute(&BodyConfig::example1(), Quantity::Volume, Method::HullOracle, &opts)
            .unwrap();
        assert!(r.value < 8.0 / 3.0 && r.value > 8.0 / 3.0 - 1e-2);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for q in ["vl", "ar", "mw"] {
            assert_eq!(q.parse::<Quantity>().unwrap().to_string(), q);
        }
        for m in ["closed", "quad", "indirect", "direct", "support", "hull"] {
            assert_eq!(m.parse::<Method>().unwrap().to_string(), m);
        }
        assert!("volume".parse::<Quantity>().is_err());
        assert!("montecarlo".parse::<Method>().is_err());
    }
}
