//! Mean width through integrated mean curvature:
//!
//!   MW = (1/2π) ∫_{∂Ω} H dS + (1/4π) Σ_j ∫_{ε_j} α_j ds,
//!
//! summing the curvature integral over the smooth patches (with symmetry
//! multiplicity) and the exterior-dihedral-angle integrals over the edge
//! arcs. Flat pieces contribute nothing to the smooth term.

use std::f64::consts::PI;

use crate::bodies::{BodyConfig, BodyKind, ParamPatch, PatchKind, Route};
use crate::metrics::{MetricsReport, Method, Quantity};
use crate::quad::{integrate_1d, integrate_2d, Endpoints, Quad2dOptions, QuadOptions, QuadResult};
use crate::Result;

/// Closed-form curvature density H·|∂u map × ∂v map| of a patch, in patch
/// coordinates. Zero on flat pieces.
pub fn h_ds_integrand(patch: &ParamPatch, u: f64, v: f64) -> f64 {
    match patch.kind {
        PatchKind::GraphEx1 | PatchKind::GraphPhiEx2 | PatchKind::GraphPsiEx2 => {
            // H dS = dy dx / ((2 - x²) sqrt(1 - x²))
            1.0 / ((2.0 - u * u) * (1.0 - u * u).sqrt())
        }
        PatchKind::VinzantEx2 => {
            // (1/(1+v²)) sqrt((1-v)/(1+v))
            1.0 / (1.0 + v * v) * ((1.0 - v) / (1.0 + v)).sqrt()
        }
        PatchKind::VinzantEx3 => {
            // -3v / ((1+2v+3v²) sqrt(-(2+v)(2+3v)))
            -3.0 * v / ((1.0 + 2.0 * v + 3.0 * v * v) * (-(2.0 + v) * (2.0 + 3.0 * v)).sqrt())
        }
        PatchKind::CylinderSide { radius, .. } => {
            // H · area element = (1/(2r)) · r
            let _ = radius;
            0.5
        }
        PatchKind::DiskBottomEx2 | PatchKind::DiskBackEx2 | PatchKind::CylinderCap { .. } => 0.0,
    }
}

fn h_ds_singularities(kind: PatchKind) -> (Endpoints, Endpoints) {
    match kind {
        PatchKind::GraphPhiEx2 | PatchKind::GraphPsiEx2 => (Endpoints::BOTH, Endpoints::NONE),
        PatchKind::VinzantEx2 | PatchKind::VinzantEx3 => (Endpoints::NONE, Endpoints::BOTH),
        _ => (Endpoints::NONE, Endpoints::NONE),
    }
}

/// The smooth term ∫_{∂Ω} H dS over all patches of the route.
pub fn curvature_integral(cfg: &BodyConfig, route: Route, opts: &QuadOptions) -> Result<QuadResult> {
    let mut total = QuadResult { value: 0.0, error_estimate: 0.0, evaluations: 0 };
    for patch in cfg.patches()? {
        if !patch.route.includes(route) || patch.is_flat() {
            continue;
        }
        let (outer_flags, inner_flags) = h_ds_singularities(patch.kind);
        let (u0, u1) = patch.u_range();
        let r = integrate_2d(
            |u, v| h_ds_integrand(&patch, u, v),
            u0,
            u1,
            |u| patch.v_range(u).0,
            |u| patch.v_range(u).1,
            &Quad2dOptions {
                abs_tol: opts.abs_tol,
                rel_tol: opts.rel_tol,
                max_subdivisions: opts.max_subdivisions,
                outer_singular: outer_flags,
                inner_singular: inner_flags,
            },
        )?;
        let mult = patch.multiplicity as f64;
        total.value += mult * r.value;
        total.error_estimate += mult * r.error_estimate;
        total.evaluations += r.evaluations;
    }
    Ok(total)
}

/// The edge term Σ_j ∫_{ε_j} α_j ds over all edge arcs.
pub fn edge_integral(cfg: &BodyConfig, opts: &QuadOptions) -> Result<QuadResult> {
    let mut total = QuadResult { value: 0.0, error_estimate: 0.0, evaluations: 0 };
    for edge in cfg.edges()? {
        let r = integrate_1d(
            |t| edge.dihedral(t) * edge.ds(t),
            edge.t_range.0,
            edge.t_range.1,
            &QuadOptions { singular: edge.singular, ..*opts },
        )?;
        let mult = edge.multiplicity as f64;
        total.value += mult * r.value;
        total.error_estimate += mult * r.error_estimate;
        total.evaluations += r.evaluations;
    }
    Ok(total)
}

/// Mean width by the indirect route (graph description of Example 2).
pub fn mw_indirect(cfg: &BodyConfig, opts: &QuadOptions) -> Result<MetricsReport> {
    mw_indirect_via(cfg, Route::Graph, opts)
}

/// Mean width by the indirect route with an explicit Example-2 route.
pub fn mw_indirect_via(cfg: &BodyConfig, route: Route, opts: &QuadOptions) -> Result<MetricsReport> {
    if let BodyKind::DeltaFamily(d) = cfg.kind() {
        if (d - 2.0).abs() < 1e-12 {
            let rep = mw_indirect_via(&BodyConfig::example3(), route, opts)?;
            return Ok(MetricsReport { config: cfg.clone(), ..rep });
        }
    }
    let smooth = curvature_integral(cfg, route, opts)?;
    let edges = edge_integral(cfg, opts)?;
    Ok(MetricsReport {
        config: cfg.clone(),
        quantity: Quantity::MeanWidth,
        method: Method::Indirect,
        value: smooth.value / (2.0 * PI) + edges.value / (4.0 * PI),
        error_estimate: smooth.error_estimate / (2.0 * PI) + edges.error_estimate / (4.0 * PI),
        evaluations: smooth.evaluations + edges.evaluations,
    })
}
