//! Smooth boundary patches with closed-form maps and first derivatives.
//!
//! Each configuration's boundary is a union of patches, every one carrying
//! a symmetry multiplicity so that one parametrized copy, integrated and
//! scaled, reproduces the full closed surface. Second-order data (the
//! second fundamental form) is obtained by differencing the closed-form
//! unit normal; the mean-curvature checks against the known closed forms
//! certify that step choice.

use std::f64::consts::PI;

use super::{BodyConfig, BodyKind, Vec3};
use crate::{Error, Result};

/// Which computation family a patch belongs to. `Example2` has two
/// complete descriptions of its curved boundary; the others have one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Graph description z = φ(x, y) (and flat pieces).
    Graph,
    /// Parametric description (u, v) ↦ (x, y, z).
    Parametric,
    /// Patch shared by both descriptions (flat pieces, single-route bodies).
    Both,
}

impl Route {
    pub fn includes(self, requested: Route) -> bool {
        self == Route::Both || self == requested
    }
}

/// The specific boundary piece.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PatchKind {
    /// Example 1, z = sqrt(1-x²) - y over x² + y² ≤ 1, y ≥ 0. ×4.
    GraphEx1,
    /// Example 2 upper sheet z = sqrt(1-x²) + y - 1, -sqrt(1-x²) ≤ y ≤ 1.
    GraphPhiEx2,
    /// Example 2 lower sheet z = -sqrt(1-x²) + y - 1, sqrt(1-x²) ≤ y ≤ 1.
    GraphPsiEx2,
    /// Example 2 parametric half-sheet, u ∈ [0,1], v ∈ [-1,1]. ×2.
    VinzantEx2,
    /// Example 3 parametric quarter-sheet, u ∈ [0,1], v ∈ [-2,-2/3]. ×4.
    VinzantEx3,
    /// Example 2 flat disk in z = -1, polar (ρ, t).
    DiskBottomEx2,
    /// Example 2 flat disk in y = 1, polar (ρ, t).
    DiskBackEx2,
    /// Cylinder side, (t, z) with t ∈ [0,2π], |z| ≤ ℓ/2.
    CylinderSide { length: f64, radius: f64 },
    /// Cylinder cap at z = ±ℓ/2, polar (ρ, t).
    CylinderCap { length: f64, radius: f64, top: bool },
}

/// A parametrized boundary piece.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamPatch {
    pub kind: PatchKind,
    /// How many congruent copies tile the boundary.
    pub multiplicity: u32,
    pub route: Route,
}

/// First (E, F, G) and second (L, M, N) fundamental forms at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FundForms {
    pub e: f64,
    pub f: f64,
    pub g: f64,
    pub l: f64,
    pub m: f64,
    pub n: f64,
}

impl FundForms {
    pub fn metric_det(&self) -> f64 {
        self.e * self.g - self.f * self.f
    }
}

pub(super) fn patches_for(cfg: &BodyConfig) -> Result<Vec<ParamPatch>> {
    let patch = |kind, multiplicity, route| ParamPatch { kind, multiplicity, route };
    match cfg.kind() {
        BodyKind::Example1 => Ok(vec![patch(PatchKind::GraphEx1, 4, Route::Both)]),
        BodyKind::Example2 => Ok(vec![
            patch(PatchKind::GraphPhiEx2, 1, Route::Graph),
            patch(PatchKind::GraphPsiEx2, 1, Route::Graph),
            patch(PatchKind::VinzantEx2, 2, Route::Parametric),
            patch(PatchKind::DiskBottomEx2, 1, Route::Both),
            patch(PatchKind::DiskBackEx2, 1, Route::Both),
        ]),
        BodyKind::Example3 => Ok(vec![patch(PatchKind::VinzantEx3, 4, Route::Both)]),
        BodyKind::DeltaFamily(d) if (d - 2.0).abs() < 1e-12 => {
            Ok(vec![patch(PatchKind::VinzantEx3, 4, Route::Both)])
        }
        BodyKind::DeltaFamily(d) => Err(Error::Unsupported(format!(
            "no closed-form boundary parametrization is packaged for delta = {d}"
        ))),
        BodyKind::Cylinder { length, radius } => Ok(vec![
            patch(PatchKind::CylinderSide { length, radius }, 1, Route::Both),
            patch(PatchKind::CylinderCap { length, radius, top: true }, 1, Route::Both),
            patch(PatchKind::CylinderCap { length, radius, top: false }, 1, Route::Both),
        ]),
    }
}

impl ParamPatch {
    pub fn u_range(&self) -> (f64, f64) {
        match self.kind {
            PatchKind::GraphEx1 | PatchKind::GraphPhiEx2 | PatchKind::GraphPsiEx2 => (-1.0, 1.0),
            PatchKind::VinzantEx2 | PatchKind::VinzantEx3 => (0.0, 1.0),
            PatchKind::DiskBottomEx2 | PatchKind::DiskBackEx2 => (0.0, 1.0),
            PatchKind::CylinderSide { .. } => (0.0, 2.0 * PI),
            PatchKind::CylinderCap { radius, .. } => (0.0, radius),
        }
    }

    /// Inner parameter bounds, possibly depending on the outer parameter.
    pub fn v_range(&self, u: f64) -> (f64, f64) {
        match self.kind {
            PatchKind::GraphEx1 => (0.0, (1.0 - u * u).max(0.0).sqrt()),
            PatchKind::GraphPhiEx2 => (-(1.0 - u * u).max(0.0).sqrt(), 1.0),
            PatchKind::GraphPsiEx2 => ((1.0 - u * u).max(0.0).sqrt(), 1.0),
            PatchKind::VinzantEx2 => (-1.0, 1.0),
            PatchKind::VinzantEx3 => (-2.0, -2.0 / 3.0),
            PatchKind::DiskBottomEx2 | PatchKind::DiskBackEx2 => (0.0, 2.0 * PI),
            PatchKind::CylinderSide { length, .. } => (-length / 2.0, length / 2.0),
            PatchKind::CylinderCap { .. } => (0.0, 2.0 * PI),
        }
    }

    pub fn is_flat(&self) -> bool {
        matches!(
            self.kind,
            PatchKind::DiskBottomEx2 | PatchKind::DiskBackEx2 | PatchKind::CylinderCap { .. }
        )
    }

    pub fn point(&self, u: f64, v: f64) -> Vec3 {
        match self.kind {
            PatchKind::GraphEx1 => Vec3::new(u, v, (1.0 - u * u).sqrt() - v),
            PatchKind::GraphPhiEx2 => Vec3::new(u, v, (1.0 - u * u).sqrt() + v - 1.0),
            PatchKind::GraphPsiEx2 => Vec3::new(u, v, -(1.0 - u * u).sqrt() + v - 1.0),
            PatchKind::VinzantEx2 => {
                Vec3::new((1.0 - v * v).sqrt(), 1.0 - u + u * v, -u - v + u * v)
            }
            PatchKind::VinzantEx3 => {
                let g = (-v * (2.0 + v)).sqrt();
                let s = (v * (2.0 + 3.0 * v)).sqrt();
                let w = 1.0 + 2.0 * v;
                Vec3::new(u * g, v * (1.0 + 2.0 * u * v) / w, (-1.0 + u) * s / w)
            }
            PatchKind::DiskBottomEx2 => Vec3::new(u * v.cos(), u * v.sin(), -1.0),
            PatchKind::DiskBackEx2 => Vec3::new(u * v.cos(), 1.0, u * v.sin()),
            PatchKind::CylinderSide { radius, .. } => Vec3::new(radius * u.cos(), radius * u.sin(), v),
            PatchKind::CylinderCap { length, top, .. } => {
                let z = if top { length / 2.0 } else { -length / 2.0 };
                Vec3::new(u * v.cos(), u * v.sin(), z)
            }
        }
    }

    /// Closed-form ∂(map)/∂u.
    pub fn deriv_u(&self, u: f64, v: f64) -> Vec3 {
        match self.kind {
            PatchKind::GraphEx1 => Vec3::new(1.0, 0.0, -u / (1.0 - u * u).sqrt()),
            PatchKind::GraphPhiEx2 => Vec3::new(1.0, 0.0, -u / (1.0 - u * u).sqrt()),
            PatchKind::GraphPsiEx2 => Vec3::new(1.0, 0.0, u / (1.0 - u * u).sqrt()),
            PatchKind::VinzantEx2 => Vec3::new(0.0, v - 1.0, v - 1.0),
            PatchKind::VinzantEx3 => {
                let g = (-v * (2.0 + v)).sqrt();
                let s = (v * (2.0 + 3.0 * v)).sqrt();
                let w = 1.0 + 2.0 * v;
                Vec3::new(g, 2.0 * v * v / w, s / w)
            }
            PatchKind::DiskBottomEx2 => Vec3::new(v.cos(), v.sin(), 0.0),
            PatchKind::DiskBackEx2 => Vec3::new(v.cos(), 0.0, v.sin()),
            PatchKind::CylinderSide { radius, .. } => {
                Vec3::new(-radius * u.sin(), radius * u.cos(), 0.0)
            }
            PatchKind::CylinderCap { .. } => Vec3::new(v.cos(), v.sin(), 0.0),
        }
    }

    /// Closed-form ∂(map)/∂v.
    pub fn deriv_v(&self, u: f64, v: f64) -> Vec3 {
        match self.kind {
            PatchKind::GraphEx1 => Vec3::new(0.0, 1.0, -1.0),
            PatchKind::GraphPhiEx2 | PatchKind::GraphPsiEx2 => Vec3::new(0.0, 1.0, 1.0),
            PatchKind::VinzantEx2 => Vec3::new(-v / (1.0 - v * v).sqrt(), u, u - 1.0),
            PatchKind::VinzantEx3 => {
                let g = (-v * (2.0 + v)).sqrt();
                let s = (v * (2.0 + 3.0 * v)).sqrt();
                let w = 1.0 + 2.0 * v;
                Vec3::new(
                    -u * (1.0 + v) / g,
                    (1.0 + 4.0 * u * v + 4.0 * u * v * v) / (w * w),
                    (u - 1.0) * (1.0 + v) / (s * w * w),
                )
            }
            PatchKind::DiskBottomEx2 => Vec3::new(-u * v.sin(), u * v.cos(), 0.0),
            PatchKind::DiskBackEx2 => Vec3::new(-u * v.sin(), 0.0, u * v.cos()),
            PatchKind::CylinderSide { .. } => Vec3::new(0.0, 0.0, 1.0),
            PatchKind::CylinderCap { .. } => Vec3::new(-u * v.sin(), u * v.cos(), 0.0),
        }
    }

    /// Outward unit normal 𝒩.
    pub fn normal(&self, u: f64, v: f64) -> Vec3 {
        match self.kind {
            PatchKind::GraphEx1 => {
                let q = (1.0 - u * u).sqrt();
                Vec3::new(u, q, q) * (1.0 / (2.0 - u * u).sqrt())
            }
            PatchKind::GraphPhiEx2 => {
                let q = (1.0 - u * u).sqrt();
                Vec3::new(u, -q, q) * (1.0 / (2.0 - u * u).sqrt())
            }
            PatchKind::GraphPsiEx2 => {
                let q = (1.0 - u * u).sqrt();
                Vec3::new(u, q, -q) * (1.0 / (2.0 - u * u).sqrt())
            }
            PatchKind::VinzantEx2 => {
                let w = (1.0 + v * v).sqrt();
                Vec3::new(((1.0 - v * v) / (1.0 + v * v)).sqrt(), v / w, -v / w)
            }
            PatchKind::VinzantEx3 => {
                let q = (1.0 + 2.0 * v + 3.0 * v * v).sqrt();
                Vec3::new(
                    (-v * (2.0 + v)).sqrt() / q,
                    (1.0 + v) / q,
                    (v * (2.0 + 3.0 * v)).sqrt() / q,
                )
            }
            PatchKind::DiskBottomEx2 => Vec3::new(0.0, 0.0, -1.0),
            PatchKind::DiskBackEx2 => Vec3::new(0.0, 1.0, 0.0),
            PatchKind::CylinderSide { .. } => Vec3::new(u.cos(), u.sin(), 0.0),
            PatchKind::CylinderCap { top, .. } => {
                Vec3::new(0.0, 0.0, if top { 1.0 } else { -1.0 })
            }
        }
    }

    /// Surface measure density |∂u map × ∂v map|.
    pub fn area_element(&self, u: f64, v: f64) -> f64 {
        self.deriv_u(u, v).cross(self.deriv_v(u, v)).norm()
    }

    /// Jacobian ∂(x, y)/∂(u, v) of the map followed by projection to the
    /// xy-plane. Defined for the graph patches (identically 1) and the two
    /// parametric patches; fails at the parametric patches' singular
    /// parameter values.
    pub fn jacobian_xy(&self, _u: f64, v: f64) -> Result<f64> {
        match self.kind {
            PatchKind::GraphEx1 | PatchKind::GraphPhiEx2 | PatchKind::GraphPsiEx2 => Ok(1.0),
            PatchKind::VinzantEx2 => {
                if v <= -1.0 || v >= 1.0 {
                    return Err(Error::Domain(format!("jacobian is singular at v = {v}")));
                }
                Ok((-1.0 + v) * v / (1.0 - v * v).sqrt())
            }
            PatchKind::VinzantEx3 => {
                if v <= -2.0 || v >= -2.0 / 3.0 {
                    return Err(Error::Domain(format!("jacobian is singular at v = {v}")));
                }
                let w = 1.0 + 2.0 * v;
                Ok((-v / (2.0 + v)).sqrt() * (2.0 + v + 6.0 * _u * v + 6.0 * _u * v * v) / (w * w))
            }
            _ => Err(Error::Unsupported("jacobian_xy applies to graph and parametric patches".into())),
        }
    }

    /// Finite-difference steps for the normal derivatives, clamped so the
    /// stencil stays inside the parameter rectangle.
    fn fd_steps(&self, u: f64, v: f64) -> (f64, f64) {
        let (u0, u1) = self.u_range();
        let (v0, v1) = self.v_range(u);
        let base_u = 2e-6 * (1.0 + u.abs());
        let base_v = 2e-6 * (1.0 + v.abs());
        let hu = base_u.min(0.25 * (u - u0).min(u1 - u).max(0.0));
        let hv = base_v.min(0.25 * (v - v0).min(v1 - v).max(0.0));
        (hu, hv)
    }

    /// First and second fundamental forms. The second form uses central
    /// differences of the closed-form normal (with L = -∂u map · 𝒩_u etc.).
    pub fn fundamental_forms(&self, u: f64, v: f64) -> Result<FundForms> {
        let ru = self.deriv_u(u, v);
        let rv = self.deriv_v(u, v);
        let e = ru.dot(ru);
        let f = ru.dot(rv);
        let g = rv.dot(rv);
        if !(e > 0.0) || !(g > 0.0) || e * g - f * f <= 0.0 {
            return Err(Error::Degenerate(format!(
                "metric is degenerate at (u, v) = ({u}, {v})"
            )));
        }
        if self.is_flat() {
            return Ok(FundForms { e, f, g, l: 0.0, m: 0.0, n: 0.0 });
        }
        let (hu, hv) = self.fd_steps(u, v);
        if hu <= 0.0 || hv <= 0.0 {
            return Err(Error::Domain(format!(
                "point (u, v) = ({u}, {v}) is not interior to the patch"
            )));
        }
        let nu = (self.normal(u + hu, v) - self.normal(u - hu, v)) * (0.5 / hu);
        let nv = (self.normal(u, v + hv) - self.normal(u, v - hv)) * (0.5 / hv);
        let l = -ru.dot(nu);
        let n = -rv.dot(nv);
        let m = -0.5 * (ru.dot(nv) + rv.dot(nu));
        Ok(FundForms { e, f, g, l, m, n })
    }

    /// Mean curvature (average of the principal curvatures, positive for
    /// these convex bodies). Sign fixed so that the Example-1 graph value
    /// (2 - x²)^{-3/2} and the cylinder value 1/(2r) come out positive with
    /// the outward normal.
    pub fn mean_curvature(&self, u: f64, v: f64) -> Result<f64> {
        let ff = self.fundamental_forms(u, v)?;
        let det = ff.metric_det();
        Ok(-(ff.e * ff.n - 2.0 * ff.f * ff.m + ff.g * ff.l) / (2.0 * det))
    }
}
