//! Circular edge arcs of the hull boundaries, with closed-form arclength
//! elements and exterior dihedral angles.

use std::f64::consts::PI;

use super::{BodyConfig, BodyKind, Vec3};
use crate::quad::Endpoints;
use crate::{Error, Result};

/// The specific edge arc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EdgeKind {
    /// Example 1: semicircle x² + y² = 1, y ≥ 0, z = 0, parametrized by
    /// the polar angle t ∈ [0, π]. Four congruent copies.
    Ex1Rim,
    /// Example 2: full rim circle x² + y² = 1 in z = -1, t ∈ [0, 2π].
    /// Two congruent copies (one per disk).
    Ex2RimCircle,
    /// Example 3: arc of x² + (y+1)² = 1 in z = 0 with x ≥ 0, parametrized
    /// by t = v ∈ [-2, -2/3] through (sqrt(-v(2+v)), v, 0). Four copies.
    Ex3RimArc,
    /// Cylinder rim circle of the given radius at z = ±ℓ/2, t ∈ [0, 2π].
    CylinderRim { length: f64, radius: f64 },
}

/// One edge arc: parametrization, arclength density, dihedral angle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeCurve {
    pub kind: EdgeKind,
    /// How many congruent copies of this arc the boundary carries.
    pub multiplicity: u32,
    /// Parameter interval.
    pub t_range: (f64, f64),
    /// Inverse-square-root endpoint behaviour of `ds`.
    pub singular: Endpoints,
}

pub(super) fn edges_for(cfg: &BodyConfig) -> Result<Vec<EdgeCurve>> {
    match cfg.kind() {
        BodyKind::Example1 => Ok(vec![EdgeCurve {
            kind: EdgeKind::Ex1Rim,
            multiplicity: 4,
            t_range: (0.0, PI),
            singular: Endpoints::NONE,
        }]),
        BodyKind::Example2 => Ok(vec![EdgeCurve {
            kind: EdgeKind::Ex2RimCircle,
            multiplicity: 2,
            t_range: (0.0, 2.0 * PI),
            singular: Endpoints::NONE,
        }]),
        BodyKind::Example3 => Ok(vec![EdgeCurve {
            kind: EdgeKind::Ex3RimArc,
            multiplicity: 4,
            t_range: (-2.0, -2.0 / 3.0),
            singular: Endpoints::LEFT,
        }]),
        BodyKind::DeltaFamily(d) if (d - 2.0).abs() < 1e-12 => Ok(vec![EdgeCurve {
            kind: EdgeKind::Ex3RimArc,
            multiplicity: 4,
            t_range: (-2.0, -2.0 / 3.0),
            singular: Endpoints::LEFT,
        }]),
        BodyKind::DeltaFamily(d) => Err(Error::Unsupported(format!(
            "no closed-form edge parametrization is packaged for delta = {d}"
        ))),
        BodyKind::Cylinder { length, radius } => Ok(vec![EdgeCurve {
            kind: EdgeKind::CylinderRim { length, radius },
            multiplicity: 2,
            t_range: (0.0, 2.0 * PI),
            singular: Endpoints::NONE,
        }]),
    }
}

impl EdgeCurve {
    /// Point on the arc at parameter `t`.
    pub fn point(&self, t: f64) -> Vec3 {
        match self.kind {
            EdgeKind::Ex1Rim => Vec3::new(t.cos(), t.sin(), 0.0),
            EdgeKind::Ex2RimCircle => Vec3::new(t.cos(), t.sin(), -1.0),
            EdgeKind::Ex3RimArc => Vec3::new((-t * (2.0 + t)).max(0.0).sqrt(), t, 0.0),
            EdgeKind::CylinderRim { length, radius } => {
                Vec3::new(radius * t.cos(), radius * t.sin(), length / 2.0)
            }
        }
    }

    /// Arclength density ds/dt.
    pub fn ds(&self, t: f64) -> f64 {
        match self.kind {
            EdgeKind::Ex1Rim | EdgeKind::Ex2RimCircle => 1.0,
            EdgeKind::Ex3RimArc => 1.0 / (-t * (2.0 + t)).sqrt(),
            EdgeKind::CylinderRim { radius, .. } => radius,
        }
    }

    /// Exterior dihedral angle between the outward normals of the two
    /// boundary pieces meeting along the arc.
    pub fn dihedral(&self, t: f64) -> f64 {
        match self.kind {
            EdgeKind::Ex1Rim => {
                let x = t.cos();
                2.0 * (1.0 / (2.0 - x * x).sqrt()).min(1.0).acos()
            }
            EdgeKind::Ex2RimCircle => {
                let (x, y) = (t.cos(), t.sin());
                (y / (2.0 - x * x).sqrt()).clamp(-1.0, 1.0).acos()
            }
            EdgeKind::Ex3RimArc => {
                let q = 1.0 + 2.0 * t + 3.0 * t * t;
                2.0 * (1.0 / q.sqrt()).min(1.0).acos()
            }
            EdgeKind::CylinderRim { .. } => PI / 2.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{BodyConfig, PatchKind};
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn dihedral_spot_values() {
        let e1 = BodyConfig::example1().edges().unwrap()[0];
        assert!((e1.dihedral(FRAC_PI_2) - FRAC_PI_2).abs() < 1e-14, "x = 0 gives pi/2");

        // The Example-2 angle arccos(y / sqrt(2 - x²)) attains its minimum
        // π/4 at the touch point (0, 1, -1) and never vanishes on the rim.
        let e2 = BodyConfig::example2().edges().unwrap()[0];
        assert!((e2.dihedral(FRAC_PI_2) - FRAC_PI_2 / 2.0).abs() < 1e-14);

        let e3 = BodyConfig::example3().edges().unwrap()[0];
        assert!((e3.dihedral(-1.0) - FRAC_PI_2).abs() < 1e-14, "v = -1 gives pi/2");
    }

    #[test]
    fn dihedral_in_open_interval_and_tangential_vanishing() {
        for cfg in [BodyConfig::example1(), BodyConfig::example2(), BodyConfig::example3()] {
            for edge in cfg.edges().unwrap() {
                let (t0, t1) = edge.t_range;
                for i in 1..200 {
                    let t = t0 + (t1 - t0) * (i as f64) / 200.0;
                    let a = edge.dihedral(t);
                    assert!(
                        (0.0..=std::f64::consts::PI).contains(&a),
                        "{:?}: angle {a} out of [0, pi]",
                        edge.kind
                    );
                    assert!(edge.ds(t) > 0.0);
                }
            }
        }
        // The Example-3 arc meets the sheets tangentially at v = -2/3.
        let e3 = BodyConfig::example3().edges().unwrap()[0];
        assert!(e3.dihedral(-2.0 / 3.0).abs() < 1e-7);
    }

    #[test]
    fn dihedral_matches_adjacent_patch_normals() {
        // Example 1: the rim edge joins the upper graph sheet and its
        // mirror; the angle between their outward normals is the closed form.
        let cfg = BodyConfig::example1();
        let patch = cfg.patches().unwrap()[0];
        let edge = cfg.edges().unwrap()[0];
        for i in 1..40 {
            let t = edge.t_range.0 + (edge.t_range.1 - edge.t_range.0) * (i as f64) / 40.0;
            let x = t.cos();
            let n_top = patch.normal(x, 0.0);
            let n_bottom = Vec3::new(n_top.x, n_top.y, -n_top.z);
            let angle = n_top.cross(n_bottom).norm().atan2(n_top.dot(n_bottom));
            assert!(
                (angle - edge.dihedral(t)).abs() < 1e-12,
                "angle mismatch at t = {t}"
            );
        }

        // Example 2: curved sheet against the flat bottom disk (normal -z).
        let cfg = BodyConfig::example2();
        let phi = cfg
            .patches()
            .unwrap()
            .into_iter()
            .find(|p| p.kind == PatchKind::GraphPhiEx2)
            .unwrap();
        let edge = cfg.edges().unwrap()[0];
        let down = Vec3::new(0.0, 0.0, -1.0);
        for i in 1..40 {
            // Lower semicircle of the rim, where the phi sheet meets the disk.
            let t = -std::f64::consts::PI * (i as f64) / 40.0;
            let x = t.cos();
            let n = phi.normal(x, t.sin());
            let angle = n.cross(down).norm().atan2(n.dot(down));
            assert!(
                (angle - edge.dihedral(t)).abs() < 1e-12,
                "Ex2 angle mismatch at t = {t}: {angle} vs {}",
                edge.dihedral(t)
            );
        }

        // Example 3: the two parametric sheets (z >= 0 and its mirror) meet
        // along u = 1; the closed form is twice the angle to the z = 0 plane.
        let cfg = BodyConfig::example3();
        let p3 = cfg.patches().unwrap()[0];
        let edge = cfg.edges().unwrap()[0];
        for i in 1..40 {
            let v = -2.0 + (4.0 / 3.0) * (i as f64) / 40.0;
            let n_up = p3.normal(1.0, v);
            let n_down = Vec3::new(n_up.x, n_up.y, -n_up.z);
            let angle = n_up.cross(n_down).norm().atan2(n_up.dot(n_down));
            assert!(
                (angle - edge.dihedral(v)).abs() < 1e-12,
                "Ex3 angle mismatch at v = {v}"
            );
        }
    }

    #[test]
    fn edge_points_and_lengths() {
        // Edge points lie on the generator rims; total length of the
        // Example-2 rim is 2π.
        let cfg = BodyConfig::example2();
        let edge = cfg.edges().unwrap()[0];
        for i in 0..20 {
            let t = 2.0 * std::f64::consts::PI * (i as f64) / 20.0;
            let p = edge.point(t);
            assert!((p.x * p.x + p.y * p.y - 1.0).abs() < 1e-14);
            assert!((p.z + 1.0).abs() < 1e-15);
        }
        let len = crate::quad::integrate_1d(
            |t| edge.ds(t),
            edge.t_range.0,
            edge.t_range.1,
            &crate::quad::QuadOptions::default(),
        )
        .unwrap();
        assert!((len.value - 2.0 * std::f64::consts::PI).abs() < 1e-10);

        // Example 3 arc length: from (0,-2,0) to (2√2/3, -2/3, 0) along the
        // unit circle centered (0,-1,0): the polar angle sweeps from π to
        // arcsin(2√2/3) measured appropriately; check against ∫ ds.
        let cfg = BodyConfig::example3();
        let edge = cfg.edges().unwrap()[0];
        let p_start = edge.point(-2.0);
        let p_end = edge.point(-2.0 / 3.0);
        assert!((p_start - Vec3::new(0.0, -2.0, 0.0)).norm() < 1e-12);
        assert!((p_end - Vec3::new(2.0 * 2.0f64.sqrt() / 3.0, -2.0 / 3.0, 0.0)).norm() < 1e-12);
        let len = crate::quad::integrate_1d(
            |t| edge.ds(t),
            edge.t_range.0,
            edge.t_range.1,
            &crate::quad::QuadOptions::default().singular(edge.singular),
        )
        .unwrap();
        // Central angle between (0,-1,0)->(0,-2,0) and (0,-1,0)->(2√2/3,1/3,0)
        // is arccos(-1/3).
        let want = std::f64::consts::PI - (1.0f64 / 3.0).acos();
        assert!((len.value - want).abs() < 1e-10, "arc length {} vs {want}", len.value);
    }
}
