//! Implicit boundary polynomials: the cubic for Example 2 and the sextic
//! for Example 3. Values should vanish on the curved boundary sheets.

use super::Vec3;

/// Example 2 boundary cubic, expanded form.
pub(super) fn cubic_example2(p: Vec3) -> f64 {
    let (x, y, z) = (p.x, p.y, p.z);
    let x2 = x * x;
    -x2 + 2.0 * y + x2 * y - 3.0 * y * y + y * y * y - 2.0 * z - x2 * z + 6.0 * y * z
        + x2 * y * z
        - 5.0 * y * y * z
        + y * y * y * z
        - 3.0 * z * z
        + 5.0 * y * z * z
        - 2.0 * y * y * z * z
        - z * z * z
        + y * z * z * z
}

/// Example 2 boundary cubic, factored form
/// (y-1)(z+1)(x² - 2y + y² + 2z - 2yz + z²).
#[cfg(test)]
fn cubic_example2_factored(p: Vec3) -> f64 {
    let (x, y, z) = (p.x, p.y, p.z);
    (y - 1.0) * (z + 1.0) * (x * x - 2.0 * y + y * y + 2.0 * z - 2.0 * y * z + z * z)
}

/// Example 3 boundary sextic.
pub(super) fn sextic_example3(p: Vec3) -> f64 {
    let (x, y, z) = (p.x, p.y, p.z);
    let (x2, y2, z2) = (x * x, y * y, z * z);
    let (x4, y4, z4) = (x2 * x2, y2 * y2, z2 * z2);
    -4.0 * x4 + 8.0 * x4 * x2 - 16.0 * x2 * y + 36.0 * x4 * y - 16.0 * y2 + 40.0 * x2 * y2
        + 15.0 * x4 * y2
        + 36.0 * x2 * y2 * y
        + 8.0 * y4
        + 6.0 * x2 * y4
        - y4 * y2
        - 8.0 * x2 * z2
        + 24.0 * x4 * z2
        + 16.0 * y * z2
        + 40.0 * y2 * z2
        - 78.0 * x2 * y2 * z2
        - 36.0 * y2 * y * z2
        + 6.0 * y4 * z2
        - 4.0 * z4
        + 24.0 * x2 * z4
        - 36.0 * y * z4
        + 15.0 * y2 * z4
        + 8.0 * z4 * z2
}

/// Finite-difference gradient norm of the implicit polynomial, used to
/// scale residuals.
pub fn gradient_norm(f: impl Fn(Vec3) -> f64, p: Vec3) -> f64 {
    let h = 1e-6;
    let gx = (f(p + Vec3::new(h, 0.0, 0.0)) - f(p - Vec3::new(h, 0.0, 0.0))) / (2.0 * h);
    let gy = (f(p + Vec3::new(0.0, h, 0.0)) - f(p - Vec3::new(0.0, h, 0.0))) / (2.0 * h);
    let gz = (f(p + Vec3::new(0.0, 0.0, h)) - f(p - Vec3::new(0.0, 0.0, h))) / (2.0 * h);
    Vec3::new(gx, gy, gz).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bodies::{BodyConfig, Vec3};

    #[test]
    fn cubic_expanded_equals_factored() {
        for i in 0..100 {
            let t = i as f64;
            let p = Vec3::new(
                (t * 0.7391).sin() * 2.0,
                (t * 1.3173 + 0.4).sin() * 2.0,
                (t * 2.1113 + 1.1).sin() * 2.0,
            );
            let a = cubic_example2(p);
            let b = cubic_example2_factored(p);
            assert!((a - b).abs() < 1e-12 * (1.0 + a.abs()), "mismatch at {p:?}");
        }
    }

    #[test]
    fn residual_vanishes_on_vinzant_patches() {
        // 50x50 interior grids on both parametric patches, scaled by the
        // polynomial's gradient norm.
        let cfg2 = BodyConfig::example2();
        let patch2 = cfg2
            .patches()
            .unwrap()
            .into_iter()
            .find(|p| matches!(p.kind, crate::bodies::PatchKind::VinzantEx2))
            .unwrap();
        for i in 0..50 {
            for j in 0..50 {
                let u = (i as f64 + 0.5) / 50.0;
                let v = -1.0 + 2.0 * (j as f64 + 0.5) / 50.0;
                let p = patch2.point(u, v);
                let r = cfg2.implicit_residual(p).unwrap();
                let scale = gradient_norm(|q| cfg2.implicit_residual(q).unwrap(), p).max(1.0);
                assert!(r.abs() / scale <= 1e-9, "Ex2 residual {r:e} at ({u},{v})");
            }
        }

        let cfg3 = BodyConfig::example3();
        let patch3 = cfg3.patches().unwrap()[0];
        for i in 0..50 {
            for j in 0..50 {
                let u = (i as f64 + 0.5) / 50.0;
                let v = -2.0 + (4.0 / 3.0) * (j as f64 + 0.5) / 50.0;
                let p = patch3.point(u, v);
                let r = cfg3.implicit_residual(p).unwrap();
                let scale = gradient_norm(|q| cfg3.implicit_residual(q).unwrap(), p).max(1.0);
                assert!(r.abs() / scale <= 1e-9, "Ex3 residual {r:e} at ({u},{v})");
            }
        }
    }

    #[test]
    fn sextic_spot_values() {
        let cfg = BodyConfig::example3();
        // The patch corner (u, v) = (1, -1) maps to the rim point (1, -1, 0).
        let p = cfg.patches().unwrap()[0].point(1.0, -1.0);
        assert!((p - Vec3::new(1.0, -1.0, 0.0)).norm() < 1e-14);
        assert!(cfg.implicit_residual(p).unwrap().abs() < 1e-12);
        // No constant term: the origin is a root.
        assert_eq!(cfg.implicit_residual(Vec3::ZERO).unwrap(), 0.0);
    }

    #[test]
    fn unsupported_configs_error() {
        assert!(BodyConfig::example1().implicit_residual(Vec3::ZERO).is_err());
        assert!(BodyConfig::oloid().implicit_residual(Vec3::ZERO).is_err());
    }
}
