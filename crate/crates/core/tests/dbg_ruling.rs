use diskhull::bodies::{BodyConfig, Vec3};
use diskhull::quad::{integrate_1d, QuadOptions};

#[test]
fn dbg_inner_kink_accuracy() {
    let cfg = BodyConfig::example1();
    let opts = QuadOptions { abs_tol: 1.6e-13, rel_tol: 1e-12, max_subdivisions: 2000, ..QuadOptions::default() };
    let tight = QuadOptions { abs_tol: 1e-13, rel_tol: 0.0, max_subdivisions: 4000, ..QuadOptions::default() };
    let mut worst = (0.0f64, 0.0f64);
    for i in 0..200 {
        let theta = 2.0 * std::f64::consts::PI * (i as f64 + 0.13) / 200.0;
        let f = |phi: f64| cfg.support(Vec3::from_spherical(theta, phi)) * phi.sin();
        let got = integrate_1d(f, 0.0, std::f64::consts::PI, &opts).unwrap();
        // split at the two kinks: tan(phi) = ±1/sin(theta)
        let st = theta.sin().abs();
        let (k1, k2) = if st > 1e-9 {
            let p = (1.0 / st).atan();
            (p, std::f64::consts::PI - p)
        } else {
            (std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2)
        };
        let mut reference = 0.0;
        for (a, b) in [(0.0, k1.min(k2)), (k1.min(k2), k1.max(k2)), (k1.max(k2), std::f64::consts::PI)] {
            if b > a {
                reference += integrate_1d(f, a, b, &tight).unwrap().value;
            }
        }
        let err = (got.value - reference).abs();
        if err > worst.1 {
            worst = (theta, err);
        }
        if err > 5.0 * (got.error_estimate + 1e-13) {
            println!("theta {theta:.6}: err {err:.3e} vs est {:.3e} (evals {})", got.error_estimate, got.evaluations);
        }
    }
    println!("worst inner error: {:.3e} at theta {:.6}", worst.1, worst.0);
}
