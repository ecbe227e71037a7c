//! Adaptive 1D and iterated 2D quadrature with error estimates, plus
//! quadrature over the unit sphere.
//!
//! The scheme is classic Gauss–Kronrod (10/21 embedded pair) panel
//! subdivision: the panel with the largest error estimate is bisected
//! until the summed estimate meets `max(abs_tol, rel_tol*|value|)`.
//! Endpoints declared singular (inverse-square-root behaviour such as
//! `1/sqrt(1-x^2)`) are removed with the substitution
//! `x = a + (b-a) sin^2 t` before adapting.
//!
//! Results are deterministic: identical inputs produce bit-identical
//! outputs (fixed tie-breaking in the panel queue and a fixed final
//! summation order).

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::bodies::Vec3;
use crate::{Error, Result};

/// Which endpoints of an integration interval carry an inverse-square-root
/// singularity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Endpoints {
    pub left: bool,
    pub right: bool,
}

impl Endpoints {
    pub const NONE: Endpoints = Endpoints { left: false, right: false };
    pub const LEFT: Endpoints = Endpoints { left: true, right: false };
    pub const RIGHT: Endpoints = Endpoints { left: false, right: true };
    pub const BOTH: Endpoints = Endpoints { left: true, right: true };

    fn any(self) -> bool {
        self.left || self.right
    }
}

/// Options for [`integrate_1d`].
#[derive(Clone, Copy, Debug)]
pub struct QuadOptions {
    /// Absolute tolerance target. Must not be zero together with `rel_tol`.
    pub abs_tol: f64,
    /// Relative tolerance target.
    pub rel_tol: f64,
    /// Maximum number of panel bisections before giving up.
    pub max_subdivisions: usize,
    /// Declared inverse-square-root endpoint singularities.
    pub singular: Endpoints,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            abs_tol: 1e-11,
            rel_tol: 1e-11,
            max_subdivisions: 2000,
            singular: Endpoints::NONE,
        }
    }
}

impl QuadOptions {
    /// Same tolerances with the given singular-endpoint flags.
    pub fn singular(mut self, endpoints: Endpoints) -> Self {
        self.singular = endpoints;
        self
    }

    /// Default options scaled to the given absolute and relative tolerance.
    pub fn with_tol(tol: f64) -> Self {
        QuadOptions {
            abs_tol: tol,
            rel_tol: tol,
            ..QuadOptions::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.abs_tol >= 0.0) || !(self.rel_tol >= 0.0) {
            return Err(Error::InvalidInput("tolerances must be non-negative".into()));
        }
        if self.abs_tol == 0.0 && self.rel_tol == 0.0 {
            return Err(Error::InvalidInput(
                "abs_tol and rel_tol must not both be zero".into(),
            ));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::InvalidInput("max_subdivisions must be >= 1".into()));
        }
        Ok(())
    }
}

/// Options for [`integrate_2d`]. The inner integral runs at tolerances
/// tightened by a factor of 10.
#[derive(Clone, Copy, Debug)]
pub struct Quad2dOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Singular endpoints of the outer interval `[a, b]`.
    pub outer_singular: Endpoints,
    /// Singular endpoints of the inner interval `[lo(x), hi(x)]`.
    pub inner_singular: Endpoints,
}

impl Default for Quad2dOptions {
    fn default() -> Self {
        Quad2dOptions {
            abs_tol: 1e-11,
            rel_tol: 1e-11,
            max_subdivisions: 2000,
            outer_singular: Endpoints::NONE,
            inner_singular: Endpoints::NONE,
        }
    }
}

impl Quad2dOptions {
    pub fn with_tol(tol: f64) -> Self {
        Quad2dOptions {
            abs_tol: tol,
            rel_tol: tol,
            ..Quad2dOptions::default()
        }
    }

    pub fn outer_singular(mut self, endpoints: Endpoints) -> Self {
        self.outer_singular = endpoints;
        self
    }

    pub fn inner_singular(mut self, endpoints: Endpoints) -> Self {
        self.inner_singular = endpoints;
        self
    }
}

/// Outcome of a quadrature: value, a bound on the error, and the number of
/// integrand evaluations spent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

// 10-point Gauss / 21-point Kronrod abscissae and weights (QUADPACK).
const XGK21: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WG21: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
const WGK21: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

/// One 10/21 Gauss–Kronrod evaluation on `[a, b]`.
fn qk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut fv1 = [0.0f64; 10];
    let mut fv2 = [0.0f64; 10];
    let mut res_gauss = 0.0;
    let mut res_kronrod = f_center * WGK21[10];
    let mut res_abs = res_kronrod.abs();

    for j in 0..5 {
        let jtw = 2 * j + 1;
        let x = half * XGK21[jtw];
        let y1 = f(center - x);
        let y2 = f(center + x);
        fv1[jtw] = y1;
        fv2[jtw] = y2;
        res_gauss += WG21[j] * (y1 + y2);
        res_kronrod += WGK21[jtw] * (y1 + y2);
        res_abs += WGK21[jtw] * (y1.abs() + y2.abs());
    }
    for j in 0..5 {
        let jtw = 2 * j;
        let x = half * XGK21[jtw];
        let y1 = f(center - x);
        let y2 = f(center + x);
        fv1[jtw] = y1;
        fv2[jtw] = y2;
        res_kronrod += WGK21[jtw] * (y1 + y2);
        res_abs += WGK21[jtw] * (y1.abs() + y2.abs());
    }

    let mean = res_kronrod * 0.5;
    let mut res_asc = WGK21[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK21[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let err = (res_kronrod - res_gauss) * half;
    let value = res_kronrod * half;
    let error = rescale_error(err, res_abs * half.abs(), res_asc * half.abs());
    (value, error)
}

#[derive(Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    seq: u64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error && self.seq == other.seq
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        // Max-heap on error; older panels win ties for determinism.
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// Adaptive integration of `f` over `[a, b]`.
///
/// Endpoint singularities of inverse-square-root type must be declared in
/// `opts.singular`; the substitution `x = a + (b-a) sin^2 t` is then applied
/// before the adaptive pass. Non-convergence and non-finite integrand values
/// are reported as errors (the former carries the best estimate).
pub fn integrate_1d<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: &QuadOptions) -> Result<QuadResult> {
    opts.validate()?;
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInput("integration bounds must be finite".into()));
    }
    if a > b {
        return Err(Error::InvalidInput(format!("bounds out of order: {a} > {b}")));
    }
    if a == b {
        return Ok(QuadResult { value: 0.0, error_estimate: 0.0, evaluations: 0 });
    }

    if opts.singular.any() {
        let span = b - a;
        let g = |t: f64| {
            let (s, c) = (t.sin(), t.cos());
            let x = a + span * s * s;
            f(x) * span * 2.0 * s * c
        };
        let inner = QuadOptions { singular: Endpoints::NONE, ..*opts };
        return adaptive(&g, 0.0, FRAC_PI_2, &inner);
    }
    adaptive(&f, a, b, opts)
}

fn sorted_sums(heap: &BinaryHeap<Panel>) -> (f64, f64) {
    // Deterministic final summation: panels ordered by position.
    let mut panels: Vec<&Panel> = heap.iter().collect();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut v = 0.0;
    let mut e = 0.0;
    for p in &panels {
        v += p.value;
        e += p.error;
    }
    (v, e)
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, opts: &QuadOptions) -> Result<QuadResult> {
    let evals = Cell::new(0u64);
    let bad_at = Cell::new(None::<f64>);
    let g = |x: f64| {
        evals.set(evals.get() + 1);
        let y = f(x);
        if !y.is_finite() && bad_at.get().is_none() {
            bad_at.set(Some(x));
        }
        y
    };

    let mut heap: BinaryHeap<Panel> = BinaryHeap::new();
    let mut seq = 0u64;
    let (value, error) = qk21(&g, a, b);
    if let Some(at) = bad_at.get() {
        return Err(Error::NonFiniteIntegrand { at });
    }
    heap.push(Panel { a, b, value, error, seq });

    let mut val_sum = value;
    let mut err_sum = error;
    let mut subdivisions = 0usize;

    let tol_of = |v: f64| opts.abs_tol.max(opts.rel_tol * v.abs());
    let non_convergence = |heap: &BinaryHeap<Panel>, evaluations: u64, subdivisions: usize| {
        let (v, e) = sorted_sums(heap);
        Error::NonConvergence { value: v, error_estimate: e, evaluations, subdivisions }
    };

    loop {
        // Phase 1: greedy refinement on the embedded-pair estimates.
        while err_sum > tol_of(val_sum) {
            if subdivisions >= opts.max_subdivisions {
                return Err(non_convergence(&heap, evals.get(), subdivisions));
            }
            let worst = heap.pop().expect("heap never empty");
            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a || mid >= worst.b {
                // No longer bisectable in f64.
                heap.push(worst);
                return Err(non_convergence(&heap, evals.get(), subdivisions));
            }
            let (lv, le) = qk21(&g, worst.a, mid);
            let (rv, re) = qk21(&g, mid, worst.b);
            if let Some(at) = bad_at.get() {
                return Err(Error::NonFiniteIntegrand { at });
            }
            val_sum += lv + rv - worst.value;
            err_sum += le + re - worst.error;
            seq += 1;
            heap.push(Panel { a: worst.a, b: mid, value: lv, error: le, seq });
            seq += 1;
            heap.push(Panel { a: mid, b: worst.b, value: rv, error: re, seq });
            subdivisions += 1;
        }

        // Phase 2: verification sweep. A single embedded pair can be fooled
        // on a panel whose integrand has an interior kink (the two rules may
        // agree while both are off), so bisect every panel once and compare:
        // the coarse/fine discrepancy is an estimate the kink cannot dodge.
        // Children inherit at least half their parent's discrepancy as an
        // error floor, which sends phase 1 back to the right panels.
        if subdivisions + heap.len() > opts.max_subdivisions {
            return Err(non_convergence(&heap, evals.get(), subdivisions));
        }
        let mut panels: Vec<Panel> = std::mem::take(&mut heap).into_vec();
        panels.sort_by(|p, q| p.a.total_cmp(&q.a));
        let mut diff_sum = 0.0;
        val_sum = 0.0;
        err_sum = 0.0;
        for p in panels {
            let mid = 0.5 * (p.a + p.b);
            if mid <= p.a || mid >= p.b {
                val_sum += p.value;
                err_sum += p.error;
                heap.push(p);
                continue;
            }
            let (lv, le) = qk21(&g, p.a, mid);
            let (rv, re) = qk21(&g, mid, p.b);
            let d = (p.value - (lv + rv)).abs();
            diff_sum += d;
            let le = le.max(0.5 * d);
            let re = re.max(0.5 * d);
            val_sum += lv + rv;
            err_sum += le + re;
            seq += 1;
            heap.push(Panel { a: p.a, b: mid, value: lv, error: le, seq });
            seq += 1;
            heap.push(Panel { a: mid, b: p.b, value: rv, error: re, seq });
            subdivisions += 1;
        }
        if let Some(at) = bad_at.get() {
            return Err(Error::NonFiniteIntegrand { at });
        }
        if diff_sum <= tol_of(val_sum) && err_sum <= tol_of(val_sum) {
            let (v, e) = sorted_sums(&heap);
            return Ok(QuadResult {
                value: v,
                error_estimate: e.max(diff_sum),
                evaluations: evals.get(),
            });
        }
    }
}

/// Iterated 2D integration of `f(x, y)` for `x` in `[a, b]` and `y` in
/// `[lo(x), hi(x)]`. The inner integrals run at a tenth of the requested
/// tolerance; their error contribution is folded into the reported bound.
pub fn integrate_2d<F, L, H>(f: F, a: f64, b: f64, lo: L, hi: H, opts: &Quad2dOptions) -> Result<QuadResult>
where
    F: Fn(f64, f64) -> f64,
    L: Fn(f64) -> f64,
    H: Fn(f64) -> f64,
{
    // Inner tolerances tightened by a factor of 10; the absolute target is
    // additionally divided by the outer span so that the accumulated inner
    // noise stays well below the outer convergence threshold.
    let inner_opts = QuadOptions {
        abs_tol: opts.abs_tol / (10.0 * (b - a).abs().max(1.0)),
        rel_tol: opts.rel_tol / 10.0,
        max_subdivisions: opts.max_subdivisions,
        singular: opts.inner_singular,
    };
    let outer_opts = QuadOptions {
        abs_tol: opts.abs_tol,
        rel_tol: opts.rel_tol,
        max_subdivisions: opts.max_subdivisions,
        singular: opts.outer_singular,
    };

    let inner_evals = Cell::new(0u64);
    let max_inner_err = Cell::new(0.0f64);
    let inner_failure: std::cell::RefCell<Option<Error>> = std::cell::RefCell::new(None);

    let outer_integrand = |x: f64| {
        match integrate_1d(|y| f(x, y), lo(x), hi(x), &inner_opts) {
            Ok(r) => {
                inner_evals.set(inner_evals.get() + r.evaluations);
                max_inner_err.set(max_inner_err.get().max(r.error_estimate));
                r.value
            }
            Err(e) => {
                let mut slot = inner_failure.borrow_mut();
                if slot.is_none() {
                    *slot = Some(e);
                }
                f64::NAN
            }
        }
    };

    let outer = integrate_1d(outer_integrand, a, b, &outer_opts);
    if let Some(e) = inner_failure.into_inner() {
        return Err(e);
    }
    let r = outer?;
    Ok(QuadResult {
        value: r.value,
        error_estimate: r.error_estimate + (b - a).abs() * max_inner_err.get(),
        evaluations: inner_evals.get(),
    })
}

/// Integral of `g` over the unit sphere with its surface measure,
/// `∫_{S²} g dΩ`, via the product rule in spherical coordinates
/// (θ ∈ [0, 2π), ϕ ∈ [0, π], weight sin ϕ).
pub fn integrate_sphere<G: Fn(Vec3) -> f64>(g: G, opts: &QuadOptions) -> Result<QuadResult> {
    let opts2 = Quad2dOptions {
        abs_tol: opts.abs_tol,
        rel_tol: opts.rel_tol,
        max_subdivisions: opts.max_subdivisions,
        outer_singular: Endpoints::NONE,
        inner_singular: Endpoints::NONE,
    };
    integrate_2d(
        |theta, phi| {
            let sp = phi.sin();
            let v = Vec3::new(theta.cos() * sp, theta.sin() * sp, phi.cos());
            g(v) * sp
        },
        0.0,
        2.0 * PI,
        |_| 0.0,
        |_| PI,
        &opts2,
    )
}
