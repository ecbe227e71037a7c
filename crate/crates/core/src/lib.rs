//! Geometry and quadrature for convex hulls of two orthogonal unit disks.
//!
//! Three families of solids are covered: two coplanar-centered disks
//! (`example1`), two disks touching at a point on a diagonal (`example2`),
//! two disks touching at a point on the bisecting line (`example3`), the
//! one-parameter family interpolating between the last configuration and
//! the concentric one (`delta` with 0 ≤ δ ≤ 2, including the oloid at
//! δ = 1 and the two-circle roller at δ = √2), plus a right circular
//! cylinder used as a sanity configuration.
//!
//! For each solid the crate computes volume, surface area and mean width
//! by several mutually independent routes — closed forms through special
//! functions, adaptive quadrature of explicit boundary integrals, the
//! integrated-mean-curvature (indirect) route, reduced spherical (direct)
//! integrals, the support-function sphere integral, and a sampled convex
//! hull polytope oracle — and cross-checks them against each other.

pub mod bodies;
pub mod hull;
pub mod metrics;
pub mod quad;
pub mod specfun;

pub use bodies::{BodyConfig, BodyKind, Disk, Vec3};
pub use metrics::{Method, MetricsReport, Quantity};
pub use quad::{QuadOptions, QuadResult};

/// Crate-wide error type.
#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Options or arguments are structurally invalid.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Adaptive quadrature exhausted its subdivision budget. The best
    /// estimate found so far is carried along.
    #[error("quadrature did not converge after {subdivisions} subdivisions (best {value:e} ± {error_estimate:e})")]
    NonConvergence {
        value: f64,
        error_estimate: f64,
        evaluations: u64,
        subdivisions: usize,
    },
    /// The integrand produced NaN or ±inf at the given abscissa.
    #[error("integrand returned a non-finite value near {at}")]
    NonFiniteIntegrand { at: f64 },
    /// The requested (configuration, quantity) pair has no known closed form.
    #[error("no closed form is known for {0}")]
    NoClosedForm(String),
    /// The operation is not defined for this configuration.
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    /// Geometrically degenerate input (coplanar point set, zero metric, ...).
    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
