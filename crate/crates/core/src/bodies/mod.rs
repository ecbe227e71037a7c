//! Geometry of the disk-hull configurations: generator disks, support
//! functions and widths, smooth boundary patches with closed-form
//! derivatives, edge curves with dihedral angles, and implicit-equation
//! residuals.

mod edge;
mod implicit;
mod patch;

pub use edge::{EdgeCurve, EdgeKind};
pub use patch::{FundForms, ParamPatch, PatchKind, Route};

use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// A point or vector in ℝ³.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, other: Vec3) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Vec3) -> Vec3 {
        Vec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn normalized(self) -> Vec3 {
        let n = self.norm();
        Vec3::new(self.x / n, self.y / n, self.z / n)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Unit vector for spherical angles (θ around z, ϕ from the north pole).
    pub fn from_spherical(theta: f64, phi: f64) -> Vec3 {
        let sp = phi.sin();
        Vec3::new(theta.cos() * sp, theta.sin() * sp, phi.cos())
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}
impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}
impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}
impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// A flat disk in ℝ³: center, unit normal, radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub center: Vec3,
    pub normal: Vec3,
    pub radius: f64,
}

impl Disk {
    /// Builds a disk, normalizing `normal`. Fails on a zero/non-finite
    /// normal or a non-positive radius.
    pub fn new(center: Vec3, normal: Vec3, radius: f64) -> Result<Disk> {
        if !center.is_finite() || !normal.is_finite() || !radius.is_finite() {
            return Err(Error::InvalidInput("disk fields must be finite".into()));
        }
        let n = normal.norm();
        if n < 1e-12 {
            return Err(Error::InvalidInput("disk normal must be nonzero".into()));
        }
        if radius <= 0.0 {
            return Err(Error::InvalidInput("disk radius must be positive".into()));
        }
        Ok(Disk { center, normal: normal * (1.0 / n), radius })
    }

    /// Support function of the disk: max of `p·v` over points `p` of the
    /// disk, `c·v + r sqrt(1 - (n·v)²)` for unit `v`.
    pub fn support(&self, v: Vec3) -> f64 {
        let nv = self.normal.dot(v);
        let in_plane = (1.0 - nv * nv).max(0.0).sqrt();
        self.center.dot(v) + self.radius * in_plane
    }

    /// Point on the rim at angle `t` against a fixed in-plane basis.
    pub fn rim_point(&self, t: f64) -> Vec3 {
        let (e1, e2) = self.plane_basis();
        self.center + e1 * (self.radius * t.cos()) + e2 * (self.radius * t.sin())
    }

    /// Deterministic orthonormal basis of the disk's plane.
    pub fn plane_basis(&self) -> (Vec3, Vec3) {
        let n = self.normal;
        let seed = if n.x.abs() <= 0.9 { Vec3::new(1.0, 0.0, 0.0) } else { Vec3::new(0.0, 1.0, 0.0) };
        let e1 = (seed - n * seed.dot(n)).normalized();
        let e2 = n.cross(e1);
        (e1, e2)
    }
}

/// Support of the convex hull of a set of disks: the max of the disk
/// supports.
pub fn disks_support(disks: &[Disk], v: Vec3) -> f64 {
    disks
        .iter()
        .map(|d| d.support(v))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Which solid is being studied.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BodyKind {
    /// Unit disks in the planes z = 0 and y = 0, both centered at the origin.
    Example1,
    /// Unit disks in the planes z = -1 and y = 1, touching at (0, 1, -1).
    Example2,
    /// Unit disks in the planes z = 0 (center (0,-1,0)) and x = 0
    /// (center (0,1,0)), touching at the origin.
    Example3,
    /// Unit disks in the planes z = 0 (center (0,-δ/2,0)) and x = 0
    /// (center (0,δ/2,0)); δ = 1 is the oloid, δ = √2 the two-circle
    /// roller, δ = 2 coincides with `Example3` and δ = 0 is congruent to
    /// `Example1`.
    DeltaFamily(f64),
    /// Right circular cylinder of the given length and radius, axis on z,
    /// centered at the origin. Sanity configuration for the mean-width
    /// conventions.
    Cylinder { length: f64, radius: f64 },
}

/// A configuration together with its generator disks.
#[derive(Clone, Debug, PartialEq)]
pub struct BodyConfig {
    kind: BodyKind,
    disks: Option<[Disk; 2]>,
}

impl BodyConfig {
    pub fn example1() -> BodyConfig {
        let d1 = Disk::new(Vec3::ZERO, Vec3::new(0.0, 0.0, 1.0), 1.0).unwrap();
        let d2 = Disk::new(Vec3::ZERO, Vec3::new(0.0, 1.0, 0.0), 1.0).unwrap();
        BodyConfig { kind: BodyKind::Example1, disks: Some([d1, d2]) }
    }

    pub fn example2() -> BodyConfig {
        let d1 = Disk::new(Vec3::new(0.0, 0.0, -1.0), Vec3::new(0.0, 0.0, 1.0), 1.0).unwrap();
        let d2 = Disk::new(Vec3::new(0.0, 1.0, 0.0), Vec3::new(0.0, 1.0, 0.0), 1.0).unwrap();
        BodyConfig { kind: BodyKind::Example2, disks: Some([d1, d2]) }
    }

    pub fn example3() -> BodyConfig {
        let d1 = Disk::new(Vec3::new(0.0, -1.0, 0.0), Vec3::new(0.0, 0.0, 1.0), 1.0).unwrap();
        let d2 = Disk::new(Vec3::new(0.0, 1.0, 0.0), Vec3::new(1.0, 0.0, 0.0), 1.0).unwrap();
        BodyConfig { kind: BodyKind::Example3, disks: Some([d1, d2]) }
    }

    /// Two orthogonal unit disks with centers δ apart on the y-axis.
    pub fn delta_family(delta: f64) -> Result<BodyConfig> {
        if !(0.0..=2.0).contains(&delta) {
            return Err(Error::InvalidInput(format!("delta must lie in [0, 2], got {delta}")));
        }
        let d1 = Disk::new(Vec3::new(0.0, -delta / 2.0, 0.0), Vec3::new(0.0, 0.0, 1.0), 1.0)?;
        let d2 = Disk::new(Vec3::new(0.0, delta / 2.0, 0.0), Vec3::new(1.0, 0.0, 0.0), 1.0)?;
        Ok(BodyConfig { kind: BodyKind::DeltaFamily(delta), disks: Some([d1, d2]) })
    }

    pub fn oloid() -> BodyConfig {
        Self::delta_family(1.0).unwrap()
    }

    pub fn two_circle_roller() -> BodyConfig {
        Self::delta_family(2.0f64.sqrt()).unwrap()
    }

    pub fn cylinder(length: f64, radius: f64) -> Result<BodyConfig> {
        if length <= 0.0 || radius <= 0.0 || !length.is_finite() || !radius.is_finite() {
            return Err(Error::InvalidInput("cylinder length and radius must be positive".into()));
        }
        Ok(BodyConfig { kind: BodyKind::Cylinder { length, radius }, disks: None })
    }

    pub fn kind(&self) -> BodyKind {
        self.kind
    }

    /// Generator disks (absent for the cylinder).
    pub fn disks(&self) -> Option<&[Disk; 2]> {
        self.disks.as_ref()
    }

    /// Parse a scriptable configuration name: `example1`, `example2`,
    /// `example3`, `oloid`, `roller`, `delta:<value>` or
    /// `cylinder:<length>:<radius>`.
    pub fn from_name(name: &str) -> Result<BodyConfig> {
        match name {
            "example1" => return Ok(Self::example1()),
            "example2" => return Ok(Self::example2()),
            "example3" => return Ok(Self::example3()),
            "oloid" => return Ok(Self::oloid()),
            "roller" => return Ok(Self::two_circle_roller()),
            _ => {}
        }
        if let Some(rest) = name.strip_prefix("delta:") {
            let delta: f64 = rest
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad delta value {rest:?}")))?;
            return Self::delta_family(delta);
        }
        if let Some(rest) = name.strip_prefix("cylinder:") {
            let mut it = rest.splitn(2, ':');
            let (l, r) = (it.next().unwrap_or(""), it.next().unwrap_or(""));
            let length: f64 = l
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad cylinder length {l:?}")))?;
            let radius: f64 = r
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad cylinder radius {r:?}")))?;
            return Self::cylinder(length, radius);
        }
        Err(Error::InvalidInput(format!(
            "unknown config {name:?} (expected example1|example2|example3|oloid|roller|delta:<v>|cylinder:<l>:<r>)"
        )))
    }

    /// Short scriptable name (`example1`, `oloid`, `delta:0.5`, ...).
    pub fn name(&self) -> String {
        match self.kind {
            BodyKind::Example1 => "example1".into(),
            BodyKind::Example2 => "example2".into(),
            BodyKind::Example3 => "example3".into(),
            BodyKind::DeltaFamily(d) => {
                if (d - 1.0).abs() < 1e-12 {
                    "oloid".into()
                } else if (d - 2.0f64.sqrt()).abs() < 1e-12 {
                    "roller".into()
                } else {
                    format!("delta:{d}")
                }
            }
            BodyKind::Cylinder { length, radius } => format!("cylinder:{length}:{radius}"),
        }
    }

    /// Support function of the hull: max of the generator supports.
    pub fn support(&self, v: Vec3) -> f64 {
        match self.kind {
            BodyKind::Cylinder { length, radius } => {
                0.5 * length * v.z.abs() + radius * (v.x * v.x + v.y * v.y).sqrt()
            }
            _ => disks_support(self.disks.as_ref().unwrap(), v),
        }
    }

    /// Width in direction `v`: distance between the two supporting planes
    /// orthogonal to `v`.
    pub fn width(&self, v: Vec3) -> f64 {
        self.support(v) + self.support(-v)
    }

    /// Smooth boundary pieces with closed-form derivatives, tagged with
    /// their symmetry multiplicity and route. `DeltaFamily` members other
    /// than δ = 2 carry no packaged parametrization.
    pub fn patches(&self) -> Result<Vec<ParamPatch>> {
        patch::patches_for(self)
    }

    /// Circular edge arcs with their closed-form dihedral angles.
    pub fn edges(&self) -> Result<Vec<EdgeCurve>> {
        edge::edges_for(self)
    }

    /// Value of the implicit boundary polynomial at `p` (Example 2's cubic
    /// or Example 3's sextic).
    pub fn implicit_residual(&self, p: Vec3) -> Result<f64> {
        match self.kind {
            BodyKind::Example2 => Ok(implicit::cubic_example2(p)),
            BodyKind::Example3 => Ok(implicit::sextic_example3(p)),
            _ => Err(Error::Unsupported(format!(
                "no implicit equation is packaged for {}",
                self.name()
            ))),
        }
    }
}

pub use implicit::gradient_norm;
