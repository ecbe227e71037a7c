//! Fully independent polytope oracle: sample the generator circles, build
//! the 3D convex hull, and read off volume, surface area and mean width.
//!
//! The hull of boundary samples is contained in the body, and all three
//! functionals are monotone under inclusion for convex bodies, so the
//! oracle converges to the smooth values from below (rim-polygon error is
//! O(1/K²) in the samples-per-circle count K).

mod quickhull;

use std::collections::HashMap;

use crate::bodies::{BodyConfig, BodyKind, Vec3};
use crate::{Error, Result};

/// A watertight convex triangulated polytope.
#[derive(Clone, Debug)]
pub struct Polytope {
    /// Hull vertices (every one extreme).
    pub vertices: Vec<Vec3>,
    /// Outward-oriented triangles as vertex-index triples.
    pub facets: Vec<[usize; 3]>,
    /// Undirected edges with the indices of their two adjacent facets.
    pub edges: Vec<([usize; 2], [usize; 2])>,
}

/// K equally spaced rim points on each generator circle (2K before
/// deduplication; shared points between the rims are removed). The hull of
/// the rims equals the hull of the disks for every configuration here.
pub fn sample_circles(cfg: &BodyConfig, k: usize) -> Result<Vec<Vec3>> {
    if k < 3 {
        return Err(Error::InvalidInput(format!("need at least 3 points per circle, got {k}")));
    }
    let mut pts = Vec::with_capacity(2 * k);
    match cfg.kind() {
        BodyKind::Cylinder { length, radius } => {
            for ring in [-length / 2.0, length / 2.0] {
                for j in 0..k {
                    let t = 2.0 * std::f64::consts::PI * (j as f64) / (k as f64);
                    pts.push(Vec3::new(radius * t.cos(), radius * t.sin(), ring));
                }
            }
        }
        _ => {
            for disk in cfg.disks().expect("non-cylinder configs carry disks") {
                for j in 0..k {
                    let t = 2.0 * std::f64::consts::PI * (j as f64) / (k as f64);
                    pts.push(disk.rim_point(t));
                }
            }
        }
    }
    Ok(quickhull::dedup_points(&pts, 1e-12))
}

/// Convex hull of a point set (at least four affinely independent points).
pub fn convex_hull_3d(points: &[Vec3]) -> Result<Polytope> {
    let distinct = quickhull::dedup_points(points, 1e-12);
    let raw = quickhull::quickhull(&distinct)?;
    finish(raw)
}

fn finish(raw: quickhull::RawHull) -> Result<Polytope> {
    // Compact to the vertices the facets actually use, keeping input order.
    let mut remap: Vec<Option<usize>> = vec![None; raw.points.len()];
    let mut vertices: Vec<Vec3> = Vec::new();
    let mut facets: Vec<[usize; 3]> = Vec::with_capacity(raw.faces.len());
    for tri in &raw.faces {
        let mut out = [0usize; 3];
        for (slot, &old) in out.iter_mut().zip(tri.iter()) {
            *slot = match remap[old] {
                Some(new) => new,
                None => {
                    let new = vertices.len();
                    remap[old] = Some(new);
                    vertices.push(raw.points[old]);
                    new
                }
            };
        }
        facets.push(out);
    }

    // Edge table: each undirected edge must be shared by exactly two facets.
    let mut table: HashMap<[usize; 2], Vec<usize>> = HashMap::new();
    for (fi, tri) in facets.iter().enumerate() {
        for k in 0..3 {
            let a = tri[k];
            let b = tri[(k + 1) % 3];
            let key = [a.min(b), a.max(b)];
            table.entry(key).or_default().push(fi);
        }
    }
    let mut edges: Vec<([usize; 2], [usize; 2])> = Vec::with_capacity(table.len());
    for (key, fs) in &table {
        if fs.len() != 2 {
            return Err(Error::Degenerate(format!(
                "edge {key:?} is shared by {} facets; hull is not watertight",
                fs.len()
            )));
        }
        edges.push((*key, [fs[0], fs[1]]));
    }
    edges.sort_unstable_by_key(|(k, _)| *k);

    let poly = Polytope { vertices, facets, edges };
    poly.validate()?;
    Ok(poly)
}

impl Polytope {
    /// Watertightness (Euler characteristic) and convexity (every vertex on
    /// or behind every facet plane, 1e-10 scaled).
    pub fn validate(&self) -> Result<()> {
        let v = self.vertices.len() as i64;
        let e = self.edges.len() as i64;
        let f = self.facets.len() as i64;
        if v - e + f != 2 {
            return Err(Error::Degenerate(format!("Euler check failed: V-E+F = {}", v - e + f)));
        }
        let scale = self
            .vertices
            .iter()
            .map(|p| p.norm())
            .fold(0.0f64, f64::max)
            .max(1.0);
        let tol = 1e-10 * scale;
        for tri in &self.facets {
            let (n, off) = self.facet_plane(*tri);
            for p in &self.vertices {
                if n.dot(*p) - off > tol {
                    return Err(Error::Degenerate(format!(
                        "vertex {p:?} lies {:.3e} outside a facet plane",
                        n.dot(*p) - off
                    )));
                }
            }
        }
        Ok(())
    }

    fn facet_plane(&self, tri: [usize; 3]) -> (Vec3, f64) {
        let [a, b, c] = tri.map(|i| self.vertices[i]);
        let n = (b - a).cross(c - a).normalized();
        (n, n.dot(a))
    }

    /// Centroid of the vertices; interior for a convex polytope.
    pub fn vertex_centroid(&self) -> Vec3 {
        let mut c = Vec3::ZERO;
        for p in &self.vertices {
            c = c + *p;
        }
        c * (1.0 / self.vertices.len() as f64)
    }

    /// Volume as a sum of signed tetrahedra from the vertex centroid.
    pub fn volume(&self) -> f64 {
        let o = self.vertex_centroid();
        let mut six_v = 0.0;
        for tri in &self.facets {
            let [a, b, c] = tri.map(|i| self.vertices[i] - o);
            six_v += a.dot(b.cross(c));
        }
        six_v / 6.0
    }

    /// Total facet area.
    pub fn area(&self) -> f64 {
        let mut doubled = 0.0;
        for tri in &self.facets {
            let [a, b, c] = tri.map(|i| self.vertices[i]);
            doubled += (b - a).cross(c - a).norm();
        }
        doubled / 2.0
    }

    /// Mean width from the edge data: for a polytope the smooth curvature
    /// term vanishes and MW = (1/4π) Σ_edges length × exterior angle. The
    /// exterior angle comes from atan2 of the adjacent normals' cross and
    /// dot products (stable near 0 and π); coplanar neighbours contribute 0.
    pub fn mean_width(&self) -> f64 {
        let mut sum = 0.0;
        for &([a, b], [f1, f2]) in &self.edges {
            let length = (self.vertices[b] - self.vertices[a]).norm();
            let (n1, _) = self.facet_plane(self.facets[f1]);
            let (n2, _) = self.facet_plane(self.facets[f2]);
            let angle = n1.cross(n2).norm().atan2(n1.dot(n2));
            sum += length * angle;
        }
        sum / (4.0 * std::f64::consts::PI)
    }
}

/// Hull-oracle values for a configuration at K samples per circle.
#[derive(Clone, Copy, Debug)]
pub struct HullMetrics {
    pub k: usize,
    pub vertices: usize,
    pub volume: f64,
    pub area: f64,
    pub mean_width: f64,
}

pub fn hull_metrics(cfg: &BodyConfig, k: usize) -> Result<HullMetrics> {
    let pts = sample_circles(cfg, k)?;
    let poly = convex_hull_3d(&pts)?;
    Ok(HullMetrics {
        k,
        vertices: poly.vertices.len(),
        volume: poly.volume(),
        area: poly.area(),
        mean_width: poly.mean_width(),
    })
}
