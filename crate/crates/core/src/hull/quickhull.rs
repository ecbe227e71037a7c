//! Incremental quickhull over 3D point sets.
//!
//! Points are inserted farthest-first per face. The visible region of a
//! candidate point is the set of live faces it lies strictly outside of
//! (signed distance above an epsilon scaled to the cloud diameter); its
//! horizon — edges bordering exactly one visible face — is re-capped with
//! fans to the new vertex. Input order, farthest-point selection and
//! horizon traversal are all deterministically tie-broken, so identical
//! inputs give identical polytopes.

use crate::bodies::Vec3;
use crate::{Error, Result};

#[derive(Clone, Debug)]
struct Face {
    verts: [usize; 3],
    normal: Vec3,
    offset: f64,
    alive: bool,
    outside: Vec<usize>,
}

impl Face {
    fn new(points: &[Vec3], verts: [usize; 3]) -> Face {
        let [a, b, c] = verts.map(|i| points[i]);
        let n = (b - a).cross(c - a);
        let norm = n.norm();
        let normal = if norm > 0.0 { n * (1.0 / norm) } else { n };
        Face { verts, normal, offset: normal.dot(a), alive: true, outside: Vec::new() }
    }

    fn dist(&self, p: Vec3) -> f64 {
        self.normal.dot(p) - self.offset
    }
}

pub(super) struct RawHull {
    pub points: Vec<Vec3>,
    /// Counter-clockwise (outward) vertex triples into `points`.
    pub faces: Vec<[usize; 3]>,
}

/// Distinct points, first occurrence kept, exact duplicates within
/// `tol`·scale removed.
pub(super) fn dedup_points(input: &[Vec3], tol: f64) -> Vec<Vec3> {
    let scale = input
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()).max(p.z.abs()))
        .fold(0.0f64, f64::max)
        .max(1.0);
    let eps = tol * scale;
    let mut kept: Vec<Vec3> = Vec::with_capacity(input.len());
    // Sort-free O(n²) dedup would be too slow for 8k points; hash on a
    // quantized grid and compare within the bucket neighbourhood.
    use std::collections::HashMap;
    let cell = eps.max(1e-300) * 4.0;
    let key = |p: Vec3| -> (i64, i64, i64) {
        ((p.x / cell).round() as i64, (p.y / cell).round() as i64, (p.z / cell).round() as i64)
    };
    let mut grid: HashMap<(i64, i64, i64), Vec<usize>> = HashMap::new();
    'outer: for &p in input {
        if !p.is_finite() {
            continue;
        }
        let (kx, ky, kz) = key(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(bucket) = grid.get(&(kx + dx, ky + dy, kz + dz)) {
                        for &i in bucket {
                            if (kept[i] - p).norm() <= eps {
                                continue 'outer;
                            }
                        }
                    }
                }
            }
        }
        grid.entry((kx, ky, kz)).or_default().push(kept.len());
        kept.push(p);
    }
    kept
}

/// Convex hull of deduplicated `points`. Fails when the cloud is
/// degenerate (fewer than 4 points, or all collinear/coplanar).
pub(super) fn quickhull(points: &[Vec3]) -> Result<RawHull> {
    let n = points.len();
    if n < 4 {
        return Err(Error::Degenerate(format!("need at least 4 distinct points, got {n}")));
    }
    let scale = points
        .iter()
        .map(|p| p.x.abs().max(p.y.abs()).max(p.z.abs()))
        .fold(0.0f64, f64::max)
        .max(1.0);
    let eps = 1e-12 * scale;

    let seed = initial_simplex(points, eps)?;
    let mut faces: Vec<Face> = Vec::new();
    let centroid = (points[seed[0]] + points[seed[1]] + points[seed[2]] + points[seed[3]]) * 0.25;
    for combo in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
        let verts = [seed[combo[0]], seed[combo[1]], seed[combo[2]]];
        let mut face = Face::new(points, verts);
        if face.dist(centroid) > 0.0 {
            face = Face::new(points, [verts[0], verts[2], verts[1]]);
        }
        faces.push(face);
    }

    // Assign every remaining point to the deepest face it is outside of.
    let mut pending: Vec<usize> = Vec::new();
    for idx in 0..n {
        if seed.contains(&idx) {
            continue;
        }
        assign_point(&mut faces, points, idx, eps, 0, &mut pending);
    }

    // Process faces with outstanding outside points.
    while let Some(face_id) = pending.pop() {
        if !faces[face_id].alive || faces[face_id].outside.is_empty() {
            continue;
        }
        // Farthest outside point of that face; ties go to the lowest index.
        let mut apex = usize::MAX;
        let mut apex_dist = f64::NEG_INFINITY;
        for &i in &faces[face_id].outside {
            let d = faces[face_id].dist(points[i]);
            if d > apex_dist || (d == apex_dist && i < apex) {
                apex_dist = d;
                apex = i;
            }
        }

        let apex_point = points[apex];
        // Visible faces and their orphaned outside points.
        let mut visible: Vec<usize> = Vec::new();
        for (i, f) in faces.iter().enumerate() {
            if f.alive && f.dist(apex_point) > eps {
                visible.push(i);
            }
        }
        debug_assert!(visible.contains(&face_id));

        // Horizon: directed edges of visible faces whose twin is not visible.
        let mut horizon: Vec<(usize, usize)> = Vec::new();
        let mut orphans: Vec<usize> = Vec::new();
        for &fi in &visible {
            let f = &faces[fi];
            for k in 0..3 {
                let a = f.verts[k];
                let b = f.verts[(k + 1) % 3];
                // The twin edge (b, a) belongs to the neighbour across it.
                let neighbour_visible = visible.iter().any(|&gi| {
                    gi != fi && {
                        let g = &faces[gi].verts;
                        g.contains(&a) && g.contains(&b)
                    }
                });
                if !neighbour_visible {
                    horizon.push((a, b));
                }
            }
        }
        for &fi in &visible {
            orphans.append(&mut faces[fi].outside);
            faces[fi].alive = false;
        }

        for &(a, b) in &horizon {
            faces.push(Face::new(points, [a, b, apex]));
        }
        orphans.sort_unstable();
        orphans.dedup();
        let first_new = faces.len() - horizon.len();
        for o in orphans {
            if o == apex {
                continue;
            }
            assign_point(&mut faces, points, o, eps, first_new, &mut pending);
        }
    }

    let out: Vec<[usize; 3]> = faces.iter().filter(|f| f.alive).map(|f| f.verts).collect();
    Ok(RawHull { points: points.to_vec(), faces: out })
}

fn assign_point(
    faces: &mut [Face],
    points: &[Vec3],
    idx: usize,
    eps: f64,
    start: usize,
    pending: &mut Vec<usize>,
) {
    let p = points[idx];
    let mut best: Option<(usize, f64)> = None;
    for (i, f) in faces.iter().enumerate().skip(start) {
        if !f.alive {
            continue;
        }
        let d = f.dist(p);
        if d > eps {
            match best {
                Some((_, bd)) if bd >= d => {}
                _ => best = Some((i, d)),
            }
        }
    }
    // Fall back to scanning all faces when the new-face window missed it.
    if best.is_none() && start > 0 {
        for (i, f) in faces.iter().enumerate() {
            if !f.alive {
                continue;
            }
            let d = f.dist(p);
            if d > eps {
                match best {
                    Some((_, bd)) if bd >= d => {}
                    _ => best = Some((i, d)),
                }
            }
        }
    }
    if let Some((i, _)) = best {
        faces[i].outside.push(idx);
        pending.push(i);
    }
}

fn initial_simplex(points: &[Vec3], eps: f64) -> Result<[usize; 4]> {
    let n = points.len();
    // Extremes along the coordinate axes.
    let mut lo = [0usize; 3];
    let mut hi = [0usize; 3];
    for (i, p) in points.iter().enumerate() {
        let c = [p.x, p.y, p.z];
        for k in 0..3 {
            if c[k] < [points[lo[k]].x, points[lo[k]].y, points[lo[k]].z][k] {
                lo[k] = i;
            }
            if c[k] > [points[hi[k]].x, points[hi[k]].y, points[hi[k]].z][k] {
                hi[k] = i;
            }
        }
    }
    // Farthest pair among the extremes.
    let candidates: Vec<usize> = lo.iter().chain(hi.iter()).copied().collect();
    let (mut a, mut b, mut best) = (candidates[0], candidates[0], -1.0);
    for &i in &candidates {
        for &j in &candidates {
            let d = (points[i] - points[j]).norm();
            if d > best {
                best = d;
                a = i;
                b = j;
            }
        }
    }
    if best <= eps {
        return Err(Error::Degenerate("all points coincide".into()));
    }
    // Farthest point from the line ab.
    let dir = (points[b] - points[a]).normalized();
    let (mut c, mut best) = (a, -1.0);
    for i in 0..n {
        let rel = points[i] - points[a];
        let d = (rel - dir * rel.dot(dir)).norm();
        if d > best {
            best = d;
            c = i;
        }
    }
    if best <= eps {
        return Err(Error::Degenerate("points are collinear".into()));
    }
    // Farthest point from the plane abc.
    let normal = (points[b] - points[a]).cross(points[c] - points[a]).normalized();
    let (mut d, mut best) = (a, -1.0);
    for i in 0..n {
        let h = (points[i] - points[a]).dot(normal).abs();
        if h > best {
            best = h;
            d = i;
        }
    }
    if best <= eps {
        return Err(Error::Degenerate("points are coplanar".into()));
    }
    Ok([a, b, c, d])
}
