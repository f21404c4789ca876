//! Independent brute-force validators: sail construction from lattice convex
//! hulls, LLS extraction from sail geometry, and bounded conjugator search.
//!
//! Nothing here shares code with the continued-fraction pipeline; these
//! routines implement the geometric definitions directly so the two paths
//! can be tested against each other.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Int, IntVec2, Mat2};
use crate::lls::LlsSeq;

/// Coordinate guard for exhaustive sail enumeration.
pub const SAIL_GUARD: i64 = 10_000;

/// The sail of a rational angle: the finite broken line bounding the convex
/// hull of the nonzero lattice points of the angle on the side facing the
/// vertex, ordered from the first ray to the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sail {
    pub vertices: Vec<IntVec2>,
}

impl fmt::Display for Sail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " - ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Number of interior lattice points of the segment PQ plus one,
/// computed as gcd of the coordinate differences.
pub fn integer_length(p: &IntVec2, q: &IntVec2) -> Result<Int> {
    if p == q {
        return Err(Error::CoincidingPoints {
            point: p.to_string(),
        });
    }
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    Ok(dx.gcd(&dy))
}

/// Integer sine of the angle at B in the triple A, B, C:
/// |det(AB, BC)| divided by the integer lengths of the two edges.
/// Zero when the edges are collinear.
pub fn integer_sine(a: &IntVec2, b: &IntVec2, c: &IntVec2) -> Result<Int> {
    let u = IntVec2 {
        x: &b.x - &a.x,
        y: &b.y - &a.y,
    };
    let v = IntVec2 {
        x: &c.x - &b.x,
        y: &c.y - &b.y,
    };
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroLengthEdge {
            point: b.to_string(),
        });
    }
    let det = u.det(&v).abs();
    Ok(det / (u.content() * v.content()))
}

fn to_i64_guarded(v: &IntVec2) -> Result<(i64, i64)> {
    let conv = |z: &Int| -> Result<i64> {
        i64::try_from(z)
            .ok()
            .filter(|w| w.abs() <= SAIL_GUARD)
            .ok_or(Error::GuardExceeded { limit: SAIL_GUARD })
    };
    Ok((conv(&v.x)?, conv(&v.y)?))
}

fn floor_div(n: i64, d: i64) -> i64 {
    debug_assert!(d > 0);
    n.div_euclid(d)
}

fn ceil_div(n: i64, d: i64) -> i64 {
    debug_assert!(d > 0);
    -(-n).div_euclid(d)
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    let (ox, oy) = (o.0 as i128, o.1 as i128);
    (a.0 as i128 - ox) * (b.1 as i128 - oy) - (a.1 as i128 - oy) * (b.0 as i128 - ox)
}

/// Monotone chain; returns the hull in counterclockwise order with strictly
/// convex corners (collinear points dropped). Degenerate inputs yield one or
/// two points.
fn convex_hull(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    if upper.len() == 1 && lower.len() == 1 {
        // All points collinear: keep the two extremes.
        return vec![lower[0], upper[0]];
    }
    lower.extend(upper);
    lower
}

/// Sail of the angle between rays OA and OB via exhaustive enumeration.
///
/// All sail vertices lie in the closed triangle with vertices O and the
/// primitive points on the two rays; the enumeration walks that triangle
/// column by column, keeping the per-column extremes, hulls them, and
/// extracts the chain facing the origin. `scale` widens the enumeration
/// region (the result must not depend on it).
fn sail_vertices_in_region(a: &IntVec2, b: &IntVec2, scale: i64) -> Result<Sail> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroVector {
            which: if a.is_zero() { "A" } else { "B" },
        });
    }
    if a.det(b).is_zero() {
        return Err(Error::CollinearVectors {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    to_i64_guarded(a)?;
    to_i64_guarded(b)?;
    let (ax, ay) = to_i64_guarded(&a.primitive())?;
    let (bx, by) = to_i64_guarded(&b.primitive())?;

    let det = ax * by - ay * bx;
    let sigma = det.signum();
    // Far corners of the enumeration triangle.
    let (fax, fay) = (ax * scale, ay * scale);
    let (fbx, fby) = (bx * scale, by * scale);

    let mut candidates: Vec<(i64, i64)> = Vec::new();
    let x_lo = 0.min(fax).min(fbx);
    let x_hi = 0.max(fax).max(fbx);
    let (ex, ey) = (fbx - fax, fby - fay);
    for x in x_lo..=x_hi {
        // Intersect the column with the three half-planes bounding the
        // triangle O, scale*A', scale*B'; each is u + w*y >= 0.
        let mut lo = i64::MIN / 4;
        let mut hi = i64::MAX / 4;
        let mut empty = false;
        let constraints = [
            (-sigma * ay * x, sigma * ax),
            (sigma * by * x, -sigma * bx),
            (sigma * (-ex * fay - ey * (x - fax)), sigma * ex),
        ];
        for (u, w) in constraints {
            if w > 0 {
                lo = lo.max(ceil_div(-u, w));
            } else if w < 0 {
                hi = hi.min(floor_div(u, -w));
            } else if u < 0 {
                empty = true;
            }
        }
        if empty || lo > hi {
            continue;
        }
        if x == 0 && lo <= 0 && 0 <= hi {
            // The origin is excluded; the column splits in two.
            if lo <= -1 {
                candidates.push((0, lo));
                candidates.push((0, -1));
            }
            if hi >= 1 {
                candidates.push((0, 1));
                candidates.push((0, hi));
            }
        } else {
            candidates.push((x, lo));
            candidates.push((x, hi));
        }
    }

    let hull = convex_hull(candidates);
    let idx_a = hull.iter().position(|&p| p == (ax, ay)).ok_or_else(|| {
        Error::InternalAssertion(format!("primitive ray point ({ax}, {ay}) not on hull"))
    })?;
    let idx_b = hull.iter().position(|&p| p == (bx, by)).ok_or_else(|| {
        Error::InternalAssertion(format!("primitive ray point ({bx}, {by}) not on hull"))
    })?;

    // Of the two hull chains joining the ray points, the sail is the one
    // whose interior vertices lie on the origin side of the line A'B'.
    let on_origin_side = |p: (i64, i64)| -> bool {
        let val = (ex as i128) * ((p.1 - fay) as i128) - (ey as i128) * ((p.0 - fax) as i128);
        (sigma as i128) * val > 0
    };
    let h = hull.len();
    let walk = |from: usize, to: usize| -> Vec<(i64, i64)> {
        let mut path = vec![hull[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % h;
            path.push(hull[i]);
        }
        path
    };
    let chain = if h <= 2 {
        vec![(ax, ay), (bx, by)]
    } else {
        let fwd = walk(idx_a, idx_b);
        let bwd: Vec<(i64, i64)> = walk(idx_b, idx_a).into_iter().rev().collect();
        if fwd.len() > 2 && on_origin_side(fwd[1]) {
            debug_assert!(!(bwd.len() > 2 && on_origin_side(bwd[1])));
            fwd
        } else if bwd.len() > 2 && on_origin_side(bwd[1]) {
            bwd
        } else {
            vec![(ax, ay), (bx, by)]
        }
    };

    Ok(Sail {
        vertices: chain.into_iter().map(|(x, y)| IntVec2::new(x, y)).collect(),
    })
}

/// Sail of the angle between rays OA and OB. Requires det(OA, OB) != 0 and
/// coordinates within [`SAIL_GUARD`].
pub fn sail_vertices(a: &IntVec2, b: &IntVec2) -> Result<Sail> {
    sail_vertices_in_region(a, b, 1)
}

/// LLS sequence read directly from sail geometry: integer lengths of the
/// edges interleaved with integer sines at the interior vertices.
pub fn sail_lls(a: &IntVec2, b: &IntVec2) -> Result<LlsSeq> {
    let sail = sail_vertices(a, b)?;
    lls_of_sail(&sail)
}

fn lls_of_sail(sail: &Sail) -> Result<LlsSeq> {
    let v = &sail.vertices;
    debug_assert!(v.len() >= 2);
    let mut seq: Vec<Int> = Vec::with_capacity(2 * v.len() - 3);
    for k in 0..v.len() - 1 {
        if k > 0 {
            seq.push(integer_sine(&v[k - 1], &v[k], &v[k + 1])?);
        }
        seq.push(integer_length(&v[k], &v[k + 1])?);
    }
    Ok(LlsSeq(seq))
}

fn entry_sequence(bound: i64) -> Vec<i64> {
    let mut seq = vec![0];
    for v in 1..=bound {
        seq.push(v);
        seq.push(-v);
    }
    seq
}

/// Exhaustive search for C with entries in [-bound, bound], det C = +-1 and
/// N = +-C M C^(-1). Returns the first witness in a fixed total order
/// (entries scanned by increasing magnitude), or `None` when no witness
/// exists within the bound — which is not a proof of non-conjugacy.
pub fn brute_force_conjugate(m: &Mat2, n: &Mat2, bound: i64) -> Option<Mat2> {
    if bound < 1 {
        return None;
    }
    let as_i64 = |z: &Int| i64::try_from(z).ok();
    let small = [
        &m.a11, &m.a12, &m.a21, &m.a22, &n.a11, &n.a12, &n.a21, &n.a22,
    ]
    .into_iter()
    .map(as_i64)
    .collect::<Option<Vec<i64>>>();
    match small {
        Some(e) if bound <= 1_000_000 => {
            let me = [e[0] as i128, e[1] as i128, e[2] as i128, e[3] as i128];
            let ne = [e[4] as i128, e[5] as i128, e[6] as i128, e[7] as i128];
            search_i128(&me, &ne, bound).map(|c| Mat2::new(c[0], c[1], c[2], c[3]))
        }
        _ => search_bigint(m, n, bound),
    }
}

fn search_i128(m: &[i128; 4], n: &[i128; 4], bound: i64) -> Option<[i64; 4]> {
    let seq = entry_sequence(bound);
    for &a in &seq {
        for &b in &seq {
            for &c in &seq {
                for &d in &seq {
                    let (ai, bi, ci, di) = (a as i128, b as i128, c as i128, d as i128);
                    let det = ai * di - bi * ci;
                    if det != 1 && det != -1 {
                        continue;
                    }
                    // N = +-C M C^(-1)  <=>  N C = +-(C M)
                    let nc = [
                        n[0] * ai + n[1] * ci,
                        n[0] * bi + n[1] * di,
                        n[2] * ai + n[3] * ci,
                        n[2] * bi + n[3] * di,
                    ];
                    let cm = [
                        ai * m[0] + bi * m[2],
                        ai * m[1] + bi * m[3],
                        ci * m[0] + di * m[2],
                        ci * m[1] + di * m[3],
                    ];
                    if nc == cm || (0..4).all(|i| nc[i] == -cm[i]) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

fn search_bigint(m: &Mat2, n: &Mat2, bound: i64) -> Option<Mat2> {
    let seq = entry_sequence(bound);
    for &a in &seq {
        for &b in &seq {
            for &c in &seq {
                for &d in &seq {
                    let det = (a as i128) * (d as i128) - (b as i128) * (c as i128);
                    if det != 1 && det != -1 {
                        continue;
                    }
                    let cmat = Mat2::new(a, b, c, d);
                    let nc = n.mul(&cmat);
                    let cm = cmat.mul(m);
                    if nc == cm || nc == cm.neg() {
                        return Some(cmat);
                    }
                }
            }
        }
    }
    None
}
