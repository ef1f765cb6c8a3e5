//! Exact squared distances between lattice points, segments and triangles.
//!
//! Every distance is returned squared, as a rational. The kernels work on
//! integer coordinates and produce a fraction whose numerator and
//! denominator are integer polynomials in the coordinates, so no division
//! happens until the final reduction.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::model::{f_val, g_val, XPoint};

/// Largest supported cube size. Keeps every intermediate product of the
/// kernels (degree ≤ 10 in the coordinates) inside `i128`.
pub const MAX_K: i64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension must be 2 or 3, got {0}")]
    UnsupportedDimension(usize),
    #[error("k must be in 1..={MAX_K}, got {0}")]
    InvalidK(i64),
    #[error("coordinate {value} outside [0, {k}]")]
    OutOfBox { value: i64, k: i64 },
    #[error("simplices do not share the same d and k")]
    Mismatch,
    #[error("a simplex needs 1 to 3 vertices, got {0}")]
    VertexCount(usize),
    #[error("repeated vertex")]
    RepeatedVertex,
    #[error("triangle vertices are collinear")]
    Collinear,
    #[error("expected a {expected}, got a simplex with {got} vertices")]
    WrongShape { expected: &'static str, got: usize },
    #[error("A^tA is singular (g(x) = 0)")]
    SingularGram,
    #[error("dimensions of the pair must sum to {expected}, got {got}")]
    DimensionSum { expected: usize, got: usize },
}

pub(crate) type Vec3 = [i64; 3];

#[inline]
pub(crate) fn sub(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub(crate) fn dot(a: &Vec3, b: &Vec3) -> i128 {
    a[0] as i128 * b[0] as i128 + a[1] as i128 * b[1] as i128 + a[2] as i128 * b[2] as i128
}

#[inline]
pub(crate) fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Non-negative fraction `num / den` with `den > 0`, not necessarily reduced.
/// Ordering and equality compare the rational values.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Frac {
    pub num: i128,
    pub den: i128,
}

impl Frac {
    #[inline]
    fn int(v: i128) -> Self {
        Frac { num: v, den: 1 }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_big(self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Frac {}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

pub(crate) fn kernel_point_segment(p: &Vec3, a: &Vec3, b: &Vec3) -> Frac {
    let u = sub(b, a);
    let w = sub(p, a);
    let wu = dot(&w, &u);
    if wu <= 0 {
        return Frac::int(dot(&w, &w));
    }
    let uu = dot(&u, &u);
    if wu >= uu {
        let e = sub(p, b);
        return Frac::int(dot(&e, &e));
    }
    let c = cross(&w, &u);
    Frac {
        num: dot(&c, &c),
        den: uu,
    }
}

pub(crate) fn kernel_segment_segment(a1: &Vec3, b1: &Vec3, a2: &Vec3, b2: &Vec3) -> Frac {
    let u = sub(b1, a1);
    let v = sub(b2, a2);
    let n = cross(&u, &v);
    let gram = dot(&n, &n);
    if gram > 0 {
        // critical point of |w + t u - s v|^2, scaled by gram
        let w = sub(a1, a2);
        let (uu, uv, vv) = (dot(&u, &u), dot(&u, &v), dot(&v, &v));
        let (wu, wv) = (dot(&w, &u), dot(&w, &v));
        let t = uv * wv - vv * wu;
        let s = uu * wv - uv * wu;
        if (0..=gram).contains(&t) && (0..=gram).contains(&s) {
            let wn = dot(&w, &n);
            return Frac {
                num: wn * wn,
                den: gram,
            };
        }
    }
    [
        kernel_point_segment(a1, a2, b2),
        kernel_point_segment(b1, a2, b2),
        kernel_point_segment(a2, a1, b1),
        kernel_point_segment(b2, a1, b1),
    ]
    .into_iter()
    .min()
    .unwrap()
}

pub(crate) fn kernel_point_triangle(p: &Vec3, a: &Vec3, b: &Vec3, c: &Vec3) -> Frac {
    let u = sub(b, a);
    let v = sub(c, a);
    let w = sub(p, a);
    let n = cross(&u, &v);
    let gram = dot(&n, &n);
    debug_assert!(gram > 0, "collinear triangle");
    let (uu, uv, vv) = (dot(&u, &u), dot(&u, &v), dot(&v, &v));
    let (wu, wv) = (dot(&w, &u), dot(&w, &v));
    // barycentric weights of the projection, scaled by gram
    let s = vv * wu - uv * wv;
    let t = uu * wv - uv * wu;
    if s >= 0 && t >= 0 && s + t <= gram {
        let wn = dot(&w, &n);
        return Frac {
            num: wn * wn,
            den: gram,
        };
    }
    [
        kernel_point_segment(p, a, b),
        kernel_point_segment(p, b, c),
        kernel_point_segment(p, c, a),
    ]
    .into_iter()
    .min()
    .unwrap()
}

pub(crate) fn collinear(a: &Vec3, b: &Vec3, c: &Vec3) -> bool {
    cross(&sub(b, a), &sub(c, a)) == [0, 0, 0]
}

/// A lattice point of `[0,k]^d`, `d ∈ {2, 3}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    coords: Vec3,
    dim: u8,
    k: i64,
}

impl LatticePoint {
    pub fn new(coords: &[i64], k: i64) -> Result<Self, GeometryError> {
        let d = coords.len();
        if !(2..=3).contains(&d) {
            return Err(GeometryError::UnsupportedDimension(d));
        }
        if !(1..=MAX_K).contains(&k) {
            return Err(GeometryError::InvalidK(k));
        }
        let mut c = [0i64; 3];
        for (slot, &v) in c.iter_mut().zip(coords) {
            if !(0..=k).contains(&v) {
                return Err(GeometryError::OutOfBox { value: v, k });
            }
            *slot = v;
        }
        Ok(LatticePoint {
            coords: c,
            dim: d as u8,
            k,
        })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.dim as usize]
    }

    pub(crate) fn raw(&self) -> &Vec3 {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn k(&self) -> i64 {
        self.k
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A point, segment or triangle with lattice vertices in a common `[0,k]^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeSimplex {
    vertices: Vec<LatticePoint>,
}

impl LatticeSimplex {
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self, GeometryError> {
        let n = vertices.len();
        if !(1..=3).contains(&n) {
            return Err(GeometryError::VertexCount(n));
        }
        let (d, k) = (vertices[0].dim, vertices[0].k);
        if vertices.iter().any(|v| v.dim != d || v.k != k) {
            return Err(GeometryError::Mismatch);
        }
        for i in 0..n {
            for j in i + 1..n {
                if vertices[i] == vertices[j] {
                    return Err(GeometryError::RepeatedVertex);
                }
            }
        }
        if n == 3 && collinear(vertices[0].raw(), vertices[1].raw(), vertices[2].raw()) {
            return Err(GeometryError::Collinear);
        }
        Ok(LatticeSimplex { vertices })
    }

    /// Builds a simplex from raw coordinate rows.
    pub fn from_coords(rows: &[&[i64]], k: i64) -> Result<Self, GeometryError> {
        let vertices = rows
            .iter()
            .map(|r| LatticePoint::new(r, k))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertices)
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Affine dimension: 0, 1 or 2.
    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn k(&self) -> i64 {
        self.vertices[0].k
    }

    fn expect(&self, n: usize, name: &'static str) -> Result<(), GeometryError> {
        if self.vertices.len() == n {
            Ok(())
        } else {
            Err(GeometryError::WrongShape {
                expected: name,
                got: self.vertices.len(),
            })
        }
    }
}

impl fmt::Display for LatticeSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Exact squared Euclidean distance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SqDistance(pub BigRational);

impl SqDistance {
    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for SqDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Frac> for SqDistance {
    fn from(f: Frac) -> Self {
        SqDistance(f.to_big())
    }
}

fn same_space(a: &LatticeSimplex, b: &LatticeSimplex) -> Result<(), GeometryError> {
    if a.ambient_dim() == b.ambient_dim() && a.k() == b.k() {
        Ok(())
    } else {
        Err(GeometryError::Mismatch)
    }
}

pub fn sq_dist_point_segment(p: &LatticePoint, s: &LatticeSimplex) -> Result<SqDistance, GeometryError> {
    s.expect(2, "segment")?;
    if p.dim != s.vertices[0].dim || p.k != s.k() {
        return Err(GeometryError::Mismatch);
    }
    let v = &s.vertices;
    Ok(kernel_point_segment(p.raw(), v[0].raw(), v[1].raw()).into())
}

/// Minimum of `|(a1 + t u1) - (a2 + s u2)|^2` over the unit square. The
/// interior critical point is used when the 2×2 normal system is regular and
/// its solution lies in the square; otherwise the minimum is on one of the
/// four edges, each a point–segment problem.
pub fn sq_dist_segment_segment(s1: &LatticeSimplex, s2: &LatticeSimplex) -> Result<SqDistance, GeometryError> {
    s1.expect(2, "segment")?;
    s2.expect(2, "segment")?;
    same_space(s1, s2)?;
    let (a, b) = (&s1.vertices, &s2.vertices);
    Ok(kernel_segment_segment(a[0].raw(), a[1].raw(), b[0].raw(), b[1].raw()).into())
}

pub fn sq_dist_point_triangle(p: &LatticePoint, t: &LatticeSimplex) -> Result<SqDistance, GeometryError> {
    t.expect(3, "triangle")?;
    if p.dim != 3 || t.ambient_dim() != 3 {
        return Err(GeometryError::UnsupportedDimension(p.dim()));
    }
    if p.k != t.k() {
        return Err(GeometryError::Mismatch);
    }
    let v = &t.vertices;
    Ok(kernel_point_triangle(p.raw(), v[0].raw(), v[1].raw(), v[2].raw()).into())
}

/// Squared distance between two simplices of any supported shapes
/// (point–segment, segment–segment, point–triangle, in either order).
pub fn sq_dist(p: &LatticeSimplex, q: &LatticeSimplex) -> Result<SqDistance, GeometryError> {
    same_space(p, q)?;
    match (p.vertices.len(), q.vertices.len()) {
        (1, 1) => {
            let d = sub(p.vertices[0].raw(), q.vertices[0].raw());
            Ok(Frac::int(dot(&d, &d)).into())
        }
        (1, 2) => sq_dist_point_segment(&p.vertices[0], q),
        (2, 1) => sq_dist_point_segment(&q.vertices[0], p),
        (2, 2) => sq_dist_segment_segment(p, q),
        (1, 3) => sq_dist_point_triangle(&p.vertices[0], q),
        (3, 1) => sq_dist_point_triangle(&q.vertices[0], p),
        (a, b) => Err(GeometryError::DimensionSum {
            expected: 2,
            got: a + b - 2,
        }),
    }
}

/// Squared distance between the affine hulls encoded by `x`, i.e. `f(x)^2 / g(x)`.
pub fn sq_dist_affine_hulls(x: &XPoint) -> Result<SqDistance, GeometryError> {
    let g = g_val(x);
    if g == 0 {
        return Err(GeometryError::SingularGram);
    }
    let f = f_val(x);
    Ok(SqDistance(BigRational::new(
        BigInt::from(f) * BigInt::from(f),
        BigInt::from(g),
    )))
}
