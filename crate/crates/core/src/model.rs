//! The nine-coordinate encoding of a simplex pair and the quantities defined
//! on it.
//!
//! A pair of simplices in `[0,k]^3` whose dimensions sum to two is packed
//! into `x ∈ [-k,k]^9`: `x1..x3` and `x4..x6` are the two columns of the edge
//! matrix `A`, and `x7..x9` is the offset `b = q0 - p0`.

use std::ops::{Add, Mul, Sub};

use thiserror::Error;

use crate::geometry::{GeometryError, LatticeSimplex, MAX_K};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("k must be in 1..={MAX_K}, got {0}")]
    InvalidK(i64),
    #[error("coordinate x{index} = {value} exceeds k = {k} in absolute value")]
    OutOfRange { index: usize, value: i64, k: i64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A point of `[-k,k]^9`. Indices are zero-based, so `x[0]` is `x1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XPoint {
    x: [i64; 9],
    k: i64,
}

impl XPoint {
    pub fn new(x: [i64; 9], k: i64) -> Result<Self, ModelError> {
        if !(1..=MAX_K).contains(&k) {
            return Err(ModelError::InvalidK(k));
        }
        if let Some((i, &v)) = x.iter().enumerate().find(|(_, v)| v.abs() > k) {
            return Err(ModelError::OutOfRange {
                index: i + 1,
                value: v,
                k,
            });
        }
        Ok(XPoint { x, k })
    }

    pub fn coords(&self) -> &[i64; 9] {
        &self.x
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// First column of `A`.
    pub fn col1(&self) -> [i64; 3] {
        [self.x[0], self.x[1], self.x[2]]
    }

    /// Second column of `A`.
    pub fn col2(&self) -> [i64; 3] {
        [self.x[3], self.x[4], self.x[5]]
    }

    pub fn b(&self) -> [i64; 3] {
        [self.x[6], self.x[7], self.x[8]]
    }

    pub fn tag(&self) -> SetTag {
        SetTag {
            in_y: in_y(self),
            in_z: in_z(self),
        }
    }
}

/// Membership flags for the constraint sets Y(k) and Z(k).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetTag {
    pub in_y: bool,
    pub in_z: bool,
}

/// Encodes a segment pair, or a point and a triangle, as an [`XPoint`].
///
/// For two segments the columns of `A` are `p1 - p0` and `q1 - q0`; for a
/// point `P` and a triangle `Q` they are `q1 - q0` and `q2 - q0`. In both
/// cases `b = q0 - p0`. A triangle given first is swapped with the point.
pub fn encode_pair(p: &LatticeSimplex, q: &LatticeSimplex) -> Result<XPoint, ModelError> {
    let sum = p.dimension() + q.dimension();
    if sum != 2 {
        return Err(GeometryError::DimensionSum { expected: 2, got: sum }.into());
    }
    if p.ambient_dim() != 3 || q.ambient_dim() != 3 {
        return Err(GeometryError::UnsupportedDimension(p.ambient_dim()).into());
    }
    if p.k() != q.k() {
        return Err(GeometryError::Mismatch.into());
    }
    let (p, q) = if p.dimension() == 2 { (q, p) } else { (p, q) };
    let pv: Vec<&[i64]> = p.vertices().iter().map(|v| v.coords()).collect();
    let qv: Vec<&[i64]> = q.vertices().iter().map(|v| v.coords()).collect();
    let diff = |a: &[i64], b: &[i64]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    let (c1, c2) = if p.dimension() == 1 {
        (diff(pv[1], pv[0]), diff(qv[1], qv[0]))
    } else {
        (diff(qv[1], qv[0]), diff(qv[2], qv[0]))
    };
    let b = diff(qv[0], pv[0]);
    XPoint::new(
        [c1[0], c1[1], c1[2], c2[0], c2[1], c2[2], b[0], b[1], b[2]],
        p.k(),
    )
}

/// `f(x) = x1(x6x8 - x5x9) + x2(x4x9 - x6x7) + x3(x5x7 - x4x8)`, written
/// over any commutative ring.
fn f_expr<T>(x: &[T; 9]) -> T
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let m = |a: usize, b: usize| x[a].clone() * x[b].clone();
    x[0].clone() * (m(5, 7) - m(4, 8))
        + x[1].clone() * (m(3, 8) - m(5, 6))
        + x[2].clone() * (m(4, 6) - m(3, 7))
}

/// `g(x)`, the sum of the squared 2×2 minors of `A`.
fn g_expr<T>(x: &[T; 9]) -> T
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let minor = |i: usize, j: usize| {
        let v = x[i].clone() * x[j + 3].clone() - x[j].clone() * x[i + 3].clone();
        v.clone() * v
    };
    minor(0, 1) + minor(0, 2) + minor(1, 2)
}

/// `f(x)`: minus the determinant of the 3×3 matrix `[A | b]`.
pub fn f_val(x: &XPoint) -> i128 {
    f_expr(&x.x.map(i128::from))
}

/// `g(x) = det(A^t A)`.
pub fn g_val(x: &XPoint) -> i128 {
    g_expr(&x.x.map(i128::from))
}

/// `h(x) = -x1 + x2 + x3 + x4 + x5 + x6`.
pub fn h_val(x: &XPoint) -> i64 {
    -x.x[0] + x.x[1..6].iter().sum::<i64>()
}

fn signs_ok(x: &[i64; 9]) -> bool {
    x[0] <= 0 && x[1..6].iter().all(|&v| v >= 0)
}

/// Membership in Y(k): `x1 ≤ 0`, `x2..x6 ≥ 0`, and for each `i ∈ {1,2,3}`
/// the box constraints `|xi - x(i+6)| ≤ k`, `|x(i+3) + x(i+6)| ≤ k`,
/// `|xi - x(i+3) - x(i+6)| ≤ k`.
pub fn in_y(x: &XPoint) -> bool {
    let (v, k) = (&x.x, x.k);
    signs_ok(v)
        && (0..3).all(|i| {
            (v[i] - v[i + 6]).abs() <= k
                && (v[i + 3] + v[i + 6]).abs() <= k
                && (v[i] - v[i + 3] - v[i + 6]).abs() <= k
        })
}

/// Membership in Z(k): the sign pattern of Y(k), and `|xi|`, `|x(i+3)|`
/// never both equal to `k`.
pub fn in_z(x: &XPoint) -> bool {
    let (v, k) = (&x.x, x.k);
    signs_ok(v) && (0..3).all(|i| !(v[i].abs() == k && v[i + 3].abs() == k))
}

/// The embedding φ_k of the k-independent candidate sets near the corner
/// where `h` is largest.
pub fn phi_apply(pre: &[i64; 9], k: i64) -> Result<XPoint, ModelError> {
    let mut out = [0i64; 9];
    for (i, (o, &v)) in out.iter_mut().zip(pre).enumerate() {
        *o = match i {
            0 | 6 => v - k,
            1..=5 => k - v,
            _ => v,
        };
    }
    XPoint::new(out, k)
}

/// Coordinates of φ_k(pre) as polynomials in `k`.
pub fn phi_polys(pre: &[i64; 9]) -> [IntPoly; 9] {
    std::array::from_fn(|i| match i {
        0 | 6 => IntPoly::linear(pre[i], -1),
        1..=5 => IntPoly::linear(-pre[i], 1),
        _ => IntPoly::constant(pre[i]),
    })
}

/// `(f∘φ_k, g∘φ_k)` as polynomials in `k`, of degree at most 3 and 4.
pub fn compose_phi(pre: &[i64; 9]) -> (IntPoly, IntPoly) {
    let coords = phi_polys(pre);
    (f_expr(&coords), g_expr(&coords))
}

/// The squared denominator of the extremal distance, `8k^4 - 24k^3 + 40k^2 - 28k + 10`,
/// which equals `2(2k^2 - 4k + 5)(2k^2 - 2k + 1)`.
pub fn extremal_target() -> IntPoly {
    IntPoly::from_i64s(&[10, -28, 40, -24, 8])
}
