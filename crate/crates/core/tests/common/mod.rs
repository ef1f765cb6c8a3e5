//! Independent oracles shared by the integration tests. None of these call
//! into the distance kernels.

#![allow(dead_code)]

use kissing::{BigInt, BigRational};

pub type P3 = [i64; 3];

pub fn sub(a: P3, b: P3) -> P3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn dot(a: P3, b: P3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: P3, b: P3) -> P3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn orient(a: [i64; 2], b: [i64; 2], c: [i64; 2]) -> i64 {
    ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).signum()
}

fn on_segment_2d(a: [i64; 2], b: [i64; 2], c: [i64; 2]) -> bool {
    orient(a, b, c) == 0
        && a[0].min(b[0]) <= c[0]
        && c[0] <= a[0].max(b[0])
        && a[1].min(b[1]) <= c[1]
        && c[1] <= a[1].max(b[1])
}

/// Projection dropping the coordinate where `n` is largest in absolute value.
fn projector(n: P3) -> impl Fn(P3) -> [i64; 2] {
    let drop = (0..3).max_by_key(|&i| n[i].abs()).unwrap();
    let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
    move |a: P3| [a[keep[0]], a[keep[1]]]
}

pub fn point_on_segment(c: P3, a: P3, b: P3) -> bool {
    let u = sub(b, a);
    let w = sub(c, a);
    cross(u, w) == [0, 0, 0] && (0..=dot(u, u)).contains(&dot(w, u))
}

/// Exact segment intersection by orientation predicates.
pub fn segments_intersect(p: [P3; 2], q: [P3; 2]) -> bool {
    let (u, v, w) = (sub(p[1], p[0]), sub(q[1], q[0]), sub(q[0], p[0]));
    let n = cross(u, v);
    if n == [0, 0, 0] {
        if cross(u, w) != [0, 0, 0] {
            return false;
        }
        let t0 = dot(sub(q[0], p[0]), u);
        let t1 = dot(sub(q[1], p[0]), u);
        return t0.min(t1) <= dot(u, u) && t0.max(t1) >= 0;
    }
    if dot(n, w) != 0 {
        return false;
    }
    let pr = projector(n);
    let (a, b, c, d) = (pr(p[0]), pr(p[1]), pr(q[0]), pr(q[1]));
    (orient(a, b, c) != orient(a, b, d) && orient(c, d, a) != orient(c, d, b))
        || on_segment_2d(a, b, c)
        || on_segment_2d(a, b, d)
        || on_segment_2d(c, d, a)
        || on_segment_2d(c, d, b)
}

/// Whether `p` lies in the closed triangle `t` (non-degenerate).
pub fn point_in_triangle(p: P3, t: [P3; 3]) -> bool {
    let n = cross(sub(t[1], t[0]), sub(t[2], t[0]));
    if dot(n, sub(p, t[0])) != 0 {
        return false;
    }
    let pr = projector(n);
    let (a, b, c, x) = (pr(t[0]), pr(t[1]), pr(t[2]), pr(p));
    let s = [orient(a, b, x), orient(b, c, x), orient(c, a, x)];
    !(s.contains(&1) && s.contains(&-1))
}

/// `min |P(i/N) - Q(j/N)|^2` over the `(N+1)^2` parameter grid.
pub fn grid_min(p: [P3; 2], q: [P3; 2], n: i64) -> BigRational {
    let (u, v) = (sub(p[1], p[0]), sub(q[1], q[0]));
    let mut best = i64::MAX;
    for i in 0..=n {
        for j in 0..=n {
            let s: i64 = (0..3)
                .map(|c| {
                    let w = n * p[0][c] + i * u[c] - n * q[0][c] - j * v[c];
                    w * w
                })
                .sum();
            best = best.min(s);
        }
    }
    BigRational::new(BigInt::from(best), BigInt::from(n * n))
}

/// Smallest integer whose square is at least `n`.
pub fn isqrt_ceil(n: &BigInt) -> BigInt {
    let r = n.sqrt();
    if &(&r * &r) == n {
        r
    } else {
        r + 1
    }
}

/// Upper bound on the grid minimum given the exact squared distance.
///
/// The distance is Lipschitz in `(s,t)` with constant `|u| + |v|`, and some
/// grid point is within `1/(2N)` of the minimizer in each parameter, so
/// `sqrt(grid) <= sqrt(exact) + (|u| + |v|)/(2N)`.
pub fn grid_upper_bound(p: [P3; 2], q: [P3; 2], n: i64, exact: &BigRational) -> BigRational {
    let len = |a: P3, b: P3| isqrt_ceil(&BigInt::from(dot(sub(a, b), sub(a, b))));
    let slack = BigRational::new(len(p[0], p[1]) + len(q[0], q[1]), BigInt::from(2 * n));
    let root = isqrt_ceil(&exact.ceil().to_integer()).max(BigInt::from(1));
    let root = BigRational::from_integer(root);
    exact + BigRational::from_integer(BigInt::from(2)) * &slack * root + &slack * &slack
}

pub fn gram_det(u: P3, v: P3) -> BigInt {
    let d = |a: P3, b: P3| BigInt::from(dot(a, b));
    d(u, u) * d(v, v) - d(u, v) * d(u, v)
}

/// Cofactor expansion of the matrix with the given columns.
pub fn det3(cols: [P3; 3]) -> BigInt {
    let m = |r: usize, c: usize| BigInt::from(cols[c][r]);
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

/// All `(perm, flips)` symmetries of `[0,k]^3`, applied directly.
pub fn cube_images(p: P3, k: i64) -> Vec<P3> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(48);
    for perm in perms {
        for mask in 0..8 {
            out.push(std::array::from_fn(|i| {
                let v = p[perm[i]];
                if mask >> i & 1 == 1 {
                    k - v
                } else {
                    v
                }
            }));
        }
    }
    out
}
