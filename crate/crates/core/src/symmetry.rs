//! Symmetries of the cube `[0,k]^d` and canonical keys of simplex pairs.
//!
//! The symmetry group of the cube is the hyperoctahedral group: a coordinate
//! permutation followed by reflections `x_i ↦ k - x_i`. It has `d! · 2^d`
//! elements (48 for `d = 3`). Together with vertex relabeling inside each
//! simplex and exchange of the two simplices, this gives the group under which
//! simplex pairs are identified.

use std::fmt;

use crate::geometry::Vec3;

/// One element of the symmetry group of `[0,k]^d`.
///
/// Acts on a point `p` by `q_i = p_{perm[i]}`, then `q_i ↦ k - q_i` for each
/// `i` with `flip[i]` set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubeSymmetry {
    perm: [usize; 3],
    flip: [bool; 3],
    dim: usize,
}

impl CubeSymmetry {
    pub fn identity(dim: usize) -> Self {
        CubeSymmetry {
            perm: [0, 1, 2],
            flip: [false; 3],
            dim,
        }
    }

    /// All `d! · 2^d` symmetries of `[0,k]^d`, identity first.
    pub fn all(dim: usize) -> Vec<CubeSymmetry> {
        assert!((2..=3).contains(&dim));
        let perms: Vec<[usize; 3]> = if dim == 2 {
            vec![[0, 1, 2], [1, 0, 2]]
        } else {
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
        };
        let mut out = Vec::with_capacity(perms.len() << dim);
        for perm in perms {
            for mask in 0..(1u8 << dim) {
                let flip = [mask & 1 != 0, mask & 2 != 0, mask & 4 != 0];
                out.push(CubeSymmetry { perm, flip, dim });
            }
        }
        out
    }

    /// Reflection `x_axis ↦ k - x_axis`.
    pub fn reflection(dim: usize, axis: usize) -> Self {
        let mut s = Self::identity(dim);
        s.flip[axis] = true;
        s
    }

    pub fn apply(&self, p: &[i64], k: i64) -> Vec<i64> {
        let mut out = vec![0; self.dim];
        for (i, o) in out.iter_mut().enumerate() {
            let v = p[self.perm[i]];
            *o = if self.flip[i] { k - v } else { v };
        }
        out
    }

    pub(crate) fn apply3(&self, p: &Vec3, k: i64) -> Vec3 {
        let mut out = [0i64; 3];
        for (i, o) in out.iter_mut().enumerate().take(self.dim) {
            let v = p[self.perm[i]];
            *o = if self.flip[i] { k - v } else { v };
        }
        out
    }
}

/// Lexicographically least image of a pair of simplices under cube
/// symmetries, vertex relabeling and pair exchange.
///
/// Represented as the two simplices, each with its vertices sorted, the two
/// simplices sorted by (vertex count, vertices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    dim: usize,
    simplices: [Vec<Vec3>; 2],
}

impl CanonicalKey {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertex coordinate rows of both simplices, smaller simplex first.
    pub fn simplices(&self) -> [Vec<Vec<i64>>; 2] {
        let rows = |s: &Vec<Vec3>| s.iter().map(|v| v[..self.dim].to_vec()).collect();
        [rows(&self.simplices[0]), rows(&self.simplices[1])]
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (si, s) in self.simplices.iter().enumerate() {
            if si > 0 {
                f.write_str(" | ")?;
            }
            for (vi, v) in s.iter().enumerate() {
                if vi > 0 {
                    f.write_str("-")?;
                }
                f.write_str("(")?;
                for (ci, c) in v[..self.dim].iter().enumerate() {
                    if ci > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

fn ordered_form(a: &[Vec3], b: &[Vec3], dim: usize) -> CanonicalKey {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    let key = |s: &Vec<Vec3>| (s.len(), s.clone());
    let simplices = if key(&a) <= key(&b) { [a, b] } else { [b, a] };
    CanonicalKey { dim, simplices }
}

/// Canonical key of the unordered pair `{a, b}` in `[0,k]^dim`.
pub(crate) fn canonical_key(a: &[Vec3], b: &[Vec3], dim: usize, k: i64, group: &[CubeSymmetry]) -> CanonicalKey {
    let mut ia = vec![[0i64; 3]; a.len()];
    let mut ib = vec![[0i64; 3]; b.len()];
    let mut best: Option<CanonicalKey> = None;
    for g in group {
        for (o, v) in ia.iter_mut().zip(a) {
            *o = g.apply3(v, k);
        }
        for (o, v) in ib.iter_mut().zip(b) {
            *o = g.apply3(v, k);
        }
        let cand = ordered_form(&ia, &ib, dim);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap()
}

/// Whether `v` (a vertex list) is the least element of its orbit under `group`,
/// vertices compared as a sorted list.
pub(crate) fn is_orbit_minimal(v: &[Vec3], k: i64, group: &[CubeSymmetry]) -> bool {
    let mut base = v.to_vec();
    base.sort_unstable();
    let mut img = vec![[0i64; 3]; v.len()];
    for g in group {
        for (o, p) in img.iter_mut().zip(v) {
            *o = g.apply3(p, k);
        }
        img.sort_unstable();
        if img < base {
            return false;
        }
    }
    true
}
