//! Exhaustive computation of ε(d,k) for small `d` and `k`.
//!
//! All lattice points of `[0,k]^d` are listed in lexicographic order;
//! segments are pairs `a < b` of points and triangles are non-collinear
//! triples `a < b < c`. Intersecting pairs (distance zero) are skipped. The
//! work is split over the first simplex of each pair; each worker keeps its
//! local minimum and ties, and the merge orders witnesses by canonical key so
//! the result does not depend on scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::certificate::{Certificate, Witness};
use crate::geometry::{
    collinear, kernel_point_segment, kernel_point_triangle, kernel_segment_segment, Frac, Vec3, MAX_K,
};
use crate::symmetry::{canonical_key, is_orbit_minimal, CanonicalKey, CubeSymmetry};

/// Default cap on the number of simplex pairs examined by one run.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("budget exceeded: {required} pairs required, budget is {budget}")]
    BudgetExceeded { required: u64, budget: u64 },
    #[error("class {class} is not available in dimension {d}")]
    ClassNotAllowed { class: PairClass, d: usize },
    #[error("dimension must be 2 or 3, got {0}")]
    UnsupportedDimension(usize),
    #[error("k must be in 1..={MAX_K}, got {0}")]
    InvalidK(i64),
    #[error("no class selected")]
    NoClasses,
    #[error("no disjoint pair exists in [0,{k}]^{d} for the selected classes")]
    NoDisjointPair { d: usize, k: i64 },
    #[error("failed to build worker pool: {0}")]
    Pool(String),
}

/// Kind of simplex pair whose dimensions sum to `d - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairClass {
    PointSegment,
    SegmentSegment,
    PointTriangle,
}

impl PairClass {
    pub fn allowed_in(self, d: usize) -> bool {
        match self {
            PairClass::PointSegment => d == 2,
            PairClass::SegmentSegment | PairClass::PointTriangle => d == 3,
        }
    }

    /// Every class allowed in dimension `d`.
    pub fn all_for(d: usize) -> Vec<PairClass> {
        [PairClass::PointSegment, PairClass::SegmentSegment, PairClass::PointTriangle]
            .into_iter()
            .filter(|c| c.allowed_in(d))
            .collect()
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairClass::PointSegment => "point-segment",
            PairClass::SegmentSegment => "segment-segment",
            PairClass::PointTriangle => "point-triangle",
        })
    }
}

impl FromStr for PairClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "point-segment" | "ps" => Ok(PairClass::PointSegment),
            "segment-segment" | "ss" => Ok(PairClass::SegmentSegment),
            "point-triangle" | "pt" => Ok(PairClass::PointTriangle),
            _ => Err(format!("unknown class {s:?} (expected point-segment, segment-segment or point-triangle)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnumOptions {
    /// Maximum number of pairs examined.
    pub budget: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Only enumerate first simplices that are least in their orbit under the
    /// cube symmetries. The minimum and the witness orbits are unchanged.
    pub symmetry_reduced: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: DEFAULT_BUDGET,
            workers: None,
            symmetry_reduced: false,
        }
    }
}

/// Exact ε(d,k)^2 with the kissing pairs attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsResult {
    pub d: usize,
    pub k: i64,
    pub classes: Vec<PairClass>,
    pub eps_squared: BigRational,
    /// One canonical key per symmetry orbit of minimizing pairs, sorted.
    pub witnesses: Vec<CanonicalKey>,
    pub pairs_examined: u64,
    /// Number of minimizing pairs seen before orbit deduplication.
    pub raw_witness_pairs: u64,
}

/// Lattice points, segments and triangles of `[0,k]^d`.
pub(crate) struct Lattice {
    pub d: usize,
    pub k: i64,
    pub points: Vec<Vec3>,
    pub group: Vec<CubeSymmetry>,
}

impl Lattice {
    pub fn new(d: usize, k: i64) -> Self {
        let n = k + 1;
        let mut points = Vec::new();
        let zmax = if d == 3 { k } else { 0 };
        for x in 0..n {
            for y in 0..n {
                for z in 0..=zmax {
                    points.push([x, y, z]);
                }
            }
        }
        Lattice {
            d,
            k,
            points,
            group: CubeSymmetry::all(d),
        }
    }

    pub fn segments(&self) -> Vec<[Vec3; 2]> {
        let p = &self.points;
        let mut out = Vec::with_capacity(p.len() * (p.len() - 1) / 2);
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                out.push([p[i], p[j]]);
            }
        }
        out
    }

    pub fn triangles(&self) -> Vec<[Vec3; 3]> {
        let p = &self.points;
        let mut out = Vec::new();
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                for l in j + 1..p.len() {
                    if !collinear(&p[i], &p[j], &p[l]) {
                        out.push([p[i], p[j], p[l]]);
                    }
                }
            }
        }
        out
    }
}

/// Number of non-collinear lattice triples in `[0,k]^3`.
pub fn lattice_triangle_count(k: i64) -> u64 {
    Lattice::new(3, k).triangles().len() as u64
}

/// Running minimum with the pairs attaining it, as `(class, i, j)` indices.
#[derive(Default)]
struct Best {
    min: Option<Frac>,
    ties: Vec<(PairClass, u32, u32)>,
}

impl Best {
    #[inline]
    fn offer(&mut self, d: Frac, class: PairClass, i: usize, j: usize) {
        if d.is_zero() {
            return;
        }
        match self.min {
            Some(m) if d > m => {}
            Some(m) if d == m => self.ties.push((class, i as u32, j as u32)),
            _ => {
                self.min = Some(d);
                self.ties.clear();
                self.ties.push((class, i as u32, j as u32));
            }
        }
    }

    fn merge(mut self, other: Best) -> Best {
        match (self.min, other.min) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if a < b => self,
            (Some(a), Some(b)) if b < a => other,
            _ => {
                self.ties.extend(other.ties);
                self
            }
        }
    }
}

struct Plan<'a> {
    lat: &'a Lattice,
    segments: Vec<[Vec3; 2]>,
    triangles: Vec<[Vec3; 3]>,
    /// Indices of first points / segments to enumerate.
    first_points: Vec<usize>,
    first_segments: Vec<usize>,
    reduced: bool,
}

impl<'a> Plan<'a> {
    fn new(lat: &'a Lattice, classes: &[PairClass], reduced: bool) -> Self {
        let needs_seg = classes.iter().any(|c| matches!(c, PairClass::PointSegment | PairClass::SegmentSegment));
        let needs_tri = classes.contains(&PairClass::PointTriangle);
        let segments = if needs_seg { lat.segments() } else { Vec::new() };
        let triangles = if needs_tri { lat.triangles() } else { Vec::new() };
        let first_points = (0..lat.points.len())
            .filter(|&i| !reduced || is_orbit_minimal(&lat.points[i..=i], lat.k, &lat.group))
            .collect();
        let first_segments = (0..segments.len())
            .filter(|&i| !reduced || is_orbit_minimal(&segments[i], lat.k, &lat.group))
            .collect();
        Plan {
            lat,
            segments,
            triangles,
            first_points,
            first_segments,
            reduced,
        }
    }

    fn pair_count(&self, class: PairClass) -> u64 {
        let ns = self.segments.len() as u64;
        match class {
            PairClass::PointSegment => self.first_points.len() as u64 * ns,
            PairClass::SegmentSegment if self.reduced => self.first_segments.len() as u64 * ns,
            PairClass::SegmentSegment => ns * ns.saturating_sub(1) / 2,
            PairClass::PointTriangle => self.first_points.len() as u64 * self.triangles.len() as u64,
        }
    }

    fn run(&self, class: PairClass) -> Best {
        let pts = &self.lat.points;
        let segs = &self.segments;
        let tris = &self.triangles;
        match class {
            PairClass::PointSegment => self
                .first_points
                .par_iter()
                .map(|&i| {
                    let mut best = Best::default();
                    for (j, s) in segs.iter().enumerate() {
                        best.offer(kernel_point_segment(&pts[i], &s[0], &s[1]), class, i, j);
                    }
                    best
                })
                .reduce(Best::default, Best::merge),
            PairClass::SegmentSegment => self
                .first_segments
                .par_iter()
                .map(|&i| {
                    let mut best = Best::default();
                    let a = &segs[i];
                    let start = if self.reduced { 0 } else { i + 1 };
                    for (j, b) in segs.iter().enumerate().skip(start) {
                        best.offer(kernel_segment_segment(&a[0], &a[1], &b[0], &b[1]), class, i, j);
                    }
                    best
                })
                .reduce(Best::default, Best::merge),
            PairClass::PointTriangle => self
                .first_points
                .par_iter()
                .map(|&i| {
                    let mut best = Best::default();
                    for (j, t) in tris.iter().enumerate() {
                        best.offer(kernel_point_triangle(&pts[i], &t[0], &t[1], &t[2]), class, i, j);
                    }
                    best
                })
                .reduce(Best::default, Best::merge),
        }
    }

    fn key(&self, (class, i, j): (PairClass, u32, u32)) -> CanonicalKey {
        let (i, j) = (i as usize, j as usize);
        let (a, b): (Vec<Vec3>, Vec<Vec3>) = match class {
            PairClass::PointSegment => (vec![self.lat.points[i]], self.segments[j].to_vec()),
            PairClass::SegmentSegment => (self.segments[i].to_vec(), self.segments[j].to_vec()),
            PairClass::PointTriangle => (vec![self.lat.points[i]], self.triangles[j].to_vec()),
        };
        canonical_key(&a, &b, self.lat.d, self.lat.k, &self.lat.group)
    }
}

fn validate(d: usize, k: i64, classes: &[PairClass]) -> Result<(), EnumError> {
    if !(2..=3).contains(&d) {
        return Err(EnumError::UnsupportedDimension(d));
    }
    if !(1..=MAX_K).contains(&k) {
        return Err(EnumError::InvalidK(k));
    }
    if classes.is_empty() {
        return Err(EnumError::NoClasses);
    }
    if let Some(&class) = classes.iter().find(|c| !c.allowed_in(d)) {
        return Err(EnumError::ClassNotAllowed { class, d });
    }
    Ok(())
}

fn in_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, EnumError> {
    match workers {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| EnumError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Number of pairs [`eps_bruteforce`] would examine, without running it.
pub fn planned_pairs(d: usize, k: i64, classes: &[PairClass], symmetry_reduced: bool) -> Result<u64, EnumError> {
    validate(d, k, classes)?;
    let lat = Lattice::new(d, k);
    let plan = Plan::new(&lat, classes, symmetry_reduced);
    Ok(classes.iter().map(|&c| plan.pair_count(c)).sum())
}

/// Exact minimum positive squared distance over all lattice simplex pairs of
/// the selected classes in `[0,k]^d`.
pub fn eps_bruteforce(d: usize, k: i64, classes: &[PairClass], opts: &EnumOptions) -> Result<EpsResult, EnumError> {
    validate(d, k, classes)?;
    let mut classes = classes.to_vec();
    classes.sort();
    classes.dedup();

    let lat = Lattice::new(d, k);
    let plan = Plan::new(&lat, &classes, opts.symmetry_reduced);
    let required: u64 = classes.iter().map(|&c| plan.pair_count(c)).sum();
    if required > opts.budget {
        return Err(EnumError::BudgetExceeded {
            required,
            budget: opts.budget,
        });
    }

    let best = in_pool(opts.workers, || {
        classes
            .iter()
            .map(|&c| plan.run(c))
            .fold(Best::default(), Best::merge)
    })?;
    let min = best.min.ok_or(EnumError::NoDisjointPair { d, k })?;
    let raw_witness_pairs = best.ties.len() as u64;
    let keys: BTreeSet<CanonicalKey> = in_pool(opts.workers, || {
        best.ties.par_iter().map(|&t| plan.key(t)).collect::<Vec<_>>()
    })?
    .into_iter()
    .collect();

    Ok(EpsResult {
        d,
        k,
        classes,
        eps_squared: min.to_big(),
        witnesses: keys.into_iter().collect(),
        pairs_examined: required,
        raw_witness_pairs,
    })
}

/// `1 / (2(2k^2 - 4k + 5)(2k^2 - 2k + 1))`, the squared extremal distance.
pub fn theorem1_value(k: i64) -> BigRational {
    let k = BigInt::from(k);
    let a = BigInt::from(2) * &k * &k - BigInt::from(4) * &k + 5;
    let b = BigInt::from(2) * &k * &k - BigInt::from(2) * &k + 1;
    BigRational::new(BigInt::from(1), BigInt::from(2) * a * b)
}

/// Checks that every lattice point and lattice triangle of `[0,k]^3` not
/// containing it are further apart than ε(3,k), the latter computed over
/// segment pairs.
pub fn check_point_triangle_gap(k: i64, opts: &EnumOptions) -> Result<Certificate, EnumError> {
    let pt = eps_bruteforce(3, k, &[PairClass::PointTriangle], opts)?;
    let ss = eps_bruteforce(3, k, &[PairClass::SegmentSegment], opts)?;
    let ok = pt.eps_squared > ss.eps_squared;
    let subject = format!("point-triangle distances exceed epsilon(3,{k}) strictly");
    let witnesses = pt.witnesses.iter().map(|w| Witness::Text(w.to_string())).collect();
    Ok(Certificate::decide(ok, subject, witnesses)
        .with_measurement("min_point_triangle_sq", pt.eps_squared)
        .with_measurement("eps_sq", ss.eps_squared)
        .with_note(format!("{} point-triangle pairs examined", pt.pairs_examined)))
}

/// Compares brute-force ε(3,k)^2 with [`theorem1_value`] for `k = 1..=3`,
/// and `k = 4` when the budget allows: equal except at `k = 3`.
pub fn verify_theorem1_smallk(opts: &EnumOptions) -> Result<Certificate, EnumError> {
    let classes = PairClass::all_for(3);
    let mut ks = vec![1, 2, 3];
    if planned_pairs(3, 4, &classes, opts.symmetry_reduced)? <= opts.budget {
        ks.push(4);
    }
    let mut ok = true;
    let mut witnesses = Vec::new();
    let mut cert_measurements = Vec::new();
    for &k in &ks {
        let r = eps_bruteforce(3, k, &classes, opts)?;
        let formula = theorem1_value(k);
        let equal = r.eps_squared == formula;
        let expected_equal = k != 3;
        if equal != expected_equal {
            ok = false;
        }
        witnesses.push(Witness::Text(format!(
            "k = {k}: brute force {} {} formula {}",
            r.eps_squared,
            if equal { "==" } else { "!=" },
            formula
        )));
        cert_measurements.push((format!("eps_sq_k{k}"), r.eps_squared));
    }
    let subject = format!(
        "epsilon(3,k)^2 = 1/(2(2k^2-4k+5)(2k^2-2k+1)) for k in {ks:?} except k = 3"
    );
    let mut c = Certificate::decide(ok, subject, witnesses);
    for (n, v) in cert_measurements {
        c = c.with_measurement(n, v);
    }
    Ok(c)
}
