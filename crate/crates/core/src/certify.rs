//! The polynomial certificate pipeline for two segments in `[0,k]^3`.
//!
//! Two finite, k-independent candidate sets are generated. Every point of
//! the first set is pushed through φ_k and its `g` is shown to stay below the
//! extremal target for all `k ≥ 6`. The second set is searched for points
//! whose `|f∘φ_k| = 1` while `g∘φ_k` reaches the target. The points found are
//! then mapped back to segment pairs and compared, up to cube symmetry, with
//! the extremal pair `P★ = (k,2,1)-(0,k-1,k)`, `Q★ = (0,0,0)-(k-1,k,k)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::certificate::{Certificate, Witness};
use crate::geometry::{GeometryError, LatticeSimplex};
use crate::model::{compose_phi, extremal_target, g_val, phi_apply, ModelError, XPoint};
use crate::poly::{integer_solutions_of_abs_eq, isolate_real_roots, positive_for_all_integers_geq, IntPoly, IntegerSolutions};
use crate::symmetry::{canonical_key, CanonicalKey, CubeSymmetry};

/// Smallest `k` covered by the polynomial certificates.
pub const K_MIN: i64 = 6;

/// The eight points found by the search over the second candidate set.
pub const TABLE2: [[i64; 9]; 8] = [
    [0, 1, 3, 1, 0, 0, 0, -1, -2],
    [0, 1, 3, 1, 0, 0, 1, 0, -1],
    [0, 3, 1, 1, 0, 0, 0, -2, -1],
    [0, 3, 1, 1, 0, 0, 1, -1, 0],
    [1, 0, 0, 0, 1, 3, 0, 1, 2],
    [1, 0, 0, 0, 1, 3, 1, 0, 1],
    [1, 0, 0, 0, 3, 1, 0, 2, 1],
    [1, 0, 0, 0, 3, 1, 1, 1, 0],
];

pub type Preimage = [i64; 9];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("segment pair is not realizable in [0,{k}]^3")]
    NotRealizable { k: i64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Points of ℕ^9 whose first six coordinates sum to 6, whose last three are
/// zero, and with `x_i + x_{i+3} ≥ 1` for `i = 1, 2, 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSetB {
    points: Vec<Preimage>,
}

/// Points of ℕ^7 × ℤ^2 whose first six coordinates sum to at most 5, with
/// `x7 ≤ x1 + x4`, `-x2 ≤ x8 ≤ x5`, `-x3 ≤ x9 ≤ x6`, and
/// `x_i + x_{i+3} ≥ 1` for `i = 1, 2, 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSetA {
    points: Vec<Preimage>,
}

impl CandidateSetB {
    pub fn points(&self) -> &[Preimage] {
        &self.points
    }
    pub fn len(&self) -> usize {
        self.points.len()
    }
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl CandidateSetA {
    pub fn points(&self) -> &[Preimage] {
        &self.points
    }
    pub fn len(&self) -> usize {
        self.points.len()
    }
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Non-negative 6-tuples with the given coordinate-sum range, in
/// lexicographic order, with every column pair `(x_i, x_{i+3})` non-zero.
fn column_tuples(min_sum: i64, max_sum: i64) -> Vec<[i64; 6]> {
    fn rec(prefix: &mut Vec<i64>, left: i64, min_sum: i64, out: &mut Vec<[i64; 6]>) {
        if prefix.len() == 6 {
            let s: i64 = prefix.iter().sum();
            if s >= min_sum && (0..3).all(|i| prefix[i] + prefix[i + 3] >= 1) {
                out.push(prefix.as_slice().try_into().unwrap());
            }
            return;
        }
        for v in 0..=left {
            prefix.push(v);
            rec(prefix, left - v, min_sum, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(6), max_sum, min_sum, &mut out);
    out
}

pub fn gen_b() -> CandidateSetB {
    let points = column_tuples(6, 6)
        .into_iter()
        .map(|c| [c[0], c[1], c[2], c[3], c[4], c[5], 0, 0, 0])
        .collect();
    CandidateSetB { points }
}

pub fn gen_a() -> CandidateSetA {
    let mut points = Vec::new();
    for c in column_tuples(0, 5) {
        for x7 in 0..=c[0] + c[3] {
            for x8 in -c[1]..=c[4] {
                for x9 in -c[2]..=c[5] {
                    points.push([c[0], c[1], c[2], c[3], c[4], c[5], x7, x8, x9]);
                }
            }
        }
    }
    CandidateSetA { points }
}

/// `target - g∘φ_k(x)` must be positive for every integer `k ≥ 6`.
pub fn prop1_point(x: &Preimage, target: &IntPoly) -> Certificate {
    let (_, g) = compose_phi(x);
    let diff = target - &g;
    let mut c = positive_for_all_integers_geq(&diff, K_MIN);
    c.subject = format!("{:?}: {}", x, c.subject);
    c.witnesses.insert(0, Witness::Poly(diff));
    c.witnesses.insert(0, Witness::Point(x.to_vec()));
    c
}

/// Runs [`prop1_point`] against the extremal target on every point of `b`.
pub fn check_prop1(b: &CandidateSetB) -> Certificate {
    check_prop1_against(b, &extremal_target())
}

/// Like [`check_prop1`] with an arbitrary target polynomial.
///
/// Records `max_root_upper`, the largest upper end of any isolating interval
/// over all points (the certificate needs it below 6), and `min_value_at_6`,
/// the smallest value of a difference polynomial at `k = 6`.
pub fn check_prop1_against(b: &CandidateSetB, target: &IntPoly) -> Certificate {
    let certs: Vec<Certificate> = b.points.par_iter().map(|x| prop1_point(x, target)).collect();
    let subject = format!(
        "g∘φ_k(x) < {target} for all integers k >= {K_MIN} and all {} points of B",
        b.len()
    );

    let mut max_upper: Option<(BigRational, usize)> = None;
    let mut min_at_6: Option<(BigRational, usize)> = None;
    let mut failures = Vec::new();
    for (i, c) in certs.iter().enumerate() {
        if let Some(m) = c.measurement("max_root_upper") {
            if max_upper.as_ref().is_none_or(|(v, _)| m > v) {
                max_upper = Some((m.clone(), i));
            }
        }
        let v = c.measurement("value_at_k0").expect("recorded for non-zero input");
        if min_at_6.as_ref().is_none_or(|(w, _)| v < w) {
            min_at_6 = Some((v.clone(), i));
        }
        if !c.passed() {
            failures.push(i);
        }
    }

    let witnesses: Vec<Witness> = if failures.is_empty() {
        let mut w = Vec::new();
        if let Some((_, i)) = &max_upper {
            w.push(Witness::Point(b.points[*i].to_vec()));
        }
        if let Some((_, i)) = &min_at_6 {
            w.push(Witness::Point(b.points[*i].to_vec()));
        }
        w
    } else {
        failures
            .iter()
            .flat_map(|&i| certs[i].witnesses.iter().take(2).cloned())
            .collect()
    };
    let mut cert = Certificate::decide(failures.is_empty(), subject, witnesses)
        .with_note(format!("{} of {} points certified", b.len() - failures.len(), b.len()));
    if let Some((v, _)) = max_upper {
        cert = cert.with_measurement("max_root_upper", v);
    }
    if let Some((v, _)) = min_at_6 {
        cert = cert.with_measurement("min_value_at_6", v);
    }
    cert
}

/// Integers `k ≥ 6` at which both search conditions hold for one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QualifyingK {
    /// Every integer `k ≥ 6`.
    Every,
    /// Infinitely many, but not all, integers `k ≥ 6`.
    Unbounded,
    Finite(Vec<BigInt>),
}

impl QualifyingK {
    pub fn is_empty(&self) -> bool {
        matches!(self, QualifyingK::Finite(v) if v.is_empty())
    }
}

/// A point of the second candidate set meeting both search conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop2Hit {
    pub point: Preimage,
    pub f: IntPoly,
    pub g: IntPoly,
    pub ks: QualifyingK,
}

/// Integers `k ≥ 6` with `|f∘φ_k(x)| = 1` and `g∘φ_k(x) ≥ target(k)`.
///
/// `abs_first` selects which condition filters first; the result does not
/// depend on it.
pub fn prop2_point(x: &Preimage, abs_first: bool) -> QualifyingK {
    let (f, g) = compose_phi(x);
    let diff = &g - &extremal_target();
    if abs_first {
        let sols = integer_solutions_of_abs_eq(&f, &BigInt::one(), K_MIN);
        match sols {
            IntegerSolutions::All => reaches_target(&diff),
            IntegerSolutions::Finite(ks) => {
                QualifyingK::Finite(ks.into_iter().filter(|k| !diff.eval_int(k).is_negative()).collect())
            }
        }
    } else {
        let abs_ok = |k: &BigInt| f.eval_int(k).abs().is_one();
        match reaches_target(&diff) {
            QualifyingK::Finite(ks) => QualifyingK::Finite(ks.into_iter().filter(abs_ok).collect()),
            _ => match integer_solutions_of_abs_eq(&f, &BigInt::one(), K_MIN) {
                IntegerSolutions::All => reaches_target(&diff),
                IntegerSolutions::Finite(ks) => QualifyingK::Finite(
                    ks.into_iter().filter(|k| !diff.eval_int(k).is_negative()).collect(),
                ),
            },
        }
    }
}

/// Integers `k ≥ 6` with `diff(k) ≥ 0`.
fn reaches_target(diff: &IntPoly) -> QualifyingK {
    // diff takes integer values, so diff ≥ 0 iff diff + 1 > 0
    let shifted = diff + &IntPoly::constant(1);
    if positive_for_all_integers_geq(&shifted, K_MIN).passed() {
        return QualifyingK::Every;
    }
    let lc = diff.leading_coeff().expect("non-zero, since shifted failed");
    if lc.is_positive() {
        return QualifyingK::Unbounded;
    }
    // negative leading coefficient: only finitely many k, all below the largest root
    let iso = isolate_real_roots(diff).expect("non-zero");
    let last = iso
        .intervals
        .iter()
        .map(|(_, hi)| hi.ceil().to_integer())
        .max()
        .unwrap_or_else(|| BigInt::from(K_MIN - 1));
    let mut ks = Vec::new();
    let mut k = BigInt::from(K_MIN);
    while k <= last {
        if !diff.eval_int(&k).is_negative() {
            ks.push(k.clone());
        }
        k += 1;
    }
    QualifyingK::Finite(ks)
}

/// Every point of `a` for which some integer `k ≥ 6` meets both conditions,
/// in the order of `a`.
pub fn prop2_qualifying(a: &CandidateSetA, abs_first: bool) -> Vec<Prop2Hit> {
    a.points
        .par_iter()
        .filter_map(|x| {
            let ks = prop2_point(x, abs_first);
            if ks.is_empty() {
                return None;
            }
            let (f, g) = compose_phi(x);
            Some(Prop2Hit { point: *x, f, g, ks })
        })
        .collect()
}

/// Searches `a` and passes iff the qualifying points are exactly [`TABLE2`].
pub fn search_prop2(a: &CandidateSetA) -> Certificate {
    let hits = prop2_qualifying(a, true);
    let mut found: Vec<Preimage> = hits.iter().map(|h| h.point).collect();
    found.sort_unstable();
    let mut expected = TABLE2.to_vec();
    expected.sort_unstable();
    let subject = format!(
        "points x of A ({} points) with |f∘φ_k(x)| = 1 and g∘φ_k(x) >= {} for some integer k >= {K_MIN}",
        a.len(),
        extremal_target()
    );
    let mut witnesses: Vec<Witness> = found.iter().map(|p| Witness::Point(p.to_vec())).collect();
    let ok = found == expected;
    if !ok && witnesses.is_empty() {
        witnesses.push(Witness::Text("no qualifying point".into()));
    }
    let mut cert = Certificate::decide(ok, subject, witnesses)
        .with_note(format!("{} qualifying points", found.len()));
    for h in &hits {
        let ks = match &h.ks {
            QualifyingK::Every => "every k >= 6".to_string(),
            QualifyingK::Unbounded => "infinitely many k >= 6".to_string(),
            QualifyingK::Finite(v) => format!("k in {v:?}"),
        };
        cert = cert.with_note(format!("{:?}: f = {}, g = {}, {ks}", h.point, h.f, h.g));
    }
    cert
}

/// Each hit must satisfy both conditions for every `k ≥ 6`: `f∘φ_k` is the
/// constant ±1 and `g∘φ_k` is identical to the target.
pub fn check_hits_universal(hits: &[Prop2Hit]) -> Certificate {
    let target = extremal_target();
    let bad: Vec<Witness> = hits
        .iter()
        .filter(|h| {
            let f_ok = h.f.as_constant().is_some_and(|c| c.abs().is_one());
            !(f_ok && h.g == target && h.ks == QualifyingK::Every)
        })
        .map(|h| Witness::Point(h.point.to_vec()))
        .collect();
    let subject = format!("{} search hits satisfy both conditions for every k >= {K_MIN}", hits.len());
    if bad.is_empty() {
        Certificate::pass(subject, Vec::new())
    } else {
        Certificate::fail(subject, bad)
    }
}

/// The extremal segment pair `(P★, Q★)` in `[0,k]^3`, defined for `k ≥ 2`.
pub fn star_pair(k: i64) -> Result<(LatticeSimplex, LatticeSimplex), GeometryError> {
    let p = LatticeSimplex::from_coords(&[&[k, 2, 1], &[0, k - 1, k]], k)?;
    let q = LatticeSimplex::from_coords(&[&[0, 0, 0], &[k - 1, k, k]], k)?;
    Ok((p, q))
}

/// Canonical key of a segment pair under the 48 cube symmetries, endpoint
/// swaps and exchange of the two segments (384 images).
pub fn canonicalize_pair(p: &LatticeSimplex, q: &LatticeSimplex) -> Result<CanonicalKey, GeometryError> {
    for s in [p, q] {
        if s.dimension() != 1 {
            return Err(GeometryError::WrongShape {
                expected: "segment",
                got: s.vertices().len(),
            });
        }
    }
    if p.k() != q.k() || p.ambient_dim() != q.ambient_dim() {
        return Err(GeometryError::Mismatch);
    }
    Ok(canonical_simplex_pair(p, q))
}

/// Canonical key of any simplex pair sharing `d` and `k`.
pub(crate) fn canonical_simplex_pair(p: &LatticeSimplex, q: &LatticeSimplex) -> CanonicalKey {
    let d = p.ambient_dim();
    let raw = |s: &LatticeSimplex| -> Vec<[i64; 3]> {
        s.vertices()
            .iter()
            .map(|v| {
                let mut a = [0i64; 3];
                a[..d].copy_from_slice(v.coords());
                a
            })
            .collect()
    };
    canonical_key(&raw(p), &raw(q), d, p.k(), &CubeSymmetry::all(d))
}

/// Recovers a segment pair with the given encoding, translated by the
/// lexicographically smallest integer vector keeping it inside `[0,k]^3`.
pub fn reconstruct_pair(x: &XPoint) -> Result<(LatticeSimplex, LatticeSimplex), CertifyError> {
    if g_val(x) == 0 {
        return Err(GeometryError::SingularGram.into());
    }
    let (u, v, w, k) = (x.col1(), x.col2(), x.b(), x.k());
    let mut t = [0i64; 3];
    for i in 0..3 {
        let offsets = [0, u[i], w[i], w[i] + v[i]];
        let lo = -offsets.iter().min().unwrap();
        let hi = k - offsets.iter().max().unwrap();
        if lo > hi {
            return Err(CertifyError::NotRealizable { k });
        }
        t[i] = lo;
    }
    let add = |a: [i64; 3], b: [i64; 3]| [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
    let p0 = t;
    let p1 = add(t, u);
    let q0 = add(t, w);
    let q1 = add(q0, v);
    let p = LatticeSimplex::from_coords(&[&p0, &p1], k)?;
    let q = LatticeSimplex::from_coords(&[&q0, &q1], k)?;
    Ok((p, q))
}

/// Every [`TABLE2`] point, mapped through φ_k and back to a segment pair, has
/// the canonical key of `(P★, Q★)`.
pub fn check_table2_equivalence(k: i64) -> Result<Certificate, CertifyError> {
    let (ps, qs) = star_pair(k)?;
    let star = canonicalize_pair(&ps, &qs)?;
    let mut bad = Vec::new();
    for pre in &TABLE2 {
        let x = phi_apply(pre, k)?;
        let (p, q) = reconstruct_pair(&x)?;
        if canonicalize_pair(&p, &q)? != star {
            bad.push(Witness::Point(pre.to_vec()));
        }
    }
    let subject = format!("extremal points at k = {k} are symmetric images of (P★, Q★) = {star}");
    Ok(if bad.is_empty() {
        Certificate::pass(subject, vec![Witness::Text(star.to_string())])
    } else {
        Certificate::fail(subject, bad)
    })
}

/// `5k^4 - 24k^3 + 40k^2 - 28k + 10 > 0` for every integer `k ≥ 1`, which is
/// `3k^4 < 8k^4 - 24k^3 + 40k^2 - 28k + 10`.
pub fn check_prop31() -> Certificate {
    let p = IntPoly::from_i64s(&[10, -28, 40, -24, 5]);
    positive_for_all_integers_geq(&p, 1)
}

/// Every point in the candidate set has `g∘φ_k` of degree at most 4 and
/// `f∘φ_k` of degree at most 3.
pub fn composition_degrees_ok(points: &[Preimage]) -> bool {
    points.iter().all(|x| {
        let (f, g) = compose_phi(x);
        f.degree().is_none_or(|d| d <= 3) && g.degree().is_none_or(|d| d <= 4)
    })
}

/// The minimum over `b` of `target(6) - g∘φ_6(x)`, computed by direct
/// evaluation rather than through the certificate.
pub fn min_margin_at(b: &CandidateSetB, k: i64) -> BigInt {
    let t = extremal_target().eval_int(&BigInt::from(k));
    b.points
        .iter()
        .map(|x| &t - BigInt::from(g_val(&phi_apply(x, k).expect("k large enough"))))
        .min()
        .unwrap_or_else(BigInt::zero)
}
