//! Univariate polynomials with arbitrary-precision integer coefficients and
//! exact real-root isolation by Sturm sequences.
//!
//! Everything here is exact. Roots are isolated by open rational intervals
//! whose endpoints are never roots, refined until each interval has width at
//! most one, so every interval holds at most one integer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::certificate::{Certificate, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial vanishes everywhere: all reals are roots")]
    ZeroPolynomial,
}

/// Polynomial in one variable `k`; `coeffs()[i]` is the coefficient of `k^i`.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial `a + b k`.
    pub fn linear(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self::new(vec![a.into(), b.into()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// The constant value, if the polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_int(&self, k: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * k + c)
    }

    pub fn eval(&self, k: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * k + BigRational::from(c.clone()))
    }

    fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().cloned().map(BigRational::from).collect())
    }
}

/// Evaluates `p` at `k` exactly.
pub fn poly_eval(p: &IntPoly, k: &BigRational) -> BigRational {
    p.eval(k)
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("k")?,
                _ => write!(f, "k^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Polynomial over the rationals, used only inside the Sturm machinery.
#[derive(Debug, Clone, PartialEq)]
struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => RatPoly::new(self.coeffs.iter().map(|c| c / lc).collect()),
        }
    }

    fn derivative(&self) -> Self {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dl = d.coeffs.last().unwrap();
        let dd = d.degree();
        if rem.len() < d.coeffs.len() {
            return (RatPoly::new(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = &rem[i] / dl;
            if q.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                let t = &q * c;
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Disjoint open intervals `(lo, hi)`, sorted ascending, each containing
/// exactly one distinct real root. Endpoints are never roots and every
/// interval has width at most one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootIsolation {
    pub intervals: Vec<(BigRational, BigRational)>,
    /// True when the input polynomial had no repeated roots.
    pub multiplicity_free: bool,
}

impl RootIsolation {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Sturm chain of a square-free polynomial.
struct SturmChain {
    seq: Vec<RatPoly>,
}

impl SturmChain {
    fn new(square_free: RatPoly) -> Self {
        let mut seq = vec![square_free.clone(), square_free.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(RatPoly::new(r.coeffs.into_iter().map(|c| -c).collect()));
        }
        SturmChain { seq }
    }

    fn base(&self) -> &RatPoly {
        &self.seq[0]
    }

    fn sign_changes(&self, x: &BigRational) -> usize {
        let mut changes = 0;
        let mut prev: Option<bool> = None;
        for p in &self.seq {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if prev.is_some_and(|s| s != pos) {
                changes += 1;
            }
            prev = Some(pos);
        }
        changes
    }

    /// Distinct roots in the open interval `(lo, hi)`; neither endpoint may be a root.
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.sign_changes(lo) - self.sign_changes(hi)
    }

    /// A split point strictly inside `(lo, hi)` that is not a root.
    fn split_point(&self, lo: &BigRational, hi: &BigRational) -> BigRational {
        let two = BigRational::from_integer(BigInt::from(2));
        let mut mid = (lo + hi) / &two;
        while self.base().eval(&mid).is_zero() {
            mid = (lo + &mid) / &two;
        }
        mid
    }
}

/// Strict bound on the absolute value of every complex root (Cauchy, plus one).
fn root_bound(p: &RatPoly) -> BigRational {
    let lc = p.coeffs.last().unwrap().abs();
    let max = p.coeffs[..p.coeffs.len() - 1]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(BigRational::zero);
    BigRational::from_integer((max + BigRational::from_integer(BigInt::from(2))).ceil().to_integer())
}

fn square_free_part(p: &RatPoly) -> (RatPoly, bool) {
    let g = p.gcd(&p.derivative());
    if g.degree() == 0 {
        (p.monic(), true)
    } else {
        (p.div_rem(&g).0.monic(), false)
    }
}

/// Isolates every distinct real root of `p`.
pub fn isolate_real_roots(p: &IntPoly) -> Result<RootIsolation, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let (sqf, multiplicity_free) = square_free_part(&p.to_rat());
    if sqf.degree() == 0 {
        return Ok(RootIsolation {
            intervals: Vec::new(),
            multiplicity_free,
        });
    }
    let chain = SturmChain::new(sqf);
    let bound = root_bound(chain.base());
    let one = BigRational::one();

    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo <= one {
            out.push((lo, hi));
            continue;
        }
        let mid = chain.split_point(&lo, &hi);
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    Ok(RootIsolation {
        intervals: out,
        multiplicity_free,
    })
}

/// Shrinks the isolating interval `(lo, hi)` of a root known to lie below
/// `limit` until `hi < limit`.
fn refine_below(chain: &SturmChain, mut lo: BigRational, mut hi: BigRational, limit: &BigRational) -> (BigRational, BigRational) {
    while &hi >= limit {
        let mid = chain.split_point(&lo, &hi);
        if chain.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Decides whether `p(k) > 0` for every integer `k ≥ k0`.
///
/// The real roots are isolated; any root interval straddling `k0` is split
/// there, intervals below `k0` are tightened until their upper end is strictly
/// below it, and every integer between `k0` and the largest root is evaluated.
/// Past the largest root the sign is that of the leading coefficient.
pub fn positive_for_all_integers_geq(p: &IntPoly, k0: i64) -> Certificate {
    let subject = format!("{p} > 0 for every integer k >= {k0}");
    if p.is_zero() {
        return Certificate::fail(subject, vec![Witness::Poly(p.clone())])
            .with_note("identically zero");
    }
    let k0_int = BigInt::from(k0);
    let k0_rat = BigRational::from_integer(k0_int.clone());
    let at_k0 = p.eval_int(&k0_int);

    let (sqf, _) = square_free_part(&p.to_rat());
    let chain = (sqf.degree() > 0).then(|| SturmChain::new(sqf));

    let mut witnesses = Vec::new();
    let mut below = Vec::new();
    let mut above = Vec::new();
    if let Some(chain) = &chain {
        let iso = isolate_real_roots(p).expect("non-zero polynomial");
        for (lo, hi) in iso.intervals {
            if hi < k0_rat {
                below.push((lo, hi));
            } else if lo >= k0_rat {
                above.push((lo, hi));
            } else if chain.base().eval(&k0_rat).is_zero() {
                // k0 itself is a root
                above.push((k0_rat.clone(), k0_rat.clone()));
            } else if chain.count(&lo, &k0_rat) == 1 {
                below.push(refine_below(chain, lo, hi, &k0_rat));
            } else {
                above.push((k0_rat.clone(), hi));
            }
        }
    }
    for (lo, hi) in below.iter().chain(above.iter()) {
        witnesses.push(Witness::Interval {
            lo: lo.clone(),
            hi: hi.clone(),
        });
    }

    // Every integer from k0 up to the last root-interval end, then one past it
    // where the leading coefficient takes over.
    let last = above
        .iter()
        .map(|(_, hi)| hi.ceil().to_integer())
        .max()
        .unwrap_or_else(|| k0_int.clone());
    let mut failing = None;
    let mut k = k0_int.clone();
    while k <= last {
        let v = p.eval_int(&k);
        let ok = v.is_positive();
        witnesses.push(Witness::Evaluation {
            at: k.clone(),
            value: v,
        });
        if !ok && failing.is_none() {
            failing = Some(k.clone());
            break;
        }
        k += 1;
    }
    if failing.is_none() && !p.leading_coeff().unwrap().is_positive() {
        // Beyond every root the sign is negative; evaluate there as a witness.
        let bound = root_bound(&p.to_rat()).to_integer();
        let at = bound.max(&last + 1);
        witnesses.push(Witness::Evaluation {
            value: p.eval_int(&at),
            at: at.clone(),
        });
        failing = Some(at);
    }

    let max_upper = below
        .iter()
        .chain(above.iter())
        .map(|(_, hi)| hi.clone())
        .max();
    let mut cert = match failing {
        None => Certificate::pass(subject, witnesses),
        Some(k) => Certificate::fail(subject, witnesses).with_note(format!("p({k}) <= 0")),
    };
    cert = cert.with_measurement("value_at_k0", BigRational::from_integer(at_k0));
    if let Some(m) = max_upper {
        cert = cert.with_measurement("max_root_upper", m);
    }
    cert
}

/// Integer solutions of `|p(k)| = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegerSolutions {
    /// Every integer is a solution (`p` is the constant `±target`).
    All,
    Finite(Vec<BigInt>),
}

impl IntegerSolutions {
    pub fn is_empty(&self) -> bool {
        matches!(self, IntegerSolutions::Finite(v) if v.is_empty())
    }
}

/// Every integer `k ≥ k0` with `|p(k)| = target`, found by isolating the roots
/// of `p - target` and `p + target` and probing the integers inside each
/// isolating interval.
pub fn integer_solutions_of_abs_eq(p: &IntPoly, target: &BigInt, k0: i64) -> IntegerSolutions {
    assert!(!target.is_negative(), "target must be non-negative");
    let t = IntPoly::constant(target.clone());
    let minus = p - &t;
    let plus = p + &t;
    if minus.is_zero() || plus.is_zero() {
        return IntegerSolutions::All;
    }
    let k0 = BigInt::from(k0);
    let mut sols = Vec::new();
    for q in [&minus, &plus] {
        let iso = isolate_real_roots(q).expect("non-zero polynomial");
        for (lo, hi) in &iso.intervals {
            let mut k = lo.ceil().to_integer();
            let end = hi.floor().to_integer();
            while k <= end {
                if k >= k0 && q.eval_int(&k).is_zero() {
                    sols.push(k.clone());
                }
                k += 1;
            }
        }
    }
    sols.sort();
    sols.dedup();
    IntegerSolutions::Finite(sols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn target() -> IntPoly {
        IntPoly::from_i64s(&[10, -28, 40, -24, 8])
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly_eval(&target(), &rat(2)), rat(50));
        assert_eq!(poly_eval(&IntPoly::zero(), &rat(7)), rat(0));
        let p = IntPoly::from_i64s(&[10, -28, 40, -24, 5]);
        assert_eq!(poly_eval(&p, &rat(1)), rat(3));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = IntPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPoly::from_i64s(&[0, 0]), IntPoly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(target().to_string(), "8k^4 - 24k^3 + 40k^2 - 28k + 10");
        assert_eq!(IntPoly::from_i64s(&[-1, 1]).to_string(), "k - 1");
        assert_eq!(IntPoly::from_i64s(&[0, -1, 0, 1]).to_string(), "k^3 - k");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn isolate_sqrt2() {
        let iso = isolate_real_roots(&IntPoly::from_i64s(&[-2, 0, 1])).unwrap();
        assert_eq!(iso.len(), 2);
        let two = rat(2);
        let (lo, hi) = &iso.intervals[0];
        assert!(hi - lo <= rat(1));
        assert!(hi.is_negative());
        assert!(lo * lo > two && hi * hi < two);
        let (lo, hi) = &iso.intervals[1];
        assert!(hi - lo <= rat(1));
        assert!(lo * lo < two && hi * hi > two);
    }

    #[test]
    fn isolate_no_real_roots() {
        let iso = isolate_real_roots(&IntPoly::from_i64s(&[1, 0, 1])).unwrap();
        assert!(iso.is_empty());
    }

    #[test]
    fn isolate_zero_is_error() {
        assert_eq!(isolate_real_roots(&IntPoly::zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn isolate_repeated_and_integer_roots() {
        // (k-1)^2 (k-2) (k+3)
        let p = &(&IntPoly::from_i64s(&[1, -2, 1]) * &IntPoly::from_i64s(&[-2, 1])) * &IntPoly::from_i64s(&[3, 1]);
        let iso = isolate_real_roots(&p).unwrap();
        assert!(!iso.multiplicity_free);
        assert_eq!(iso.len(), 3);
        for w in iso.intervals.windows(2) {
            assert!(w[0].0 < w[0].1);
            assert!(w[0].1 <= w[1].0);
        }
    }

    #[test]
    fn quartic_roots_below_one() {
        let p = IntPoly::from_i64s(&[10, -28, 40, -24, 5]);
        let iso = isolate_real_roots(&p).unwrap();
        for (_, hi) in &iso.intervals {
            assert!(*hi <= rat(1));
        }
        for k in 1..=10 {
            assert!(p.eval_int(&BigInt::from(k)).is_positive());
        }
        assert!(positive_for_all_integers_geq(&p, 1).passed());
    }

    #[test]
    fn positivity_examples() {
        let c = positive_for_all_integers_geq(&IntPoly::from_i64s(&[-10, 1]), 6);
        assert!(!c.passed());
        assert!(!c.witnesses.is_empty());
        assert!(positive_for_all_integers_geq(&IntPoly::from_i64s(&[-2, 0, 1]), 2).passed());
        let z = positive_for_all_integers_geq(&IntPoly::zero(), 0);
        assert!(!z.passed());
        assert!(z.notes.iter().any(|n| n.contains("identically zero")));
    }

    #[test]
    fn positivity_root_exactly_at_k0() {
        let c = positive_for_all_integers_geq(&IntPoly::from_i64s(&[-6, 1]), 6);
        assert!(!c.passed());
    }

    #[test]
    fn positivity_negative_leading_coefficient() {
        // 100 - k^2 is positive at 6..9 but not beyond
        let c = positive_for_all_integers_geq(&IntPoly::from_i64s(&[100, 0, -1]), 6);
        assert!(!c.passed());
        // -1 constant
        assert!(!positive_for_all_integers_geq(&IntPoly::constant(-1), 0).passed());
        assert!(positive_for_all_integers_geq(&IntPoly::constant(3), 0).passed());
    }

    #[test]
    fn positivity_with_dip_between_roots_above_k0() {
        // (k-7.5)^2 - 1/4 = (k-7)(k-8) is zero at 7 and 8 -> fail
        let p = IntPoly::from_i64s(&[56, -15, 1]);
        assert!(!positive_for_all_integers_geq(&p, 6).passed());
        // (2k-15)^2 - 1/2 scaled: 4k^2 - 60k + 224.5 -> use 8k^2 - 120k + 449, roots 7.25.., 7.75..
        let q = IntPoly::from_i64s(&[449, -120, 8]);
        let c = positive_for_all_integers_geq(&q, 6);
        assert!(c.passed(), "{c:?}");
    }

    #[test]
    fn positivity_tightens_upper_ends_below_k0() {
        // roots at 5.5 +- small, below 6
        let p = IntPoly::from_i64s(&[121, -44, 4]); // (2k-11)^2
        let p = &p - &IntPoly::constant(1); // (2k-12)(2k-10) roots 5 and 6 -> fails at 6
        assert!(!positive_for_all_integers_geq(&p, 6).passed());
        let q = IntPoly::from_i64s(&[483, -176, 16]); // 16k^2 -176k + 483 = (4k-21)(4k-23), roots 5.25, 5.75
        let c = positive_for_all_integers_geq(&q, 6);
        assert!(c.passed());
        let m = c.measurement("max_root_upper").unwrap();
        assert!(*m < rat(6));
    }

    #[test]
    fn abs_eq_examples() {
        let one = BigInt::one();
        assert_eq!(
            integer_solutions_of_abs_eq(&IntPoly::from_i64s(&[-7, 1]), &one, 6),
            IntegerSolutions::Finite(vec![BigInt::from(6), BigInt::from(8)])
        );
        assert!(integer_solutions_of_abs_eq(&IntPoly::from_i64s(&[0, 0, 1]), &one, 6).is_empty());
        assert_eq!(
            integer_solutions_of_abs_eq(&IntPoly::constant(-1), &one, 6),
            IntegerSolutions::All
        );
        assert_eq!(
            integer_solutions_of_abs_eq(&IntPoly::zero(), &BigInt::zero(), 6),
            IntegerSolutions::All
        );
        assert!(integer_solutions_of_abs_eq(&IntPoly::constant(2), &one, 6).is_empty());
    }
}
