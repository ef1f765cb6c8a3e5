//! C ABI over the `kissing` crate.
//!
//! Every fallible function returns a [`KissingStatus`]; on failure a message
//! is available from [`kissing_last_error`] on the same thread. Results are
//! returned through out-parameters. Strings handed out by the library are
//! freed with [`kissing_string_free`]; handles with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kissing::certify::{check_prop1, check_prop31, check_table2_equivalence, gen_a, gen_b, search_prop2, K_MIN};
use kissing::enumerate::{verify_theorem1_smallk, EnumError};
use kissing::geometry::sq_dist;
use kissing::model::{f_val, g_val};
use kissing::{eps_bruteforce, Certificate, EnumOptions, EpsResult, LatticeSimplex, PairClass, XPoint};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KissingStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BudgetExceeded = 3,
    Panic = 4,
}

/// Certificates available through [`kissing_certify`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KissingCertKind {
    /// `5k^4 - 24k^3 + 40k^2 - 28k + 10 > 0` for every integer `k >= 1`.
    Quartic = 0,
    /// The polynomial bound over the first candidate set.
    CandidateB = 1,
    /// The search over the second candidate set.
    CandidateA = 2,
    /// The search hits are images of the extremal pair at `k = 6`.
    Equivalence = 3,
    /// Brute-force check of the closed form for small `k`.
    SmallK = 4,
}

/// Result of a brute-force ε(d,k) computation.
pub struct KissingEps(EpsResult);

/// A certificate with its verdict and witnesses.
pub struct KissingCertificate(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn fail(status: KissingStatus, msg: impl Into<String>) -> KissingStatus {
    set_error(msg);
    status
}

/// Runs `f`, converting panics into [`KissingStatus::Panic`].
fn guard(f: impl FnOnce() -> KissingStatus) -> KissingStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            fail(KissingStatus::Panic, msg)
        }
    }
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> KissingStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            KissingStatus::Ok
        }
        Err(_) => fail(KissingStatus::InvalidArgument, "string contains NUL"),
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn kissing_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing the last failure on this thread, or NULL. The caller
/// owns the returned string.
#[no_mangle]
pub extern "C" fn kissing_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string obtained from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kissing_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Computes `f(x)` and `g(x)` for a point `x` of `[-k,k]^9`.
///
/// # Safety
/// `x` must point to 9 readable values; `f` and `g` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kissing_xpoint_fg(x: *const i64, k: i64, f: *mut i64, g: *mut i64) -> KissingStatus {
    guard(|| {
        if x.is_null() || f.is_null() || g.is_null() {
            return fail(KissingStatus::NullPointer, "null argument");
        }
        let mut c = [0i64; 9];
        c.copy_from_slice(std::slice::from_raw_parts(x, 9));
        match XPoint::new(c, k) {
            Ok(p) => {
                // |f| <= 6k^3 and g <= 12k^4 fit in i64 for every supported k
                *f = f_val(&p) as i64;
                *g = g_val(&p) as i64;
                KissingStatus::Ok
            }
            Err(e) => fail(KissingStatus::InvalidArgument, e.to_string()),
        }
    })
}

unsafe fn read_simplex(v: *const i64, count: usize, d: usize, k: i64) -> Result<LatticeSimplex, String> {
    if count == 0 || count > 3 {
        return Err(format!("a simplex needs 1 to 3 vertices, got {count}"));
    }
    let flat = std::slice::from_raw_parts(v, count * d);
    let rows: Vec<&[i64]> = flat.chunks(d).collect();
    LatticeSimplex::from_coords(&rows, k).map_err(|e| e.to_string())
}

/// Exact squared distance between two lattice simplices of `[0,k]^d`,
/// written to `out` as `"p/q"`.
///
/// Vertices are given row-major: `np` rows of `d` coordinates for `p`,
/// `nq` rows for `q`.
///
/// # Safety
/// `p` and `q` must point to `np * d` and `nq * d` readable values; `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn kissing_sq_dist(
    p: *const i64,
    np: usize,
    q: *const i64,
    nq: usize,
    d: usize,
    k: i64,
    out: *mut *mut c_char,
) -> KissingStatus {
    guard(|| {
        if p.is_null() || q.is_null() || out.is_null() {
            return fail(KissingStatus::NullPointer, "null argument");
        }
        if !(2..=3).contains(&d) {
            return fail(KissingStatus::InvalidArgument, format!("unsupported dimension {d}"));
        }
        let simplices = read_simplex(p, np, d, k).and_then(|a| Ok((a, read_simplex(q, nq, d, k)?)));
        let (a, b) = match simplices {
            Ok(s) => s,
            Err(e) => return fail(KissingStatus::InvalidArgument, e),
        };
        match sq_dist(&a, &b) {
            Ok(v) => put_string(out, v.to_string()),
            Err(e) => fail(KissingStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Brute-force ε(d,k) over every pair class of dimension `d`.
///
/// `budget` caps the number of pairs examined (0 selects the default).
///
/// # Safety
/// `out` must be writable. The handle is released with [`kissing_eps_free`].
#[no_mangle]
pub unsafe extern "C" fn kissing_eps_compute(
    d: usize,
    k: i64,
    budget: u64,
    symmetry_reduced: c_int,
    out: *mut *mut KissingEps,
) -> KissingStatus {
    guard(|| {
        if out.is_null() {
            return fail(KissingStatus::NullPointer, "null argument");
        }
        let mut opts = EnumOptions {
            symmetry_reduced: symmetry_reduced != 0,
            ..EnumOptions::default()
        };
        if budget > 0 {
            opts.budget = budget;
        }
        if !(2..=3).contains(&d) {
            return fail(KissingStatus::InvalidArgument, format!("unsupported dimension {d}"));
        }
        match eps_bruteforce(d, k, &PairClass::all_for(d), &opts) {
            Ok(r) => {
                *out = Box::into_raw(Box::new(KissingEps(r)));
                KissingStatus::Ok
            }
            Err(e @ EnumError::BudgetExceeded { .. }) => fail(KissingStatus::BudgetExceeded, e.to_string()),
            Err(e) => fail(KissingStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Writes ε(d,k)^2 as `"p/q"`.
///
/// # Safety
/// `eps` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kissing_eps_squared(eps: *const KissingEps, out: *mut *mut c_char) -> KissingStatus {
    guard(|| {
        if eps.is_null() || out.is_null() {
            return fail(KissingStatus::NullPointer, "null argument");
        }
        put_string(out, (&*eps).0.eps_squared.to_string())
    })
}

/// Number of witness orbits; 0 for a NULL handle.
///
/// # Safety
/// `eps` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kissing_eps_witness_count(eps: *const KissingEps) -> usize {
    eps.as_ref().map_or(0, |e| e.0.witnesses.len())
}

/// Number of pairs examined; 0 for a NULL handle.
///
/// # Safety
/// `eps` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kissing_eps_pairs_examined(eps: *const KissingEps) -> u64 {
    eps.as_ref().map_or(0, |e| e.0.pairs_examined)
}

/// Writes the canonical key of witness orbit `index`.
///
/// # Safety
/// `eps` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kissing_eps_witness(eps: *const KissingEps, index: usize, out: *mut *mut c_char) -> KissingStatus {
    guard(|| {
        if eps.is_null() || out.is_null() {
            return fail(KissingStatus::NullPointer, "null argument");
        }
        match (&*eps).0.witnesses.get(index) {
            Some(w) => put_string(out, w.to_string()),
            None => fail(KissingStatus::InvalidArgument, format!("witness index {index} out of range")),
        }
    })
}

/// Releases an ε handle. NULL is ignored.
///
/// # Safety
/// `eps` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kissing_eps_free(eps: *mut KissingEps) {
    if !eps.is_null() {
        drop(Box::from_raw(eps));
    }
}

/// Runs one certificate.
///
/// # Safety
/// `out` must be writable. The handle is released with
/// [`kissing_certificate_free`].
#[no_mangle]
pub unsafe extern "C" fn kissing_certify(kind: KissingCertKind, out: *mut *mut KissingCertificate) -> KissingStatus {
    guard(|| {
        if out.is_null() {
            return fail(KissingStatus::NullPointer, "null argument");
        }
        let cert = match kind {
            KissingCertKind::Quartic => check_prop31(),
            KissingCertKind::CandidateB => check_prop1(&gen_b()),
            KissingCertKind::CandidateA => search_prop2(&gen_a()),
            KissingCertKind::Equivalence => match check_table2_equivalence(K_MIN) {
                Ok(c) => c,
                Err(e) => return fail(KissingStatus::InvalidArgument, e.to_string()),
            },
            KissingCertKind::SmallK => match verify_theorem1_smallk(&EnumOptions::default()) {
                Ok(c) => c,
                Err(e) => return fail(KissingStatus::BudgetExceeded, e.to_string()),
            },
        };
        *out = Box::into_raw(Box::new(KissingCertificate(cert)));
        KissingStatus::Ok
    })
}

/// 1 if the certificate passed, 0 if it failed, -1 for NULL.
///
/// # Safety
/// `cert` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kissing_certificate_passed(cert: *const KissingCertificate) -> c_int {
    cert.as_ref().map_or(-1, |c| c_int::from(c.0.passed()))
}

/// Number of witnesses attached to the certificate; 0 for NULL.
///
/// # Safety
/// `cert` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kissing_certificate_witness_count(cert: *const KissingCertificate) -> usize {
    cert.as_ref().map_or(0, |c| c.0.witnesses.len())
}

/// Writes the human-readable certificate report.
///
/// # Safety
/// `cert` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kissing_certificate_report(
    cert: *const KissingCertificate,
    out: *mut *mut c_char,
) -> KissingStatus {
    guard(|| {
        if cert.is_null() || out.is_null() {
            return fail(KissingStatus::NullPointer, "null argument");
        }
        put_string(out, (&*cert).0.to_string())
    })
}

/// Releases a certificate handle. NULL is ignored.
///
/// # Safety
/// `cert` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kissing_certificate_free(cert: *mut KissingCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}
