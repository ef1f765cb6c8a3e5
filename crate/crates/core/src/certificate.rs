//! Verdict records produced by every exact check in the crate.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Evidence attached to a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A point of the nine-coordinate model, or any other integer tuple.
    Point(Vec<i64>),
    Poly(IntPoly),
    /// An open isolating interval `(lo, hi)`.
    Interval { lo: BigRational, hi: BigRational },
    /// The exact value of the checked polynomial at an integer.
    Evaluation { at: BigInt, value: BigInt },
    Text(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Point(p) => {
                f.write_str("(")?;
                for (i, c) in p.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
            Witness::Poly(p) => write!(f, "{p}"),
            Witness::Interval { lo, hi } => write!(f, "({lo}, {hi})"),
            Witness::Evaluation { at, value } => write!(f, "p({at}) = {value}"),
            Witness::Text(t) => f.write_str(t),
        }
    }
}

/// Outcome of a check. A failing certificate always carries at least one
/// witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub subject: String,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    /// Named exact quantities recorded by the check (margins, bounds).
    pub measurements: Vec<(String, BigRational)>,
}

impl Certificate {
    pub fn pass(subject: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        Certificate {
            verdict: Verdict::Pass,
            subject: subject.into(),
            witnesses,
            notes: Vec::new(),
            measurements: Vec::new(),
        }
    }

    /// Panics if `witnesses` is empty.
    pub fn fail(subject: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        assert!(!witnesses.is_empty(), "a failing certificate needs a witness");
        Certificate {
            verdict: Verdict::Fail,
            subject: subject.into(),
            witnesses,
            notes: Vec::new(),
            measurements: Vec::new(),
        }
    }

    /// Pass if `ok`, otherwise fail; `witnesses` must be non-empty on failure.
    pub fn decide(ok: bool, subject: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        if ok {
            Self::pass(subject, witnesses)
        } else {
            Self::fail(subject, witnesses)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn with_measurement(mut self, name: impl Into<String>, value: BigRational) -> Self {
        self.measurements.push((name.into(), value));
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn measurement(&self, name: &str) -> Option<&BigRational> {
        self.measurements
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {}", self.verdict, self.subject)?;
        for (name, v) in &self.measurements {
            writeln!(f, "  {name} = {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        writeln!(f, "  witnesses: {}", self.witnesses.len())
    }
}
