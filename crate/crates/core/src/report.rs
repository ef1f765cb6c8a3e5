//! Line-delimited structured report format.
//!
//! ```text
//! kissing-report 1
//! begin eps
//! d       3
//! k       2
//! eps_squared     1/50
//! witness (0,0,0)-(1,2,2) | (0,1,2)-(2,2,1)
//! end
//! ```
//!
//! (field separators shown as spaces are single tabs). The first line names the format and its version. Each record opens with
//! `begin <kind>` and closes with `end`; between them every line is a
//! field, `key<TAB>value`. Keys are `[a-z0-9_]+` and may repeat; values are
//! any text without tabs or newlines. Rationals are written `p/q` (or `p`
//! when integral).

use std::fmt::Write as _;

use thiserror::Error;

use crate::certificate::Certificate;
use crate::enumerate::EpsResult;

pub const FORMAT_NAME: &str = "kissing-report";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid key {0:?}")]
    InvalidKey(String),
    #[error("value for {key:?} contains a tab or newline")]
    InvalidValue { key: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub kind: String,
    pub fields: Vec<(String, String)>,
}

impl Record {
    pub fn new(kind: impl Into<String>) -> Self {
        Record {
            kind: kind.into(),
            fields: Vec::new(),
        }
    }

    pub fn field(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    /// First value stored under `key`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn get_all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a str> + 'a {
        self.fields.iter().filter(move |(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

fn valid_key(k: &str) -> bool {
    !k.is_empty() && k.bytes().all(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || b == b'_')
}

pub fn serialize(records: &[Record]) -> Result<String, ReportError> {
    let mut out = String::new();
    writeln!(out, "{FORMAT_NAME} {FORMAT_VERSION}").unwrap();
    for r in records {
        if !valid_key(&r.kind) {
            return Err(ReportError::InvalidKey(r.kind.clone()));
        }
        writeln!(out, "begin {}", r.kind).unwrap();
        for (k, v) in &r.fields {
            if !valid_key(k) {
                return Err(ReportError::InvalidKey(k.clone()));
            }
            if v.contains(['\t', '\n', '\r']) {
                return Err(ReportError::InvalidValue { key: k.clone() });
            }
            writeln!(out, "{k}\t{v}").unwrap();
        }
        out.push_str("end\n");
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<Vec<Record>, ReportError> {
    let err = |line: usize, msg: &str| ReportError::Parse {
        line,
        msg: msg.to_string(),
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let expected = format!("{FORMAT_NAME} {FORMAT_VERSION}");
    if header != expected {
        return Err(err(1, &format!("expected header {expected:?}")));
    }
    let mut records = Vec::new();
    let mut current: Option<Record> = None;
    for (n, line) in lines {
        match current.as_mut() {
            None => {
                let kind = line
                    .strip_prefix("begin ")
                    .ok_or_else(|| err(n, "expected `begin <kind>`"))?;
                if !valid_key(kind) {
                    return Err(err(n, "invalid record kind"));
                }
                current = Some(Record::new(kind));
            }
            Some(rec) => {
                if line == "end" {
                    records.push(current.take().unwrap());
                    continue;
                }
                let (k, v) = line.split_once('\t').ok_or_else(|| err(n, "expected `key<TAB>value`"))?;
                if !valid_key(k) {
                    return Err(err(n, "invalid key"));
                }
                if v.contains('\t') {
                    return Err(err(n, "value contains a tab"));
                }
                rec.fields.push((k.to_string(), v.to_string()));
            }
        }
    }
    if current.is_some() {
        return Err(err(text.lines().count(), "unterminated record"));
    }
    Ok(records)
}

pub fn eps_record(r: &EpsResult) -> Record {
    let mut rec = Record::new("eps")
        .field("d", r.d)
        .field("k", r.k)
        .field(
            "classes",
            r.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
        )
        .field("eps_squared", &r.eps_squared)
        .field("pairs_examined", r.pairs_examined)
        .field("witness_orbits", r.witnesses.len());
    for w in &r.witnesses {
        rec = rec.field("witness", w);
    }
    rec
}

pub fn certificate_record(c: &Certificate) -> Record {
    let mut rec = Record::new("certificate")
        .field("subject", one_line(&c.subject))
        .field("verdict", c.verdict);
    for (name, v) in &c.measurements {
        rec = rec.field("measure", format!("{name}={v}"));
    }
    for n in &c.notes {
        rec = rec.field("note", one_line(n));
    }
    for w in &c.witnesses {
        rec = rec.field("witness", one_line(&w.to_string()));
    }
    rec
}

fn one_line(s: &str) -> String {
    s.replace(['\t', '\n', '\r'], " ")
}
