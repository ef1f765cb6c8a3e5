//! Command-line front end: `eps`, `certify`, `distance` and `table1`.
//!
//! Each command renders either a human-readable text report or the
//! structured format of [`crate::report`]. The exit status is 0 exactly when
//! every requested computation completed and every certificate passed.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::certificate::Certificate;
use crate::certify::{
    check_hits_universal, check_prop1, check_prop31, check_table2_equivalence, gen_a, gen_b, prop2_qualifying,
    search_prop2, K_MIN, TABLE2,
};
use crate::enumerate::{eps_bruteforce, verify_theorem1_smallk, EnumOptions, EpsResult, PairClass, DEFAULT_BUDGET};
use crate::geometry::{sq_dist, sq_dist_affine_hulls, LatticeSimplex};
use crate::model::{encode_pair, f_val, g_val, h_val};
use crate::report::{self, certificate_record, eps_record, Record};

#[derive(Debug, Parser)]
#[command(name = "kissing", version, about = "Exact minimal distances between disjoint lattice polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Brute-force ε(d,k) with its kissing pairs.
    Eps(EpsArgs),
    /// Run the certificate pipeline.
    Certify(CertifyArgs),
    /// Exact squared distance between two simplices.
    Distance(DistanceArgs),
    /// Reproduce the small-k values of ε(d,k) for d = 2, 3.
    Table1(Table1Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Compute {
    /// Maximum number of simplex pairs a brute-force run may examine.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Worker threads (default: all cores).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Enumerate only symmetry-minimal first simplices.
    #[arg(long)]
    pub symmetry_reduced: bool,
}

impl Compute {
    fn options(&self) -> EnumOptions {
        EnumOptions {
            budget: self.budget,
            workers: self.workers.map(|w| w as usize),
            symmetry_reduced: self.symmetry_reduced,
        }
    }
}

#[derive(Debug, Args)]
pub struct EpsArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..=3))]
    pub d: u64,
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..=1024))]
    pub k: i64,
    /// Comma-separated pair classes (default: every class of dimension d).
    #[arg(long, value_delimiter = ',')]
    pub classes: Vec<PairClass>,
    #[command(flatten)]
    pub compute: Compute,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// g∘φ_k stays below the extremal target on B for all k >= 6.
    #[arg(long)]
    pub prop1: bool,
    /// Search A; check the hits against the extremal point list and (P★, Q★).
    #[arg(long)]
    pub prop2: bool,
    /// 5k^4 - 24k^3 + 40k^2 - 28k + 10 > 0 for all integers k >= 1.
    #[arg(long)]
    pub prop31: bool,
    /// Brute-force check of the closed form for small k.
    #[arg(long)]
    pub table1: bool,
    /// Everything above (the default when nothing is selected).
    #[arg(long)]
    pub all: bool,
    #[command(flatten)]
    pub compute: Compute,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct DistanceArgs {
    /// Simplex file: a `d k` header line, one vertex per line, a blank line
    /// between the two simplices.
    #[arg(long, conflicts_with_all = ["k", "p", "q"])]
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..=1024))]
    pub k: Option<i64>,
    /// First simplex, vertices separated by `;`, coordinates by `,`.
    #[arg(long)]
    pub p: Option<String>,
    /// Second simplex, same syntax as `--p`.
    #[arg(long)]
    pub q: Option<String>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..=12))]
    pub d2_max: i64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..=6))]
    pub d3_max: i64,
    #[command(flatten)]
    pub compute: Compute,
    #[command(flatten)]
    pub output: Output,
}

/// Rendered report and exit status of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub text: String,
}

/// `1/√q` when the numerator is one, otherwise `√(p/q)`.
pub fn surd(sq: &BigRational) -> String {
    if sq.is_zero() {
        "0".to_string()
    } else if sq.numer().is_one() {
        format!("1/√{}", sq.denom())
    } else {
        format!("√({sq})")
    }
}

struct Rendered {
    records: Vec<Record>,
    text: String,
    ok: bool,
}

fn finish(r: Rendered, out: &Output) -> Result<Outcome, String> {
    let body = match out.format {
        Format::Text => r.text,
        Format::Structured => report::serialize(&r.records).map_err(|e| e.to_string())?,
    };
    let status = if r.ok { 0 } else { 1 };
    match &out.out {
        Some(path) => {
            fs::write(path, &body).map_err(|e| format!("writing {}: {e}", path.display()))?;
            Ok(Outcome {
                status,
                text: String::new(),
            })
        }
        None => Ok(Outcome { status, text: body }),
    }
}

fn eps_text(r: &EpsResult) -> String {
    let mut s = format!(
        "epsilon({},{})^2 = {}\nepsilon({},{}) = {}\nclasses: {}\npairs examined: {}\nwitness orbits: {}\n",
        r.d,
        r.k,
        r.eps_squared,
        r.d,
        r.k,
        surd(&r.eps_squared),
        r.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
        r.pairs_examined,
        r.witnesses.len()
    );
    for w in &r.witnesses {
        s.push_str(&format!("  {w}\n"));
    }
    s
}

pub fn cmd_eps(a: &EpsArgs) -> Result<Outcome, String> {
    let d = a.d as usize;
    let classes = if a.classes.is_empty() {
        PairClass::all_for(d)
    } else {
        a.classes.clone()
    };
    let rendered = match eps_bruteforce(d, a.k, &classes, &a.compute.options()) {
        Ok(r) => Rendered {
            text: eps_text(&r),
            records: vec![eps_record(&r).field("status", "complete")],
            ok: true,
        },
        Err(e) => Rendered {
            text: format!("incomplete: {e}\n"),
            records: vec![Record::new("eps")
                .field("d", d)
                .field("k", a.k)
                .field("status", "incomplete")
                .field("error", e)],
            ok: false,
        },
    };
    finish(rendered, &a.output)
}

fn push_cert(r: &mut Rendered, c: &Certificate) {
    r.ok &= c.passed();
    r.text.push_str(&c.to_string());
    r.records.push(certificate_record(c));
}

pub fn cmd_certify(a: &CertifyArgs) -> Result<Outcome, String> {
    let all = a.all || !(a.prop1 || a.prop2 || a.prop31 || a.table1);
    let mut r = Rendered {
        records: Vec::new(),
        text: String::new(),
        ok: true,
    };
    if all || a.prop31 {
        push_cert(&mut r, &check_prop31());
    }
    if all || a.prop1 {
        push_cert(&mut r, &check_prop1(&gen_b()));
    }
    if all || a.prop2 {
        let set_a = gen_a();
        push_cert(&mut r, &search_prop2(&set_a));
        push_cert(&mut r, &check_hits_universal(&prop2_qualifying(&set_a, true)));
        let eq = check_table2_equivalence(K_MIN).map_err(|e| e.to_string())?;
        push_cert(&mut r, &eq);
        r.text.push_str("extremal points:\n");
        for p in &TABLE2 {
            r.text.push_str(&format!("  {p:?}\n"));
        }
    }
    if all || a.table1 {
        match verify_theorem1_smallk(&a.compute.options()) {
            Ok(c) => push_cert(&mut r, &c),
            Err(e) => {
                r.ok = false;
                r.text.push_str(&format!("incomplete: {e}\n"));
                r.records.push(Record::new("certificate").field("verdict", "incomplete").field("error", e));
            }
        }
    }
    r.text
        .push_str(if r.ok { "all certificates passed\n" } else { "some certificates FAILED\n" });
    finish(r, &a.output)
}

/// Parses the simplex file format: header `d k`, one vertex per line, a blank
/// line between the two simplices.
pub fn parse_simplex_file(text: &str) -> Result<(LatticeSimplex, LatticeSimplex), String> {
    let mut lines = text.lines().map(str::trim);
    let header = lines.next().ok_or("empty input")?;
    let hv = parse_ints(header, ' ')?;
    let [d, k] = hv[..] else {
        return Err(format!("header must be `d k`, got {header:?}"));
    };
    let mut groups: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for line in lines {
        if line.is_empty() {
            if !groups.last().unwrap().is_empty() {
                groups.push(Vec::new());
            }
            continue;
        }
        let v = parse_ints(line, ' ')?;
        if v.len() as i64 != d {
            return Err(format!("vertex {line:?} does not have {d} coordinates"));
        }
        groups.last_mut().unwrap().push(v);
    }
    groups.retain(|g| !g.is_empty());
    if groups.len() != 2 {
        return Err(format!("expected two simplices, found {}", groups.len()));
    }
    let build = |g: &Vec<Vec<i64>>| {
        let rows: Vec<&[i64]> = g.iter().map(|v| v.as_slice()).collect();
        LatticeSimplex::from_coords(&rows, k).map_err(|e| e.to_string())
    };
    Ok((build(&groups[0])?, build(&groups[1])?))
}

fn parse_ints(s: &str, sep: char) -> Result<Vec<i64>, String> {
    s.split(sep)
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("bad integer {t:?}: {e}")))
        .collect()
}

fn parse_flag_simplex(s: &str, k: i64) -> Result<LatticeSimplex, String> {
    let rows = s
        .split(';')
        .map(|v| parse_ints(v, ','))
        .collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&[i64]> = rows.iter().map(|v| v.as_slice()).collect();
    LatticeSimplex::from_coords(&refs, k).map_err(|e| e.to_string())
}

pub fn cmd_distance(a: &DistanceArgs) -> Result<Outcome, String> {
    let (p, q) = match &a.input {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
            parse_simplex_file(&text)?
        }
        None => {
            let k = a.k.ok_or("--k is required without --input")?;
            let p = a.p.as_deref().ok_or("--p is required without --input")?;
            let q = a.q.as_deref().ok_or("--q is required without --input")?;
            (parse_flag_simplex(p, k)?, parse_flag_simplex(q, k)?)
        }
    };
    let dist = sq_dist(&p, &q).map_err(|e| e.to_string())?;
    let mut rec = Record::new("distance")
        .field("p", &p)
        .field("q", &q)
        .field("sq_distance", &dist);
    let mut text = format!("P = {p}\nQ = {q}\nsquared distance = {dist}\ndistance = {}\n", surd(dist.value()));
    if dist.is_zero() {
        text.push_str("note: not disjoint\n");
        rec = rec.field("note", "not disjoint");
    }
    if p.ambient_dim() == 3 && p.dimension() + q.dimension() == 2 {
        let x = encode_pair(&p, &q).map_err(|e| e.to_string())?;
        let (f, g, h) = (f_val(&x), g_val(&x), h_val(&x));
        let tag = x.tag();
        text.push_str(&format!(
            "x = {:?}\nf = {f}\ng = {g}\nh = {h}\nin Y(k): {}\nin Z(k): {}\n",
            x.coords(),
            tag.in_y,
            tag.in_z
        ));
        rec = rec
            .field("x", format!("{:?}", x.coords()))
            .field("f", f)
            .field("g", g)
            .field("h", h)
            .field("in_y", tag.in_y)
            .field("in_z", tag.in_z);
        if let Ok(aff) = sq_dist_affine_hulls(&x) {
            text.push_str(&format!("affine hulls squared distance = {aff}\n"));
            rec = rec.field("affine_sq_distance", &aff);
        }
    }
    finish(
        Rendered {
            records: vec![rec],
            text,
            ok: true,
        },
        &a.output,
    )
}

/// Known values of ε(d,k)^2 for `d = 2, 3`, from the closed forms
/// `1/((k-1)^2 + k^2)` for `d = 2`, `k ≥ 2`, and
/// `1/(2(2k^2-4k+5)(2k^2-2k+1))` for `d = 3`, `k ≠ 3`, plus the exceptions.
pub fn table1_reference(d: usize, k: i64) -> Option<BigRational> {
    let inv = |n: i64| Some(BigRational::new(BigInt::one(), BigInt::from(n)));
    match (d, k) {
        (2, 1) => inv(2),
        (2, k) if k >= 2 => inv((k - 1) * (k - 1) + k * k),
        (3, 3) => inv(299),
        (3, k) if k >= 1 => inv(2 * (2 * k * k - 4 * k + 5) * (2 * k * k - 2 * k + 1)),
        _ => None,
    }
}

pub fn cmd_table1(a: &Table1Args) -> Result<Outcome, String> {
    let opts = a.compute.options();
    let mut r = Rendered {
        records: Vec::new(),
        text: String::from("d  k  1/epsilon(d,k)  brute force matches\n"),
        ok: true,
    };
    let rows = (1..=a.d2_max).map(|k| (2usize, k)).chain((1..=a.d3_max).map(|k| (3usize, k)));
    for (d, k) in rows {
        match eps_bruteforce(d, k, &PairClass::all_for(d), &opts) {
            Ok(res) => {
                let expected = table1_reference(d, k).expect("d, k in range");
                let ok = res.eps_squared == expected;
                r.ok &= ok;
                let inv = surd(&res.eps_squared).trim_start_matches("1/").to_string();
                r.text.push_str(&format!("{d}  {k}  {inv}  {}\n", if ok { "yes" } else { "NO" }));
                r.records
                    .push(eps_record(&res).field("expected", &expected).field("matches", ok));
            }
            Err(e) => {
                r.ok = false;
                r.text.push_str(&format!("{d}  {k}  incomplete: {e}\n"));
                r.records.push(
                    Record::new("eps")
                        .field("d", d)
                        .field("k", k)
                        .field("status", "incomplete")
                        .field("error", e),
                );
            }
        }
    }
    finish(r, &a.output)
}

pub fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Eps(a) => cmd_eps(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Distance(a) => cmd_distance(a),
        Command::Table1(a) => cmd_table1(a),
    }
}
