use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::certificate::{canonical_fraction, CertificateRecord, RecordVerdict};
use super::expr::parse_term;
use crate::exact_math::{Integer, MathError, Rational};
use crate::identities::{
    check_identity1, check_identity2prime, check_identity3, check_recurrence_row, f_value, IdentityReport,
};
use crate::summation::{gosper, telescope_definite, zeilberger, BivariateHyperTerm, ZeilbergerError};
use crate::trees::{census1, census3, trace1, trace3, CreaturePair, LabeledTree};

/// The summand whose normalized sum is `f(m)`, in `k` with parameters `l`, `m`.
pub const F_SUMMAND: &str = "(-1)^k*catalan(k)*binomial(l - m + k, m - k)/binomial(l - m - 1, m)";

/// Inclusive integer range written `A..B`, or a single integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub start: i64,
    pub end: i64,
}

impl IntRange {
    fn iter(self) -> impl DoubleEndedIterator<Item = i64> + Clone {
        self.start..=self.end
    }

    fn len(self) -> usize {
        (self.end - self.start + 1) as usize
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer"));
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(IntRange { start, end })
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Exact checks of Catalan summation identities.
#[derive(Debug, Parser)]
#[command(name = "catalan", version)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check an identity exactly over a parameter range.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
    /// Run the sign-reversing involutions on creatures.
    Involution {
        #[command(subcommand)]
        which: InvolutionCommand,
    },
    /// Indefinite summation of a hypergeometric term.
    Gosper(GosperArgs),
    /// Creative telescoping for a definite sum over `k = 0..n`.
    Zeilberger(ZeilbergerArgs),
    /// Re-verify a certificate document.
    Check { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// The alternating Catalan sum vanishes for s >= 1.
    Identity1 {
        #[arg(long, default_value = "1..200")]
        s: IntRange,
    },
    /// The composition sum A(l, m) for every 1 <= m <= l.
    #[command(name = "identity2prime")]
    Identity2Prime {
        #[arg(long, default_value = "1..12")]
        l: IntRange,
    },
    /// lhs = binomial(l-m-1, m) for l = m + offset.
    Identity3 {
        #[arg(long, default_value = "0..20")]
        m: IntRange,
        #[arg(long, default_value = "0..20")]
        l_offset: IntRange,
    },
    /// The recurrence for A(l, m) against brute force, row by row.
    #[command(name = "recurrenceA")]
    RecurrenceA {
        #[arg(long, default_value = "1..12")]
        l: IntRange,
    },
    /// f(m) = 1 and the recurrence found by creative telescoping.
    FInduction {
        #[arg(long, default_value = "1..12")]
        m: IntRange,
        /// Values of l tried per m, starting at 2m + 1.
        #[arg(long, default_value_t = 4)]
        samples: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum InvolutionCommand {
    /// Census of all creatures in a range.
    Census {
        /// Weight minus one, for the first involution.
        #[arg(long, conflicts_with_all = ["m", "l_offset"])]
        s: Option<IntRange>,
        /// Pair parameters for the second involution (l = m + offset).
        #[arg(long, requires = "l_offset")]
        m: Option<IntRange>,
        #[arg(long, requires = "m")]
        l_offset: Option<IntRange>,
    },
    /// Apply the involution to one creature and print its orbit.
    Trace {
        #[arg(long)]
        s: Option<i64>,
        #[arg(long, conflicts_with = "pair")]
        creature: Option<String>,
        /// Pair written `tree|word`, with --l and --m.
        #[arg(long, requires_all = ["l", "m"])]
        pair: Option<String>,
        #[arg(long)]
        l: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
    },
}

#[derive(Debug, Args)]
pub struct GosperArgs {
    pub expr: String,
    #[arg(long, default_value = "k")]
    pub var: String,
    #[arg(long, value_delimiter = ',')]
    pub params: Vec<String>,
    /// Also evaluate sum_{var=lower}^{upper} by telescoping.
    #[arg(long, requires = "values")]
    pub upper: Option<String>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub lower: i64,
    /// Values of the upper limit (the only parameter).
    #[arg(long, requires = "upper")]
    pub values: Option<IntRange>,
    /// Value every definite sum must equal.
    #[arg(long, requires = "values", allow_hyphen_values = true)]
    pub expect: Option<String>,
    #[arg(long)]
    pub emit: Option<PathBuf>,
    #[arg(long, default_value = "custom")]
    pub id: String,
}

#[derive(Debug, Args)]
pub struct ZeilbergerArgs {
    pub expr: String,
    #[arg(long, default_value = "k")]
    pub sumvar: String,
    #[arg(long, default_value = "n")]
    pub recvar: String,
    #[arg(long, value_delimiter = ',')]
    pub params: Vec<String>,
    #[arg(long, default_value_t = 2)]
    pub max_order: usize,
    #[arg(long)]
    pub emit: Option<PathBuf>,
    #[arg(long, default_value = "custom")]
    pub id: String,
}

/// What a command produced: report lines, a JSON document, and whether
/// every check passed.
struct Report {
    pass: bool,
    lines: Vec<String>,
    json: Value,
}

type CmdResult = Result<Report, String>;

fn usage(e: impl fmt::Display) -> String {
    e.to_string()
}

/// Parse arguments, run, and write the report to `out`. Returns the exit
/// status: 0 pass, 1 counterexample, 2 usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Verify { which } => verify(which),
        Command::Involution { which } => involution(which),
        Command::Gosper(a) => run_gosper(&a),
        Command::Zeilberger(a) => run_zeilberger(&a),
        Command::Check { file } => check(&file),
    };
    match result {
        Ok(report) => {
            let _ = match cli.format {
                Format::Text => report.lines.iter().try_for_each(|l| writeln!(out, "{l}")),
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("json")),
            };
            if report.pass {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            let _ = match cli.format {
                Format::Text => writeln!(out, "error: {msg}"),
                Format::Json => writeln!(out, "{}", json!({ "status": "usage-error", "error": msg })),
            };
            2
        }
    }
}

/// Summarize a sweep whose reports come in parameter order.
fn sweep(name: &str, reports: Vec<IdentityReport>) -> Report {
    let mut lines = Vec::new();
    let exceptions: Vec<&IdentityReport> = reports.iter().filter(|r| r.is_documented_exception()).collect();
    for r in &exceptions {
        lines.push(format!("NOTE {r} (documented exception)"));
    }
    let failure = reports.iter().find(|r| !r.holds() && !r.is_documented_exception());
    let passed = reports.iter().filter(|r| r.holds() || r.is_documented_exception()).count();
    let total = reports.len();
    match failure {
        None => lines.push(format!("OK {passed}/{total}")),
        Some(r) => {
            lines.push(format!("COUNTEREXAMPLE {r}"));
            lines.push(format!("FAIL {passed}/{total}"));
        }
    }
    let json = json!({
        "command": format!("verify {name}"),
        "status": if failure.is_none() { "pass" } else { "fail" },
        "checked": total,
        "passed": passed,
        "exceptions": exceptions,
        "first_counterexample": failure,
    });
    Report { pass: failure.is_none(), lines, json }
}

fn collect<T: Send>(items: Vec<Result<T, MathError>>) -> Result<Vec<T>, String> {
    items.into_iter().collect::<Result<Vec<_>, _>>().map_err(usage)
}

fn verify(which: VerifyCommand) -> CmdResult {
    match which {
        VerifyCommand::Identity1 { s } => {
            let reports = s.iter().collect::<Vec<_>>().into_par_iter().map(check_identity1).collect();
            Ok(sweep("identity1", collect(reports)?))
        }
        VerifyCommand::Identity2Prime { l } => {
            if l.end > 24 {
                return Err(format!("l = {} is beyond the brute-force limit of 24", l.end));
            }
            let cells: Vec<(i64, i64)> = l.iter().flat_map(|l| (1..=l).map(move |m| (l, m))).collect();
            let reports = cells.into_par_iter().map(|(l, m)| check_identity2prime(l, m)).collect();
            Ok(sweep("identity2prime", collect(reports)?))
        }
        VerifyCommand::Identity3 { m, l_offset } => {
            let cells: Vec<(i64, i64)> =
                m.iter().flat_map(|m| l_offset.iter().map(move |d| (m + d, m))).collect();
            let reports = cells.into_par_iter().map(|(l, m)| check_identity3(l, m)).collect();
            Ok(sweep("identity3", collect(reports)?))
        }
        VerifyCommand::RecurrenceA { l } => {
            if l.end > 24 {
                return Err(format!("l = {} is beyond the brute-force limit of 24", l.end));
            }
            let rows: Vec<Result<Vec<IdentityReport>, MathError>> =
                l.iter().collect::<Vec<_>>().into_par_iter().map(check_recurrence_row).collect();
            Ok(sweep("recurrenceA", collect(rows)?.into_iter().flatten().collect()))
        }
        VerifyCommand::FInduction { m, samples } => f_induction(m, samples),
    }
}

/// Replays the induction behind `f(m) = 1`: derive the recurrence for the
/// normalized sum, then check it and the values on sampled `l`.
fn f_induction(range: IntRange, samples: i64) -> CmdResult {
    if range.start < 1 || samples < 1 {
        return Err("f-induction needs m >= 1 and at least one sample".into());
    }
    let params = vec!["l".to_string(), "m".to_string()];
    let term = parse_term(F_SUMMAND, "k", &params).map_err(usage)?;
    let form = term.product_form().map_err(usage)?;
    let hyper = BivariateHyperTerm::from_product(&form, "m", "k", &params[..1]).map_err(usage)?;
    let rec = zeilberger(&hyper, 1).map_err(usage)?;
    let inhom = match &rec.inhomogeneous {
        crate::summation::Inhomogeneous::Zero => None,
        crate::summation::Inhomogeneous::Polynomial(p) => Some(p.clone()),
        crate::summation::Inhomogeneous::NotPolynomial => {
            return Err("the recurrence has a non-polynomial right side".into())
        }
    };
    let mut lines = vec![format!(
        "recurrence: {} = {}",
        rec.coefficients
            .iter()
            .enumerate()
            .map(|(j, a)| if j == 0 { format!("({a})*f(m)") } else { format!("({a})*f(m + {j})") })
            .collect::<Vec<_>>()
            .join(" + "),
        rec.inhomogeneous
    )];
    let mut checked = 0usize;
    let mut failure: Option<String> = None;
    let one = Rational::from_integer(1.into());
    for l in [3i64, 4, 5, 9] {
        checked += 1;
        let v = f_value(l, 1).map_err(usage)?;
        if v != one && failure.is_none() {
            failure = Some(format!("f(1) = {v} at l = {l}"));
        }
    }
    'outer: for m in range.iter() {
        for j in 0..samples {
            // f(m + order) must be defined too.
            let l = 2 * (m + rec.order() as i64) + 1 + 3 * j;
            let values: Vec<Rational> =
                (0..=rec.order() as i64).map(|d| f_value(l, m + d)).collect::<Result<_, _>>().map_err(usage)?;
            checked += 1;
            if values[0] != one {
                failure = Some(format!("f({m}) = {} at l = {l}", values[0]));
                break 'outer;
            }
            let (lq, mq) = (Rational::from_integer(l.into()), Rational::from_integer(m.into()));
            let lhs: Rational = rec
                .coefficients
                .iter()
                .zip(&values)
                .map(|(a, v)| a.eval_rational(std::slice::from_ref(&lq), &mq).expect("polynomial") * v)
                .sum();
            let rhs = inhom.as_ref().map_or(Rational::from_integer(0.into()), |p| {
                p.eval_rational(&[], &mq).expect("polynomial")
            });
            if lhs != rhs {
                failure = Some(format!("recurrence step at m = {m}, l = {l}: {lhs} != {rhs}"));
                break 'outer;
            }
        }
    }
    let pass = failure.is_none();
    match &failure {
        None => lines.push(format!("OK {checked}/{checked}")),
        Some(f) => lines.push(format!("COUNTEREXAMPLE {f}")),
    }
    let json = json!({
        "command": "verify f-induction",
        "status": if pass { "pass" } else { "fail" },
        "coefficients": rec.coefficients.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        "inhomogeneous": rec.inhomogeneous.to_string(),
        "checked": checked,
        "first_counterexample": failure,
    });
    Ok(Report { pass, lines, json })
}

fn involution(which: InvolutionCommand) -> CmdResult {
    match which {
        InvolutionCommand::Census { s: Some(s), .. } => {
            let mut lines = Vec::new();
            let mut docs = Vec::new();
            let mut pass = true;
            for s in s.iter() {
                let c = census1(s).map_err(usage)?;
                let ok = c.is_consistent() && (s == 0 || (c.fixed_points.is_empty() && c.even_leaves == c.odd_leaves));
                pass &= ok;
                lines.push(format!(
                    "s={} total={} even={} odd={} fixed={} {}",
                    s,
                    c.total,
                    c.even_leaves,
                    c.odd_leaves,
                    c.fixed_points.len(),
                    if ok { "ok" } else { "FAIL" }
                ));
                if let Some(v) = c.violations.first() {
                    lines.push(format!("COUNTEREXAMPLE {v}"));
                }
                docs.push(serde_json::to_value(&c).expect("json"));
            }
            Ok(Report { pass, lines, json: json!({ "command": "involution census", "status": status(pass), "census": docs }) })
        }
        InvolutionCommand::Census { m: Some(m), l_offset: Some(d), .. } => {
            let mut lines = Vec::new();
            let mut docs = Vec::new();
            let mut pass = true;
            for m in m.iter() {
                for d in d.iter() {
                    let c = census3(m + d, m).map_err(usage)?;
                    let ok = c.is_consistent();
                    pass &= ok;
                    lines.push(format!(
                        "l={} m={} total={} even={} odd={} survivors={} signed={} expected={} {}",
                        c.l,
                        c.m,
                        c.total,
                        c.even_leaves,
                        c.odd_leaves,
                        c.survivors.len(),
                        c.signed_count,
                        c.expected,
                        if ok { "ok" } else { "FAIL" }
                    ));
                    if let Some(v) = c.violations.first() {
                        lines.push(format!("COUNTEREXAMPLE {v}"));
                    }
                    docs.push(serde_json::to_value(&c).expect("json"));
                }
            }
            Ok(Report { pass, lines, json: json!({ "command": "involution census", "status": status(pass), "census": docs }) })
        }
        InvolutionCommand::Census { .. } => Err("census needs --s, or --m with --l-offset".into()),
        InvolutionCommand::Trace { s, creature: Some(src), .. } => {
            let t = LabeledTree::parse(&src).map_err(usage)?;
            if let Some(s) = s {
                if t.weight() as i64 != s + 1 {
                    return Err(format!("`{src}` has weight {}, not s + 1 = {}", t.weight(), s + 1));
                }
            }
            Ok(trace_report(trace1(&t)))
        }
        InvolutionCommand::Trace { pair: Some(src), l: Some(l), m: Some(m), .. } => {
            let p = CreaturePair::parse(&src, l, m).map_err(usage)?;
            Ok(trace_report(trace3(&p)))
        }
        InvolutionCommand::Trace { .. } => Err("trace needs --creature, or --pair with --l and --m".into()),
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn trace_report(lines: Vec<String>) -> Report {
    let json = json!({ "command": "involution trace", "status": "pass", "orbit": lines, "fixed": lines.len() == 1 });
    Report { pass: true, lines, json }
}

fn run_gosper(a: &GosperArgs) -> CmdResult {
    let term = parse_term(&a.expr, &a.var, &a.params).map_err(usage)?;
    let hyper = term.hyper_term().map_err(usage)?;
    let ratio = hyper.ratio().to_string();
    let cert = match gosper(&hyper) {
        Ok(c) => c,
        Err(e) => {
            let lines = vec![format!("ratio: {ratio}"), format!("NOT SUMMABLE {e}")];
            let json = json!({
                "command": "gosper",
                "status": "fail",
                "ratio": ratio,
                "stage": e.stage,
                "degree_bound": e.degree_bound,
                "detail": e.detail,
            });
            return Ok(Report { pass: false, lines, json });
        }
    };
    let mut lines = vec![
        format!("ratio: {ratio}"),
        format!("certificate: {}", canonical_fraction(&cert.r)),
        "verified: yes".to_string(),
    ];
    let mut pass = true;
    let mut values = Vec::new();
    if let (Some(upper), Some(range)) = (&a.upper, a.values) {
        if a.params.len() != 1 || &a.params[0] != upper {
            return Err("--upper must name the only parameter".into());
        }
        let expect = match &a.expect {
            Some(src) => Some(parse_rational(src)?),
            None => None,
        };
        let sum = telescope_definite(&hyper, Integer::from(a.lower), upper).map_err(usage)?;
        let results: Vec<_> = range
            .iter()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|v| (v, sum.evaluate(&[Integer::from(v)])))
            .collect();
        let mut failed = false;
        for (v, r) in results {
            let r = r.map_err(usage)?;
            let ok = r.agrees && expect.as_ref().is_none_or(|e| r.endpoint_singular || *e == r.value);
            let how = if r.endpoint_singular { "direct, certificate singular at an endpoint" } else { "telescoped" };
            if !ok && !failed {
                lines.push(format!("COUNTEREXAMPLE {upper}={v}: {} ({how})", r.value));
                failed = true;
            } else if r.endpoint_singular {
                lines.push(format!("NOTE {upper}={v}: {} ({how})", r.value));
            }
            pass &= ok;
            values.push(json!({ upper.as_str(): v, "value": r }));
        }
        let passed = values.len() - usize::from(failed);
        lines.push(format!("{} {}/{}", if pass { "OK" } else { "FAIL" }, passed, range.len()));
    }
    if let Some(path) = &a.emit {
        let record = CertificateRecord::gosper(&a.id, &term, &cert);
        std::fs::write(path, record.to_toml()).map_err(|e| format!("{}: {e}", path.display()))?;
        lines.push(format!("wrote {}", path.display()));
    }
    let json = json!({
        "command": "gosper",
        "status": status(pass),
        "ratio": ratio,
        "certificate": canonical_fraction(&cert.r),
        "definite": values,
    });
    Ok(Report { pass, lines, json })
}

fn parse_rational(src: &str) -> Result<Rational, String> {
    let e = super::expr::Expr::parse(src).map_err(usage)?;
    e.to_field_elem(&[]).map_err(usage)?.as_rational().ok_or_else(|| format!("`{src}` is not a number"))
}

fn run_zeilberger(a: &ZeilbergerArgs) -> CmdResult {
    let mut all = a.params.clone();
    all.push(a.recvar.clone());
    let term = parse_term(&a.expr, &a.sumvar, &all).map_err(usage)?;
    let form = term.product_form().map_err(usage)?;
    let hyper = BivariateHyperTerm::from_product(&form, &a.recvar, &a.sumvar, &a.params).map_err(usage)?;
    let rec = match zeilberger(&hyper, a.max_order) {
        Ok(r) => r,
        Err(ZeilbergerError::NoRecurrenceFound { max_order }) => {
            let msg = format!("no recurrence up to order {max_order}");
            return Ok(Report {
                pass: false,
                lines: vec![format!("NOT FOUND {msg}")],
                json: json!({ "command": "zeilberger", "status": "fail", "detail": msg }),
            });
        }
        Err(e) => return Err(e.to_string()),
    };
    let n = &a.recvar;
    let sum = rec
        .coefficients
        .iter()
        .enumerate()
        .map(|(j, c)| if j == 0 { format!("({c})*S({n})") } else { format!("({c})*S({n} + {j})") })
        .collect::<Vec<_>>()
        .join(" + ");
    let mut lines = vec![
        format!("order: {}", rec.order()),
        format!("recurrence: {sum} = {}", rec.inhomogeneous),
        format!("certificate: {}", canonical_fraction(&rec.certificate)),
        "verified: yes".to_string(),
    ];
    if let Some(path) = &a.emit {
        let record = CertificateRecord::zeilberger(&a.id, &term, n, &rec);
        std::fs::write(path, record.to_toml()).map_err(|e| format!("{}: {e}", path.display()))?;
        lines.push(format!("wrote {}", path.display()));
    }
    let json = json!({
        "command": "zeilberger",
        "status": "pass",
        "order": rec.order(),
        "coefficients": rec.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "inhomogeneous": rec.inhomogeneous.to_string(),
        "certificate": canonical_fraction(&rec.certificate),
    });
    Ok(Report { pass: true, lines, json })
}

fn check(path: &PathBuf) -> CmdResult {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (record, stored) = CertificateRecord::load(&text).map_err(usage)?;
    let pass = record.verdict == RecordVerdict::Verified;
    let lines = vec![
        format!("{} ({:?}) {}", record.identity, record.kind, record.expression),
        format!("{} {} (file says {stored})", if pass { "OK" } else { "FAIL" }, record.verdict),
    ];
    let json = json!({
        "command": "check",
        "status": status(pass),
        "identity": record.identity,
        "verdict": record.verdict,
        "stored_verdict": stored,
    });
    Ok(Report { pass, lines, json })
}
