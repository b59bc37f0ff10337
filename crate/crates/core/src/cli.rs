//! The `eck` command line.
//!
//! Every subcommand writes one report to stdout (or `--out FILE`). JSON
//! reports have the top-level keys `command`, `params`, `results` and
//! `version`; result arrays follow the requested order of `n`. Exit code 0
//! means every requested check passed, 1 a failed check, 2 a usage error.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::DEFAULT_SEED;
use crate::error::Error;
use crate::format::{self, Style};
use crate::hirzebruch::{affine_class, projective_class, AffineSpace, LocalClass, Space};
use crate::identities::{integrate_projective, verify_many, FormulaId, VerificationReport};
use crate::positivity::{check_nonnegative, to_positive_form, Certificate, PositiveKind};
use crate::specialize::{csm_of, csm_sum_formula, TPoly};
use crate::suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Latex,
    Json,
}

/// An inclusive range `a..b`, or a single `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("invalid n '{s}'"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range '{s}'"));
        }
        Ok(NRange { lo, hi })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl Serialize for NRange {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_space(s: &str) -> Result<Space, String> {
    s.parse::<Space>().map_err(|e| e.to_string())
}

fn parse_affine(s: &str) -> Result<AffineSpace, String> {
    match parse_space(s)? {
        Space::Affine(a) => Ok(a),
        Space::Projective(p) => Err(format!("{p} is not an affine space")),
    }
}

fn parse_positive(s: &str) -> Result<PositiveKind, String> {
    match parse_affine(s)? {
        AffineSpace::CCQ => Ok(PositiveKind::CCQ),
        AffineSpace::CQ => Ok(PositiveKind::CQ),
        other => Err(format!("no positive form for {other}; use CCQ or CQ")),
    }
}

fn parse_formula(s: &str) -> Result<FormulaId, String> {
    s.parse::<FormulaId>().map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "eck",
    version,
    about = "Localized equivariant Hirzebruch classes of quadratic cones"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Seed of the random evaluation points used to reject unequal classes early.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, env = "ECK_MAX_N", default_value_t = 8)]
    pub max_n: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timings (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Print expanded numerators instead of h-factor products.
    #[arg(long, global = true)]
    pub expand: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Localized class of a space at every fixed point.
    Compute {
        #[arg(long, value_parser = parse_space)]
        kind: Space,
        #[arg(long)]
        n: NRange,
    },
    /// Check an identity fixed point by fixed point.
    Verify {
        #[arg(long, value_parser = parse_formula)]
        formula: FormulaId,
        #[arg(long)]
        n: NRange,
        /// Degeneration index for remark_k; all admissible k when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Nonnegative δ, S_w form with exact round trip.
    Certify {
        #[arg(long, value_parser = parse_positive)]
        kind: PositiveKind,
        #[arg(long)]
        n: NRange,
    },
    /// CSM class of an affine space over C^n.
    Csm {
        #[arg(long)]
        n: NRange,
        #[arg(long, value_parser = parse_affine, default_value = "CCQ")]
        space: AffineSpace,
    },
    /// Run all numbered acceptance checks up to --max-n.
    Table,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Compute { .. } => "compute",
            Command::Verify { .. } => "verify",
            Command::Certify { .. } => "certify",
            Command::Csm { .. } => "csm",
            Command::Table => "table",
        }
    }

    fn range(&self) -> Option<NRange> {
        match self {
            Command::Compute { n, .. }
            | Command::Verify { n, .. }
            | Command::Certify { n, .. }
            | Command::Csm { n, .. } => Some(*n),
            Command::Table => None,
        }
    }
}

/// Everything a caller needs to reproduce a run.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<NRange>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<FormulaId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    pub format: OutputFormat,
    pub expand: bool,
    pub timing: bool,
    pub max_n: usize,
    pub seed: u64,
}

impl RunConfig {
    /// Arguments that parse back to this configuration.
    pub fn to_argv(&self) -> Vec<String> {
        let mut v = vec!["eck".to_string(), self.command.to_string()];
        let mut push = |flag: &str, value: String| {
            v.push(format!("--{flag}"));
            v.push(value);
        };
        if let Some(n) = self.n {
            push("n", n.to_string());
        }
        if let Some(kind) = &self.kind {
            push("kind", kind.clone());
        }
        if let Some(f) = self.formula {
            push("formula", f.name().to_string());
        }
        if let Some(k) = self.k {
            push("k", k.to_string());
        }
        if let Some(space) = &self.space {
            push("space", space.clone());
        }
        let format = match self.format {
            OutputFormat::Text => "text",
            OutputFormat::Latex => "latex",
            OutputFormat::Json => "json",
        };
        push("format", format.to_string());
        push("max-n", self.max_n.to_string());
        push("seed", self.seed.to_string());
        if self.expand {
            v.push("--expand".into());
        }
        if self.timing {
            v.push("--timing".into());
        }
        v
    }
}

impl From<&Cli> for RunConfig {
    fn from(cli: &Cli) -> Self {
        let (kind, formula, k, space) = match &cli.command {
            Command::Compute { kind, .. } => (Some(kind.to_string()), None, None, None),
            Command::Verify { formula, k, .. } => (None, Some(*formula), *k, None),
            Command::Certify { kind, .. } => (Some(kind.space().to_string()), None, None, None),
            Command::Csm { space, .. } => (None, None, None, Some(space.to_string())),
            Command::Table => (None, None, None, None),
        };
        RunConfig {
            command: cli.command.name(),
            n: cli.command.range(),
            kind,
            formula,
            k,
            space,
            format: cli.format,
            expand: cli.expand,
            timing: cli.timing,
            max_n: cli.max_n,
            seed: cli.seed,
        }
    }
}

/// What a run produced: the exit code and the two streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    /// `--out FILE`, when given; the report belongs there instead of stdout.
    pub out: Option<PathBuf>,
}

impl Outcome {
    fn usage(msg: impl fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            out: None,
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            return Outcome {
                code: 0,
                stdout: e.to_string(),
                stderr: String::new(),
                out: None,
            }
        }
        Err(e) => {
            let line = e
                .to_string()
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ")
                .to_string();
            return Outcome::usage(line);
        }
    };
    execute(&cli)
}

struct Report {
    ok: bool,
    results: Vec<Value>,
    text: Vec<String>,
}

pub fn execute(cli: &Cli) -> Outcome {
    if let Some(r) = cli.command.range() {
        if r.hi > cli.max_n {
            return Outcome::usage(format!("n = {} exceeds --max-n {}", r.hi, cli.max_n));
        }
    }
    let style = if cli.format == OutputFormat::Latex {
        Style::Latex
    } else {
        Style::Text
    };
    let report = match &cli.command {
        Command::Compute { kind, n } => compute(cli, *kind, *n, style),
        Command::Verify { formula, n, k } => verify(cli, *formula, *n, *k, style),
        Command::Certify { kind, n } => certify(cli, *kind, *n, style),
        Command::Csm { n, space } => csm(cli, *n, *space, style),
        Command::Table => Ok(table(cli, style)),
    };
    let report = match report {
        Ok(r) => r,
        Err(e @ (Error::InvalidDimension { .. } | Error::InvalidParameter(_))) => return Outcome::usage(e),
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                out: None,
            }
        }
    };
    let stdout = match cli.format {
        OutputFormat::Json => {
            let doc = json!({
                "command": cli.command.name(),
                "params": RunConfig::from(cli),
                "results": report.results,
                "version": env!("CARGO_PKG_VERSION"),
            });
            serde_json::to_string_pretty(&doc).expect("serializable report") + "\n"
        }
        _ => report.text.iter().map(|l| format!("{l}\n")).collect(),
    };
    Outcome {
        code: if report.ok { 0 } else { 1 },
        stdout,
        stderr: String::new(),
        out: cli.out.clone(),
    }
}

fn with_timing(cli: &Cli, mut v: Value, ms: f64) -> Value {
    if cli.timing {
        v["timing_ms"] = json!((ms * 1e3).round() / 1e3);
    }
    v
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = std::time::Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

fn label(space: Space, n: usize, style: Style) -> String {
    match style {
        Style::Text => format!("{space}_{n}"),
        Style::Latex => format!("\\mathrm{{{space}}}_{{{n}}}"),
    }
}

fn class_of(kind: Space, n: usize) -> crate::Result<LocalClass> {
    match kind {
        Space::Projective(p) => projective_class(p, n),
        Space::Affine(a) => affine_class(a, n),
    }
}

fn compute(cli: &Cli, kind: Space, range: NRange, style: Style) -> crate::Result<Report> {
    let runs: Vec<_> = range
        .iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| timed(|| class_of(kind, n)))
        .collect();
    let mut report = Report {
        ok: true,
        results: Vec::new(),
        text: Vec::new(),
    };
    for (n, (class, ms)) in range.iter().zip(runs) {
        let class = class?;
        let render = |v: &crate::hirzebruch::LocalValue, st: Style| {
            if cli.expand {
                format::ratexpr(&v.value, st)
            } else {
                v.expr.render(st)
            }
        };
        let chi = if class.is_projective() {
            Some(integrate_projective(&class)?)
        } else {
            None
        };
        let points: Vec<Value> = class
            .values
            .iter()
            .map(|v| json!({"point": v.point, "class": render(v, Style::Text)}))
            .collect();
        let mut entry = json!({"space": kind, "n": n, "points": points});
        if let Some(p) = &chi {
            entry["chi_y"] = json!(format::poly(p, Style::Text));
        }
        report.results.push(with_timing(cli, entry, ms));
        for v in &class.values {
            report.text.push(match style {
                Style::Text => format!("{} at {}: {}", label(kind, n, style), v.point, render(v, style)),
                Style::Latex => {
                    let at = match v.point {
                        crate::hirzebruch::Point::Fixed(i) => format!("p_{{{i}}}"),
                        crate::hirzebruch::Point::Origin => "0".to_string(),
                    };
                    format!("{}\\big|_{{{at}}} = {}", label(kind, n, style), render(v, style))
                }
            });
        }
        if let Some(p) = &chi {
            report.text.push(match style {
                Style::Text => format!("chi_y({}) = {}", label(kind, n, style), format::poly(p, style)),
                Style::Latex => format!("\\chi_y({}) = {}", label(kind, n, style), format::poly(p, style)),
            });
        }
    }
    Ok(report)
}

fn verify(cli: &Cli, formula: FormulaId, range: NRange, k: Option<usize>, style: Style) -> crate::Result<Report> {
    let mut jobs = Vec::new();
    for n in range.iter() {
        if n < 2 {
            return Err(Error::InvalidDimension {
                n,
                reason: "identities need n >= 2",
            });
        }
        match (formula, k) {
            (FormulaId::RemarkK, Some(k)) if k + 1 > n / 2 => {
                return Err(Error::InvalidParameter(format!(
                    "k = {k} must satisfy k <= m - 1 for n = {n}"
                )))
            }
            (FormulaId::RemarkK, Some(k)) => jobs.push((formula, n, Some(k))),
            (FormulaId::RemarkK, None) => jobs.extend((0..n / 2).map(|k| (formula, n, Some(k)))),
            _ => jobs.push((formula, n, None)),
        }
    }
    let reports = verify_many(&jobs, cli.seed)
        .into_iter()
        .collect::<crate::Result<Vec<VerificationReport>>>()?;
    let mut out = Report {
        ok: reports.iter().all(|r| r.verified),
        results: Vec::new(),
        text: Vec::new(),
    };
    if style == Style::Latex {
        out.text.push("\\begin{tabular}{lrrrc}".into());
        out.text
            .push("formula & $n$ & $k$ & checks & verified \\\\ \\hline".into());
    }
    for r in &reports {
        let value = serde_json::to_value(r).expect("serializable report");
        out.results.push(with_timing(cli, value, r.timing_ms));
        let passed = r.per_point.iter().filter(|p| p.equal).count();
        let total = r.per_point.len();
        match style {
            Style::Text => {
                let k = r.k.map(|k| format!(" k={k}")).unwrap_or_default();
                let verdict = if r.verified { "verified" } else { "FAILED" };
                let note = if r.convention_dependent {
                    " (with Q_0 = empty)"
                } else {
                    ""
                };
                out.text.push(format!(
                    "{} n={}{k}: {verdict} ({passed}/{total}){note}",
                    r.formula, r.n
                ));
                for p in r.per_point.iter().filter(|p| !p.equal) {
                    out.text.push(format!("  differs at {}", p.point));
                }
            }
            Style::Latex => {
                let k = r.k.map(|k| k.to_string()).unwrap_or_default();
                let mark = if r.verified { "\\checkmark" } else { "$\\times$" };
                out.text.push(format!(
                    "\\texttt{{{}}} & {} & {k} & {passed}/{total} & {mark} \\\\",
                    r.formula.name().replace('_', "\\_"),
                    r.n
                ));
            }
        }
    }
    if style == Style::Latex {
        out.text.push("\\end{tabular}".into());
    }
    Ok(out)
}

fn certify(cli: &Cli, kind: PositiveKind, range: NRange, style: Style) -> crate::Result<Report> {
    let ns: Vec<usize> = range.iter().collect();
    let certs: Vec<(crate::Result<Certificate>, f64)> = ns
        .par_iter()
        .map(|&n| timed(|| to_positive_form(kind, n).map(|p| check_nonnegative(&p))))
        .collect();
    let mut out = Report {
        ok: true,
        results: Vec::new(),
        text: Vec::new(),
    };
    for (n, (cert, ms)) in ns.into_iter().zip(certs) {
        let cert = cert?;
        out.ok &= cert.nonnegative && cert.roundtrip_ok;
        let mut value = serde_json::to_value(&cert).expect("serializable certificate");
        if !cli.expand {
            value.as_object_mut().unwrap().remove("spoly");
        }
        out.results.push(with_timing(cli, value, ms));
        let name = label(Space::Affine(kind.space()), n, style);
        let sign = if cert.nonnegative { "nonnegative" } else { "NEGATIVE" };
        let trip = if cert.roundtrip_ok {
            "round trip exact"
        } else {
            "round trip FAILED"
        };
        out.text.push(format!("{name}: {sign}, {trip} ({} terms)", cert.terms));
        if let Some(w) = &cert.witness {
            out.text
                .push(format!("  witness: {} δ^{} S^{:?}", w.coeff, w.delta, w.s));
        }
        if cli.expand {
            out.text.push(format!("  {}", cert.spoly));
        }
    }
    Ok(out)
}

fn poly_json(p: &TPoly) -> Value {
    json!(p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn csm(cli: &Cli, range: NRange, space: AffineSpace, style: Style) -> crate::Result<Report> {
    let ns: Vec<usize> = range.iter().collect();
    let runs: Vec<_> = ns
        .par_iter()
        .map(|&n| {
            timed(|| {
                Ok::<_, Error>((
                    csm_of(space, n)?,
                    csm_of(AffineSpace::CCQ, n)?,
                    csm_of(AffineSpace::CCX, n)?,
                ))
            })
        })
        .collect();
    let mut out = Report {
        ok: true,
        results: Vec::new(),
        text: Vec::new(),
    };
    for (n, (r, ms)) in ns.into_iter().zip(runs) {
        let (value, ccq, ccx) = r?;
        let shown = csm_sum_formula(n);
        let entry = json!({
            "n": n,
            "space": space,
            "csm": value.to_string(),
            "coefficients": poly_json(&value),
            "displayed": shown.to_string(),
            "matches_displayed": value == shown,
            "displayed_matches": {"CCQ": ccq == shown, "CCX": ccx == shown},
        });
        out.results.push(with_timing(cli, entry, ms));
        out.text.push(match style {
            Style::Text => value.to_string(),
            Style::Latex => format!(
                "c_{{SM}}({}) = {}",
                label(Space::Affine(space), n, style),
                value.render(true)
            ),
        });
    }
    Ok(out)
}

fn table(cli: &Cli, style: Style) -> Report {
    let rows = suite::run_all(cli.max_n, cli.seed);
    let mut out = Report {
        ok: rows.iter().all(|r| r.passed),
        results: Vec::new(),
        text: Vec::new(),
    };
    if style == Style::Latex {
        out.text.push("\\begin{tabular}{rlc}".into());
    }
    for r in &rows {
        let value = serde_json::to_value(r).expect("serializable row");
        out.results.push(with_timing(cli, value, r.timing_ms));
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        out.text.push(match style {
            Style::Text if r.passed => format!("criterion {:>2}  {verdict}  {}", r.id, r.name),
            Style::Text => format!("criterion {:>2}  {verdict}  {}: {}", r.id, r.name, r.detail),
            Style::Latex => format!("{} & {} & {verdict} \\\\", r.id, r.name),
        });
    }
    if style == Style::Latex {
        out.text.push("\\end{tabular}".into());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eck(args: &str) -> Outcome {
        run(std::iter::once("eck").chain(args.split_whitespace()))
    }

    #[test]
    fn ranges() {
        assert_eq!("2..8".parse::<NRange>().unwrap(), NRange { lo: 2, hi: 8 });
        assert_eq!("5".parse::<NRange>().unwrap(), NRange { lo: 5, hi: 5 });
        assert!("8..2".parse::<NRange>().is_err());
        assert!("x".parse::<NRange>().is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(eck("verify --formula proj --n 1").code, 2);
        assert_eq!(eck("verify --formula nope --n 4").code, 2);
        assert_eq!(eck("verify --formula con --n 9").code, 2);
        assert_eq!(eck("certify --kind Cn --n 4").code, 2);
        assert_eq!(eck("frobnicate").code, 2);
        let e = eck("verify --formula proj --n 1");
        assert_eq!(e.stderr.lines().count(), 1);
    }

    #[test]
    fn config_round_trip() {
        for args in [
            "eck verify --formula remark_k --n 4..6 --k 1 --seed 9",
            "eck compute --kind qc --n 3 --format latex --expand",
            "eck csm --n 5 --space CCX --timing",
            "eck certify --kind CQ --n 2..3",
            "eck table --max-n 6",
        ] {
            let cli = Cli::try_parse_from(args.split_whitespace()).unwrap();
            let cfg = RunConfig::from(&cli);
            let again = RunConfig::from(&Cli::try_parse_from(cfg.to_argv()).unwrap());
            assert_eq!(
                serde_json::to_value(&cfg).unwrap(),
                serde_json::to_value(&again).unwrap(),
                "{args}"
            );
        }
    }

    #[test]
    fn csm_text() {
        let o = eck("csm --n 4 --format text");
        assert_eq!((o.code, o.stdout.as_str()), (0, "1 + 2t + 2t^2\n"));
    }

    #[test]
    fn json_schema() {
        let o = eck("verify --formula con --n 2");
        assert_eq!(o.code, 0);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["command", "params", "results", "version"]);
        assert_eq!(v["results"][0]["formula"], "con");
        assert_eq!(v["results"][0]["verified"], true);
        assert!(v["results"][0].get("timing_ms").is_none());
    }
}
