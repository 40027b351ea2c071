//! The `sepprob` command line.
//!
//! Output goes to stdout (or `--out FILE`) as JSON or CSV. Big integers and
//! rationals are always emitted as strings.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::counting::{
    alpha_separated_count, c_fix, c_sep, fixed_point_moments, fpf_probability, i_lambda_with,
    i_ncycle, iso_prob_ncycle, p_lambda_with, p_ncycle, sep_prob_ncycle, stirling_c, i_table,
    p_table, BaseValueSource,
};
use crate::error::{Error, Result};
use crate::oracle::{Oracle, DEFAULT_CAP, MAX_CAP};
use crate::partition::{Composition, IntegerPartition};
use crate::rational::ExactRational;
use crate::table::{CountTable, Source, TableKind};
use crate::verify::{self, Suite, VerifyOptions};

#[derive(Parser, Debug)]
#[command(name = "sepprob", version, about = "Exact separation counts for products of long cycles")]
pub struct Cli {
    /// key=value file setting `oracle_cap` and `format`; flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest n the oracle may enumerate.
    #[arg(long, global = true)]
    pub oracle_cap: Option<usize>,
    /// Permit an oracle cap above the default (runs can take hours at 9).
    #[arg(long, global = true)]
    pub allow_large: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute a count.
    Count {
        #[command(subcommand)]
        what: CountCmd,
    },
    /// Compute a probability or moments.
    Prob {
        #[command(subcommand)]
        what: ProbCmd,
        /// Also render the value with this many decimal digits.
        #[arg(long, global = true)]
        decimal: Option<usize>,
    },
    /// Check formulas against the oracle. Exits 1 on any mismatch.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "all")]
        suite: SuiteArg,
        /// Corrupt one formula value to exercise the harness.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Emit a full (λ, k) table.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, value_enum, default_value = "separated")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "recurrence")]
        source: TableSource,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Separated,
    Isolated,
}

impl From<KindArg> for TableKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Separated => TableKind::Separated,
            KindArg::Isolated => TableKind::Isolated,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableSource {
    Recurrence,
    Oracle,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteArg(pub Suite);

impl FromStr for SuiteArg {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse().map(SuiteArg)
    }
}

/// A single `k` or every `k` in `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KArg {
    One(usize),
    All,
}

impl FromStr for KArg {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(KArg::All);
        }
        s.parse().map(KArg::One).map_err(|_| Error::Parse {
            position: 0,
            message: format!("expected a count or \"all\", found {s:?}"),
        })
    }
}

impl KArg {
    fn values(self, n: usize) -> Vec<usize> {
        match self {
            KArg::One(k) => vec![k],
            KArg::All => (1..=n).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BaseArg {
    Oracle,
    ClosedForm,
    Auto,
}

impl From<BaseArg> for BaseValueSource {
    fn from(b: BaseArg) -> Self {
        match b {
            BaseArg::Oracle => BaseValueSource::Oracle,
            BaseArg::ClosedForm => BaseValueSource::ClosedForm,
            BaseArg::Auto => BaseValueSource::Auto,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct NMK {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub m: usize,
    #[arg(long, default_value = "all")]
    pub k: KArg,
}

#[derive(Subcommand, Debug)]
pub enum CountCmd {
    /// Permutations of [n] with k cycles.
    Stirling {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        k: KArg,
    },
    /// As stirling, with 1..m in distinct cycles.
    CSep(NMK),
    /// As stirling, with 1..m fixed.
    CFix(NMK),
    /// Long-cycle diagonal, k vertical cycles separating 1..m.
    PNcycle {
        #[command(flatten)]
        args: NMK,
        /// Count by enumeration instead of the closed form.
        #[arg(long)]
        oracle: bool,
    },
    /// Long-cycle diagonal, k vertical cycles fixing 1..m.
    INcycle {
        #[command(flatten)]
        args: NMK,
        #[arg(long)]
        oracle: bool,
    },
    /// Diagonal of type λ, separated.
    PLambda {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value = "all")]
        k: KArg,
        #[arg(long, value_enum, default_value = "auto")]
        base: BaseArg,
    },
    /// Diagonal of type λ, isolated.
    ILambda {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value = "all")]
        k: KArg,
        #[arg(long, value_enum, default_value = "closed-form")]
        base: BaseArg,
    },
    /// Pairs of long cycles with an α-separated product.
    Alpha {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum ProbCmd {
    /// 1..m in distinct cycles of the product of two long cycles.
    Separation {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// 1..m fixed by the product.
    Isolation {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// The product has no fixed points.
    Fpf {
        #[arg(long)]
        n: usize,
    },
    /// Mean and variance of the number of fixed points.
    Moments {
        #[arg(long)]
        n: usize,
    },
}

/// One emitted value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub query: BTreeMap<String, String>,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
    pub source: Source,
    pub elapsed_ms: f64,
}

/// Settings after merging the config file and flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Settings {
    pub format: Format,
    pub oracle_cap: usize,
}

/// Parses `key=value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
            position: lineno + 1,
            message: format!("expected key=value, found {line:?}"),
        })?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

impl Settings {
    pub fn resolve(cli: &Cli) -> Result<Self> {
        let mut format = Format::Json;
        let mut cap = DEFAULT_CAP;
        if let Some(path) = &cli.config {
            let cfg = parse_config(&fs::read_to_string(path)?)?;
            for (k, v) in cfg {
                match k.as_str() {
                    "format" => {
                        format = Format::from_str(&v, true).map_err(|e| Error::Parse {
                            position: 0,
                            message: format!("format: {e}"),
                        })?
                    }
                    "oracle_cap" => {
                        cap = v.parse().map_err(|_| Error::Parse {
                            position: 0,
                            message: format!("oracle_cap: bad count {v:?}"),
                        })?
                    }
                    _ => {
                        return Err(Error::Parse {
                            position: 0,
                            message: format!("unknown config key {k:?}"),
                        })
                    }
                }
            }
        }
        if let Some(f) = cli.format {
            format = f;
        }
        if let Some(c) = cli.oracle_cap {
            cap = c;
        }
        if cap > MAX_CAP {
            return Err(Error::OracleCap { n: cap, cap: MAX_CAP });
        }
        if cap > DEFAULT_CAP && !cli.allow_large {
            return Err(Error::Domain(format!(
                "oracle cap {cap} is above {DEFAULT_CAP}; pass --allow-large to accept long runs"
            )));
        }
        Ok(Settings {
            format,
            oracle_cap: cap,
        })
    }
}

/// What a command produced.
pub enum Output {
    Records(Vec<OutputRecord>),
    Table(CountTable),
    Report(verify::Report),
}

fn query(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

struct Recorder {
    command: String,
    records: Vec<OutputRecord>,
}

impl Recorder {
    fn new(command: &str) -> Self {
        Recorder {
            command: command.to_string(),
            records: Vec::new(),
        }
    }

    fn time<T: ToString>(
        &mut self,
        q: BTreeMap<String, String>,
        source: Source,
        f: impl FnOnce() -> Result<T>,
    ) -> Result<()> {
        let start = Instant::now();
        let value = f()?.to_string();
        self.records.push(OutputRecord {
            command: self.command.clone(),
            query: q,
            value,
            decimal: None,
            source,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        });
        Ok(())
    }
}

fn check_k(k: usize, n: usize) -> Result<()> {
    if k > n {
        return Err(Error::Domain(format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

fn run_count(what: &CountCmd, oracle: &Oracle) -> Result<Vec<OutputRecord>> {
    let mut rec;
    match what {
        CountCmd::Stirling { n, k } => {
            rec = Recorder::new("count stirling");
            for k in k.values(*n) {
                check_k(k, *n)?;
                let q = query(&[("n", n.to_string()), ("k", k.to_string())]);
                rec.time(q, Source::ClosedForm, || Ok(stirling_c(*n, k)))?;
            }
        }
        CountCmd::CSep(a) | CountCmd::CFix(a) => {
            let sep = matches!(what, CountCmd::CSep(_));
            rec = Recorder::new(if sep { "count c-sep" } else { "count c-fix" });
            for k in a.k.values(a.n) {
                check_k(k, a.n)?;
                let q = query(&[("n", a.n.to_string()), ("m", a.m.to_string()), ("k", k.to_string())]);
                rec.time(q, Source::ClosedForm, || {
                    if sep {
                        c_sep(a.n, k, a.m)
                    } else {
                        c_fix(a.n, k, a.m)
                    }
                })?;
            }
        }
        CountCmd::PNcycle { args: a, oracle: use_oracle } | CountCmd::INcycle { args: a, oracle: use_oracle } => {
            let sep = matches!(what, CountCmd::PNcycle { .. });
            rec = Recorder::new(if sep { "count p-ncycle" } else { "count i-ncycle" });
            let long = IntegerPartition::single(a.n.max(1));
            for k in a.k.values(a.n) {
                let q = query(&[("n", a.n.to_string()), ("m", a.m.to_string()), ("k", k.to_string())]);
                let source = if *use_oracle { Source::Oracle } else { Source::ClosedForm };
                rec.time(q, source, || match (sep, use_oracle) {
                    (true, false) => p_ncycle(a.n, a.m, k),
                    (false, false) => i_ncycle(a.n, a.m, k),
                    (true, true) => oracle.p(&long, a.m, k),
                    (false, true) => oracle.i(&long, a.m, k),
                })?;
            }
        }
        CountCmd::PLambda { lambda, m, k, base } | CountCmd::ILambda { lambda, m, k, base } => {
            let sep = matches!(what, CountCmd::PLambda { .. });
            rec = Recorder::new(if sep { "count p-lambda" } else { "count i-lambda" });
            let lam: IntegerPartition = lambda.parse()?;
            let n = lam.n();
            if *base != BaseArg::ClosedForm && n <= oracle.cap() {
                oracle.census(n)?;
            }
            for k in k.values(n) {
                let q = query(&[
                    ("lambda", lam.to_string()),
                    ("m", m.to_string()),
                    ("k", k.to_string()),
                    ("base", format!("{base:?}").to_lowercase()),
                ]);
                rec.time(q, Source::Recurrence, || {
                    if sep {
                        p_lambda_with(&lam, *m, k, (*base).into())
                    } else {
                        i_lambda_with(&lam, *m, k, (*base).into())
                    }
                })?;
            }
        }
        CountCmd::Alpha { alpha, oracle: use_oracle } => {
            rec = Recorder::new("count alpha");
            let a: Composition = alpha.parse()?;
            let q = query(&[("alpha", a.to_string())]);
            if *use_oracle {
                rec.time(q, Source::Oracle, || oracle.alpha(&a))?;
            } else {
                rec.time(q, Source::ClosedForm, || alpha_separated_count(&a))?;
            }
        }
    }
    Ok(rec.records)
}

fn run_prob(what: &ProbCmd, decimal: Option<usize>) -> Result<Vec<OutputRecord>> {
    let mut rec;
    match what {
        ProbCmd::Separation { n, m } => {
            rec = Recorder::new("prob separation");
            let q = query(&[("n", n.to_string()), ("m", m.to_string())]);
            rec.time(q, Source::ClosedForm, || sep_prob_ncycle(*n, *m))?;
        }
        ProbCmd::Isolation { n, m } => {
            rec = Recorder::new("prob isolation");
            let q = query(&[("n", n.to_string()), ("m", m.to_string())]);
            rec.time(q, Source::ClosedForm, || iso_prob_ncycle(*n, *m))?;
        }
        ProbCmd::Fpf { n } => {
            rec = Recorder::new("prob fpf");
            rec.time(query(&[("n", n.to_string())]), Source::ClosedForm, || fpf_probability(*n))?;
        }
        ProbCmd::Moments { n } => {
            rec = Recorder::new("prob moments");
            let (mean, var) = fixed_point_moments(*n)?;
            for (stat, v) in [("mean", mean), ("variance", var)] {
                let q = query(&[("n", n.to_string()), ("statistic", stat.to_string())]);
                rec.time(q, Source::ClosedForm, || Ok(v))?;
            }
        }
    }
    if let Some(d) = decimal {
        for r in &mut rec.records {
            let v: ExactRational = r.value.parse()?;
            r.decimal = Some(v.to_decimal(d));
        }
    }
    Ok(rec.records)
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Result<Output> {
    let settings = Settings::resolve(cli)?;
    let oracle = Oracle::with_cap(settings.oracle_cap)?;
    match &cli.command {
        Command::Count { what } => Ok(Output::Records(run_count(what, &oracle)?)),
        Command::Prob { what, decimal } => Ok(Output::Records(run_prob(what, *decimal)?)),
        Command::Verify {
            max_n,
            suite,
            inject_fault,
        } => {
            let opts = VerifyOptions {
                max_n: *max_n,
                suite: suite.0,
                inject_fault: *inject_fault,
            };
            Ok(Output::Report(verify::run(&oracle, &opts)?))
        }
        Command::Table { n, m, kind, source } => {
            let kind = TableKind::from(*kind);
            let table = match (source, kind) {
                (TableSource::Oracle, _) => oracle.table(*n, *m, kind)?,
                (TableSource::Recurrence, TableKind::Separated) => {
                    p_table(*n, *m, BaseValueSource::Auto)?
                }
                (TableSource::Recurrence, TableKind::Isolated) => {
                    i_table(*n, *m, BaseValueSource::ClosedForm)?
                }
            };
            Ok(Output::Table(table))
        }
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// Renders an output in the chosen format.
pub fn render(output: &Output, format: Format) -> Result<String> {
    match (output, format) {
        (Output::Records(r), Format::Json) => {
            Ok(serde_json::to_string_pretty(r).expect("records serialize"))
        }
        (Output::Records(r), Format::Csv) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["command", "query", "value", "decimal", "source", "elapsed_ms"])
                .map_err(csv_error)?;
            for rec in r {
                let q: Vec<String> = rec.query.iter().map(|(k, v)| format!("{k}={v}")).collect();
                w.write_record([
                    rec.command.clone(),
                    q.join(";"),
                    rec.value.clone(),
                    rec.decimal.clone().unwrap_or_default(),
                    rec.source.to_string(),
                    format!("{:.3}", rec.elapsed_ms),
                ])
                .map_err(csv_error)?;
            }
            Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8"))
        }
        (Output::Table(t), Format::Json) => Ok(t.to_json()),
        (Output::Table(t), Format::Csv) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "m", "kind", "source", "lambda", "k", "value"])
                .map_err(csv_error)?;
            for (lambda, k, v) in t.entries() {
                w.write_record([
                    t.n.to_string(),
                    t.m.to_string(),
                    t.kind.to_string(),
                    t.source.to_string(),
                    lambda.to_string(),
                    k.to_string(),
                    v.to_string(),
                ])
                .map_err(csv_error)?;
            }
            Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8"))
        }
        (Output::Report(r), Format::Json) => {
            Ok(serde_json::to_string_pretty(r).expect("report serializes"))
        }
        (Output::Report(r), Format::Csv) => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["suite", "label", "formula", "oracle", "pass"])
                .map_err(csv_error)?;
            for c in &r.checks {
                w.write_record([c.suite, &c.label, &c.formula, &c.oracle, &c.pass.to_string()])
                    .map_err(csv_error)?;
            }
            Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8"))
        }
    }
}

/// Entry point for the binary. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run_cli(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn run_cli(cli: &Cli) -> Result<i32> {
    let settings = Settings::resolve(cli)?;
    let output = execute(cli)?;
    let mut text = render(&output, settings.format)?;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => fs::write(path, &text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    let code = match &output {
        Output::Report(r) => {
            for c in r.mismatches() {
                eprintln!("mismatch: [{}] {}: formula={} oracle={}", c.suite, c.label, c.formula, c.oracle);
            }
            i32::from(!r.is_clean())
        }
        _ => 0,
    };
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<Output> {
        let mut full = vec!["sepprob"];
        full.extend_from_slice(args);
        execute(&Cli::try_parse_from(full).unwrap())
    }

    fn values(out: Output) -> Vec<String> {
        match out {
            Output::Records(r) => r.into_iter().map(|r| r.value).collect(),
            _ => panic!("expected records"),
        }
    }

    #[test]
    fn documented_commands() {
        assert_eq!(values(run(&["count", "p-ncycle", "--n", "4", "--m", "2", "--k", "2"]).unwrap()), ["16"]);
        assert_eq!(values(run(&["count", "stirling", "--n", "4", "--k", "2"]).unwrap()), ["11"]);
        assert_eq!(values(run(&["count", "alpha", "--alpha", "1,3"]).unwrap()), ["12"]);
        assert_eq!(values(run(&["prob", "separation", "--n", "4", "--m", "2"]).unwrap()), ["11/18"]);
        assert_eq!(values(run(&["prob", "moments", "--n", "3"]).unwrap()), ["3/2", "9/4"]);
        assert_eq!(values(run(&["prob", "isolation", "--n", "5", "--m", "2"]).unwrap()), ["1/12"]);
    }

    #[test]
    fn k_all_emits_one_record_per_k() {
        let v = values(run(&["count", "p-ncycle", "--n", "4", "--m", "2", "--k", "all"]).unwrap());
        assert_eq!(v, ["0", "16", "0", "6"]);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = run(&["count", "p-lambda", "--lambda", "3+x"]).err().unwrap();
        assert!(matches!(err, Error::Parse { position: 2, .. }), "{err:?}");
    }

    #[test]
    fn config_and_flag_precedence() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg");
        fs::write(&path, "# defaults\nformat = csv\noracle_cap = 5\n").unwrap();
        let p = path.to_str().unwrap();
        let cli = Cli::try_parse_from(["sepprob", "--config", p, "prob", "fpf", "--n", "3"]).unwrap();
        assert_eq!(Settings::resolve(&cli).unwrap(), Settings { format: Format::Csv, oracle_cap: 5 });
        let cli = Cli::try_parse_from(["sepprob", "--config", p, "--format", "json", "prob", "fpf", "--n", "3"]).unwrap();
        assert_eq!(Settings::resolve(&cli).unwrap().format, Format::Json);
        let cli = Cli::try_parse_from(["sepprob", "--oracle-cap", "8", "prob", "fpf", "--n", "3"]).unwrap();
        assert!(Settings::resolve(&cli).is_err());
        let cli = Cli::try_parse_from(["sepprob", "--oracle-cap", "8", "--allow-large", "prob", "fpf", "--n", "3"]).unwrap();
        assert_eq!(Settings::resolve(&cli).unwrap().oracle_cap, 8);
        let cli = Cli::try_parse_from(["sepprob", "--oracle-cap", "10", "--allow-large", "prob", "fpf", "--n", "3"]).unwrap();
        assert!(Settings::resolve(&cli).is_err());
    }

    #[test]
    fn decimal_rendering() {
        match run(&["prob", "separation", "--n", "4", "--m", "2", "--decimal", "4"]).unwrap() {
            Output::Records(r) => assert_eq!(r[0].decimal.as_deref(), Some("0.6111")),
            _ => panic!(),
        }
    }
}
