//! Command orchestration for the `twisted` binary: parses a [`RunConfig`],
//! dispatches to the library, and renders a deterministic [`Report`].

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};

use crate::citation;
use crate::cohomology::{left_vanishing_scan, right_vanishing_scan, LeftVerdict};
use crate::dynamics::{
    self, classify_ampleness, DivisorClass, NumericalActionSpec, Verdict, WitnessConfig,
};
use crate::error::{Error, Result};
use crate::json;
use crate::linalg;
use crate::ring::{
    self, associativity_check, generator_degrees, grade_dimension, unit_law_check, GrowthClass, PowerRingSpec,
};

pub const BUDGET_ENV: &str = "TWISTED_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Dimensions of the graded pieces.
    Dims,
    /// Generators of the twisted ring by grade.
    Gens,
    /// Left/right ampleness of a numerical action.
    Ampleness,
    /// Vanishing scans on projective space.
    Cohomology,
    /// Growth class of the ring, and orbit growth when a matrix is given.
    Growth,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "twisted", version, about = "Twisted homogeneous coordinate ring computations")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,

    /// Power `r` of the endomorphism `x_i ↦ x_i^r`.
    #[arg(long = "r", visible_alias = "p")]
    pub r: Option<u64>,

    /// Dimension of projective space.
    #[arg(long)]
    pub m: Option<usize>,

    /// Largest grade `N` scanned.
    #[arg(long = "max-n")]
    pub max_n: Option<u32>,

    /// Matrix as JSON, a full action spec as JSON, or a path to either.
    #[arg(long)]
    pub matrix: Option<String>,

    /// Divisor class as a JSON integer array.
    #[arg(long)]
    pub divisor: Option<String>,

    /// Curve functionals as a JSON array of integer arrays.
    #[arg(long)]
    pub curves: Option<String>,

    #[arg(long = "dimX")]
    pub dim_x: Option<u32>,

    #[arg(long = "deg-sigma")]
    pub deg_sigma: Option<String>,

    /// Asserts that `L_n` is eventually ample (used when `r = 1`).
    #[arg(long = "ample-flag")]
    pub ample_flag: Option<bool>,

    /// Twist `t`, or an inclusive range `lo:hi`.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Monomials enumerated per grade before giving up.
    #[arg(long, default_value_t = ring::DEFAULT_BUDGET)]
    pub budget: u64,

    /// Sampled triples for the algebra-law checks.
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
}

impl RunConfig {
    /// Parses arguments the way the binary does, without touching the
    /// environment.
    pub fn from_args<I, T>(args: I) -> std::result::Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        Self::try_parse_from(args)
    }

    /// Applies `TWISTED_BUDGET`, which takes precedence over `--budget`.
    pub fn with_env_budget(mut self, value: Option<&str>) -> Result<Self> {
        if let Some(v) = value {
            self.budget = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("{BUDGET_ENV} must be a nonnegative integer, got {v:?}")))?;
        }
        Ok(self)
    }
}

/// Process exit code for a failed run.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

/// A CSV table; cells are already formatted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(&self.header).map_err(err)?;
        for r in &self.rows {
            w.write_record(r).map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: Command,
    pub input: BTreeMap<String, Value>,
    pub results: Value,
    pub citations: BTreeSet<&'static str>,
    pub version: &'static str,
    #[serde(skip)]
    pub table: Table,
}

impl Report {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.to_json_string()),
            Format::Csv => self.table.to_csv(),
        }
    }

    /// Writes the rendering to `out`, or returns it for printing.
    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<Option<String>> {
        let text = self.render(format)?;
        match out {
            Some(path) => {
                std::fs::write(path, text)
                    .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
                Ok(None)
            }
            None => Ok(Some(text)),
        }
    }
}

struct Builder {
    input: BTreeMap<String, Value>,
    citations: BTreeSet<&'static str>,
}

impl Builder {
    fn echo(&mut self, key: &str, v: Value) {
        self.input.insert(key.to_string(), v);
    }

    /// A verdict object carrying its citations.
    fn verdict(&mut self, value: Value, ids: &[&'static str]) -> Value {
        self.citations.extend(ids);
        json!({ "value": value, "citations": ids })
    }
}

pub fn run(config: &RunConfig) -> Result<Report> {
    let mut b = Builder { input: BTreeMap::new(), citations: BTreeSet::new() };
    let (results, table) = match config.command {
        Command::Dims => run_dims(config, &mut b)?,
        Command::Gens => run_gens(config, &mut b)?,
        Command::Ampleness => run_ampleness(config, &mut b)?,
        Command::Cohomology => run_cohomology(config, &mut b)?,
        Command::Growth => run_growth(config, &mut b)?,
    };
    Ok(Report {
        command: config.command,
        input: b.input,
        results,
        citations: b.citations,
        version: env!("CARGO_PKG_VERSION"),
        table,
    })
}

fn ring_spec(config: &RunConfig, b: &mut Builder, default_max_n: u32) -> Result<(PowerRingSpec, u32)> {
    let r = config.r.ok_or_else(|| Error::InvalidArgument("--p/--r is required".into()))?;
    let m = config.m.ok_or_else(|| Error::InvalidArgument("--m is required".into()))?;
    let max_n = config.max_n.unwrap_or(default_max_n);
    let spec = PowerRingSpec::new(m, r)?;
    b.echo("r", json!(r));
    b.echo("m", json!(m));
    b.echo("maxN", json!(max_n));
    Ok((spec, max_n))
}

fn run_dims(config: &RunConfig, b: &mut Builder) -> Result<(Value, Table)> {
    let (spec, max_n) = ring_spec(config, b, 10)?;
    let mut table = Table::new(&["n", "e_n", "dim"]);
    let mut rows = Vec::new();
    for n in 0..=max_n {
        let e = spec.twist_degree(n);
        let d = grade_dimension(&spec, n);
        table.push(vec![n.to_string(), e.to_string(), d.to_string()]);
        rows.push(json!({ "n": n, "e_n": json::uint(&e), "dim": json::uint(&d) }));
    }
    Ok((json!({ "dimensions": rows }), table))
}

/// Finitely generated exactly for the polynomial ring and for `(r, m) = (2, 1)`.
fn predicted_degree_one(spec: &PowerRingSpec) -> bool {
    spec.r() == 1 || (spec.r() == 2 && spec.m() == 1)
}

fn run_gens(config: &RunConfig, b: &mut Builder) -> Result<(Value, Table)> {
    let (spec, max_n) = ring_spec(config, b, 6)?;
    b.echo("budget", json!(config.budget));
    b.echo("seed", json!(config.seed));
    b.echo("trials", json!(config.trials));
    let scan = generator_degrees(&spec, max_n, config.budget)?;
    let observed = if scan.generated_in_degree_one() {
        "generated-in-degree-one"
    } else if scan.new_generators_every_grade() {
        "new-generators-every-grade"
    } else {
        "mixed"
    };
    let predicted = predicted_degree_one(&spec);
    let agrees = if predicted { observed == "generated-in-degree-one" } else { observed == "new-generators-every-grade" };
    let assoc = associativity_check(&spec, config.trials, config.seed);
    let unit = unit_law_check(&spec, config.trials, config.seed);

    let mut table = Table::new(&["n", "dim", "generators"]);
    for (n, c) in &scan.counts {
        table.push(vec![n.to_string(), scan.dimensions[n].to_string(), c.to_string()]);
    }
    let generation = b.verdict(json!(observed), &[citation::FROBENIUS_EXAMPLE]);
    let laws = b.verdict(json!(assoc.passed() && unit.passed()), &[citation::GRADED_ALGEBRA]);
    let results = json!({
        "generators": scan.counts.iter().map(|(n, c)| (n.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
        "dimensions": scan.dimensions.iter().map(|(n, c)| (n.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
        "samples": scan.samples.iter().map(|(n, z)| (n.to_string(), json!(z))).collect::<serde_json::Map<_, _>>(),
        "generation": generation,
        "finitelyGeneratedPredicted": predicted,
        "agreesWithPrediction": agrees,
        "algebraLaws": laws,
        "associativity": assoc,
        "unitLaw": unit,
    });
    Ok((results, table))
}

/// Inline JSON when it parses, otherwise a path to a JSON file.
fn load_json(arg: &str) -> Result<Value> {
    if let Ok(v) = serde_json::from_str::<Value>(arg) {
        return Ok(v);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::InvalidArgument(format!("{arg:?} is neither JSON nor a readable file: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

fn action_spec(config: &RunConfig) -> Result<NumericalActionSpec> {
    let raw = config.matrix.as_deref().ok_or_else(|| Error::InvalidArgument("--matrix is required".into()))?;
    let doc = load_json(raw)?;
    let mut obj = match doc {
        Value::Object(o) => o,
        m @ Value::Array(_) => {
            let mut o = serde_json::Map::new();
            o.insert("P".into(), m);
            o
        }
        other => return Err(Error::Parse(format!("--matrix must be a matrix or an object, found {other}"))),
    };
    if let Some(c) = &config.curves {
        obj.insert("curves".into(), load_json(c)?);
    }
    if !obj.contains_key("curves") {
        return Err(Error::InvalidArgument("--curves is required when --matrix is a bare matrix".into()));
    }
    if let Some(d) = config.dim_x {
        obj.insert("dimX".into(), json!(d));
    }
    if let Some(d) = &config.deg_sigma {
        obj.insert("degSigma".into(), load_json(d)?);
    }
    if let Some(f) = config.ample_flag {
        obj.insert("ampleFlag".into(), json!(f));
    }
    NumericalActionSpec::from_json(&Value::Object(obj))
}

fn divisor(config: &RunConfig, spec: &NumericalActionSpec) -> Result<DivisorClass> {
    let raw = config.divisor.as_deref().ok_or_else(|| Error::InvalidArgument("--divisor is required".into()))?;
    let d = DivisorClass(json::parse_vector(&load_json(raw)?)?);
    if d.rank() != spec.rank() {
        return Err(Error::DimensionMismatch { expected: spec.rank(), got: d.rank() });
    }
    Ok(d)
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "Yes",
        Verdict::No => "No",
        Verdict::Undetermined => "Undetermined",
    }
}

fn run_ampleness(config: &RunConfig, b: &mut Builder) -> Result<(Value, Table)> {
    let spec = action_spec(config)?;
    let d = divisor(config, &spec)?;
    b.echo("spec", spec.to_json());
    b.echo("divisor", json::vector(&d.0));
    let report = classify_ampleness(&spec, &d)?;
    let ids: Vec<&'static str> = report.reasons.iter().map(|r| r.id).collect();
    let left_ids: Vec<_> = ids.iter().copied().filter(|id| *id != citation::AMPLE_EIGENVECTOR).collect();
    let right_ids: Vec<_> = ids.iter().copied().filter(|id| *id != citation::NOT_LEFT_AMPLE).collect();
    let left = b.verdict(json!(report.left), &left_ids);
    let right = b.verdict(json!(report.right), &right_ids);

    let mut table = Table::new(&["side", "verdict", "citations"]);
    table.push(vec!["left".into(), verdict_str(report.left).into(), left_ids.join(";")]);
    table.push(vec!["right".into(), verdict_str(report.right).into(), right_ids.join(";")]);

    let mut results = json!({ "left": left, "right": right, "report": report.to_json() });

    if report.spectral_radius.lo() > &num_rational::BigRational::one() {
        results["witness"] = if spec.is_ample(&d)? {
            match dynamics::non_left_ample_witness(&spec, &d, &d, &WitnessConfig::default()) {
                Ok(w) => {
                    let closest = w.margins.iter().max().cloned().unwrap_or_default();
                    b.verdict(
                        json!({
                            "multiplier": json::int(&w.multiplier),
                            "H": json::vector(&w.h.0),
                            "curve": json::vector(&w.curve.0),
                            "curveIndex": w.curve_index,
                            "horizon": w.horizon,
                            "jordanExponent": w.jordan_exponent,
                            "jordanExact": w.jordan_exact,
                            "maxMargin": json::int(&closest),
                        }),
                        &[citation::NON_LEFT_AMPLE_DIVISORS],
                    )
                }
                Err(Error::Undetermined(msg)) => {
                    b.verdict(json!({ "undetermined": msg }), &[citation::NON_LEFT_AMPLE_DIVISORS])
                }
                Err(e) => return Err(e),
            }
        } else {
            json!({ "skipped": "D is not ample against the curve list" })
        };
    }
    if spec.deg_sigma().is_some() {
        results["degreeConsistency"] = match dynamics::degree_consistency(&spec, &d) {
            Ok(ok) => b.verdict(json!(ok), &[citation::DEGREE_IDENTITY]),
            Err(Error::Unsupported(msg)) => json!({ "unsupported": msg }),
            Err(e) => return Err(e),
        };
    }
    Ok((results, table))
}

/// `t` or an inclusive range `lo:hi`.
fn parse_twists(raw: &str) -> Result<Vec<BigInt>> {
    let bad = || Error::InvalidArgument(format!("--t must be an integer or lo:hi, got {raw:?}"));
    if let Some((lo, hi)) = raw.split_once(':') {
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi || hi - lo > 10_000 {
            return Err(bad());
        }
        Ok((lo..=hi).map(BigInt::from).collect())
    } else {
        Ok(vec![raw.trim().parse::<BigInt>().map_err(|_| bad())?])
    }
}

fn run_cohomology(config: &RunConfig, b: &mut Builder) -> Result<(Value, Table)> {
    let (spec, max_n) = ring_spec(config, b, 12)?;
    let raw_t = config.t.as_deref().ok_or_else(|| Error::InvalidArgument("--t is required".into()))?;
    let twists = parse_twists(raw_t)?;
    b.echo("t", json!(raw_t));
    let mut table = Table::new(&["scan", "t", "n", "degree", "q", "h"]);
    let mut scans = Vec::new();
    for t in &twists {
        let right = right_vanishing_scan(&spec, t, max_n)?;
        let left = left_vanishing_scan(&spec, t, max_n)?;
        for (name, rows) in [("right", &right.table.rows), ("left", &left.table.rows)] {
            for r in rows {
                table.push(vec![
                    name.into(),
                    t.to_string(),
                    r.n.to_string(),
                    r.degree.to_string(),
                    r.q.to_string(),
                    r.h.to_string(),
                ]);
            }
        }
        let right_v = b.verdict(json!({ "n0": right.n0 }), &[citation::AMPLENESS_EQUIVALENCES, citation::AMPLE_EIGENVECTOR]);
        let left_v = match &left.verdict {
            LeftVerdict::NonVanishing { q, from_n } => b.verdict(
                json!({ "nonVanishing": { "q": q, "fromN": from_n } }),
                &[citation::AMPLENESS_EQUIVALENCES, citation::NOT_LEFT_AMPLE],
            ),
            LeftVerdict::Vanishing { n0 } => {
                b.verdict(json!({ "vanishing": { "n0": n0 } }), &[citation::AMPLENESS_EQUIVALENCES])
            }
            LeftVerdict::Inconclusive => b.verdict(json!("inconclusive"), &[citation::AMPLENESS_EQUIVALENCES]),
        };
        scans.push(json!({ "t": json::int(t), "right": right_v, "left": left_v }));
    }
    Ok((json!({ "scans": scans }), table))
}

fn run_growth(config: &RunConfig, b: &mut Builder) -> Result<(Value, Table)> {
    let mut results = serde_json::Map::new();
    let mut table = Table::new(&["series", "n", "value"]);
    if config.r.is_some() || config.m.is_some() {
        let (spec, max_n) = ring_spec(config, b, 10)?;
        let dims = ring::dimension_table(&spec, max_n);
        let class = ring::growth_class(&dims)?;
        for (n, d) in dims.iter().enumerate() {
            table.push(vec!["dim".into(), n.to_string(), d.to_string()]);
        }
        let class_v = b.verdict(json!(class), &[citation::FROBENIUS_EXAMPLE]);
        let noeth = b.verdict(json!(class == GrowthClass::Exponential), &[citation::NONNOETHERIAN_RING]);
        results.insert("dimensions".into(), Value::Array(dims.iter().map(json::uint).collect()));
        results.insert("growthClass".into(), class_v);
        results.insert("nonNoetherian".into(), noeth);
    }
    if config.matrix.is_some() {
        let spec = action_spec(config)?;
        let d = divisor(config, &spec)?;
        let max_m = config.max_n.unwrap_or(10) as usize;
        b.echo("spec", spec.to_json());
        b.echo("divisor", json::vector(&d.0));
        let r = linalg::spectral_radius_interval(spec.action(), &linalg::default_width())?;
        let j = match r.as_integer() {
            Some(k) => linalg::jordan_growth_exponent(spec.action(), &k)? as u32,
            None => 0,
        };
        let mut fits = Vec::new();
        for (idx, c) in spec.curves().iter().enumerate() {
            let orbit = dynamics::orbit_pairings(&spec, &d, c, max_m)?;
            let fit = dynamics::growth_bound_check(&orbit, 0, &r, j)?;
            for (m, v) in orbit.iter().enumerate() {
                table.push(vec![format!("orbit[{idx}]"), m.to_string(), v.to_string()]);
            }
            let v = b.verdict(
                json!({
                    "curve": json::vector(&c.0),
                    "orbit": json::vector(&orbit),
                    "j": fit.j,
                    "constant": fit.constant.to_string(),
                    "argmax": fit.argmax,
                }),
                &[citation::ORBIT_GROWTH],
            );
            fits.push(v);
        }
        results.insert("spectralRadius".into(), dynamics::interval_json(&r));
        results.insert("orbitFits".into(), Value::Array(fits));
    }
    if results.is_empty() {
        return Err(Error::InvalidArgument("growth needs --p/--r with --m, or --matrix".into()));
    }
    Ok((Value::Object(results), table))
}
