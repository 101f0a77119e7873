//! Command-line front end. Reports are JSON with sorted keys and every number as a string.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::analysis::{
    analyze_irreducibility, dimension_census, irreducible_oracle, rep_predicates, semisimplicity, CensusMode,
};
use crate::braidword::{parse, Evaluator};
use crate::error::Error;
use crate::field::{Context, FieldContext, FieldElement, Rational};
use crate::poly::Polynomial;
use crate::reps::{build_unchecked, enumerate_irreps, parse_params, ParameterSet, RepSpec, Representation};
use crate::spectral::check_traces;

#[derive(Parser, Debug)]
#[command(
    name = "b3quot",
    version,
    about = "Exact representations of three-string braid group quotients"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct representations and print their matrices.
    Build(Options),
    /// Check the braid relation, minimal polynomial and spectral identities.
    Verify(Options),
    /// Irreducibility predicates, closure oracle and invariant-subspace witnesses.
    Irred(Options),
    /// Semisimplicity verdict and dimension census.
    Semisimple(Options),
    /// Evaluate braid words in a representation.
    Eval(Options),
    /// Semisimplicity verdicts over a grid of parameter sets, in parallel.
    Scan(Options),
}

#[derive(Args, Debug, Clone, Default)]
pub struct Options {
    /// Job file path, or inline JSON starting with '{'.
    #[arg(long)]
    pub params: Option<String>,
    /// Field: Q, gaussian, zeta5, zeta120, cyclotomic:N, sqrt:D or modulus:c0,c1,...
    #[arg(long)]
    pub context: Option<String>,
    /// Census mode: combinatorial (default) or constructive.
    #[arg(long)]
    pub mode: Option<String>,
    /// Braid word; repeatable, or several separated by ';'.
    #[arg(long)]
    pub words: Vec<String>,
    /// Worker threads for scan.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Failure of a command: exit code 1 (a check failed) or 2 (bad input).
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn from_error(e: Error) -> Failure {
    let code = match e {
        Error::ConstructionCheck(_) | Error::NotScalar => 1,
        _ => 2,
    };
    Failure {
        code,
        message: e.to_string(),
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

/// A report plus the names of failed checks (empty means exit 0).
struct Outcome {
    report: Value,
    failed: Vec<String>,
}

/// Parsed job description.
pub struct JobConfig {
    pub ctx: Context,
    pub hints: Vec<FieldElement>,
    pub raw: Value,
}

impl JobConfig {
    fn x(&self) -> std::result::Result<ParameterSet, Failure> {
        let v = self.raw.get("X").ok_or_else(|| input_error("job needs \"X\""))?;
        parse_params(&self.ctx, v).map_err(from_error)
    }

    fn spec(&self) -> std::result::Result<Option<RepSpec>, Failure> {
        if self.raw.get("dim").is_none() {
            return Ok(None);
        }
        RepSpec::from_json(&self.ctx, &self.raw).map(Some).map_err(from_error)
    }

    fn mode(&self, opts: &Options) -> std::result::Result<CensusMode, Failure> {
        let text = opts
            .mode
            .clone()
            .or_else(|| self.raw.get("mode").and_then(Value::as_str).map(String::from))
            .unwrap_or_else(|| "combinatorial".into());
        text.parse().map_err(from_error)
    }

    fn words(&self, opts: &Options) -> Vec<String> {
        let mut out: Vec<String> = opts
            .words
            .iter()
            .flat_map(|w| w.split(';'))
            .map(|w| w.trim().to_string())
            .filter(|w| !w.is_empty())
            .collect();
        if out.is_empty() {
            if let Some(ws) = self.raw.get("words").and_then(Value::as_array) {
                out = ws.iter().filter_map(Value::as_str).map(String::from).collect();
            }
        }
        out
    }
}

/// `√2` and `√3` inside `Q(ζ120)`, as `θ^15 + θ^105` and `θ^10 + θ^110`.
pub fn zeta120_square_roots(ctx: &Context) -> Vec<FieldElement> {
    let t = FieldElement::generator(ctx);
    vec![t.pow(15) + t.pow(105), t.pow(10) + t.pow(110)]
}

/// Parses a context name; returns the context and its default root hints.
pub fn parse_context(text: &str) -> crate::Result<(Context, Vec<FieldElement>)> {
    let text = text.trim();
    let rationals = |s: &str| {
        s.split(',')
            .map(|c| c.trim().parse::<Rational>())
            .collect::<crate::Result<Vec<_>>>()
    };
    let ctx = match text {
        "Q" | "rationals" => FieldContext::rationals(),
        "gaussian" => FieldContext::gaussian(),
        "zeta5" => FieldContext::zeta5(),
        "zeta120" => {
            let ctx = FieldContext::cyclotomic(120);
            let hints = zeta120_square_roots(&ctx);
            return Ok((ctx, hints));
        }
        _ => {
            if let Some(n) = text.strip_prefix("cyclotomic:") {
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad cyclotomic order {n:?}")))?;
                if n == 0 || n > 1000 {
                    return Err(Error::BadModulus(format!("cyclotomic order {n} out of range 1..=1000")));
                }
                FieldContext::cyclotomic(n)
            } else if let Some(d) = text.strip_prefix("sqrt:") {
                FieldContext::quadratic(&d.trim().parse()?)?
            } else if let Some(c) = text.strip_prefix("modulus:") {
                FieldContext::new(rationals(c)?)?
            } else {
                return Err(Error::Parse(format!("unknown context {text:?}")));
            }
        }
    };
    Ok((ctx, Vec::new()))
}

fn load_config(opts: &Options) -> std::result::Result<JobConfig, Failure> {
    let raw: Value = match &opts.params {
        None => json!({}),
        Some(p) if p.trim_start().starts_with('{') => serde_json::from_str(p).map_err(input_error)?,
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| input_error(format!("{p}: {e}")))?;
            serde_json::from_str(&text).map_err(|e| input_error(format!("{p}: {e}")))?
        }
    };
    let (ctx, mut hints) = match (&opts.context, raw.get("context")) {
        (Some(c), _) => parse_context(c).map_err(from_error)?,
        (None, None) => (FieldContext::rationals(), Vec::new()),
        (None, Some(Value::String(c))) => parse_context(c).map_err(from_error)?,
        (None, Some(obj @ Value::Object(_))) => {
            if let Some(m) = obj.get("modulus") {
                let coeffs = m
                    .as_array()
                    .ok_or_else(|| input_error("context.modulus must be a list of rationals"))?
                    .iter()
                    .map(|c| match c {
                        Value::String(s) => s.parse::<Rational>(),
                        Value::Number(n) => n.to_string().parse::<Rational>(),
                        other => Err(Error::Parse(format!("bad coefficient {other}"))),
                    })
                    .collect::<crate::Result<Vec<_>>>()
                    .map_err(from_error)?;
                (FieldContext::new(coeffs).map_err(from_error)?, Vec::new())
            } else {
                let preset = obj.get("preset").and_then(Value::as_str).unwrap_or("Q");
                parse_context(preset).map_err(from_error)?
            }
        }
        (None, Some(other)) => return Err(input_error(format!("bad context {other}"))),
    };
    if let Some(hs) = raw
        .get("context")
        .and_then(|c| c.get("root_hints"))
        .and_then(Value::as_array)
    {
        for h in hs {
            hints.push(FieldElement::from_json(&ctx, h).map_err(from_error)?);
        }
    }
    Ok(JobConfig { ctx, hints, raw })
}

fn header(command: &str, cfg: &JobConfig) -> Value {
    json!({
        "command": command,
        "context": if cfg.ctx.is_rational_field() { "Q".to_string() } else { cfg.ctx.modulus_string() },
    })
}

/// Representations named by the job: one if `dim` is given, else every one enumerable on `X`.
fn job_reps(cfg: &JobConfig, checked: bool) -> std::result::Result<(Vec<Representation>, Value), Failure> {
    if let Some(spec) = cfg.spec()? {
        let rep = if checked {
            crate::reps::build_rep(&spec).map_err(from_error)?
        } else {
            build_unchecked(&spec).map_err(from_error)?
        };
        return Ok((vec![rep], json!([])));
    }
    let x = cfg.x()?;
    let e = enumerate_irreps(&x, &cfg.hints).map_err(from_error)?;
    let deferred = Value::Array(e.deferred.iter().map(|d| d.to_json()).collect());
    Ok((e.reps.into_iter().map(|r| r.rep).collect(), deferred))
}

fn cmd_build(cfg: &JobConfig) -> CmdResult {
    let (reps, deferred) = job_reps(cfg, true)?;
    let mut report = header("build", cfg);
    report["representations"] = Value::Array(reps.iter().map(Representation::to_json).collect());
    report["deferred"] = deferred;
    Ok(Outcome {
        report,
        failed: Vec::new(),
    })
}

/// `∏ (λ - x_i)^{m_i}`.
fn expected_generator_charpoly(rep: &Representation) -> Polynomial {
    let ctx = rep.context();
    rep.spec
        .params
        .values()
        .iter()
        .zip(&rep.multiplicities)
        .fold(Polynomial::one(ctx), |acc, (x, &m)| {
            &acc * &Polynomial::linear(x).pow(m as u32)
        })
}

fn cmd_verify(cfg: &JobConfig) -> CmdResult {
    let (reps, deferred) = job_reps(cfg, false)?;
    let mut failed = Vec::new();
    let mut items = Vec::new();
    for rep in &reps {
        let label = rep.label();
        let braid = rep.verify_braid_relation();
        let minpoly = rep.verify_minimal_polynomial();
        let expected = expected_generator_charpoly(rep);
        let charpoly_g1 = rep.g1.charpoly().map_err(from_error)? == expected;
        let charpoly_g2 = rep.g2.charpoly().map_err(from_error)? == expected;
        let spectral = check_traces(rep).map_err(from_error)?;
        for (ok, name) in [
            (braid, "braid relation"),
            (minpoly, "minimal polynomial of g2"),
            (charpoly_g1, "charpoly of g1"),
            (charpoly_g2, "charpoly of g2"),
        ] {
            if !ok {
                failed.push(format!("{label}: {name}"));
            }
        }
        failed.extend(spectral.failures().iter().map(|f| format!("{label}: {f}")));
        let all_ok = braid && minpoly && charpoly_g1 && charpoly_g2 && spectral.all_ok;
        let mut item = spectral.to_json();
        item["label"] = json!(label);
        item["spec"] = rep.spec.to_json();
        item["braid_relation"] = json!(braid);
        item["minimal_polynomial"] = json!(minpoly);
        item["charpoly_generators"] = json!(charpoly_g1 && charpoly_g2);
        item["all_ok"] = json!(all_ok);
        items.push(item);
    }
    let mut report = header("verify", cfg);
    report["results"] = Value::Array(items);
    report["deferred"] = deferred;
    report["all_ok"] = json!(failed.is_empty());
    report["failed"] = json!(failed);
    Ok(Outcome { report, failed })
}

/// All five dimension-6 variants: class predicates nonzero iff every variant is irreducible.
fn dim6_family(x: &ParameterSet) -> std::result::Result<(Value, bool), Failure> {
    let mut irreducible = Vec::new();
    let mut nonzero = true;
    for i in 1..=5 {
        let rep = crate::reps::build_rep(&RepSpec::new(6, x.clone()).with_variant(i)).map_err(from_error)?;
        if i == 1 {
            nonzero = rep_predicates(&rep).map_err(from_error)?.iter().all(|p| !p.is_zero);
        }
        irreducible.push(irreducible_oracle(&rep).map_err(from_error)?);
    }
    let agrees = nonzero == irreducible.iter().all(|&b| b);
    Ok((
        json!({"predicates_nonzero": nonzero, "variants_irreducible": irreducible, "agrees": agrees}),
        agrees,
    ))
}

fn cmd_irred(cfg: &JobConfig) -> CmdResult {
    let (reps, deferred) = job_reps(cfg, true)?;
    let mut failed = Vec::new();
    let mut items = Vec::new();
    for rep in &reps {
        let a = analyze_irreducibility(rep).map_err(from_error)?;
        if !a.agrees {
            failed.push(format!("{}: predicates disagree with the closure oracle", a.label));
        }
        if a.oracle_irreducible && a.commutant_dim != 1 {
            failed.push(format!(
                "{}: irreducible but commutant dimension {}",
                a.label, a.commutant_dim
            ));
        }
        let mut item = a.to_json();
        item["spec"] = rep.spec.to_json();
        items.push(item);
    }
    let mut report = header("irred", cfg);
    report["results"] = Value::Array(items);
    report["deferred"] = deferred;
    if let Some(x) = reps.iter().find(|r| r.spec.dim == 6).map(|r| r.spec.params.clone()) {
        let (family, agrees) = dim6_family(&x)?;
        if !agrees {
            failed.push("dimension-6 family: predicates disagree with the closure oracle".into());
        }
        report["dim6_family"] = family;
    }
    report["failed"] = json!(failed);
    Ok(Outcome { report, failed })
}

fn cmd_semisimple(cfg: &JobConfig, opts: &Options) -> CmdResult {
    let x = cfg.x()?;
    let mode = cfg.mode(opts)?;
    let ss = semisimplicity(&x).map_err(from_error)?;
    let mut report = header("semisimple", cfg);
    report["X"] = x.to_json();
    report["verdict"] = json!(ss.verdict);
    report["failing"] = json!(ss.failing_names());
    report["failing_values"] = ss.to_json()["failing_values"].clone();
    report["predicate_count"] = json!(ss.predicates.len());
    let mut failed = Vec::new();
    if ss.verdict {
        let census = dimension_census(&x, mode, &cfg.hints).map_err(from_error)?;
        if !census.matches() {
            failed.push(format!(
                "census: sum of squares {} differs from algebra dimension {}",
                census.sum_of_squares, census.algebra_dim
            ));
        }
        if !census.all_inequivalent {
            failed.push("census: two enumerated representations are equivalent".into());
        }
        report["census"] = census.to_json();
    } else {
        report["census"] = json!({"applicable": false, "mode": mode.name()});
    }
    report["failed"] = json!(failed);
    Ok(Outcome { report, failed })
}

fn cmd_eval(cfg: &JobConfig, opts: &Options) -> CmdResult {
    let spec = cfg
        .spec()?
        .ok_or_else(|| input_error("eval needs a representation: give \"dim\" (and h, f or variant)"))?;
    let rep = crate::reps::build_rep(&spec).map_err(from_error)?;
    let words = cfg.words(opts);
    if words.is_empty() {
        return Err(input_error("eval needs at least one word (--words or \"words\")"));
    }
    let ev = Evaluator::new(&rep).map_err(from_error)?;
    let mut items = Vec::new();
    for text in &words {
        let w = parse(text).map_err(from_error)?;
        let m = ev.evaluate(&w);
        let mut item = json!({"word": w.to_string(), "matrix": m.to_json(), "trace": m.trace().to_json()});
        if let Some(c) = m.as_scalar() {
            item["scalar"] = c.to_json();
        }
        items.push(item);
    }
    let mut report = header("eval", cfg);
    report["spec"] = spec.to_json();
    report["results"] = Value::Array(items);
    Ok(Outcome {
        report,
        failed: Vec::new(),
    })
}

/// Parameter lists of a scan: explicit `points`, or all `size`-subsets of `values` in lexicographic order.
fn scan_points(cfg: &JobConfig) -> std::result::Result<Vec<Value>, Failure> {
    let scan = cfg
        .raw
        .get("scan")
        .ok_or_else(|| input_error("scan needs a \"scan\" section"))?;
    if let Some(points) = scan.get("points").and_then(Value::as_array) {
        return Ok(points.clone());
    }
    let values = scan
        .get("values")
        .and_then(Value::as_array)
        .ok_or_else(|| input_error("scan needs \"points\" or \"values\""))?;
    let size = scan
        .get("size")
        .and_then(Value::as_u64)
        .ok_or_else(|| input_error("scan needs an integer \"size\""))? as usize;
    if size == 0 || size > values.len() {
        return Err(input_error(format!("scan size {size} out of range")));
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(Value::Array(idx.iter().map(|&i| values[i].clone()).collect()));
        let Some(k) = (0..size).rev().find(|&k| idx[k] != k + values.len() - size) else {
            break;
        };
        idx[k] += 1;
        for j in k + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(out)
}

fn scan_point(cfg: &JobConfig, oracle: bool, point: &Value) -> Value {
    let x = match parse_params(&cfg.ctx, point) {
        Ok(x) => x,
        Err(e) => return json!({"X": point, "error": e.to_string()}),
    };
    let ss = match semisimplicity(&x) {
        Ok(s) => s,
        Err(e) => return json!({"X": point, "error": e.to_string()}),
    };
    let mut item = json!({"X": x.to_json(), "semisimple": ss.verdict, "failing": ss.failing_names()});
    if oracle {
        let mut agrees = true;
        let mut checked = Vec::new();
        match enumerate_irreps(&x, &cfg.hints) {
            Ok(e) => {
                for r in e.reps.iter().filter(|r| r.subset.len() == x.len() && r.rep.dim() <= 5) {
                    let a = analyze_irreducibility(&r.rep);
                    let ok = a.as_ref().map(|a| a.agrees).unwrap_or(false);
                    agrees &= ok;
                    checked.push(r.rep.label());
                }
                if x.len() == 5 {
                    match dim6_family(&x) {
                        Ok((_, ok)) => agrees &= ok,
                        Err(_) => agrees = false,
                    }
                    checked.push("rho6[1..5]".into());
                }
            }
            Err(e) => return json!({"X": point, "error": e.to_string()}),
        }
        item["oracle_checked"] = json!(checked);
        item["oracle_agrees"] = json!(agrees);
    }
    item
}

fn cmd_scan(cfg: &JobConfig, opts: &Options) -> CmdResult {
    let points = scan_points(cfg)?;
    let oracle = cfg.raw["scan"].get("oracle").and_then(Value::as_bool).unwrap_or(false);
    let jobs = opts.jobs.unwrap_or(1).max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(input_error)?;
    let mut results: Vec<(usize, Value)> = pool.install(|| {
        points
            .par_iter()
            .enumerate()
            .map(|(i, p)| (i, scan_point(cfg, oracle, p)))
            .collect()
    });
    results.sort_by_key(|(i, _)| *i);
    let mut failed = Vec::new();
    let mut semisimple = 0;
    let mut errors = 0;
    let items: Vec<Value> = results
        .into_iter()
        .map(|(i, mut v)| {
            if v.get("error").is_some() {
                errors += 1;
            }
            if v.get("semisimple") == Some(&Value::Bool(true)) {
                semisimple += 1;
            }
            if v.get("oracle_agrees") == Some(&Value::Bool(false)) {
                failed.push(format!("point {i}: predicates disagree with the closure oracle"));
            }
            v["index"] = json!(i);
            v
        })
        .collect();
    let mut report = header("scan", cfg);
    report["count"] = json!(items.len());
    report["semisimple_count"] = json!(semisimple);
    report["error_count"] = json!(errors);
    report["points"] = Value::Array(items);
    report["failed"] = json!(failed);
    Ok(Outcome { report, failed })
}

/// Replaces every JSON number by its decimal string.
pub fn stringify_numbers(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(items) => Value::Array(items.into_iter().map(stringify_numbers).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, stringify_numbers(v))).collect()),
        other => other,
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let (opts, result) = match &cli.command {
        Command::Build(o) => (o, load_config(o).and_then(|c| cmd_build(&c))),
        Command::Verify(o) => (o, load_config(o).and_then(|c| cmd_verify(&c))),
        Command::Irred(o) => (o, load_config(o).and_then(|c| cmd_irred(&c))),
        Command::Semisimple(o) => (o, load_config(o).and_then(|c| cmd_semisimple(&c, o))),
        Command::Eval(o) => (o, load_config(o).and_then(|c| cmd_eval(&c, o))),
        Command::Scan(o) => (o, load_config(o).and_then(|c| cmd_scan(&c, o))),
    };
    match result {
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
        Ok(outcome) => {
            let text =
                serde_json::to_string_pretty(&stringify_numbers(outcome.report)).expect("JSON values serialize") + "\n";
            let written = match &opts.output {
                Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if outcome.failed.is_empty() {
                0
            } else {
                for f in &outcome.failed {
                    let _ = writeln!(err, "check failed: {f}");
                }
                1
            }
        }
    }
}
