//! `stone`: parse object descriptions, dispatch duality computations and
//! law checks, render reports.
//!
//! Exit codes: 0 = success / all checks pass, 1 = a verdict is false or a
//! law fails, 2 = input or representation error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stone_duality::laws::{self, LawConfig, Report};
use stone_duality::space::is_dense;
use stone_duality::{
    catalog, dz, json as enc, mz, tarski, Algebra, AlgebraDescriptor, DzAlgebra, Error, Ideal,
    LbaPair, Level, PointSet, SpacePresentation,
};

#[derive(Parser)]
#[command(name = "stone", version, about = "Stone duality engine for finitely representable Boolean algebras", long_about = None)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the built-in worked examples
    Catalog,
    /// Parse and validate an object envelope
    Validate {
        /// Inline JSON, a file path, or - for stdin
        input: String,
    },
    /// Apply a duality functor to an object
    Dual {
        #[arg(long, value_enum)]
        functor: Functor,
        /// Inline JSON, a file path, or - for stdin
        input: String,
    },
    /// Decide a verdict on an object, or run the randomized law suite
    Check {
        #[arg(long, value_enum)]
        law: Law,
        /// Inline JSON, a file path, or - for stdin (unused for --law suite)
        input: Option<String>,
        /// Seed for the randomized suites
        #[arg(long, default_value_t = LawConfig::default().seed)]
        seed: u64,
        /// Exhaustive bound for the finite-backend suites
        #[arg(long, default_value_t = 3)]
        max_atoms: usize,
    },
    /// Run the catalog roundtrip checks
    Roundtrip {
        /// Restrict to one roundtrip family
        #[arg(long, value_enum)]
        pair: Option<Pair>,
        #[arg(long, default_value_t = LawConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_atoms: usize,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Functor {
    #[value(name = "F")]
    F,
    #[value(name = "G")]
    G,
    #[value(name = "E")]
    E,
    #[value(name = "Ep")]
    Ep,
    #[value(name = "Fp")]
    Fp,
    #[value(name = "Gp")]
    Gp,
    ThetaT,
    ThetaA,
    #[value(name = "P")]
    P,
    #[value(name = "At")]
    At,
}

#[derive(Copy, Clone, ValueEnum)]
enum Law {
    Z,
    Dz,
    Ldz,
    Dense,
    Lba,
    Zlba,
    Suite,
}

#[derive(Copy, Clone, ValueEnum)]
enum Pair {
    #[value(name = "E")]
    E,
    #[value(name = "Fp")]
    Fp,
    Iota,
    Stone,
}

/// Command outcome: a rendered value plus the verdict that drives the
/// exit code.
struct Outcome {
    value: Value,
    verdict: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.cmd) {
        Ok(out) => {
            render(&out.value, cli.format);
            if out.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn render(v: &Value, format: Format) {
    match format {
        Format::Json => {
            if let Some(reports) = v.get("reports").and_then(Value::as_array) {
                for r in reports {
                    println!("{r}");
                }
            } else {
                println!("{v}");
            }
        }
        Format::Human => render_human(v, 0),
    }
}

fn render_human(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) if !is_leaf(val) => {
                        println!("{pad}{k}:");
                        render_human(val, indent + 1);
                    }
                    _ => println!("{pad}{k}: {val}"),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_leaf(item) {
                    println!("{pad}- {item}");
                } else {
                    println!("{pad}-");
                    render_human(item, indent + 1);
                }
            }
        }
        _ => println!("{pad}{v}"),
    }
}

fn is_leaf(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !matches!(x, Value::Object(_) | Value::Array(_))),
        Value::Object(_) => false,
        _ => true,
    }
}

fn load_input(input: &str) -> Result<Value, Error> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Validation(format!("cannot read stdin: {e}")))?;
        s
    } else if input.trim_start().starts_with(['{', '[']) {
        input.to_string()
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| Error::Validation(format!("cannot read {input}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// A parsed input envelope: an algebra with optional dependents, or a
/// space presentation, or a plain point list.
struct Envelope {
    algebra: Option<Algebra>,
    element: Option<stone_duality::Element>,
    ideal: Option<Ideal>,
    point_set: Option<PointSet>,
    space: Option<SpacePresentation>,
    points: Option<Vec<String>>,
}

fn parse_envelope(v: &Value) -> Result<Envelope, Error> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Validation("input must be a JSON object".into()))?;
    for k in obj.keys() {
        if !matches!(k.as_str(), "algebra" | "element" | "ideal" | "point-set" | "space" | "points")
        {
            return Err(Error::Validation(format!("unknown input key {k:?}")));
        }
    }
    let algebra = obj
        .get("algebra")
        .map(|a| {
            let d: AlgebraDescriptor = serde_json::from_value(a.clone())
                .map_err(|e| Error::Validation(format!("bad algebra: {e}")))?;
            Algebra::new(d)
        })
        .transpose()?;
    let need_algebra = |what: &str| {
        Error::Validation(format!("{what} requires an \"algebra\" in the same envelope"))
    };
    let element = obj
        .get("element")
        .map(|e| {
            let a = algebra.as_ref().ok_or_else(|| need_algebra("an element"))?;
            enc::element_from_json(a, e)
        })
        .transpose()?;
    let ideal = obj
        .get("ideal")
        .map(|i| {
            let a = algebra.as_ref().ok_or_else(|| need_algebra("an ideal"))?;
            enc::ideal_from_json(a, i)
        })
        .transpose()?;
    let point_set = obj
        .get("point-set")
        .map(|p| {
            let a = algebra.as_ref().ok_or_else(|| need_algebra("a point set"))?;
            enc::point_set_from_json(a, p)
        })
        .transpose()?;
    let space = obj
        .get("space")
        .map(|s| {
            serde_json::from_value::<SpacePresentation>(s.clone())
                .map_err(|e| Error::Validation(format!("bad space: {e}")))
        })
        .transpose()?;
    let points = obj
        .get("points")
        .map(|p| {
            serde_json::from_value::<Vec<String>>(p.clone())
                .map_err(|e| Error::Validation(format!("bad point list: {e}")))
        })
        .transpose()?;
    Ok(Envelope { algebra, element, ideal, point_set, space, points })
}

impl Envelope {
    fn algebra(&self) -> Result<&Algebra, Error> {
        self.algebra
            .as_ref()
            .ok_or_else(|| Error::Validation("this command needs an \"algebra\"".into()))
    }

    fn space(&self) -> Result<&SpacePresentation, Error> {
        self.space
            .as_ref()
            .ok_or_else(|| Error::Validation("this command needs a \"space\"".into()))
    }

    fn dz_pair(&self) -> Result<DzAlgebra, Error> {
        let a = self.algebra()?;
        let x = self
            .point_set
            .clone()
            .ok_or_else(|| Error::Validation("this command needs a \"point-set\"".into()))?;
        DzAlgebra::analyze(a, x)
    }

    fn lba_pair(&self) -> Result<LbaPair, Error> {
        let a = self.algebra()?;
        let i = self
            .ideal
            .clone()
            .ok_or_else(|| Error::Validation("this command needs an \"ideal\"".into()))?;
        LbaPair::analyze(a, i)
    }
}

fn dz_pair_json(d: &DzAlgebra) -> Result<Value, Error> {
    Ok(json!({
        "algebra": d.algebra.descriptor(),
        "point-set": enc::point_set_to_json(&d.algebra, &d.point_set)?,
        "level": match d.level {
            Some(Level::Ldz) => "ldz",
            Some(Level::Dz) => "dz",
            Some(Level::Z) => "z",
            None => "none",
        },
    }))
}

fn lba_pair_json(p: &LbaPair) -> Result<Value, Error> {
    Ok(json!({
        "algebra": p.algebra.descriptor(),
        "ideal": enc::ideal_to_json(&p.ideal)?,
        "lba": p.is_lba,
        "zlba": p.is_zlba,
    }))
}

fn run(cmd: &Cmd) -> Result<Outcome, Error> {
    match cmd {
        Cmd::Catalog => run_catalog(),
        Cmd::Validate { input } => run_validate(&load_input(input)?),
        Cmd::Dual { functor, input } => run_dual(*functor, &load_input(input)?),
        Cmd::Check { law, input, seed, max_atoms } => {
            let v = match input {
                Some(i) => Some(load_input(i)?),
                None => None,
            };
            run_check(*law, v.as_ref(), *seed, *max_atoms)
        }
        Cmd::Roundtrip { pair, seed, max_atoms } => run_roundtrip(*pair, *seed, *max_atoms),
    }
}

fn run_catalog() -> Result<Outcome, Error> {
    let cat = catalog::builtin()?;
    let algebras: Vec<Value> = cat
        .algebras
        .iter()
        .map(|(n, a)| json!({ "name": n, "algebra": a.descriptor() }))
        .collect();
    let spaces: Vec<Value> =
        cat.spaces.iter().map(|(n, s)| json!({ "name": n, "space": s })).collect();
    let pairs: Vec<Value> = cat
        .pairs
        .iter()
        .map(|(n, p)| {
            Ok(json!({
                "name": n,
                "algebra": p.algebra.descriptor(),
                "ideal": enc::ideal_to_json(&p.ideal)?,
                "lba": p.is_lba,
                "zlba": p.is_zlba,
            }))
        })
        .collect::<Result<_, Error>>()?;
    let dz_objects: Vec<Value> = cat
        .dz_objects
        .iter()
        .map(|(n, d)| {
            let mut o = dz_pair_json(d)?;
            o.as_object_mut().unwrap().insert("name".into(), json!(n));
            Ok(o)
        })
        .collect::<Result<_, Error>>()?;
    Ok(Outcome {
        value: json!({
            "algebras": algebras,
            "spaces": spaces,
            "pairs": pairs,
            "dz-objects": dz_objects,
        }),
        verdict: true,
    })
}

fn run_validate(v: &Value) -> Result<Outcome, Error> {
    let env = parse_envelope(v)?;
    let mut out = serde_json::Map::new();
    if let Some(a) = &env.algebra {
        out.insert("algebra".into(), serde_json::to_value(a.descriptor()).unwrap());
    }
    if let Some(e) = &env.element {
        out.insert("element".into(), enc::element_to_json(env.algebra()?, e)?);
    }
    if let Some(i) = &env.ideal {
        out.insert("ideal".into(), enc::ideal_to_json(i)?);
    }
    if let Some(p) = &env.point_set {
        out.insert("point-set".into(), enc::point_set_to_json(env.algebra()?, p)?);
    }
    if let Some(s) = &env.space {
        out.insert("space".into(), serde_json::to_value(s).unwrap());
    }
    if let Some(p) = &env.points {
        out.insert("points".into(), serde_json::to_value(p).unwrap());
    }
    if out.is_empty() {
        return Err(Error::Validation("empty envelope: nothing to validate".into()));
    }
    out.insert("valid".into(), Value::Bool(true));
    Ok(Outcome { value: Value::Object(out), verdict: true })
}

fn run_dual(functor: Functor, v: &Value) -> Result<Outcome, Error> {
    let env = parse_envelope(v)?;
    let value = match functor {
        Functor::F => dz_pair_json(&dz::f_obj(env.space()?)?)?,
        Functor::G => {
            let (sp, locally_compact) = dz::g_obj(&env.dz_pair()?)?;
            json!({ "space": sp, "locally-compact": locally_compact })
        }
        Functor::E => lba_pair_json(&dz::e_obj(&env.dz_pair()?)?)?,
        Functor::Ep => dz_pair_json(&dz::ep_obj(&env.lba_pair()?)?)?,
        Functor::Fp => {
            let m = mz::fp_obj(&env.dz_pair()?)?;
            let mut o = dz_pair_json(&m.base)?;
            let map = o.as_object_mut().unwrap();
            map.insert("z-map".into(), Value::Bool(m.z_map));
            map.insert("mz-map".into(), Value::Bool(m.mz_map));
            map.insert("lmz-map".into(), Value::Bool(m.lmz_map));
            o
        }
        Functor::Gp => dz_pair_json(&mz::gp_obj(&mz::fp_obj(&env.dz_pair()?)?)?)?,
        Functor::ThetaT => lba_pair_json(&dz::theta_t(env.space()?)?)?,
        Functor::ThetaA => json!({ "space": dz::theta_a(&env.lba_pair()?)? }),
        Functor::P => {
            let pts = env
                .points
                .as_ref()
                .ok_or_else(|| Error::Validation("P needs a \"points\" list".into()))?;
            json!({ "algebra": tarski::p_obj(pts)?.descriptor() })
        }
        Functor::At => {
            let a = env.algebra()?;
            let atoms: Vec<Value> = tarski::at_obj(a)?
                .iter()
                .map(|e| enc::element_to_json(a, e))
                .collect::<Result<_, Error>>()?;
            json!({ "atoms": atoms })
        }
    };
    Ok(Outcome { value, verdict: true })
}

fn witness_json(w: &Option<stone_duality::Witness>) -> Value {
    match w {
        None => Value::Null,
        Some(w) => Value::String(format!("{w:?}")),
    }
}

fn run_check(law: Law, v: Option<&Value>, seed: u64, max_atoms: usize) -> Result<Outcome, Error> {
    if matches!(law, Law::Suite) {
        let cfg = LawConfig { seed, max_atoms, ..LawConfig::default() };
        return Ok(report_outcome(laws::law_suite(&cfg)?));
    }
    let v = v.ok_or_else(|| Error::Validation("this check needs an input object".into()))?;
    let env = parse_envelope(v)?;
    let value = match law {
        Law::Z | Law::Dz | Law::Ldz => {
            let level = match law {
                Law::Z => Level::Z,
                Law::Dz => Level::Dz,
                _ => Level::Ldz,
            };
            let a = env.algebra()?;
            let x = env
                .point_set
                .clone()
                .ok_or_else(|| Error::Validation("this check needs a \"point-set\"".into()))?;
            let verdict = dz::validate(a, &x, level)?;
            json!({ "pass": verdict.pass, "witness": witness_json(&verdict.witness) })
        }
        Law::Dense => {
            if let Some(i) = &env.ideal {
                let (dense, w) = i.is_dense()?;
                let w = match w {
                    Some(e) => enc::element_to_json(env.algebra()?, &e)?,
                    None => Value::Null,
                };
                json!({ "pass": dense, "witness": w })
            } else {
                let a = env.algebra()?;
                let x = env
                    .point_set
                    .clone()
                    .ok_or_else(|| Error::Validation("dense needs an \"ideal\" or \"point-set\"".into()))?;
                json!({ "pass": is_dense(a, &x)?, "witness": Value::Null })
            }
        }
        Law::Lba => {
            let p = env.lba_pair()?;
            let w = match &p.density_witness {
                Some(e) => enc::element_to_json(&p.algebra, e)?,
                None => Value::Null,
            };
            json!({ "pass": p.is_lba, "witness": w })
        }
        Law::Zlba => {
            let p = env.lba_pair()?;
            let w = match &p.zlba_witness {
                Some(jw) => Value::String(format!(
                    "joinless simple ideal: {} in block {}",
                    jw.index_set.describe(),
                    jw.block
                )),
                None => Value::Null,
            };
            json!({ "pass": p.is_zlba, "witness": w })
        }
        Law::Suite => unreachable!(),
    };
    let verdict = value["pass"].as_bool().unwrap();
    Ok(Outcome { value, verdict })
}

fn report_outcome(reports: Vec<Report>) -> Outcome {
    let verdict = reports.iter().all(|r| r.pass);
    let failed = reports.iter().filter(|r| !r.pass).count();
    Outcome {
        value: json!({
            "pass": verdict,
            "cases": reports.len(),
            "failed": failed,
            "reports": reports.iter().map(|r| serde_json::to_value(r).unwrap()).collect::<Vec<_>>(),
        }),
        verdict,
    }
}

fn run_roundtrip(pair: Option<Pair>, seed: u64, max_atoms: usize) -> Result<Outcome, Error> {
    let mut reports = Vec::new();
    let want = |p: Pair| pair.is_none() || matches!((pair, p), (Some(a), b) if a as u8 == b as u8);
    if want(Pair::E) {
        reports.extend(laws::roundtrip_suite()?);
    }
    if want(Pair::Fp) {
        let cfg = LawConfig { seed, max_atoms, fc_cases: 0, ..LawConfig::default() };
        reports.extend(
            laws::functor_law_suite(&cfg)?
                .into_iter()
                .filter(|r| r.case.contains("gp-fp")),
        );
    }
    if want(Pair::Iota) {
        reports.extend(laws::iota_suite(max_atoms)?);
    }
    if want(Pair::Stone) {
        reports.extend(laws::stone_iso_suite(max_atoms)?);
    }
    Ok(report_outcome(reports))
}
