mod args;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::Parser;
use csst_core::constructions::{
    cyclic_code, cyclic_csst_conditions, double_code, grm, reed_muller, search_cyclic, CyclicSpec, Phi,
};
use csst_core::csst::{
    bcr_screen, bounds_check, css_parameters_bounded, csst_binary_definition, csst_binary_intersection,
    csst_binary_star, csst_qary, is_css_pair, trace_c2_self_orthogonal,
};
use csst_core::qsim::{build_code_space, simulate};
use csst_core::{random, CssPair, FieldSpec, LinearCode, Matrix};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use args::{Check, Cli, Command, Construct, Format, Global, Method, PairInput, Via};

/// On-disk CSS pair.
#[derive(Serialize, Deserialize)]
struct PairFile {
    c1: LinearCode,
    c2: LinearCode,
}

/// Result of a command: the JSON values to print and the exit status.
struct Outcome {
    values: Vec<Value>,
    passes: bool,
}

impl Outcome {
    fn one(v: Value) -> Self {
        Outcome { values: vec![v], passes: true }
    }
}

fn field(g: &Global) -> anyhow::Result<FieldSpec> {
    Ok(match g.primitive_poly {
        Some(p) => FieldSpec::new(g.field_s, p)?,
        None => FieldSpec::with_degree(g.field_s)?,
    })
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Both codes, without requiring nesting.
fn read_codes(input: &PairInput) -> anyhow::Result<(LinearCode, LinearCode)> {
    match (&input.pair, &input.c1, &input.c2) {
        (Some(p), _, _) => {
            let f: PairFile = read_json(p)?;
            Ok((f.c1, f.c2))
        }
        (None, Some(a), Some(b)) => Ok((read_json(a)?, read_json(b)?)),
        _ => bail!("give --pair or both --c1 and --c2"),
    }
}

fn read_pair(input: &PairInput) -> anyhow::Result<CssPair> {
    let (c1, c2) = read_codes(input)?;
    Ok(CssPair::new(c1, c2)?)
}

fn pair_json(pair: &CssPair) -> anyhow::Result<Value> {
    Ok(json!({ "c1": pair.c1(), "c2": pair.c2() }))
}

fn construct(cmd: &Construct, g: &Global) -> anyhow::Result<Outcome> {
    let code = match cmd {
        Construct::Rm { r, m } => reed_muller(*r, *m)?,
        Construct::Grm { r, m } => grm(field(g)?, *r, *m)?,
        Construct::Cyclic { n, gen, defining_set, generating_set, describe } => {
            let f = field(g)?;
            let spec = match (gen, defining_set, generating_set) {
                (Some(p), _, _) => CyclicSpec::generator(*n, f, p.clone()),
                (_, Some(j), _) => CyclicSpec::defining(*n, f, j.clone()),
                (_, _, Some(i)) => CyclicSpec::generating(*n, f, i.clone()),
                _ => bail!("give one of --gen, --defining-set, --generating-set"),
            };
            if *describe {
                return Ok(Outcome::one(serde_json::to_value(spec.resolve()?)?));
            }
            cyclic_code(&spec)?
        }
        Construct::Repetition { n } => LinearCode::repetition(field(g)?, *n),
        Construct::Double { pair, phi } => {
            let pair = read_pair(pair)?;
            let phi = match phi {
                None => Phi::Identity,
                Some(path) => {
                    let rows: Vec<Vec<u32>> = read_json(path)?;
                    Phi::Matrix(Matrix::new(pair.spec(), pair.length(), &rows)?)
                }
            };
            return Ok(Outcome::one(pair_json(&double_code(&pair, &phi)?)?));
        }
    };
    Ok(Outcome::one(serde_json::to_value(&code)?))
}

fn check(cmd: &Check, g: &Global) -> anyhow::Result<Outcome> {
    let (passes, report) = match cmd.method {
        Method::Css => {
            let (c1, c2) = read_codes(&cmd.pair)?;
            let ok = is_css_pair(&c1, &c2)?;
            let k = if ok { Some(c1.dim() - c2.dim()) } else { None };
            (ok, json!({ "method": "css", "is_css_pair": ok, "k": k }))
        }
        Method::CsstBinary => {
            let pair = read_pair(&cmd.pair)?;
            match cmd.via {
                Via::Star => {
                    let v = csst_binary_star(&pair)?;
                    (v.is_csst, serde_json::to_value(&v)?)
                }
                Via::Intersection => {
                    let ok = csst_binary_intersection(&pair)?;
                    (ok, json!({ "method": "intersection", "is_csst": ok }))
                }
                Via::Definition => {
                    let ok = csst_binary_definition(&pair, g.cap)?;
                    (ok, json!({ "method": "definition", "is_csst": ok }))
                }
            }
        }
        Method::CsstQary => {
            let pair = read_pair(&cmd.pair)?;
            let v = csst_qary(&pair);
            let mut report = serde_json::to_value(&v)?;
            report["trace_c2_self_orthogonal"] = json!(trace_c2_self_orthogonal(pair.c2()));
            if let Ok(screen) = bcr_screen(&pair, g.cap) {
                report["bcr_screen"] = serde_json::to_value(screen)?;
            }
            (v.is_csst, report)
        }
        Method::TraceNecessary => {
            let (_, c2) = read_codes(&cmd.pair)?;
            let ok = trace_c2_self_orthogonal(&c2);
            (ok, json!({ "method": "trace-necessary", "trace_c2_self_orthogonal": ok }))
        }
        Method::Bounds => {
            let pair = read_pair(&cmd.pair)?;
            let params = css_parameters_bounded(&pair, g.cap)?;
            let bounds = bounds_check(&pair, &params, g.cap)?;
            let ok = !bounds.any_violated();
            let report = json!({
                "method": "bounds",
                "is_csst": csst_qary(&pair).is_csst,
                "params": params,
                "bounds": bounds,
                "violated": !ok,
            });
            (ok, report)
        }
        Method::CyclicConditions => {
            let (Some(a), Some(b)) = (&cmd.spec1, &cmd.spec2) else {
                bail!("cyclic-conditions needs --spec1 and --spec2");
            };
            let s1: CyclicSpec = read_json(a)?;
            let s2: CyclicSpec = read_json(b)?;
            let c = cyclic_csst_conditions(&s1, &s2)?;
            (c.cond1 && c.cond2, serde_json::to_value(&c)?)
        }
    };
    Ok(Outcome { values: vec![report], passes })
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Construct(c) => construct(c, g),
        Command::Check(c) => check(c, g),
        Command::Simulate(s) => {
            let pair = read_pair(&s.pair)?;
            let space = build_code_space(&pair, g.amp_cap)?;
            let lambdas: Vec<u32> = match &s.lambda {
                Some(l) => l.clone(),
                None => (0..pair.spec().q()).collect(),
            };
            if let Some(bad) = lambdas.iter().find(|&&l| !pair.spec().contains(l)) {
                bail!("lambda {bad} is not an element of {}", pair.spec());
            }
            let records = simulate(&space, &lambdas, g.tol);
            let values = records.iter().map(serde_json::to_value).collect::<Result<_, _>>()?;
            Ok(Outcome { values, passes: true })
        }
        Command::SearchCyclic(s) => {
            let f = field(g)?;
            let lengths: Vec<usize> = match s.n_to {
                Some(to) => (s.n_from..=to).filter(|n| n % 2 == 1).collect(),
                None => s.n.clone(),
            };
            let mut values = Vec::new();
            for n in lengths {
                let outcome = search_cyclic(f, n, g.cap)?;
                if outcome.divergences > 0 {
                    log::warn!("n = {n}: {} pairs where the cyclic conditions disagree with the trace criterion", outcome.divergences);
                }
                log::info!("n = {n}: examined {}, confirmed {}", outcome.examined, outcome.records.len());
                for r in outcome.records {
                    values.push(serde_json::to_value(r)?);
                }
            }
            Ok(Outcome { values, passes: true })
        }
        Command::Show(s) => {
            let code: LinearCode = read_json(&s.code)?;
            let spec = code.spec();
            let d = if code.is_zero() { None } else { Some(code.min_distance(g.cap)?) };
            let rendered: Vec<String> = code
                .generators()
                .iter()
                .map(|w| format!("({})", w.values().iter().map(|&v| spec.render(v)).collect::<Vec<_>>().join(", ")))
                .collect();
            Ok(Outcome::one(json!({
                "field": spec,
                "length": code.length(),
                "dim": code.dim(),
                "min_distance": d,
                "generators": code.generators().iter().map(|w| w.values()).collect::<Vec<_>>(),
                "rendered": rendered,
            })))
        }
        Command::RandomPair(r) => {
            let mut rng = random::rng(g.seed);
            let pair = if r.csst {
                if !field(g)?.is_binary() {
                    bail!("--csst generation is binary only");
                }
                random::random_binary_csst_pair(&mut rng, r.n, r.k1, r.k2)
            } else {
                random::random_pair(&mut rng, field(g)?, r.n, r.k1, r.k2)
            };
            Ok(Outcome::one(pair_json(&pair)?))
        }
    }
}

fn render(values: &[Value], format: Format, single: bool) -> anyhow::Result<String> {
    let mut text = match format {
        Format::Json if single => serde_json::to_string_pretty(&values[0])?,
        Format::Json => serde_json::to_string_pretty(values)?,
        Format::Jsonl => values.iter().map(serde_json::to_string).collect::<Result<Vec<_>, _>>()?.join("\n"),
    };
    if !text.is_empty() {
        text.push('\n');
    }
    Ok(text)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = run(&cli).and_then(|outcome| {
        let streaming = matches!(cli.command, Command::SearchCyclic(_));
        let single = !streaming && !matches!(cli.command, Command::Simulate(_));
        let format = cli.global.format.unwrap_or(if streaming { Format::Jsonl } else { Format::Json });
        let text = render(&outcome.values, format, single)?;
        match &cli.global.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
            None => print!("{text}"),
        }
        Ok(outcome.passes)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
