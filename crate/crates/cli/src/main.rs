use std::fmt::Write as _;
use std::process::ExitCode;

use bicrystal::admissible::{
    adm_with_trace, all_words, converse_check_word, propb_checks, verify_djm_corollary, verify_djm_forward,
};
use bicrystal::crystal::{crystal_dot, enumerate_uglov, is_uglov, uglov_layers};
use bicrystal::diagrams::{boundary_sequence, nature_table, render_tables, sufficient_window};
use bicrystal::isomorphism::{path_between, psi_between, psi_nature_check};
use bicrystal::{Bipartition, Charge, CrystalParams, Modulus};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "bicrystal", version, about = "Level-two Fock space crystals and admissible sequences")]
struct Cli {
    /// e >= 2, or "inf".
    #[arg(long, global = true, default_value = "3", value_parser = parse_modulus)]
    e: Modulus,
    /// Charge as s1,s2.
    #[arg(long, global = true, default_value = "0,1", allow_hyphen_values = true, value_parser = parse_charge)]
    charge: Charge,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for sweeps (0 picks the number of CPUs).
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Content window lo,hi for nature tables and boundary sequences.
    #[arg(long, global = true, allow_hyphen_values = true, value_parser = parse_window)]
    window: Option<(i64, i64)>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List the Uglov bipartitions of rank n.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Run a verification sweep over all ranks up to n.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        n: usize,
    },
    /// Show natures, boundary sequence, Adm or a Ψ image of one bipartition.
    Show {
        bp: String,
        /// natures | boundary | adm | psi:s1,s2
        what: String,
    },
    /// Crystal graph up to rank n in DOT.
    Dot {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Forward,
    Converse,
    Corollary,
    Propb,
    PsiNature,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Forward => "forward",
            Mode::Converse => "converse",
            Mode::Corollary => "corollary",
            Mode::Propb => "propb",
            Mode::PsiNature => "psi-nature",
        }
    }
}

fn parse_modulus(s: &str) -> Result<Modulus, String> {
    s.parse().map_err(|e: bicrystal::Error| e.to_string())
}

fn parse_charge(s: &str) -> Result<Charge, String> {
    s.parse().map_err(|e: bicrystal::Error| e.to_string())
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("window {s:?} must be lo,hi"))?;
    let lo = a.trim().parse().map_err(|_| format!("bad window bound {a:?}"))?;
    let hi = b.trim().parse().map_err(|_| format!("bad window bound {b:?}"))?;
    if lo > hi {
        return Err(format!("empty window {lo},{hi}"));
    }
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Counterexample(String),
}

impl From<bicrystal::Error> for Failure {
    fn from(e: bicrystal::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn e_json(e: Modulus) -> Value {
    match e {
        Modulus::Finite(e) => json!(e),
        Modulus::Infinite => json!("inf"),
    }
}

fn header(cli: &Cli) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("e".into(), e_json(cli.e));
    m.insert("charge".into(), json!([cli.charge.s1, cli.charge.s2]));
    m
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn params(cli: &Cli) -> CrystalParams {
    CrystalParams::new(cli.e, cli.charge)
}

fn no_dot(cli: &Cli) -> Result<(), Failure> {
    if cli.format == Format::Dot {
        return Err(Failure::Usage("--format dot is only available for the dot command".into()));
    }
    Ok(())
}

fn enumerate(cli: &Cli, n: usize) -> Result<String, Failure> {
    no_dot(cli)?;
    let list: Vec<String> = enumerate_uglov(n, &params(cli)).iter().map(|b| b.to_string()).collect();
    Ok(match cli.format {
        Format::Json => {
            let mut m = header(cli);
            m.insert("n".into(), json!(n));
            m.insert("count".into(), json!(list.len()));
            m.insert("bipartitions".into(), json!(list));
            pretty(&Value::Object(m))
        }
        _ => {
            let mut out = String::new();
            for b in &list {
                let _ = writeln!(out, "{b}");
            }
            let _ = writeln!(out, "count {}", list.len());
            out
        }
    })
}

/// One sweep item: `Ok(None)` passed, `Ok(Some(report))` failed.
type Outcome = Result<Option<Value>, bicrystal::Error>;

fn check_one(mode: Mode, bp: &Bipartition, p: &CrystalParams) -> Outcome {
    let fail = |pass: bool, v: Value| if pass { None } else { Some(v) };
    Ok(match mode {
        Mode::Forward => {
            let r = verify_djm_forward(bp, p)?;
            let expansion: Vec<Value> = r.expansion.iter().map(|(b, c)| json!([b.to_string(), c])).collect();
            fail(
                r.pass,
                json!({"bp": r.bp.to_string(), "adm": r.adm, "expansion": expansion,
                       "max": r.max.map(|m| m.to_string()), "pass": r.pass}),
            )
        }
        Mode::Corollary => {
            let r = verify_djm_corollary(bp, p)?;
            let shapes: Vec<String> = r.shapes.iter().map(|b| b.to_string()).collect();
            fail(r.pass, json!({"bp": r.bp.to_string(), "adm": r.adm, "shapes": shapes, "pass": r.pass}))
        }
        Mode::Propb => match propb_checks(bp, p)? {
            None => None,
            Some(r) => fail(r.pass, serde_json::to_value(&r).expect("json")),
        },
        Mode::PsiNature => {
            let to = p.charge.swapped();
            let image = psi_between(bp, p.charge, to, p.e)?;
            let ok = psi_nature_check(bp, &image, p.charge, to)?;
            fail(ok, json!({"bp": bp.to_string(), "image": image.to_string(), "pass": ok}))
        }
        Mode::Converse => unreachable!("converse sweeps words"),
    })
}

fn verify(cli: &Cli, mode: Mode, n: usize) -> Result<String, Failure> {
    no_dot(cli)?;
    let p = params(cli);
    let results: Vec<Outcome> = if mode == Mode::Converse {
        let Some(e) = p.e.finite() else {
            return Err(Failure::Usage("converse mode needs a finite e".into()));
        };
        let words: Vec<Vec<i64>> = (0..=n).flat_map(|k| all_words(k, e)).collect();
        words
            .par_iter()
            .map(|w| {
                Ok(converse_check_word(w, &p)
                    .map(|c| json!({"word": c.word, "max": c.max.to_string(), "uglov": false})))
            })
            .collect()
    } else {
        let items: Vec<Bipartition> = uglov_layers(n, &p).into_iter().flatten().collect();
        items.par_iter().map(|bp| check_one(mode, bp, &p)).collect()
    };
    let checked = results.len();
    let mut failures = Vec::new();
    for r in results {
        if let Some(v) = r? {
            failures.push(v);
        }
    }
    let pass = failures.is_empty();
    let count = failures.len();
    let out = match cli.format {
        Format::Json => {
            let mut m = header(cli);
            m.insert("mode".into(), json!(mode.name()));
            m.insert("n".into(), json!(n));
            m.insert("checked".into(), json!(checked));
            m.insert("pass".into(), json!(pass));
            m.insert("counterexamples".into(), Value::Array(failures.clone()));
            pretty(&Value::Object(m))
        }
        _ => {
            let mut out = String::new();
            for f in &failures {
                let _ = writeln!(out, "counterexample {f}");
            }
            let _ = writeln!(
                out,
                "{} e={} s={} n<={}: checked {}, counterexamples {}: {}",
                mode.name(),
                cli.e,
                cli.charge,
                n,
                checked,
                failures.len(),
                if pass { "PASS" } else { "FAIL" }
            );
            out
        }
    };
    if pass {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Counterexample(format!("{count} counterexample(s)")))
    }
}

fn require_uglov(bp: &Bipartition, p: &CrystalParams) -> Result<(), Failure> {
    if is_uglov(bp, p) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "{bp} is not an Uglov bipartition at e={}, charge {} (good-node peeling does not reach the empty bipartition)",
            p.e, p.charge
        )))
    }
}

fn show(cli: &Cli, bp: &str, what: &str) -> Result<String, Failure> {
    no_dot(cli)?;
    let bp: Bipartition = bp.parse()?;
    let p = params(cli);
    let s = cli.charge;
    let window = cli.window.unwrap_or_else(|| sufficient_window(&bp, s));
    let json_out = cli.format == Format::Json;
    if what == "natures" {
        let t = nature_table(&bp, s, window)?;
        return Ok(if json_out {
            pretty(&serde_json::to_value(&t).expect("json"))
        } else {
            render_tables(&[(&bp.to_string(), &t)])
        });
    }
    if what == "boundary" {
        let b = boundary_sequence(&bp, s, window)?;
        return Ok(if json_out {
            pretty(&serde_json::to_value(&b).expect("json"))
        } else {
            let mut out = String::new();
            for node in &b.nodes {
                let _ = writeln!(out, "{node} content {}", node.content(s));
            }
            out
        });
    }
    if what == "adm" {
        require_uglov(&bp, &p)?;
        let (path, trace) = adm_with_trace(&bp, &p)?;
        let seq = trace.sequence();
        return Ok(if json_out {
            let classes: Vec<Value> = trace
                .classes
                .iter()
                .map(|(j, nodes)| json!({"residue": j, "nodes": nodes}))
                .collect();
            let mut m = header(cli);
            m.insert("bp".into(), json!(bp.to_string()));
            m.insert("adm".into(), json!(seq));
            m.insert("fundamental".into(), json!([path.end().s1, path.end().s2]));
            m.insert("flotw".into(), json!(trace.bp.to_string()));
            m.insert("classes".into(), Value::Array(classes));
            pretty(&Value::Object(m))
        } else {
            let seq: Vec<String> = seq.iter().map(|j| j.to_string()).collect();
            seq.join(",") + "\n"
        });
    }
    if let Some(target) = what.strip_prefix("psi:") {
        let to: Charge = target.parse()?;
        require_uglov(&bp, &p)?;
        let image = psi_between(&bp, s, to, cli.e)?;
        return Ok(if json_out {
            let mut m = header(cli);
            m.insert("bp".into(), json!(bp.to_string()));
            m.insert("to".into(), json!([to.s1, to.s2]));
            if let Modulus::Finite(e) = cli.e {
                m.insert("path".into(), serde_json::to_value(path_between(s, to, e)?).expect("json"));
            }
            m.insert("image".into(), json!(image.to_string()));
            pretty(&Value::Object(m))
        } else {
            format!("{image}\n")
        });
    }
    Err(Failure::Usage(format!(
        "unknown view {what:?}; expected natures, boundary, adm or psi:s1,s2"
    )))
}

fn dot(cli: &Cli, n: usize) -> Result<String, Failure> {
    match cli.format {
        Format::Json => Err(Failure::Usage("the dot command writes DOT or text only".into())),
        _ => Ok(crystal_dot(n, &params(cli))),
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.cmd {
        Cmd::Enumerate { n } => enumerate(cli, *n),
        Cmd::Verify { mode, n } => verify(cli, *mode, *n),
        Cmd::Show { bp, what } => show(cli, bp, what),
        Cmd::Dot { n } => dot(cli, *n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build();
    let result = match pool {
        Ok(pool) => pool.install(|| run(&cli)),
        Err(e) => Err(Failure::Usage(format!("cannot start worker pool: {e}"))),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Counterexample(msg)) => {
            eprintln!("bicrystal: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("bicrystal: {msg}");
            ExitCode::from(2)
        }
    }
}
