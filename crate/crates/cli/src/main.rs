use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use weyl_core::arith::rat::rat_to_text;
use weyl_core::centralizer::{centralizer_generator_with, centralizer_rational, Infeasibility, RationalCentralizer};
use weyl_core::dixmier::{certify_pair, impossibility_sweep, random_tame, AutoWord, SweepBounds, SweepPattern, TameLimits};
use weyl_core::exec::Exec;
use weyl_core::parse::{from_json_str, parse_element, print_canonical, JsonForm};
use weyl_core::weyl::{Homogeneous, WeylElement};
use weyl_core::{Error, ParseError};

#[derive(Parser, Debug)]
#[command(name = "weyl", version, about = "Exact computations in the first Weyl algebra")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of an expression.
    Normalize { expr: String },
    /// Print the commutator [A, B] = AB - BA.
    Commute { a: String, b: String },
    /// Number of nonzero graded components.
    Mass { expr: String },
    /// List the graded components.
    Components { expr: String },
    /// Total degree in X and Y.
    Degree { expr: String },
    /// Generator of the centralizer of a homogeneous element.
    Centralizer { expr: String },
    /// Find an automorphism tau with tau(Y) = P and tau(X) = Q.
    Certify { p: String, q: String },
    /// Exhaustive impossibility sweep.
    Sweep(SweepArgs),
    /// Pseudorandom tame automorphism word.
    RandomAuto(LimitArgs),
    /// Apply an automorphism word (JSON file, `-` for stdin) to an expression.
    Apply { auto_file: PathBuf, expr: String },
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// case-ii, case-iii or case-v
    pattern: SweepPattern,
    #[arg(long, default_value_t = 1)]
    p_min: i64,
    #[arg(long, default_value_t = 4)]
    p_max: i64,
    #[arg(long, default_value_t = 1)]
    q_min: i64,
    #[arg(long, default_value_t = 4)]
    q_max: i64,
    #[arg(long, default_value_t = 3)]
    max_coeff_deg: u32,
    #[arg(long, default_value_t = 20_000)]
    max_cells: usize,
}

#[derive(Args, Debug)]
struct LimitArgs {
    #[arg(long, default_value_t = 3)]
    word_len: usize,
    #[arg(long, default_value_t = 3)]
    max_n: u32,
    #[arg(long, default_value_t = 3)]
    coeff_height: i64,
}

enum Failure {
    Core(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Core(Error::Parse(e))
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) | Failure::Core(Error::Parse(_)) => 2,
            Failure::Core(Error::OutOfScope(_) | Error::BoundsTooLarge(_)) => 4,
            Failure::Core(Error::Verification(_)) => 1,
            Failure::Core(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Input(m) => m.clone(),
        }
    }
}

fn element_text(a: &WeylElement) -> String {
    match a.as_scalar() {
        Some(c) => rat_to_text(&c),
        None => print_canonical(a),
    }
}

fn element_output(a: &WeylElement, as_json: bool) -> String {
    if as_json {
        a.to_json().to_string()
    } else {
        element_text(a)
    }
}

fn certificate_json(s: i64, cert: &Infeasibility) -> Value {
    match cert {
        Infeasibility::Degree { deg_alpha, k } => json!({
            "s": s, "kind": "degree", "deg_alpha": deg_alpha, "k": k,
        }),
        Infeasibility::Residue { orbit_base, step, position, residue } => json!({
            "s": s, "kind": "residue", "orbit_base": orbit_base.to_text(),
            "step": step, "position": position, "residue": residue,
        }),
    }
}

fn certificate_text(s: i64, cert: &Infeasibility) -> String {
    match cert {
        Infeasibility::Degree { deg_alpha, k } => {
            format!("s = {s}: infeasible, deg alpha = {deg_alpha} not divisible by k = {k}")
        }
        Infeasibility::Residue { orbit_base, step, position, residue } => format!(
            "s = {s}: infeasible, orbit of {} (step {step}) leaves residue {residue} at position {position}",
            orbit_base.to_text()
        ),
    }
}

fn centralizer(expr: &str, as_json: bool) -> Result<String, Failure> {
    let a = parse_element(expr)?;
    if a.is_zero() {
        return Err(Error::ZeroInput("centralizer").into());
    }
    let Some((n, f)) = a.as_homogeneous() else {
        return Err(Error::NotHomogeneous(a.mass()).into());
    };
    if n == 0 {
        centralizer_rational(&weyl_core::arith::RatFuncH::from_poly(f.clone()))?;
        let m = RationalCentralizer::MARKER;
        return Ok(if as_json { json!({ "centralizer": m }).to_string() } else { m.to_string() });
    }
    let (scalar, monic) = weyl_core::arith::RatFuncH::from_poly(f.clone()).monic_split()?;
    let u = Homogeneous::new(n, monic)?;
    let res = centralizer_generator_with(&u, Exec::Sequential)?;
    let v = res.v.to_element();
    Ok(if as_json {
        json!({
            "n": res.n,
            "s": res.s,
            "scalar": rat_to_text(&scalar),
            "beta": res.beta.to_json(),
            "v": print_canonical(&v),
            "v_json": v.to_json(),
            "infeasible": res.infeasible_divisors.iter().map(|(s, c)| certificate_json(*s, c)).collect::<Vec<_>>(),
        })
        .to_string()
    } else {
        let mut lines = vec![
            format!("n = {}", res.n),
            format!("s = {}", res.s),
            format!("beta = {}", res.beta.to_text()),
            format!("v = {}", print_canonical(&v)),
        ];
        lines.extend(res.infeasible_divisors.iter().map(|(s, c)| certificate_text(*s, c)));
        lines.join("\n")
    })
}

fn sweep(args: &SweepArgs, as_json: bool) -> Result<String, Failure> {
    let bounds = SweepBounds {
        p_min: args.p_min,
        p_max: args.p_max,
        q_min: args.q_min,
        q_max: args.q_max,
        max_coeff_deg: args.max_coeff_deg,
        max_cells: args.max_cells,
    };
    let report = impossibility_sweep(args.pattern, &bounds, Exec::from_env())?;
    if as_json {
        return Ok(report.to_json().to_string());
    }
    let mut lines: Vec<String> = report
        .cells
        .iter()
        .map(|c| {
            let s = c.s.map(|s| format!(" s={s}")).unwrap_or_default();
            let degs: Vec<String> = c.degrees.iter().map(u32::to_string).collect();
            let witness: Vec<String> = c.witness.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            let mut line = format!(
                "p={} q={}{s} degrees=({}) {} [{}] rank {}/{}",
                c.p,
                c.q,
                degs.join(","),
                c.status.name(),
                c.reason,
                c.rank,
                c.rank_augmented
            );
            if !witness.is_empty() {
                line.push_str(&format!(" witness: {}", witness.join(", ")));
            }
            line
        })
        .collect();
    let by = |st| report.count(st);
    lines.push(format!(
        "{}: {} cells, {} empty, {} with solutions, {} reductions",
        report.pattern.name(),
        report.cells.len(),
        by(weyl_core::dixmier::CellStatus::Empty),
        by(weyl_core::dixmier::CellStatus::Solutions),
        by(weyl_core::dixmier::CellStatus::Reduction)
    ));
    Ok(lines.join("\n"))
}

fn read_word(path: &PathBuf) -> Result<AutoWord, Failure> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?
    };
    Ok(from_json_str::<AutoWord>(&text)?)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let as_json = cli.json;
    match &cli.command {
        Command::Normalize { expr } => Ok(element_output(&parse_element(expr)?, as_json)),
        Command::Commute { a, b } => {
            let (a, b) = (parse_element(a)?, parse_element(b)?);
            Ok(element_output(&a.commutator(&b), as_json))
        }
        Command::Mass { expr } => {
            let m = parse_element(expr)?.mass();
            Ok(if as_json { json!({ "mass": m }).to_string() } else { m.to_string() })
        }
        Command::Components { expr } => {
            let a = parse_element(expr)?;
            if as_json {
                return Ok(a.to_json().to_string());
            }
            let lines: Vec<String> = a.components().map(|(i, f)| format!("{i}: {}", f.to_text())).collect();
            Ok(lines.join("\n"))
        }
        Command::Degree { expr } => {
            let d = parse_element(expr)?.total_degree();
            Ok(if as_json { json!({ "degree": d.finite() }).to_string() } else { d.to_string() })
        }
        Command::Centralizer { expr } => centralizer(expr, as_json),
        Command::Certify { p, q } => {
            let w = certify_pair(&parse_element(p)?, &parse_element(q)?)?;
            Ok(if as_json { w.to_json().to_string() } else { w.to_string() })
        }
        Command::Sweep(args) => sweep(args, as_json),
        Command::RandomAuto(l) => {
            if l.word_len == 0 || l.max_n == 0 || l.coeff_height <= 0 {
                return Err(Failure::Input("limits must be positive".into()));
            }
            let limits = TameLimits { word_len: l.word_len, max_n: l.max_n, coeff_height: l.coeff_height };
            let w = random_tame(cli.seed, limits);
            Ok(if as_json { w.to_json().to_string() } else { w.to_string() })
        }
        Command::Apply { auto_file, expr } => {
            let w = read_word(auto_file)?;
            let a = parse_element(expr)?;
            Ok(element_output(&w.apply(&a), as_json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
