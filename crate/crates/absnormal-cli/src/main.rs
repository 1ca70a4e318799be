//! `absnormal` command-line tool.
//!
//! Subcommands: `eval`, `root`, `minimize`, `exists-min`, `check`, `gen`,
//! `bench`. Exit codes follow one contract everywhere: 0 solved/true,
//! 1 proved negative, 2 usage or precondition failure, 3 indeterminate.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use absnormal::analysis::{
    existence_of_minimum, is_p_matrix, is_positive_definite_sufficient, minimize_pipeline,
    root_pipeline, ExistenceStatus, MinimizeMethod, PipelineError, PipelineOptions,
    PipelineReport, RootStrategy, P_MATRIX_DIM_LIMIT,
};
use absnormal::solvers::SolveStatus;
use absnormal::{Matrix, Vector};

use absnormal_cli::bench::{
    default_formulations, run_bench, write_csv, BenchFormulation, BenchPreset, BenchSpec,
};
use absnormal_cli::document::{load_form, save_document, AnfDocument};
use absnormal_cli::exit_codes;

#[derive(Parser)]
#[command(
    name = "absnormal",
    version,
    about = "Evaluate, root-find, minimize, and benchmark piecewise-affine functions in abs-normal form"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate f(x) and the switching vector at a point.
    Eval {
        /// Form document (JSON).
        file: PathBuf,
        /// Comma-separated input coordinates, e.g. "0,-0.5".
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Solve f(x) = 0 through a complementarity formulation.
    Root {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        /// Acceptance threshold on ||f(x)||_inf for a recovered root.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Globally minimize a scalar-valued form.
    Minimize {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Milp)]
        method: MethodArg,
        /// Big-M bound for the MILP reformulation.
        #[arg(long, default_value_t = 1e5)]
        mu: f64,
        /// Skip the existence certificate and optimize directly.
        #[arg(long)]
        skip_existence: bool,
        #[arg(long)]
        json: bool,
    },
    /// Certify whether a global minimum exists.
    ExistsMin {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Report regularity flags and matrix-class verdicts for a form.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate an instance document.
    Gen {
        /// example63 | example64 | nested
        #[arg(long)]
        preset: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time formulation construction and solving over a range of sizes.
    Bench {
        /// example63 | example64 | nested
        #[arg(long)]
        preset: String,
        /// Sizes: "2,4,8", "2..16", or "2..16:2".
        #[arg(long)]
        n_list: String,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        /// Comma-separated subset of aux,mlcp,lcp,legacy-mlcp,legacy-lcp,lpcc,milp.
        #[arg(long)]
        formulations: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e5)]
        mu: f64,
        /// CSV output path.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Mlcp,
    Lcp,
    LegacyMlcp,
    LegacyLcp,
}

impl From<StrategyArg> for RootStrategy {
    fn from(value: StrategyArg) -> Self {
        match value {
            StrategyArg::Auto => RootStrategy::Auto,
            StrategyArg::Mlcp => RootStrategy::Mlcp,
            StrategyArg::Lcp => RootStrategy::Lcp,
            StrategyArg::LegacyMlcp => RootStrategy::LegacyMlcp,
            StrategyArg::LegacyLcp => RootStrategy::LegacyLcp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Lpcc,
    Milp,
}

struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_codes::USAGE
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Eval { file, x } => cmd_eval(&file, &x),
        Command::Root { file, strategy, tol, json } => cmd_root(&file, strategy.into(), tol, json),
        Command::Minimize { file, method, mu, skip_existence, json } => {
            cmd_minimize(&file, method, mu, skip_existence, json)
        }
        Command::ExistsMin { file, json } => cmd_exists_min(&file, json),
        Command::Check { file, json } => cmd_check(&file, json),
        Command::Gen { preset, n, seed, out } => cmd_gen(&preset, n, seed, out.as_deref()),
        Command::Bench { preset, n_list, reps, formulations, seed, mu, out } => {
            cmd_bench(&preset, &n_list, reps, formulations.as_deref(), seed, mu, &out)
        }
    }
}

/// 17 significant digits, enough to reproduce any f64 exactly.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_vec(v: &Vector) -> String {
    let items: Vec<String> = v.iter().map(|&x| fmt17(x)).collect();
    format!("[{}]", items.join(", "))
}

fn pipeline_options(tol: Option<f64>, mu: Option<f64>) -> Result<PipelineOptions, CliError> {
    let mut opts = PipelineOptions::default();
    if let Ok(text) = std::env::var("ABSNORM_ENUM_LIMIT") {
        opts.enum_limit = text
            .parse()
            .map_err(|_| CliError(format!("ABSNORM_ENUM_LIMIT is not a valid limit: {text:?}")))?;
    }
    if let Some(tol) = tol {
        opts.root_tol = tol;
    }
    if let Some(mu) = mu {
        if mu <= 0.0 {
            return Err(CliError("--mu must be positive".to_string()));
        }
        opts.mu = mu;
    }
    Ok(opts)
}

fn exit_for_status(status: SolveStatus) -> i32 {
    match status {
        SolveStatus::Solved => exit_codes::SUCCESS,
        SolveStatus::NoSolutionProved | SolveStatus::Infeasible | SolveStatus::Unbounded => {
            exit_codes::PROVED_NEGATIVE
        }
        SolveStatus::RayTermination | SolveStatus::LimitReached => exit_codes::INDETERMINATE,
    }
}

fn parse_point(text: &str, n: usize) -> Result<Vector, CliError> {
    let coords: Result<Vec<f64>, _> = text.split(',').map(|t| t.trim().parse::<f64>()).collect();
    let coords = coords.map_err(|_| CliError(format!("could not parse coordinates {text:?}")))?;
    if coords.len() != n {
        return Err(CliError(format!(
            "point has {} coordinates but the form expects n = {n}",
            coords.len()
        )));
    }
    Ok(Vector::new(coords))
}

fn cmd_eval(file: &Path, x_text: &str) -> Result<i32, CliError> {
    let form = load_form(file)?;
    let x = parse_point(x_text, form.input_dim())?;
    let z = form.switching_vector(&x);
    let fx = form.evaluate(&x);
    println!("f(x) = {}", fmt_vec(&fx));
    println!("z    = {}", fmt_vec(&z));
    println!("|z|  = {}", fmt_vec(&z.abs()));
    Ok(exit_codes::SUCCESS)
}

fn flags_json(report: &PipelineReport) -> serde_json::Value {
    json!({
        "J": report.flags.j,
        "J_tilde": report.flags.j_tilde,
        "I_minus_S": report.flags.i_minus_s,
    })
}

fn outcome_json(report: &PipelineReport) -> serde_json::Value {
    json!({
        "formulation": report.chosen_formulation,
        "status": report.outcome.status.to_string(),
        "x": report.outcome.x.as_ref().map(|v| v.as_slice().to_vec()),
        "w": report.outcome.w.as_ref().map(|v| v.as_slice().to_vec()),
        "y": report.outcome.y,
        "objective": report.outcome.objective,
        "residuals": report.residuals,
        "flags": flags_json(report),
        "wall_time_s": report.wall_time.as_secs_f64(),
        "certificate": report.outcome.certificate,
        "existence": report.existence.map(|e| e.to_string()),
    })
}

fn print_report_human(report: &PipelineReport) {
    println!("formulation: {}", report.chosen_formulation);
    println!("status: {}", report.outcome.status);
    if let Some(x) = &report.outcome.x {
        println!("x = {}", fmt_vec(x));
    }
    if let Some(w) = &report.outcome.w {
        println!("w = {}", fmt_vec(w));
    }
    if let Some(y) = &report.outcome.y {
        let bits: Vec<&str> = y.iter().map(|&b| if b { "1" } else { "0" }).collect();
        println!("y = [{}]", bits.join(", "));
    }
    if let Some(obj) = report.outcome.objective {
        println!("objective = {}", fmt17(obj));
    }
    for (name, value) in &report.residuals {
        println!("{name} = {value:.3e}");
    }
    if let Some(flag) = report.flags.j {
        println!("J nonsingular: {flag}");
    }
    if let Some(flag) = report.flags.j_tilde {
        println!("J~ nonsingular: {flag}");
    }
    if let Some(flag) = report.flags.i_minus_s {
        println!("I-S nonsingular: {flag}");
    }
    if let Some(cert) = &report.outcome.certificate {
        println!("certificate: {cert}");
    }
    println!("wall_time_s: {:.6}", report.wall_time.as_secs_f64());
}

fn cmd_root(file: &Path, strategy: RootStrategy, tol: f64, as_json: bool) -> Result<i32, CliError> {
    let form = load_form(file)?;
    let opts = pipeline_options(Some(tol), None)?;
    let report = root_pipeline(&form, strategy, &opts).map_err(|e: PipelineError| CliError(e.to_string()))?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&outcome_json(&report)).expect("serializes"));
    } else {
        print_report_human(&report);
    }
    Ok(exit_for_status(report.outcome.status))
}

fn cmd_minimize(
    file: &Path,
    method: MethodArg,
    mu: f64,
    skip_existence: bool,
    as_json: bool,
) -> Result<i32, CliError> {
    let form = load_form(file)?;
    let opts = pipeline_options(None, Some(mu))?;
    let method = match method {
        MethodArg::Lpcc => MinimizeMethod::Lpcc,
        MethodArg::Milp => MinimizeMethod::Milp,
    };
    let report = minimize_pipeline(&form, method, !skip_existence, &opts)
        .map_err(|e| CliError(e.to_string()))?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&outcome_json(&report)).expect("serializes"));
    } else {
        if let Some(existence) = report.existence {
            println!("existence: {existence}");
        }
        print_report_human(&report);
    }
    Ok(exit_for_status(report.outcome.status))
}

fn cmd_exists_min(file: &Path, as_json: bool) -> Result<i32, CliError> {
    let form = load_form(file)?;
    let opts = pipeline_options(None, None)?;
    let cert = existence_of_minimum(&form, &opts).map_err(|e| CliError(e.to_string()))?;
    let verdict = match cert.status {
        ExistenceStatus::MinimumExists => "minimum exists",
        ExistenceStatus::NoMinimum => "no global minimum",
        ExistenceStatus::Indeterminate => "indeterminate",
    };
    if as_json {
        let payload = json!({
            "status": cert.status.to_string(),
            "verdict": verdict,
            "witness_xi": cert.outcome.x.as_ref().map(|v| v.as_slice().to_vec()),
            "witness_omega": cert.outcome.w.as_ref().map(|v| v.as_slice().to_vec()),
            "certificate": cert.outcome.certificate,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializes"));
    } else {
        println!("{verdict}");
        if let Some(xi) = &cert.outcome.x {
            println!("witness direction = {}", fmt_vec(xi));
        }
        if let Some(c) = &cert.outcome.certificate {
            println!("certificate: {c}");
        }
    }
    let code = match cert.status {
        ExistenceStatus::MinimumExists => exit_codes::SUCCESS,
        ExistenceStatus::NoMinimum => exit_codes::PROVED_NEGATIVE,
        ExistenceStatus::Indeterminate => exit_codes::INDETERMINATE,
    };
    Ok(code)
}

fn cmd_check(file: &Path, as_json: bool) -> Result<i32, CliError> {
    let form = load_form(file)?;
    let aux = form.auxiliary();
    let square = form.output_dim() == form.input_dim();

    let j_flag = square.then(|| !form.j_mat().lu().expect("square").is_singular());
    let j_tilde_flag = square.then(|| !aux.j_tilde.lu().expect("square").is_singular());

    // I - S needs S = L - Z J^-1 Y, which needs J nonsingular.
    let i_minus_s_flag = match j_flag {
        Some(true) => {
            let fact = form.j_mat().lu().expect("square");
            let j_inv_y = fact.solve_mat(form.y_mat()).expect("nonsingular");
            let s_mat = form.l_mat().sub(&form.z_mat().mul_mat(&j_inv_y));
            let i_minus_s = Matrix::identity(form.switching_dim()).sub(&s_mat);
            Some(!i_minus_s.lu().expect("square").is_singular())
        }
        _ => None,
    };

    let reduced = if j_tilde_flag == Some(true) { form.reduced(&aux) } else { None };
    let p_matrix_verdict = reduced.as_ref().and_then(|red| {
        (red.s.rows() <= P_MATRIX_DIM_LIMIT).then(|| is_p_matrix(&red.s))
    });
    let pd_verdict = reduced.as_ref().map(|red| is_positive_definite_sufficient(&red.s));

    if as_json {
        let payload = json!({
            "n": form.input_dim(),
            "m": form.output_dim(),
            "s": form.switching_dim(),
            "simply_switched": form.is_simply_switched(),
            "J_nonsingular": j_flag,
            "J_tilde_nonsingular": j_tilde_flag,
            "I_minus_S_nonsingular": i_minus_s_flag,
            "S_check_p_matrix": p_matrix_verdict,
            "S_check_pd_sufficient": pd_verdict,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializes"));
    } else {
        println!(
            "dimensions: n = {}, m = {}, s = {}",
            form.input_dim(),
            form.output_dim(),
            form.switching_dim()
        );
        println!("simply switched (L = 0): {}", form.is_simply_switched());
        let describe = |flag: Option<bool>| match flag {
            Some(true) => "yes".to_string(),
            Some(false) => "no".to_string(),
            None => "not applicable".to_string(),
        };
        println!("J nonsingular: {}", describe(j_flag));
        println!("J~ nonsingular: {}", describe(j_tilde_flag));
        println!("I-S nonsingular: {}", describe(i_minus_s_flag));
        match (&reduced, p_matrix_verdict) {
            (Some(_), Some(v)) => println!("S-check P-matrix: {v}"),
            (Some(_), None) => {
                println!("S-check P-matrix: skipped (s > {P_MATRIX_DIM_LIMIT})")
            }
            (None, _) => println!("S-check P-matrix: not applicable"),
        }
        match pd_verdict {
            Some(v) => println!("S-check positive-definite sufficient: {v}"),
            None => println!("S-check positive-definite sufficient: not applicable"),
        }
    }
    Ok(exit_codes::SUCCESS)
}

fn cmd_gen(preset: &str, n: usize, seed: u64, out: Option<&Path>) -> Result<i32, CliError> {
    let preset = BenchPreset::parse(preset)
        .ok_or_else(|| CliError(format!("unknown preset {preset:?} (expected example63, example64, or nested)")))?;
    if n < 1 {
        return Err(CliError("--n must be at least 1".to_string()));
    }
    let form = match preset {
        BenchPreset::Example63 => absnormal::anf::random_instance(
            n,
            seed,
            absnormal::anf::RandomPreset::IdentityJacobian,
        ),
        BenchPreset::Example64 => absnormal::anf::random_instance(
            n,
            seed,
            absnormal::anf::RandomPreset::LegacyComparison,
        ),
        BenchPreset::Nested => absnormal::anf::nested_abs_instance(n),
    };
    let doc = AnfDocument::from_form(&form);
    match out {
        Some(path) => save_document(path, &doc)?,
        None => print!("{}", doc.to_json_string()),
    }
    Ok(exit_codes::SUCCESS)
}

fn parse_n_list(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError(format!("could not parse --n-list {text:?}"));
    if let Some((range, step)) = text.split_once(':') {
        let step: usize = step.parse().map_err(|_| bad())?;
        if step == 0 {
            return Err(bad());
        }
        let (lo, hi) = parse_range(range).ok_or_else(bad)?;
        return Ok((lo..=hi).step_by(step).collect());
    }
    if let Some((lo, hi)) = parse_range(text) {
        return Ok((lo..=hi).collect());
    }
    let values: Result<Vec<usize>, _> = text.split(',').map(|t| t.trim().parse()).collect();
    let values = values.map_err(|_| bad())?;
    if values.is_empty() || values.contains(&0) {
        return Err(bad());
    }
    Ok(values)
}

fn parse_range(text: &str) -> Option<(usize, usize)> {
    let (lo, hi) = text.split_once("..")?;
    let lo: usize = lo.trim().parse().ok()?;
    let hi: usize = hi.trim().parse().ok()?;
    (lo >= 1 && lo <= hi).then_some((lo, hi))
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    preset: &str,
    n_list: &str,
    reps: usize,
    formulations: Option<&str>,
    seed: u64,
    mu: f64,
    out: &Path,
) -> Result<i32, CliError> {
    let preset = BenchPreset::parse(preset)
        .ok_or_else(|| CliError(format!("unknown preset {preset:?} (expected example63, example64, or nested)")))?;
    let n_list = parse_n_list(n_list)?;
    if reps == 0 {
        return Err(CliError("--reps must be at least 1".to_string()));
    }
    let formulations = match formulations {
        None => default_formulations(preset),
        Some(text) => {
            let parsed: Result<Vec<BenchFormulation>, CliError> = text
                .split(',')
                .map(|t| {
                    BenchFormulation::parse(t.trim())
                        .ok_or_else(|| CliError(format!("unknown formulation {t:?}")))
                })
                .collect();
            parsed?
        }
    };
    for f in &formulations {
        if !f.applies_to(preset) {
            return Err(CliError(format!(
                "formulation {f} does not apply to preset {}",
                preset.as_str()
            )));
        }
    }

    let mut spec = BenchSpec::new(preset, n_list, reps);
    spec.formulations = formulations;
    spec.seed = seed;
    spec.mu = mu;
    if let Ok(text) = std::env::var("ABSNORM_ENUM_LIMIT") {
        spec.enum_limit = text
            .parse()
            .map_err(|_| CliError(format!("ABSNORM_ENUM_LIMIT is not a valid limit: {text:?}")))?;
    }

    let records = run_bench(&spec);
    let file = std::fs::File::create(out)?;
    write_csv(&records, std::io::BufWriter::new(file))?;
    eprintln!("wrote {} records to {}", records.len(), out.display());
    Ok(exit_codes::SUCCESS)
}
