//! Benchmark harness: generate instances, time formulation construction
//! and solving, and emit CSV records.
//!
//! One CSV row is written per `(n, formulation, repetition)`, in that
//! order, with the header fixed to [`CSV_HEADER`]. The `aux` pseudo
//! formulation times the auxiliary-quantity computation alone, so its
//! cost is visible separately from the formulations that consume it.
//! Absolute times are hardware-dependent; the interesting content is the
//! relative ordering between formulations as the dimension grows.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use absnormal::anf::{nested_abs_instance, random_instance, AbsNormalForm, RandomPreset};
use absnormal::formulations::{
    build_min_lpcc, build_min_milp, build_root_lcp, build_root_lcp_legacy, build_root_mlcp,
    build_root_mlcp_legacy,
};
use absnormal::solvers::enumerate::{solve_lpcc_enumerate, solve_mlcp_enumerate};
use absnormal::solvers::lemke::solve_lcp_lemke;
use absnormal::solvers::milp::solve_milp_bb;
use absnormal::solvers::verify::verify_root;
use absnormal::solvers::{SolveOutcome, SolveStatus};
use absnormal::Vector;

pub const CSV_HEADER: &str = "n,formulation,solver,build_time_s,solve_time_s,status,residual";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchPreset {
    /// Random square instance with identity `J`, zero `Z`.
    Example63,
    /// Same generator, benchmarked against the legacy formulations too.
    Example64,
    /// The nested-absolute-value scalar minimization instance.
    Nested,
}

impl BenchPreset {
    pub fn parse(text: &str) -> Option<BenchPreset> {
        match text {
            "example63" => Some(BenchPreset::Example63),
            "example64" => Some(BenchPreset::Example64),
            "nested" => Some(BenchPreset::Nested),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            BenchPreset::Example63 => "example63",
            BenchPreset::Example64 => "example64",
            BenchPreset::Nested => "nested",
        }
    }

    fn instance(&self, n: usize, seed: u64) -> AbsNormalForm {
        match self {
            BenchPreset::Example63 => random_instance(n, seed, RandomPreset::IdentityJacobian),
            BenchPreset::Example64 => random_instance(n, seed, RandomPreset::LegacyComparison),
            BenchPreset::Nested => nested_abs_instance(n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchFormulation {
    Aux,
    Mlcp,
    Lcp,
    LegacyMlcp,
    LegacyLcp,
    Lpcc,
    Milp,
}

impl BenchFormulation {
    pub fn parse(text: &str) -> Option<BenchFormulation> {
        match text {
            "aux" => Some(BenchFormulation::Aux),
            "mlcp" => Some(BenchFormulation::Mlcp),
            "lcp" => Some(BenchFormulation::Lcp),
            "legacy-mlcp" => Some(BenchFormulation::LegacyMlcp),
            "legacy-lcp" => Some(BenchFormulation::LegacyLcp),
            "lpcc" => Some(BenchFormulation::Lpcc),
            "milp" => Some(BenchFormulation::Milp),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            BenchFormulation::Aux => "aux",
            BenchFormulation::Mlcp => "mlcp",
            BenchFormulation::Lcp => "lcp",
            BenchFormulation::LegacyMlcp => "legacy-mlcp",
            BenchFormulation::LegacyLcp => "legacy-lcp",
            BenchFormulation::Lpcc => "lpcc",
            BenchFormulation::Milp => "milp",
        }
    }

    /// Root formulations need the square random presets; the minimization
    /// formulations need the scalar-valued nested preset.
    pub fn applies_to(&self, preset: BenchPreset) -> bool {
        match self {
            BenchFormulation::Aux => true,
            BenchFormulation::Mlcp | BenchFormulation::Lcp => preset != BenchPreset::Nested,
            BenchFormulation::LegacyMlcp | BenchFormulation::LegacyLcp => {
                preset != BenchPreset::Nested
            }
            BenchFormulation::Lpcc | BenchFormulation::Milp => preset == BenchPreset::Nested,
        }
    }
}

impl fmt::Display for BenchFormulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn default_formulations(preset: BenchPreset) -> Vec<BenchFormulation> {
    match preset {
        BenchPreset::Example63 => {
            vec![BenchFormulation::Aux, BenchFormulation::Mlcp, BenchFormulation::Lcp]
        }
        BenchPreset::Example64 => vec![
            BenchFormulation::Aux,
            BenchFormulation::Mlcp,
            BenchFormulation::Lcp,
            BenchFormulation::LegacyMlcp,
            BenchFormulation::LegacyLcp,
        ],
        BenchPreset::Nested => {
            vec![BenchFormulation::Aux, BenchFormulation::Lpcc, BenchFormulation::Milp]
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchSpec {
    pub preset: BenchPreset,
    pub n_list: Vec<usize>,
    pub reps: usize,
    pub formulations: Vec<BenchFormulation>,
    pub seed: u64,
    pub enum_limit: usize,
    pub mu: f64,
    pub lemke_pivot_limit: usize,
    pub milp_node_limit: usize,
}

impl BenchSpec {
    pub fn new(preset: BenchPreset, n_list: Vec<usize>, reps: usize) -> BenchSpec {
        BenchSpec {
            preset,
            n_list,
            reps,
            formulations: default_formulations(preset),
            seed: 0,
            enum_limit: absnormal::solvers::DEFAULT_ENUM_LIMIT,
            mu: absnormal::formulations::DEFAULT_BIG_M,
            lemke_pivot_limit: absnormal::solvers::lemke::DEFAULT_LEMKE_PIVOT_LIMIT,
            milp_node_limit: absnormal::solvers::milp::DEFAULT_NODE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub formulation: String,
    pub solver: String,
    pub build_time_s: f64,
    pub solve_time_s: f64,
    pub status: String,
    pub residual: f64,
}

fn root_residual(form: &AbsNormalForm, x: &Vector) -> f64 {
    form.evaluate(x).inf_norm()
}

fn solved_or_status(form: &AbsNormalForm, outcome: &SolveOutcome, x: Option<&Vector>) -> (String, f64) {
    match (outcome.status, x) {
        (SolveStatus::Solved, Some(x)) => {
            let residual = root_residual(form, x);
            let status = if verify_root(form, x, 1e-6) {
                "solved".to_string()
            } else {
                "verification-failed".to_string()
            };
            (status, residual)
        }
        (status, _) => (status.to_string(), 0.0),
    }
}

fn run_one(
    spec: &BenchSpec,
    form: &AbsNormalForm,
    formulation: BenchFormulation,
    n: usize,
) -> BenchRecord {
    let record = |solver: &str, build: f64, solve: f64, status: String, residual: f64| BenchRecord {
        n,
        formulation: formulation.as_str().to_string(),
        solver: solver.to_string(),
        build_time_s: build,
        solve_time_s: solve,
        status,
        residual,
    };

    match formulation {
        BenchFormulation::Aux => {
            let t0 = Instant::now();
            let aux = form.auxiliary();
            let build = t0.elapsed().as_secs_f64();
            // Touch the result so the construction cannot be elided.
            let checksum = aux.j_tilde.data().iter().sum::<f64>();
            let status = if checksum.is_finite() { "built" } else { "non-finite" };
            record("-", build, 0.0, status.to_string(), 0.0)
        }
        BenchFormulation::Mlcp => {
            let t0 = Instant::now();
            let mlcp = build_root_mlcp(form);
            let build = t0.elapsed().as_secs_f64();
            let t1 = Instant::now();
            let outcome = solve_mlcp_enumerate(&mlcp, spec.enum_limit);
            let solve = t1.elapsed().as_secs_f64();
            let (status, residual) = solved_or_status(form, &outcome, outcome.x.as_ref());
            record("enum", build, solve, status, residual)
        }
        BenchFormulation::Lcp => {
            let t0 = Instant::now();
            let root = build_root_lcp(form);
            let build = t0.elapsed().as_secs_f64();
            match root {
                None => record("lemke", build, 0.0, "j-tilde-singular".to_string(), 0.0),
                Some(root) => {
                    let t1 = Instant::now();
                    let mut outcome = solve_lcp_lemke(&root.lcp, spec.lemke_pivot_limit);
                    if outcome.status == SolveStatus::Solved {
                        let w = outcome.w.clone().expect("solved");
                        outcome.x = Some(root.recovery.recover_x(&w));
                    }
                    let solve = t1.elapsed().as_secs_f64();
                    let (status, residual) = solved_or_status(form, &outcome, outcome.x.as_ref());
                    record("lemke", build, solve, status, residual)
                }
            }
        }
        BenchFormulation::LegacyMlcp => {
            let t0 = Instant::now();
            let legacy = build_root_mlcp_legacy(form);
            let build = t0.elapsed().as_secs_f64();
            match legacy {
                None => record("enum", build, 0.0, "j-singular".to_string(), 0.0),
                Some(legacy) => {
                    let t1 = Instant::now();
                    let mut outcome = solve_mlcp_enumerate(&legacy.mlcp, spec.enum_limit);
                    if outcome.status == SolveStatus::Solved {
                        let u = outcome.x.take().expect("solved");
                        let w = outcome.w.clone().expect("solved");
                        outcome.x = Some(legacy.recovery.recover_x(&u, &w));
                    }
                    let solve = t1.elapsed().as_secs_f64();
                    let (status, residual) = solved_or_status(form, &outcome, outcome.x.as_ref());
                    record("enum", build, solve, status, residual)
                }
            }
        }
        BenchFormulation::LegacyLcp => {
            let t0 = Instant::now();
            let legacy = build_root_lcp_legacy(form);
            let build = t0.elapsed().as_secs_f64();
            match legacy {
                None => record("lemke", build, 0.0, "precondition-failed".to_string(), 0.0),
                Some(legacy) => {
                    let t1 = Instant::now();
                    let mut outcome = solve_lcp_lemke(&legacy.lcp, spec.lemke_pivot_limit);
                    if outcome.status == SolveStatus::Solved {
                        let w = outcome.w.clone().expect("solved");
                        let u = legacy.lcp.slack(&w);
                        outcome.x = Some(legacy.recovery.recover_x(&u, &w));
                    }
                    let solve = t1.elapsed().as_secs_f64();
                    let (status, residual) = solved_or_status(form, &outcome, outcome.x.as_ref());
                    record("lemke", build, solve, status, residual)
                }
            }
        }
        BenchFormulation::Lpcc => {
            let t0 = Instant::now();
            let lpcc = build_min_lpcc(form);
            let build = t0.elapsed().as_secs_f64();
            let t1 = Instant::now();
            let outcome = solve_lpcc_enumerate(&lpcc, spec.enum_limit);
            let solve = t1.elapsed().as_secs_f64();
            let (status, residual) = objective_status(form, &outcome);
            record("enum", build, solve, status, residual)
        }
        BenchFormulation::Milp => {
            let t0 = Instant::now();
            let milp = build_min_milp(build_min_lpcc(form), spec.mu);
            let build = t0.elapsed().as_secs_f64();
            let t1 = Instant::now();
            let outcome = solve_milp_bb(&milp, spec.milp_node_limit);
            let solve = t1.elapsed().as_secs_f64();
            let (status, residual) = objective_status(form, &outcome);
            record("bb", build, solve, status, residual)
        }
    }
}

fn objective_status(form: &AbsNormalForm, outcome: &SolveOutcome) -> (String, f64) {
    match (outcome.status, &outcome.x, outcome.objective) {
        (SolveStatus::Solved, Some(x), Some(obj)) => {
            let gap = (form.evaluate(x)[0] - obj).abs();
            let status =
                if gap <= 1e-7 { "solved".to_string() } else { "verification-failed".to_string() };
            (status, gap)
        }
        (status, _, _) => (status.to_string(), 0.0),
    }
}

/// Run the whole benchmark. Rows come out in `(n, formulation, rep)`
/// order; the instance for repetition `r` of size `n` is seeded with
/// `seed + r`, so runs are reproducible.
pub fn run_bench(spec: &BenchSpec) -> Vec<BenchRecord> {
    for f in &spec.formulations {
        assert!(
            f.applies_to(spec.preset),
            "formulation {f} does not apply to preset {}",
            spec.preset.as_str()
        );
    }
    let mut records = Vec::new();
    for &n in &spec.n_list {
        for &formulation in &spec.formulations {
            for rep in 0..spec.reps {
                let form = spec.preset.instance(n, spec.seed + rep as u64);
                records.push(run_one(spec, &form, formulation, n));
            }
        }
    }
    records
}

pub fn write_csv<W: Write>(records: &[BenchRecord], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{:.9},{:.9},{},{:.3e}",
            r.n, r.formulation, r.solver, r.build_time_s, r.solve_time_s, r.status, r.residual
        )?;
    }
    Ok(())
}
