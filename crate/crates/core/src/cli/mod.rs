//! The `braided` command-line tool. Every subcommand yields a [`CommandResult`]:
//! a JSON payload for stdout, a one-line summary for stderr and an exit status.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::calculus::{braided_exp, exp_eigenfunction_check, graded_kernel, graded_rank};
use crate::combinatorics::Combinatorics;
use crate::error::{Error, Result};
use crate::io;
use crate::lie::{check_lie_bialgebra, induction_step, self_transmute, transmute_closed_form, CheckReport, Q};
use crate::tensor::{yang_baxter_check, RMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    PropertyViolated,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::PropertyViolated => 1,
            Status::InputError => 2,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::PropertyViolated => "property_violated",
            Status::InputError => "input_error",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub summary: String,
}

impl CommandResult {
    fn new(status: Status, mut payload: Value, summary: String) -> Self {
        payload["status"] = json!(status.as_str());
        Self {
            status,
            payload,
            summary,
        }
    }

    fn verdict(ok: bool, payload: Value, summary: String) -> Self {
        let status = if ok { Status::Ok } else { Status::PropertyViolated };
        Self::new(status, payload, summary)
    }

    fn from_error(command: &str, e: &Error) -> Self {
        let status = if e.is_property_violation() {
            Status::PropertyViolated
        } else {
            Status::InputError
        };
        let mut payload = json!({ "command": command, "error": e.to_string() });
        match e {
            Error::Singular { degree, kernel_dim } => {
                payload["singular_degree"] = json!(degree);
                payload["kernel_dim"] = json!(kernel_dim);
            }
            Error::NotIsotypical { minimal_polynomial } => {
                payload["minimal_polynomial"] = json!(minimal_polynomial);
            }
            Error::YangBaxter { component } => payload["component"] = json!(component),
            Error::AxiomFailure { stage, .. } => payload["stage"] = json!(stage),
            _ => {}
        }
        Self::new(status, payload, format!("{command}: {e}"))
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "braided",
    version,
    about = "Braided differential calculus and Lie bialgebra induction"
)]
pub struct Cli {
    /// Suppress the summary on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Caps {
    /// Largest word degree the quantum-layer commands will compute.
    #[arg(long, default_value_t = 6)]
    pub degree_cap: usize,
    /// Skip the eager Yang-Baxter check on R-matrix files.
    #[arg(long)]
    pub no_ybe_check: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Yang-Baxter equation for an R-matrix file.
    YbeCheck { file: PathBuf },
    /// Kernel generators of the pairing for Cartan data.
    Serre {
        #[arg(long)]
        cartan: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// Graded ranks of the pairing for an R-matrix file.
    Ranks {
        #[arg(long)]
        rmatrix: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// Truncated braided exponential and its eigenfunction check.
    Exp {
        #[arg(long)]
        rmatrix: PathBuf,
        #[arg(long)]
        truncate: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// Quasitriangular Lie bialgebra report for a Lie bialgebra file.
    LieCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 64)]
        dim_cap: usize,
    },
    /// One induction step: central extension and double bosonisation.
    LieInduct {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        /// Scalar by which the central element acts on the module.
        #[arg(long)]
        mu: Option<String>,
        /// Override the central charge instead of solving for it.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 64)]
        dim_cap: usize,
    },
    /// Self-transmutation of a quasitriangular Lie bialgebra.
    Transmute {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, default_value_t = 64)]
        dim_cap: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::YbeCheck { .. } => "ybe-check",
            Command::Serre { .. } => "serre",
            Command::Ranks { .. } => "ranks",
            Command::Exp { .. } => "exp",
            Command::LieCheck { .. } => "lie-check",
            Command::LieInduct { .. } => "lie-induct",
            Command::Transmute { .. } => "transmute",
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn cap_degree(degree: usize, caps: &Caps) -> Result<()> {
    if degree > caps.degree_cap {
        return Err(Error::DegreeCap {
            degree,
            cap: caps.degree_cap,
        });
    }
    Ok(())
}

fn cap_dim(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        return Err(Error::DimensionCap { dim, cap });
    }
    Ok(())
}

fn combinatorics_for(r: RMatrix, caps: &Caps) -> Combinatorics {
    if caps.no_ybe_check {
        Combinatorics::unchecked(r)
    } else {
        Combinatorics::new(r).expect("checked on parse")
    }
}

fn parse_rational(s: &str, what: &str) -> Result<Q> {
    Q::from_str(s.trim()).map_err(|_| Error::Parse(format!("{what} must be a rational number, got {s:?}")))
}

fn report_json(rep: &CheckReport) -> Value {
    serde_json::to_value(rep).expect("report serializes")
}

/// Runs one subcommand. Errors become payloads; nothing is printed.
pub fn run(command: &Command) -> CommandResult {
    let name = command.name();
    match dispatch(command) {
        Ok(mut res) => {
            res.payload["command"] = json!(name);
            res
        }
        Err(e) => {
            let mut res = CommandResult::from_error(name, &e);
            if matches!(e, Error::DegreeCap { .. }) {
                res.payload["advice"] = json!("raise the limit with --degree-cap");
            } else if matches!(e, Error::DimensionCap { .. }) {
                res.payload["advice"] = json!("raise the limit with --dim-cap");
            }
            res
        }
    }
}

fn dispatch(command: &Command) -> Result<CommandResult> {
    match command {
        Command::YbeCheck { file } => {
            let r = io::parse_rmatrix(&read(file)?, false)?;
            let rep = yang_baxter_check(&r);
            let failure = rep.failure.as_ref().map(io::ybe_failure_to_json);
            let summary = match &rep.failure {
                None => format!("Yang-Baxter equation holds (dim {})", r.dim()),
                Some(f) => format!("Yang-Baxter equation fails: {f}"),
            };
            Ok(CommandResult::verdict(
                rep.holds,
                json!({ "dim": r.dim(), "holds": rep.holds, "failure": failure }),
                summary,
            ))
        }
        Command::Serre {
            cartan,
            max_degree,
            caps,
        } => {
            cap_degree(*max_degree, caps)?;
            let data = io::parse_cartan(&read(cartan)?)?;
            let comb = Combinatorics::new(data.rmatrix())?;
            let mut ranks = Vec::new();
            let mut relations = Vec::new();
            for m in 0..=*max_degree {
                let rel = graded_kernel(m, &comb)?;
                ranks.push(rel.rank);
                relations.push(io::relation_set_to_json(&rel, &ranks));
            }
            let kernels: Vec<usize> = relations
                .iter()
                .map(|r| r["kernel_dim"].as_u64().unwrap() as usize)
                .collect();
            let summary = format!("ranks by degree {ranks:?}, kernel dimensions {kernels:?}");
            Ok(CommandResult::verdict(
                true,
                json!({
                    "cartan": data.cartan(),
                    "symmetrizers": data.symmetrizers(),
                    "max_degree": max_degree,
                    "ranks_by_degree": ranks,
                    "relations": relations,
                }),
                summary,
            ))
        }
        Command::Ranks {
            rmatrix,
            max_degree,
            caps,
        } => {
            cap_degree(*max_degree, caps)?;
            let r = io::parse_rmatrix(&read(rmatrix)?, !caps.no_ybe_check)?;
            let n = r.dim();
            let comb = combinatorics_for(r, caps);
            let ranks = (0..=*max_degree)
                .map(|m| graded_rank(m, &comb))
                .collect::<Result<Vec<_>>>()?;
            let kernels: Vec<usize> = ranks.iter().enumerate().map(|(m, r)| n.pow(m as u32) - r).collect();
            let summary = format!("ranks by degree {ranks:?}");
            Ok(CommandResult::verdict(
                true,
                json!({ "dim": n, "max_degree": max_degree, "ranks_by_degree": ranks, "kernel_dims": kernels }),
                summary,
            ))
        }
        Command::Exp {
            rmatrix,
            truncate,
            caps,
        } => {
            cap_degree(*truncate, caps)?;
            let r = io::parse_rmatrix(&read(rmatrix)?, !caps.no_ybe_check)?;
            let comb = combinatorics_for(r, caps);
            let e = braided_exp(&comb, *truncate)?;
            let eigen = exp_eigenfunction_check(&comb, *truncate)?;
            let mut payload = io::exp_to_json(&e);
            payload["eigenfunction"] = json!(eigen);
            let summary = format!(
                "exp truncated at degree {truncate}: {} terms, eigenfunction check {}",
                e.series.terms().len(),
                if eigen { "passed" } else { "FAILED" }
            );
            Ok(CommandResult::verdict(eigen, payload, summary))
        }
        Command::LieCheck { file, dim_cap } => {
            let b = io::parse_lie(&read(file)?)?;
            cap_dim(b.dim(), *dim_cap)?;
            let rep = check_lie_bialgebra(&b);
            let ok = rep.all_passed();
            let summary = format!(
                "{} checks on a dim-{} Lie bialgebra, {} failed",
                rep.checks.len(),
                b.dim(),
                rep.failures().count()
            );
            Ok(CommandResult::verdict(
                ok,
                json!({ "dim": b.dim(), "quasitriangular": b.r.is_some(), "all_passed": ok, "checks": report_json(&rep) }),
                summary,
            ))
        }
        Command::LieInduct {
            algebra,
            rep,
            mu,
            lambda,
            dim_cap,
        } => {
            let g = io::parse_lie(&read(algebra)?)?;
            let module = io::parse_representation(&read(rep)?, &g.algebra)?;
            cap_dim(g.dim() + 1 + 2 * module.carrier_dim(), *dim_cap)?;
            let mu = mu.as_deref().map(|s| parse_rational(s, "--mu")).transpose()?;
            let lambda_override = lambda.as_deref().map(|s| parse_rational(s, "--lambda")).transpose()?;
            let lambda_solved = lambda_override.is_none();
            let ind = induction_step(&g, &module, mu, lambda_override)?;
            let c = &ind.certificate;
            let summary = format!(
                "induction output: dim {}, Killing rank {}, toral rank {}, certificates {}",
                c.dim,
                c.killing_rank,
                c.toral_rank,
                if c.all_passed() { "all pass" } else { "FAILED" }
            );
            Ok(CommandResult::verdict(
                c.all_passed(),
                json!({
                    "algebra": io::lie_to_json(&ind.bialgebra),
                    "certificate": serde_json::to_value(c).expect("certificate serializes"),
                    "central_charge": {
                        "lambda": ind.lambda.to_string(),
                        "mu": ind.mu.to_string(),
                        "lambda_solved": lambda_solved,
                    },
                }),
                summary,
            ))
        }
        Command::Transmute { algebra, dim_cap } => {
            let g = io::parse_lie(&read(algebra)?)?;
            cap_dim(g.dim(), *dim_cap)?;
            let b = self_transmute(&g)?;
            let closed = transmute_closed_form(&g)?;
            let agrees = closed == b.cobracket;
            let rep = b.axiom_check();
            let ok = agrees && rep.all_passed();
            let images: serde_json::Map<String, Value> = g
                .algebra
                .labels()
                .iter()
                .zip(b.cobracket.images())
                .map(|(l, t)| (l.clone(), json!(g.algebra.format_tensor(t))))
                .collect();
            let summary = format!(
                "braided cobracket on dim {}: closed form {}, axioms {}",
                g.dim(),
                if agrees { "agrees" } else { "DISAGREES" },
                if rep.all_passed() { "pass" } else { "FAIL" }
            );
            Ok(CommandResult::verdict(
                ok,
                json!({
                    "dim": g.dim(),
                    "basis": g.algebra.labels(),
                    "cobracket": io::cobracket_entries(&b.cobracket),
                    "cobracket_display": images,
                    "closed_form_agrees": agrees,
                    "checks": report_json(&rep),
                }),
                summary,
            ))
        }
    }
}

/// Parses arguments, runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                Status::InputError.exit_code()
            } else {
                0
            };
        }
    };
    let res = run(&cli.command);
    // a closed pipe on stdout (e.g. `| head`) is not worth a panic
    let _ = writeln!(
        std::io::stdout(),
        "{}",
        serde_json::to_string_pretty(&res.payload).expect("payload serializes")
    );
    if !cli.quiet {
        eprintln!("{}", res.summary);
    }
    res.status.exit_code()
}
