//! Command-line front end: `absolute <command> ...`.
//!
//! Exit codes: 0 on success, 1 when the mathematical check fails, 2 on usage
//! or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use absolute_core::absolute::{
    compare_quotient_with, describe_absolute, first_violation, AbsoluteDescriptor, DescribeOptions,
    DescriptorDocument,
};
use absolute_core::harness::{simulate, verify_central, Witness, DEFAULT_DEPTH};
use absolute_core::latgeo::DistributionPoint;
use absolute_core::rational::{format_rational, parse_rational, Rational};
use absolute_core::{parse_presentation, Error, Presentation};
use clap::{Parser, Subcommand};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "absolute", version, about = "Absolutes of finitely generated commutative semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Central lattice, equations, polytope and strata of a presentation.
    Describe {
        file: PathBuf,
        /// Write the descriptor document to this path (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Enumeration depth when elimination does not finish.
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Print the centrality equations.
    Equations { file: PathBuf },
    /// Test a distribution against the centrality equations.
    CheckMeasure {
        file: PathBuf,
        /// Comma-separated weights, `1/2,1/4,1/4` or `a=1/2,b=1/4,c=1/4`.
        #[arg(long)]
        mu: String,
    },
    /// Compare path probabilities into each vertex up to a depth.
    Verify {
        file: PathBuf,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Simulate random walks and compare with the exact endpoint law.
    Simulate {
        file: PathBuf,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value_t = 10)]
        steps: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Whether two presentations have the same absolute.
    Compare { a: PathBuf, b: PathBuf },
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Precondition(_) | Error::InvalidDistribution(_) | Error::MismatchedGenerators(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Math(e.to_string()),
        }
    }
}

type Outcome = Result<(i32, String), Failure>;

/// Runs the command line `argv` (including the program name), printing to
/// stdout and stderr, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok((code, out)) => {
            print!("{out}");
            code
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Math(msg)) => {
            eprintln!("error: {msg}");
            EXIT_FAILED
        }
    }
}

fn load(path: &Path) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_presentation(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn options(depth: usize) -> DescribeOptions {
    DescribeOptions { fallback_depth: depth, witness_depth: depth, ..DescribeOptions::default() }
}

fn describe(path: &Path, depth: usize) -> Result<AbsoluteDescriptor, Failure> {
    Ok(describe_absolute(&load(path)?, &options(depth))?)
}

fn parse_mu(text: &str, names: &[String]) -> Result<DistributionPoint, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let mut weights: Vec<Option<Rational>> = vec![None; names.len()];
    if parts.iter().any(|p| p.contains('=')) {
        for part in parts {
            let (name, value) =
                part.split_once('=').ok_or_else(|| Failure::Usage(format!("expected name=weight, got `{part}`")))?;
            let i = names
                .iter()
                .position(|n| n == name.trim())
                .ok_or_else(|| Failure::Usage(format!("unknown generator `{}`", name.trim())))?;
            weights[i] = Some(weight(value)?);
        }
        if let Some(i) = weights.iter().position(Option::is_none) {
            return Err(Failure::Usage(format!("no weight for generator `{}`", names[i])));
        }
    } else {
        if parts.len() != names.len() {
            return Err(Failure::Usage(format!("expected {} weights, got {}", names.len(), parts.len())));
        }
        for (slot, part) in weights.iter_mut().zip(parts) {
            *slot = Some(weight(part)?);
        }
    }
    Ok(DistributionPoint::exact(weights.into_iter().flatten().collect())?)
}

fn weight(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).ok_or_else(|| Failure::Usage(format!("`{text}` is not a rational number")))
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Describe { file, json, depth } => {
            let d = describe(&file, depth)?;
            let mut out = render_descriptor(&d);
            if let Some(path) = json {
                let doc = DescriptorDocument::from_descriptor(&d).to_json();
                if path.as_os_str() == "-" {
                    out = doc + "\n";
                } else {
                    std::fs::write(&path, doc + "\n")
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                }
            }
            Ok((EXIT_OK, out))
        }
        Command::Equations { file } => {
            let d = describe(&file, 6)?;
            let mut out = String::new();
            for e in &d.equations {
                writeln!(out, "{}", e.render_named(&d.generators)).unwrap();
            }
            if d.equations.is_empty() {
                out.push_str("(none)\n");
            }
            Ok((EXIT_OK, out))
        }
        Command::CheckMeasure { file, mu } => {
            let d = describe(&file, 6)?;
            let mu = parse_mu(&mu, &d.generators)?;
            match first_violation(&d.equations, &mu) {
                None => Ok((EXIT_OK, format!("precentral: {}\n", mu.render()))),
                Some(i) => Ok((
                    EXIT_FAILED,
                    format!("not precentral: {} fails\n", d.equations[i].render_named(&d.generators)),
                )),
            }
        }
        Command::Verify { file, mu, depth } => {
            let d = describe(&file, 6)?;
            let mu = parse_mu(&mu, &d.generators)?;
            let report = verify_central(&d.rewrite_system, &mu, depth)?;
            let mut out = String::new();
            if report.passed {
                writeln!(out, "central up to depth {depth}").unwrap();
                return Ok((EXIT_OK, out));
            }
            writeln!(out, "not central: {} witness(es) up to depth {depth}", report.witnesses.len()).unwrap();
            for w in &report.witnesses {
                writeln!(
                    out,
                    "  level {} vertex {}: P({}) = {} but P({}) = {}",
                    w.level,
                    w.vertex.render(&d.generators),
                    Witness::render_path(&w.path_a, &d.generators),
                    format_rational(&w.prob_a),
                    Witness::render_path(&w.path_b, &d.generators),
                    format_rational(&w.prob_b),
                )
                .unwrap();
            }
            Ok((EXIT_FAILED, out))
        }
        Command::Simulate { file, mu, steps, trials, seed } => {
            let d = describe(&file, 6)?;
            let mu = parse_mu(&mu, &d.generators)?;
            let stats = simulate(&d.rewrite_system, &mu, steps, trials, seed)?;
            let json = serde_json::to_string_pretty(&stats.to_json(&d.generators)).expect("stats serialize");
            Ok((EXIT_OK, json + "\n"))
        }
        Command::Compare { a, b } => {
            let same = compare_quotient_with(&load(&a)?, &load(&b)?, &options(6))?;
            if same {
                Ok((EXIT_OK, "same absolute\n".into()))
            } else {
                Ok((EXIT_FAILED, "different absolutes\n".into()))
            }
        }
    }
}

fn render_descriptor(d: &AbsoluteDescriptor) -> String {
    let names = &d.generators;
    let mut out = String::new();
    if let Some(name) = &d.name {
        writeln!(out, "name: {name}").unwrap();
    }
    writeln!(out, "digest: {}", d.digest).unwrap();
    writeln!(out, "generators: {}", names.join(" ")).unwrap();
    writeln!(out, "class: {}", d.class.as_str()).unwrap();
    writeln!(out, "central lattice: {:?}", d.central_lattice.basis).unwrap();
    writeln!(out, "group rank: {}", d.group_rank).unwrap();
    writeln!(out, "dimension: {}", d.dimension).unwrap();
    writeln!(out, "equations:{}", if d.equations.is_empty() { " (none)" } else { "" }).unwrap();
    for e in &d.equations {
        writeln!(out, "  {}", e.render_named(names)).unwrap();
    }
    writeln!(out, "polytope: {} vertices, {} facets", d.polytope.vertices.len(), d.polytope.facets.len()).unwrap();
    writeln!(out, "strata: {}", d.strata.len()).unwrap();
    for s in &d.strata {
        let support: Vec<&str> = s.support.iter().map(|&i| names[i].as_str()).collect();
        writeln!(out, "  {{{}}} dim {} sample ({})", support.join(","), s.dimension, s.sample.render()).unwrap();
    }
    writeln!(out, "branching: {}", d.branching).unwrap();
    writeln!(out, "topology: {}", d.topology_claim).unwrap();
    if !d.exact {
        writeln!(out, "note: central pairs from bounded enumeration").unwrap();
    }
    out
}
