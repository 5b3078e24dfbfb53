//! The `zf` command line: `solve`, `verify`, `decompose`, `oracle` and
//! `bench`.
//!
//! Exit codes: 0 success, 1 verification failed, 2 unreadable or malformed
//! input, 3 invalid decomposition, 4 a produced result failed its own
//! verification, 5 an exact solver's size limit was exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::approx::verify_result;
use crate::certificate::{solve, write_canonical, Certificate, DecompositionSource, SolveError};
use crate::decomposition::{
    exact_pathwidth_limited, make_nice, parse_decomposition, serialize_decomposition, DecompositionError,
    EXACT_PATHWIDTH_MAX_N,
};
use crate::generators::Family;
use crate::graph::{parse_graph, Graph};
use crate::oracles::{exact_ft, exact_z, z_proper_interval, OracleBudget, OracleError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BAD_DECOMPOSITION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

/// Bench sizes; those above `--max-n` are skipped.
pub const BENCH_SIZES: [usize; 7] = [100, 300, 1_000, 3_000, 10_000, 30_000, 100_000];

#[derive(Debug, Parser)]
#[command(name = "zf", version, about = "Zero forcing sets with fort-packing certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Approximate a minimum zero forcing set and emit a certificate.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        /// Path decomposition of the graph, one bag per line.
        #[arg(long, conflicts_with = "exact_pw")]
        decomposition: Option<PathBuf>,
        /// Compute an optimal decomposition of each component (small
        /// components only). The default when no decomposition is given.
        #[arg(long)]
        exact_pw: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Emit a nice path decomposition of minimum width.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, required = true)]
        exact_pw: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact zero forcing number, fort number and pathwidth of a small graph.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        /// Vertex limit applied to every exact solver.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Time the solver on generated families and print CSV.
    Bench {
        #[arg(long)]
        seed: u64,
        /// Comma-separated subset of path,cycle,ladder,interval.
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<Family>>,
        #[arg(long, default_value_t = 10_000)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command,
/// writing primary output to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Solve { graph, decomposition, exact_pw: _, out: path } => {
            cmd_solve(&graph, decomposition.as_deref(), path.as_deref(), out, err)
        }
        Command::Verify { graph, certificate } => cmd_verify(&graph, &certificate, out),
        Command::Decompose { graph, exact_pw: _, out: path } => cmd_decompose(&graph, path.as_deref(), out, err),
        Command::Oracle { graph, budget } => cmd_oracle(&graph, budget, out),
        Command::Bench { seed, families, max_n, out: path } => {
            cmd_bench(seed, families.as_deref().unwrap_or(&Family::ALL), max_n, path.as_deref(), out)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path).map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::new(EXIT_PARSE, format!("cannot write output: {e}"));
    match path {
        Some(p) => std::fs::write(p, text).map_err(io),
        None => out.write_all(text.as_bytes()).map_err(io),
    }
}

fn decomposition_failure(e: DecompositionError) -> Failure {
    let code = match e {
        DecompositionError::MalformedLine { .. }
        | DecompositionError::EmptyBag { .. }
        | DecompositionError::UnsortedBag { .. } => EXIT_PARSE,
        DecompositionError::TooLarge { .. } => EXIT_BUDGET,
        _ => EXIT_BAD_DECOMPOSITION,
    };
    Failure::new(code, format!("decomposition: {e}"))
}

fn cmd_solve(
    graph: &Path,
    decomposition: Option<&Path>,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let g = load_graph(graph)?;
    let given = match decomposition {
        Some(p) => Some(parse_decomposition(&read(p)?, &g).map_err(decomposition_failure)?),
        None => None,
    };
    let source = match &given {
        Some(pd) => DecompositionSource::Given(pd),
        None => DecompositionSource::Exact { max_n: EXACT_PATHWIDTH_MAX_N },
    };
    let sol = solve(&g, source).map_err(|e| match e {
        SolveError::Decomposition(d) => decomposition_failure(d),
        SolveError::TooLarge { .. } => Failure::new(EXIT_BUDGET, e.to_string()),
        SolveError::Approx(_) | SolveError::Verification(_) => Failure::new(EXIT_INTERNAL, e.to_string()),
    })?;
    emit(&Certificate::new(&g, &sol).to_json(), path, out)?;
    let r = &sol.result;
    let _ = writeln!(err, "zero forcing set: {} vertices; forts: {}; width: {}", r.s.len(), r.packing.len(), r.width_used);
    Ok(EXIT_OK)
}

fn cmd_verify(graph: &Path, certificate: &Path, out: &mut dyn Write) -> Outcome {
    let g = load_graph(graph)?;
    let parse = |e: crate::certificate::CertificateError| Failure::new(EXIT_PARSE, e.to_string());
    let cert = Certificate::from_json(&read(certificate)?).map_err(parse)?;
    let result = cert.to_result(&g).map_err(parse)?;
    let report = verify_result(&g, &result);
    let mut text = String::new();
    let digest_ok = cert.matches_graph(&g);
    if digest_ok {
        text.push_str("PASS graph-digest: certificate matches the graph\n");
    } else {
        let _ = writeln!(text, "FAIL graph-digest: certificate is for graph {}", cert.graph_sha256);
    }
    text.push_str(&report.to_string());
    emit(&text, None, out)?;
    Ok(if digest_ok && report.all_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_decompose(graph: &Path, path: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g = load_graph(graph)?;
    let (width, pd) = exact_pathwidth_limited(&g, EXACT_PATHWIDTH_MAX_N).map_err(|e| match e {
        DecompositionError::TooLarge { n, max } => Failure::new(
            EXIT_BUDGET,
            format!("exact pathwidth is limited to {max} vertices and the graph has {n}; supply a decomposition to solve instead"),
        ),
        e => Failure::new(EXIT_INTERNAL, e.to_string()),
    })?;
    let text = if g.n() == 0 {
        String::new()
    } else {
        let nice = make_nice(&g, &pd).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
        serialize_decomposition(nice.bags())
    };
    emit(&text, path, out)?;
    let _ = writeln!(err, "width {width}");
    Ok(EXIT_OK)
}

fn cmd_oracle(graph: &Path, budget: Option<usize>, out: &mut dyn Write) -> Outcome {
    let g = load_graph(graph)?;
    let budget = budget.map_or_else(OracleBudget::default, OracleBudget::uniform);
    let over = |e: OracleError| Failure::new(EXIT_BUDGET, e.to_string());
    let (z, witness) = exact_z(&g, &budget).map_err(over)?;
    let (ft, packing) = exact_ft(&g, &budget).map_err(over)?;
    let (pw, pd) = exact_pathwidth_limited(&g, budget.max_n_pw).map_err(|e| Failure::new(EXIT_BUDGET, e.to_string()))?;
    let value = json!({
        "ft": { "forts": packing.forts, "value": ft },
        "n": g.n(),
        "pw": { "bags": pd.bags(), "value": pw },
        "z": { "value": z, "witness": witness },
    });
    let mut text = String::new();
    write_canonical(&value, 0, &mut text);
    text.push('\n');
    emit(&text, None, out)?;
    Ok(EXIT_OK)
}

/// Exact zero forcing number of a generated family member.
fn family_z(family: Family, g: &Graph) -> Option<usize> {
    match family {
        Family::Path | Family::Interval => z_proper_interval(g).ok().map(|(z, _)| z),
        // closed forms: cycles and ladders both have zero forcing number 2
        Family::Cycle | Family::Ladder => Some(2),
    }
}

fn cmd_bench(seed: u64, families: &[Family], max_n: usize, path: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let mut text = String::from("family,n,m,width,s,forts,ratio,z_exact,wall_ms\n");
    for &family in families {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for &n in BENCH_SIZES.iter().filter(|&&n| n <= max_n) {
            let (g, pd) = family.generate(n, &mut rng);
            let start = Instant::now();
            let sol = solve(&g, DecompositionSource::Given(&pd)).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            let r = &sol.result;
            let z = family_z(family, &g);
            let ratio = z.map_or(String::new(), |z| format!("{:.4}", r.s.len() as f64 / z as f64));
            let _ = writeln!(
                text,
                "{family},{},{},{},{},{},{ratio},{},{wall_ms:.3}",
                g.n(),
                g.m(),
                r.width_used,
                r.s.len(),
                r.packing.len(),
                z.map_or(String::new(), |z| z.to_string()),
            );
        }
    }
    emit(&text, path, out)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("zf").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&[]).0, EXIT_PARSE);
        assert_eq!(run_args(&["solve"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["bench", "--seed", "1", "--families", "tree"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn missing_file_exits_2() {
        let (code, _, err) = run_args(&["solve", "--graph", "/nonexistent/graph.txt"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn bench_is_deterministic_apart_from_timing() {
        let strip = |csv: &str| csv.lines().map(|l| l.rsplit_once(',').unwrap().0.to_string()).collect::<Vec<_>>();
        let (code, a, _) = run_args(&["bench", "--seed", "5", "--max-n", "300"]);
        assert_eq!(code, EXIT_OK);
        let (_, b, _) = run_args(&["bench", "--seed", "5", "--max-n", "300"]);
        assert_eq!(strip(&a), strip(&b));
        assert_eq!(a.lines().count(), 1 + 4 * 2);
        assert!(a.starts_with("family,n,m,width,s,forts,ratio,z_exact,wall_ms\n"));
    }
}
