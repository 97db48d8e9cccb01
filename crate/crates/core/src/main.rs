use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use silting_core::algebra::{self_injectivity_report, Algebra, SelfInjectivityReport};
use silting_core::complex::ProjComplex;
use silting_core::demo::{run_paper_demo, run_preprojective_demo, DemoOptions};
use silting_core::fixtures::DynkinType;
use silting_core::io::{emit_dot, emit_report, parse_algebra, parse_complex, print_complex};
use silting_core::krull_schmidt::algebra_radical;
use silting_core::mutation::{enumerate, mutate, EnumerateOptions, Side};
use silting_core::silting::{nakayama_automorphism, silting_check, tilting_check, SiltingCertificate};
use silting_core::{Error, Result};

#[derive(Parser)]
#[command(name = "silting", version, about = "Silting and tilting complexes over bound quiver algebras")]
struct Cli {
    /// Seed for randomized steps (idempotent splitting, sampling).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, radical and self-injectivity of an algebra.
    Info {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Presilting/silting verdict for a complex, or the tilting verdict with `--tilting`.
    Check {
        #[command(flatten)]
        input: ComplexInput,
        #[arg(long)]
        tilting: bool,
        /// How the complex is known to generate.
        #[arg(long, value_enum, default_value_t = Certificate::Unverified)]
        certificate: Certificate,
    },
    /// Irreducible mutation at one indecomposable summand.
    Mutate {
        #[command(flatten)]
        input: ComplexInput,
        /// 1-based summand index, in the order listed by the decomposition.
        #[arg(long)]
        at: usize,
        #[arg(long, value_parser = parse_side, default_value = "left")]
        side: Side,
    },
    /// Breadth-first mutation graph from the regular complex (or `--complex`).
    Enumerate {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        complex: Option<PathBuf>,
        /// Restrict to the interval between the start and its shift.
        #[arg(long)]
        two_term: bool,
        #[arg(long, default_value_t = 10_000)]
        node_bound: usize,
        #[arg(long, default_value_t = 3)]
        depth_bound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Built-in worked examples.
    Demo {
        #[command(subcommand)]
        which: Demo,
    },
}

#[derive(Subcommand)]
enum Demo {
    /// The weakly symmetric algebra with a silting complex that is not tilting.
    Paper {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 101)]
        p: u32,
        /// Depth of the mutation neighbourhood; 0 skips it.
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Two-term silting interval of a preprojective algebra of Dynkin type.
    Preprojective {
        #[arg(long = "type", value_parser = parse_dynkin)]
        ty: DynkinType,
        #[arg(long, default_value_t = 101)]
        p: u32,
        #[arg(long, default_value_t = 10_000)]
        node_bound: usize,
    },
}

#[derive(Args)]
struct ComplexInput {
    #[arg(long)]
    algebra: PathBuf,
    #[arg(long)]
    complex: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Certificate {
    Regular,
    MutationChain,
    SphericalTwist,
    BaseChange,
    Unverified,
}

impl From<Certificate> for SiltingCertificate {
    fn from(c: Certificate) -> Self {
        match c {
            Certificate::Regular => SiltingCertificate::Regular,
            Certificate::MutationChain => SiltingCertificate::MutationChain,
            Certificate::SphericalTwist => SiltingCertificate::SphericalTwist,
            Certificate::BaseChange => SiltingCertificate::BaseChange,
            Certificate::Unverified => SiltingCertificate::Unverified,
        }
    }
}

fn parse_side(s: &str) -> std::result::Result<Side, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_dynkin(s: &str) -> std::result::Result<DynkinType, String> {
    DynkinType::parse(s).map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_algebra(path: &Path, seed: u64) -> Result<Arc<Algebra>> {
    let file = parse_algebra(&read(path)?).map_err(|e| in_file(path, e))?;
    Ok(Arc::new(file.build()?.with_seed(seed)))
}

fn load_complex(input: &ComplexInput, seed: u64) -> Result<ProjComplex> {
    let alg = load_algebra(&input.algebra, seed)?;
    parse_complex(&read(&input.complex)?, alg).map_err(|e| in_file(&input.complex, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, col, msg } => Error::Parse { line, col, msg: format!("{}: {msg}", path.display()) },
        Error::Semantic(m) => Error::Semantic(format!("{}:{m}", path.display())),
        e => e,
    }
}

/// What a subcommand prints, and whether it counts as a pass.
struct Outcome {
    text: String,
    json: String,
    ok: bool,
}

impl Outcome {
    fn new<T: Serialize>(report: &T, text: String, ok: bool) -> Self {
        Outcome { text, json: emit_report(report), ok }
    }
}

#[derive(Serialize)]
struct InfoReport {
    dim: usize,
    vertices: usize,
    radical_dim: usize,
    loewy_length: usize,
    cartan: Vec<Vec<i64>>,
    self_injectivity: SelfInjectivityReport,
}

fn info(path: &Path, seed: u64) -> Result<Outcome> {
    let alg = load_algebra(path, seed)?;
    let rep = InfoReport {
        dim: alg.dim(),
        vertices: alg.num_vertices(),
        radical_dim: algebra_radical(&alg).len(),
        loewy_length: alg.loewy_length(),
        cartan: alg.cartan_matrix(),
        self_injectivity: self_injectivity_report(&alg),
    };
    let si = &rep.self_injectivity;
    let text = format!(
        "dimension {}\nvertices {}\nradical dimension {}\nLoewy length {}\nself-injective {}\nweakly symmetric {}\nsymmetric {}\n",
        rep.dim, rep.vertices, rep.radical_dim, rep.loewy_length, si.self_injective, si.weakly_symmetric, si.symmetric
    );
    Ok(Outcome::new(&rep, text, true))
}

fn check(input: &ComplexInput, tilting: bool, cert: Certificate, seed: u64) -> Result<Outcome> {
    let t = load_complex(input, seed)?;
    if tilting {
        let v = tilting_check(&t)?;
        let text = format!("{}: {}\n", if v.tilting { "tilting" } else { "not tilting" }, v.reason());
        let ok = v.tilting;
        return Ok(Outcome::new(&v, text, ok));
    }
    let rep = silting_check(&t, cert.into())?;
    let mut text = format!("{}\n", rep.verdict());
    for h in rep.vanishing.iter().filter(|h| h.dim > 0) {
        text.push_str(&format!("  dim Hom(T, T[{}]) = {}\n", h.shift, h.dim));
    }
    let ok = rep.presilting && rep.k0_complete;
    Ok(Outcome::new(&rep, text, ok))
}

#[derive(Serialize)]
struct MutationReport {
    at: usize,
    side: Side,
    exchanged_g_vector: Vec<i64>,
    result_g_vectors: Vec<Vec<i64>>,
    result: String,
}

fn mutate_cmd(input: &ComplexInput, at: usize, side: Side, seed: u64) -> Result<Outcome> {
    let t = load_complex(input, seed)?;
    if at == 0 {
        return Err(Error::Usage("summand indices start at 1".into()));
    }
    let step = mutate(&t, at - 1, side)?;
    let result = step.result_complex();
    let rep = MutationReport {
        at,
        side,
        exchanged_g_vector: step.exchanged.g_vector(),
        result_g_vectors: step.result.iter().map(ProjComplex::g_vector).collect(),
        result: print_complex(&result),
    };
    Ok(Outcome::new(&rep, rep.result.clone(), true))
}

#[derive(Serialize)]
struct EnumerateReport {
    nodes: usize,
    edges: usize,
    complete: bool,
    tilting_nodes: usize,
    g_vectors: Vec<Vec<Vec<i64>>>,
}

fn enumerate_cmd(
    algebra: &Path,
    complex: Option<&Path>,
    two_term: bool,
    node_bound: usize,
    depth_bound: usize,
    out: Option<&Path>,
    seed: u64,
) -> Result<Outcome> {
    let alg = load_algebra(algebra, seed)?;
    let start = match complex {
        Some(c) => parse_complex(&read(c)?, alg.clone()).map_err(|e| in_file(c, e))?,
        None => ProjComplex::regular(alg.clone()),
    };
    let nu = nakayama_automorphism(&alg)?;
    let opts = EnumerateOptions {
        node_bound,
        depth_bound: if two_term { usize::MAX } else { depth_bound },
        interval: two_term,
        tilting: Some(nu),
        ..EnumerateOptions::default()
    };
    let graph = enumerate(&start, &opts)?;
    if let Some(out) = out {
        fs::write(out, emit_dot(&graph)).map_err(|e| Error::Usage(format!("cannot write {}: {e}", out.display())))?;
    }
    let rep = EnumerateReport {
        nodes: graph.len(),
        edges: graph.edges.len(),
        complete: graph.complete,
        tilting_nodes: graph.tilting_count(),
        g_vectors: graph.nodes.iter().map(|n| n.g_vectors.clone()).collect(),
    };
    let text = format!(
        "{} nodes, {} edges, {} tilting{}\n",
        rep.nodes,
        rep.edges,
        rep.tilting_nodes,
        if rep.complete { "" } else { " (bound reached)" }
    );
    // an unclosed two-term interval is a failure to certify, not a usage problem
    let ok = rep.complete || !two_term;
    Ok(Outcome::new(&rep, text, ok))
}

fn run(cli: &Cli) -> Result<Outcome> {
    let seed = cli.seed;
    match &cli.command {
        Command::Info { algebra } => info(algebra, seed),
        Command::Check { input, tilting, certificate } => check(input, *tilting, *certificate, seed),
        Command::Mutate { input, at, side } => mutate_cmd(input, *at, *side, seed),
        Command::Enumerate { algebra, complex, two_term, node_bound, depth_bound, out } => {
            enumerate_cmd(algebra, complex.as_deref(), *two_term, *node_bound, *depth_bound, out.as_deref(), seed)
        }
        Command::Demo { which: Demo::Paper { n, p, depth } } => {
            let r = run_paper_demo(*n, *p, &DemoOptions { neighborhood_depth: *depth, ..DemoOptions::default() })?;
            let mut text = String::new();
            for c in &r.checks {
                text.push_str(&format!("[{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name));
                if !c.detail.is_empty() && !c.passed {
                    text.push_str(&format!(": {}", c.detail));
                }
                text.push('\n');
            }
            text.push_str(&format!("{}\n", r.summary()));
            Ok(Outcome::new(&r, text, r.passed))
        }
        Command::Demo { which: Demo::Preprojective { ty, p, node_bound } } => {
            let r = run_preprojective_demo(*ty, *p, *node_bound)?;
            let mut text = format!(
                "{} over GF({}): dim {}, self-injective {}, weakly symmetric {}, symmetric {}\n",
                r.ty, r.p, r.dim, r.self_injective, r.weakly_symmetric, r.symmetric
            );
            text.push_str(&format!("two-term interval: {} nodes, {} tilting\n", r.nodes, r.tilting_nodes));
            for c in r.checks.iter().filter(|c| !c.passed) {
                text.push_str(&format!("[FAIL] {}: {}\n", c.name, c.detail));
            }
            text.push_str(if r.passed { "PASS\n" } else { "FAILED\n" });
            Ok(Outcome::new(&r, text, r.passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", if cli.json { &out.json } else { &out.text });
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
