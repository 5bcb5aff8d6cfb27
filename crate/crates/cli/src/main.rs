//! Command-line front end: build the families, compute pole triples and
//! TSP lengths, check the composition lemmas, and print family tables.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cubictsp::construct::{family, family_pole, DEFAULT_MAX_FAMILY_VERTICES};
use cubictsp::enumerate::DEFAULT_ENUM_BUDGET;
use cubictsp::io::{parse_adjacency, parse_pole, write_adjacency, write_dot, write_pole, write_pole_dot};
use cubictsp::symmetry::DEFAULT_SYMMETRY_BUDGET;
use cubictsp::tsp::DEFAULT_ORACLE_BUDGET;
use cubictsp::verify::{rows_to_csv, theorem_table, verify_lemma1, verify_lemma2, LemmaReport, TableConfig, Verdict};
use cubictsp::{held_karp_tsp, min_excess, pole_triple, tsp_length, Error, FamilyKind, SolverConfig};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BOUND: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "cubictsp", version, about = "Cubic graphs with long graphic-TSP tours")]
struct Cli {
    /// Largest number of even subgraphs enumerated exhaustively.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_BUDGET)]
    enum_budget: u64,
    /// Largest vertex count accepted by the Held-Karp oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_BUDGET)]
    oracle_budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family member (closed graph, or its pole with --pole).
    Generate {
        #[arg(long, value_parser = parse_family)]
        family: FamilyKind,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Adj)]
        format: Format,
        #[arg(long)]
        pole: bool,
    },
    /// Print the excess triple `q0 q2 n` of a pole file.
    Triple {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Print the minimum excess of a graph file.
    Excess {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also print the edges of a minimizing even factor.
        #[arg(long)]
        witness: bool,
    },
    /// Print the graphic-TSP length of a graph file.
    Tsp {
        #[arg(long = "in")]
        input: PathBuf,
        /// Also print a closed walk achieving the length.
        #[arg(long)]
        certificate: bool,
        /// Cross-check against Held-Karp; exit 1 on disagreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Check a composition lemma on the k-th family pole.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        lemma: u8,
        #[arg(long)]
        k: u32,
        /// Family for lemma 1 (lemma 2 always uses the 3-connected chain).
        #[arg(long, value_parser = parse_family, default_value = "planar")]
        family: FamilyKind,
        #[arg(long, default_value_t = DEFAULT_SYMMETRY_BUDGET)]
        symmetry_budget: usize,
    },
    /// Tabulate closed forms, bounds and exact values for k up to kmax.
    Report {
        #[arg(long, value_parser = parse_family)]
        family: FamilyKind,
        #[arg(long)]
        kmax: u32,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Exact values are attempted only up to this many vertices.
        #[arg(long, default_value_t = TableConfig::default().max_exact_vertices)]
        exact_max_vertices: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Adj,
    Dot,
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    s.parse::<FamilyKind>().map_err(|e| e.to_string())
}

/// An error with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_resource_bound() { EXIT_BOUND } else { EXIT_USAGE };
        Failure { code, message: e.to_string() }
    }
}

fn with_file(path: &Path, e: Error) -> Failure {
    let code = if e.is_resource_bound() { EXIT_BOUND } else { EXIT_USAGE };
    Failure { code, message: format!("{}: {e}", path.display()) }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_report(lemma: u8, label: &str, r: &LemmaReport) -> u8 {
    let show = |t: Option<cubictsp::ExcessTriple>| t.map_or_else(|| "-".to_string(), |t| t.to_string());
    println!("lemma {lemma} ({label})");
    println!("  premise  {}", show(r.premise));
    println!("  expected {}", show(r.expected));
    println!("  computed {}", show(r.computed));
    if let Some(s) = r.symmetry {
        println!("  symmetry {s:?}");
    }
    if let Some(note) = &r.note {
        println!("  note     {note}");
    }
    println!("  verdict  {}", r.verdict);
    match r.verdict {
        Verdict::Pass => 0,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Unverified => EXIT_BOUND,
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let solver = SolverConfig { enum_budget: cli.enum_budget, ..SolverConfig::default() };
    match cli.command {
        Command::Generate { family: kind, k, out, format, pole } => {
            let text = if pole {
                let p = family_pole(kind, k, DEFAULT_MAX_FAMILY_VERTICES)?;
                match format {
                    Format::Adj => write_pole(&p),
                    Format::Dot => write_pole_dot(&p),
                }
            } else {
                if k < kind.min_k() {
                    return Err(Failure::usage(format!(
                        "the {} family starts at k = {}",
                        kind.name(),
                        kind.min_k()
                    )));
                }
                let g = family(kind, k, DEFAULT_MAX_FAMILY_VERTICES)?.closed;
                match format {
                    Format::Adj => write_adjacency(&g),
                    Format::Dot => write_dot(&g),
                }
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Triple { input } => {
            let p = parse_pole(&read(&input)?).map_err(|e| with_file(&input, e))?;
            let t = pole_triple(&p, &solver).map_err(|e| with_file(&input, e))?;
            println!("{} {} {}", t.q0, t.q2, t.n);
            Ok(0)
        }
        Command::Excess { input, witness } => {
            let g = parse_adjacency(&read(&input)?).map_err(|e| with_file(&input, e))?;
            let m = min_excess(&g, &solver).map_err(|e| with_file(&input, e))?;
            println!("excess = {}", m.excess);
            if witness {
                for &e in &m.witness.edges {
                    let (u, v) = g.edge(e);
                    println!("{u} {v}");
                }
            }
            Ok(0)
        }
        Command::Tsp { input, certificate, oracle } => {
            let g = parse_adjacency(&read(&input)?).map_err(|e| with_file(&input, e))?;
            let r = tsp_length(&g, &solver).map_err(|e| with_file(&input, e))?;
            println!("tsp = {}", r.length);
            if certificate {
                let walk: Vec<String> = r.tour.walk.iter().map(|v| v.to_string()).collect();
                println!("tour: {}", walk.join(" "));
            }
            if oracle {
                let hk = held_karp_tsp(&g, cli.oracle_budget).map_err(|e| with_file(&input, e))?;
                println!("oracle = {hk}");
                if hk != r.length {
                    eprintln!("error: solver and oracle disagree ({} vs {hk})", r.length);
                    return Ok(EXIT_FAIL);
                }
            }
            Ok(0)
        }
        Command::Verify { lemma, k, family: kind, symmetry_budget } => {
            let (report, label) = if lemma == 1 {
                if kind == FamilyKind::ThreeConnected {
                    return Err(Failure::usage("lemma 1 applies to the planar and bipartite chains"));
                }
                let a = family_pole(kind, k, DEFAULT_MAX_FAMILY_VERTICES)?;
                (verify_lemma1(&a, &solver)?, format!("{}, k = {k} -> {}", kind.name(), k + 1))
            } else {
                let b = family_pole(FamilyKind::ThreeConnected, k, DEFAULT_MAX_FAMILY_VERTICES)?;
                (verify_lemma2(&b, &solver, symmetry_budget)?, format!("threeconn, k = {k} -> {}", k + 1))
            };
            Ok(print_report(lemma, &label, &report))
        }
        Command::Report { family: kind, kmax, csv, exact_max_vertices } => {
            let cfg = TableConfig { solver, max_exact_vertices: exact_max_vertices, ..TableConfig::default() };
            let rows = theorem_table(kind, kmax, &cfg)?;
            let (ln, ld) = kind.limit_ratio();
            println!("{} family, limit ratio {ln}/{ld}", kind.name());
            println!(
                "{:>3} {:>10} {:>10} {:>8} {:>12} {:>10} {:>9}",
                "k", "pole", "|V(G_k)|", "a_k/b_k", "lower bound", "exact", "ratio"
            );
            let mut code = 0;
            for r in &rows {
                let exact = r.exact_tsp.map_or_else(|| "-".to_string(), |t| t.to_string());
                let flag = match r.is_tight() {
                    Some(false) => {
                        code = EXIT_FAIL;
                        "  FAIL: exact value differs from the bound"
                    }
                    _ => "",
                };
                println!(
                    "{:>3} {:>10} {:>10} {:>8} {:>12} {:>10} {:>9.6}{flag}",
                    r.k, r.pole_vertices, r.closed_vertices, r.excess_param, r.proved_lower_bound, exact, r.ratio()
                );
            }
            println!(
                "note: lower bound = |V(G_k)| + a_k/b_k; reading n_k (pole order) in place of |V(G_k)| lowers it by the host order {}.",
                kind.host_order()
            );
            if let Some(path) = csv {
                fs::write(&path, rows_to_csv(&rows))
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            }
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
