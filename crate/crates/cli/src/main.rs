//! `rtg`: generate, check, count, verify and search properly edge-colored
//! graphs in the `rtg1` text format.
//!
//! Exit codes: 0 success, 1 rainbow copy or lemma violation found, 2 usage,
//! input or domain error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_core::extremal::{ex_star_exact, SearchOptions};
use rainbow_core::lemmas::corpus::instance;
use rainbow_core::lemmas::harness::run_harness;
use rainbow_core::lemmas::{check, LemmaId, VertexPartition};
use rainbow_core::{
    build_folded_cube, build_lower_bound, count_rainbow, drop_light_components, find_rainbow,
    parse_rtg1, preprocess, prune_min_degree, theoretical_bounds, write_rtg1, Anchor, ColoredGraph,
    Pattern, Rational,
};

#[derive(Parser)]
#[command(
    name = "rtg",
    version,
    about = "Rainbow paths and cycles in properly edge-colored graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a graph in rtg1 format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Print `free`, or a witness line and exit 1.
    Check {
        #[arg(long)]
        pattern: Pattern,
        /// Require the copy to contain this vertex.
        #[arg(long)]
        anchor: Option<usize>,
        #[arg(long, value_enum, default_value = "member", requires = "anchor")]
        role: Role,
        #[command(flatten)]
        input: Input,
    },
    /// Print the number of rainbow copies (unlabeled).
    Count {
        #[arg(long)]
        pattern: Pattern,
        #[command(flatten)]
        jobs: Jobs,
        #[command(flatten)]
        input: Input,
    },
    /// Print the vertices on / off rainbow C5 copies.
    Partition {
        #[command(flatten)]
        input: Input,
    },
    /// Run lemma checks on one graph, or over the seeded corpus.
    Verify {
        /// `all` or one of cycle, neighbor, p4-endpoint, distance2,
        /// p3-endpoint, pairing, main.
        #[arg(long, default_value = "all")]
        lemma: String,
        /// Check the seeded random corpus instead of an input graph.
        #[arg(long, conflicts_with = "file")]
        corpus: bool,
        #[arg(long, default_value_t = 0, requires = "corpus")]
        seed: u64,
        #[arg(long, default_value_t = 10_000, requires = "corpus")]
        instances: u64,
        #[command(flatten)]
        jobs: Jobs,
        #[command(flatten)]
        input: Input,
    },
    /// Exact ex*(n, pattern) by exhaustive search.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: Pattern,
        /// Highest edge count to try.
        #[arg(long)]
        edge_cap: Option<usize>,
        /// Allow n above 8 (cost grows exponentially).
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Prune low-degree vertices and/or light components; survivors are
    /// renumbered in their original order.
    Prune {
        /// Delete vertices of degree below k until none remain.
        #[arg(long, conflicts_with_all = ["preprocess", "drop_light"])]
        k: Option<usize>,
        /// 3-core, then drop components with average degree at most 5.
        #[arg(long)]
        preprocess: bool,
        /// Only drop components with average degree at most 5.
        #[arg(long, conflicts_with = "preprocess")]
        drop_light: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Print known bounds on ex*(n, P_l).
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        l: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Folded cube for rainbow P_l: 2^(l-1) vertices, l-regular.
    FoldedCube {
        #[arg(long)]
        l: usize,
    },
    /// Disjoint folded cubes plus isolated vertices, n vertices in total.
    LowerBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
    },
    /// One instance of the seeded rainbow-P5-free corpus.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        instance: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Role {
    Endpoint,
    Member,
}

#[derive(Args)]
struct Input {
    /// rtg1 file; standard input when absent or `-`.
    file: Option<PathBuf>,
}

#[derive(Args)]
struct Jobs {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long)]
    jobs: Option<usize>,
}

impl Jobs {
    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
        match self.jobs {
            None => Ok(f()),
            Some(k) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(k.max(1))
                    .build()
                    .map_err(|e| Failure::usage(e.to_string()))?;
                Ok(pool.install(f))
            }
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl Input {
    fn read(&self) -> Result<ColoredGraph, Failure> {
        let (name, text) = match &self.file {
            Some(p) if p.as_os_str() != "-" => {
                let text = fs::read_to_string(p)
                    .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
                (p.display().to_string(), text)
            }
            _ => {
                let mut text = String::new();
                io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
                ("<stdin>".to_string(), text)
            }
        };
        parse_rtg1(&text).map_err(|e| Failure::usage(format!("{name}: {e}")))
    }
}

fn list(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli, out: &mut String) -> Result<u8, Failure> {
    use std::fmt::Write as _;
    match cli.command {
        Command::Gen { kind } => {
            let g = match kind {
                GenKind::FoldedCube { l } => {
                    build_folded_cube(l).map_err(|e| Failure::usage(e.to_string()))?
                }
                GenKind::LowerBound { n, l } => {
                    build_lower_bound(n, l).map_err(|e| Failure::usage(e.to_string()))?
                }
                GenKind::Random { seed, instance: id } => instance(seed, id).graph,
            };
            out.push_str(&write_rtg1(&g));
            Ok(0)
        }
        Command::Check {
            pattern,
            anchor,
            role,
            input,
        } => {
            let g = input.read()?;
            let anchor = anchor.map(|v| match role {
                Role::Endpoint => Anchor::endpoint(v),
                Role::Member => Anchor::member(v),
            });
            match find_rainbow(&g, pattern, anchor).map_err(|e| Failure::usage(e.to_string()))? {
                None => {
                    out.push_str("free\n");
                    Ok(0)
                }
                Some(w) => {
                    writeln!(out, "{w}").unwrap();
                    Ok(1)
                }
            }
        }
        Command::Count {
            pattern,
            jobs,
            input,
        } => {
            let g = input.read()?;
            let c = jobs.run(|| count_rainbow(&g, pattern))?;
            writeln!(out, "{c}").unwrap();
            Ok(0)
        }
        Command::Partition { input } => {
            let part = VertexPartition::of(&input.read()?);
            writeln!(out, "in_c5: {}", list(&part.in_c5)).unwrap();
            writeln!(out, "out_c5: {}", list(&part.out_c5)).unwrap();
            Ok(0)
        }
        Command::Verify {
            lemma,
            corpus,
            seed,
            instances,
            jobs,
            input,
        } => {
            let selected: Vec<LemmaId> = if lemma.eq_ignore_ascii_case("all") {
                LemmaId::ALL.to_vec()
            } else {
                vec![lemma
                    .parse()
                    .map_err(|e: rainbow_core::lemmas::UnknownLemma| {
                        Failure::usage(e.to_string())
                    })?]
            };
            if corpus {
                let report = jobs.run(|| run_harness(seed, instances))?;
                writeln!(
                    out,
                    "corpus seed={} instances={}",
                    seed, report.stats.instances
                )
                .unwrap();
                let mut violations = 0;
                for &l in &selected {
                    let t = report.tally(l);
                    violations += t.violations;
                    writeln!(out, "{t}").unwrap();
                }
                writeln!(out, "{}", report.stats).unwrap();
                return Ok(if violations > 0 { 1 } else { 0 });
            }
            let g = input.read()?;
            let results = jobs.run(|| {
                selected
                    .iter()
                    .map(|&l| (l, check(l, &g)))
                    .collect::<Vec<_>>()
            })?;
            let mut code = 0;
            for (l, r) in results {
                match r {
                    Ok(r) => {
                        writeln!(out, "{r}").unwrap();
                        if !r.is_pass() {
                            code = 1;
                        }
                    }
                    Err(e) => {
                        let rainbow_core::lemmas::LemmaError::Domain { precondition, .. } = &e;
                        writeln!(
                            out,
                            "lemma {l} domain-error checked=0 precondition=\"{precondition}\""
                        )
                        .unwrap();
                        if selected.len() == 1 {
                            code = code.max(2);
                        }
                    }
                }
            }
            Ok(code)
        }
        Command::Search {
            n,
            pattern,
            edge_cap,
            force,
            jobs,
        } => {
            let r = jobs
                .run(|| ex_star_exact(n, pattern, SearchOptions { edge_cap, force }))?
                .map_err(|e| Failure::usage(e.to_string()))?;
            writeln!(out, "{r}").unwrap();
            out.push_str(&write_rtg1(&r.witness));
            Ok(0)
        }
        Command::Prune {
            k,
            preprocess: full,
            drop_light,
            input,
        } => {
            let g = input.read()?;
            let five = Rational::from_integer(5);
            let h = match (k, full, drop_light) {
                (Some(k), _, _) => prune_min_degree(&g, k),
                (None, true, _) => preprocess(&g),
                (None, false, true) => drop_light_components(&g, five),
                (None, false, false) => {
                    return Err(Failure::usage(
                        "prune needs one of --k, --preprocess, --drop-light",
                    ))
                }
            };
            out.push_str(&write_rtg1(&h));
            Ok(0)
        }
        Command::Bounds { n, l } => {
            let b = theoretical_bounds(n, l).map_err(|e| Failure::usage(e.to_string()))?;
            writeln!(out, "lower {}", b.lower).unwrap();
            writeln!(out, "upper {}", b.upper).unwrap();
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    let mut stdout = io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
