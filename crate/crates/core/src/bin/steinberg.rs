//! Command-line front end. Exit codes: 0 pass, 1 verification failure,
//! 2 usage or parse error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use steinberg::formats::{self, json::GadgetFile, Format};
use steinberg::gadget::{build_counterexample, build_g2, TerminalGadget};
use steinberg::report::VerificationReport;
use steinberg::search::{
    certify_and_freeze, find_frozen, locate_frozen, search_gadget, shrink_counterexample, SearchSpec, DATA_DIR,
};
use steinberg::verify::{verify_lemmas, verify_steinberg, VerifyOptions};
use steinberg::Graph;

#[derive(Parser)]
#[command(name = "steinberg", version, about = "Build and verify a planar non-3-colorable graph without 4- and 5-cycles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    G1,
    G2,
    G,
}

#[derive(Subcommand)]
enum Cmd {
    /// Assemble the gadgets and the final graph from the frozen first gadget.
    Build {
        #[arg(long, value_enum, default_value = "g")]
        stage: Stage,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format; inferred from --out, else graph6.
        #[arg(long)]
        format: Option<Format>,
        /// Search for and freeze the first gadget if none is frozen.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value = DATA_DIR)]
        gadget_dir: PathBuf,
    },
    /// Check a graph file: planarity, 4- and 5-cycles, 3-colorability and
    /// the triangle hypotheses.
    Verify {
        file: PathBuf,
        #[arg(long)]
        format: Option<Format>,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Cross-check the coloring verdict by exhaustive enumeration.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check both gadget interfaces and the composition argument.
    Lemmas {
        #[arg(long, default_value = DATA_DIR)]
        gadget_dir: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run a gadget search from a JSON spec and freeze the results.
    Search {
        spec: PathBuf,
        #[arg(long, default_value_t = 1)]
        limit: usize,
        /// Where frozen gadgets are written.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// File name prefix of frozen gadgets.
        #[arg(long, default_value = "gadget")]
        stem: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Greedily delete vertices and contract edges while the graph stays a
    /// counterexample.
    Shrink {
        file: PathBuf,
        #[arg(long)]
        format: Option<Format>,
        #[arg(long, default_value_t = 200)]
        budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert between graph6, DIMACS and JSON.
    Convert {
        input: PathBuf,
        output: PathBuf,
        #[arg(long)]
        from: Option<Format>,
        #[arg(long)]
        to: Option<Format>,
    },
}

/// Failure carrying its exit code.
struct Fail(u8, String);

fn usage(msg: impl Into<String>) -> Fail {
    Fail(2, msg.into())
}

fn format_for(path: &Path, explicit: Option<Format>) -> Result<Format, Fail> {
    explicit
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| usage(format!("{}: cannot infer format, pass --format", path.display())))
}

fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph, Fail> {
    let format = format_for(path, format)?;
    let bytes = std::fs::read(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    formats::decode(&bytes, format).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn encoded(g: &Graph, format: Format) -> Vec<u8> {
    let mut bytes = formats::encode(g, format);
    if bytes.last() != Some(&b'\n') {
        bytes.push(b'\n');
    }
    bytes
}

fn emit(bytes: &[u8], out: Option<&Path>) -> Result<(), Fail> {
    match out {
        Some(p) => std::fs::write(p, bytes).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(bytes).map_err(|e| usage(e.to_string()))
        }
    }
}

fn print_report(r: &VerificationReport, json: bool) -> Result<(), Fail> {
    if json {
        print!("{}", r.to_json());
    } else {
        print!("{r}");
    }
    if r.overall {
        Ok(())
    } else {
        Err(Fail(1, String::new()))
    }
}

fn load_g1(dir: &Path, search: bool) -> Result<TerminalGadget, Fail> {
    match find_frozen(dir, "g1").map_err(|e| usage(e.to_string()))? {
        Some((_, g)) => Ok(g),
        None if search => {
            eprintln!("no frozen g1 in {}, searching", dir.display());
            let out = search_gadget(&SearchSpec::first_gadget(), 1, 1, &mut |l| eprintln!("{l}"))
                .map_err(|e| usage(e.to_string()))?;
            let g = out.gadgets.into_iter().next().ok_or_else(|| Fail(1, "search found no gadget".into()))?;
            let path = certify_and_freeze(&g, dir, "g1").map_err(|e| Fail(1, e.to_string()))?;
            eprintln!("frozen to {}", path.display());
            Ok(find_frozen(dir, "g1").map_err(|e| usage(e.to_string()))?.expect("just written").1)
        }
        None => Err(usage(format!(
            "no frozen g1-*.json in {}; pass --search to derive one or --gadget-dir to point elsewhere",
            dir.display()
        ))),
    }
}

fn run(cmd: Cmd) -> Result<(), Fail> {
    match cmd {
        Cmd::Build {
            stage,
            out,
            format,
            search,
            gadget_dir,
        } => {
            let format = match (&out, format) {
                (_, Some(f)) => f,
                (Some(p), None) => Format::from_path(p).unwrap_or(Format::Graph6),
                (None, None) => Format::Graph6,
            };
            let g1 = load_g1(&gadget_dir, search)?;
            let gadget_bytes = |g: &TerminalGadget| -> Vec<u8> {
                match format {
                    Format::Json => {
                        let mut f = g.to_file();
                        if g.contract().verified {
                            f.digest = Some(steinberg::search::frozen_digest(g));
                        }
                        f.to_json().into_bytes()
                    }
                    _ => encoded(g.graph(), format),
                }
            };
            let (bytes, n, m) = match stage {
                Stage::G1 => (gadget_bytes(&g1), g1.graph().n(), g1.graph().m()),
                Stage::G2 | Stage::G => {
                    let g2 = build_g2(&g1).map_err(|e| Fail(1, e.to_string()))?;
                    if let Stage::G2 = stage {
                        (gadget_bytes(&g2), g2.graph().n(), g2.graph().m())
                    } else {
                        let g = build_counterexample(&g2).map_err(|e| Fail(1, e.to_string()))?;
                        (encoded(&g, format), g.n(), g.m())
                    }
                }
            };
            emit(&bytes, out.as_deref())?;
            eprintln!("built: {n} vertices, {m} edges ({format})");
            Ok(())
        }
        Cmd::Verify {
            file,
            format,
            json,
            oracle,
            jobs,
        } => {
            let g = read_graph(&file, format)?;
            let r = verify_steinberg(&g, VerifyOptions { oracle, jobs }).map_err(|e| usage(e.to_string()))?;
            print_report(&r, json)
        }
        Cmd::Lemmas { gadget_dir, json } => {
            let path = locate_frozen(&gadget_dir, "g1")
                .map_err(|e| usage(e.to_string()))?
                .ok_or_else(|| usage(format!("no g1-*.json in {}", gadget_dir.display())))?;
            let bytes = std::fs::read(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let file = GadgetFile::from_json(&bytes).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let g1 = TerminalGadget::from_file(&file).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let r = verify_lemmas(&g1, Some(file.digest.as_deref().unwrap_or("")));
            print_report(&r, json)
        }
        Cmd::Search {
            spec,
            limit,
            out_dir,
            stem,
            jobs,
        } => {
            let text = std::fs::read_to_string(&spec).map_err(|e| usage(format!("{}: {e}", spec.display())))?;
            let parsed: SearchSpec = serde_json::from_str(&text).map_err(|e| {
                usage(format!("{}:{}:{}: {e}", spec.display(), e.line(), e.column()))
            })?;
            let out = search_gadget(&parsed, limit, jobs, &mut |l| eprintln!("{l}"))
                .map_err(|e| usage(format!("{}: {e}", spec.display())))?;
            eprintln!(
                "{} nodes, {} pruned, {} candidates, {} verified",
                out.stats.nodes, out.stats.pruned, out.stats.candidates, out.stats.verified
            );
            if out.gadgets.is_empty() {
                println!("none found");
                return Ok(());
            }
            for (i, g) in out.gadgets.iter().enumerate() {
                let stem = if out.gadgets.len() == 1 { stem.clone() } else { format!("{stem}{i}") };
                let path = certify_and_freeze(g, &out_dir, &stem).map_err(|e| Fail(1, e.to_string()))?;
                println!("{}", path.display());
            }
            Ok(())
        }
        Cmd::Shrink {
            file,
            format,
            budget,
            out,
        } => {
            let g = read_graph(&file, format)?;
            let res = shrink_counterexample(&g, budget).map_err(|e| Fail(1, e.to_string()))?;
            eprintln!(
                "{} -> {} vertices after {} evaluations{}",
                g.n(),
                res.graph.n(),
                res.evaluations,
                if res.fixed_point { " (fixed point)" } else { " (budget exhausted)" }
            );
            let f = out.as_deref().and_then(Format::from_path).unwrap_or(Format::Graph6);
            emit(&encoded(&res.graph, f), out.as_deref())
        }
        Cmd::Convert { input, output, from, to } => {
            let g = read_graph(&input, from)?;
            let to = format_for(&output, to)?;
            emit(&encoded(&g, to), Some(&output))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
