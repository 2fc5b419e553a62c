//! The `dtdom` command line.
//!
//! Exit codes: 0 success, 1 a check or verification failed, 2 malformed
//! input, 3 a well-formed graph outside the operation's domain.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::constructor::{construct_dtd_clawfree, greedy_dtd};
use crate::domination::{exact_number, uncovered, DominationKind};
use crate::enumerate::{enumerate, EnumSpec, GraphClass, Source};
use crate::error::{Error, Result};
use crate::families::{generate, FamilyId};
use crate::graph::{Graph, VertexSet};
use crate::io::{self, Format};
use crate::verify::{emit_report, run_theorem, ReportFormat, Theorem, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "dtdom", version, about = "Disjunctive total domination toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact domination number of a graph, with a witness set.
    Compute {
        #[arg(long, value_parser = parse_kind)]
        kind: DominationKind,
        /// Input file, or `-` for stdin.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Checks whether a vertex set is a dominating set of the given kind.
    CheckSet {
        #[arg(long, value_parser = parse_kind)]
        kind: DominationKind,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Comma-separated 0-based vertices.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Writes a named family member, e.g. `T(4)`, `H(2)`, `L13`.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Builds a DTD-set of at most 4n/7 vertices for a claw-free graph.
    Construct {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Also report the greedy baseline.
        #[arg(long)]
        greedy: bool,
    },
    /// Runs a theorem checker and prints its report.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        /// Extra graphs in graph6 format.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        report: ReportFormat,
    },
    /// Lists one graph per isomorphism class, as graph6 lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        class: GraphClass,
        /// Read candidates from a graph6 corpus instead of generating them.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Translates a graph between file formats.
    Convert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "format-in", value_enum)]
        format_in: Format,
        #[arg(long = "format-out", value_enum)]
        format_out: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> std::result::Result<DominationKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Diagnostics go to `err` as single lines.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_domain() {
        EXIT_DOMAIN
    } else if matches!(e, Error::Invariant(_)) {
        EXIT_FAILED
    } else {
        EXIT_INPUT
    }
}

fn read_input(path: &Path, format: Format) -> Result<Graph> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| Error::io("<stdin>", e))?;
        io::parse_graph(&text, format)
    } else {
        io::read_graph(path, format)
    }
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::io(p.display().to_string(), e)),
        None => out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e)),
    }
}

fn list(s: &VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let mut text = String::new();
    let mut code = EXIT_OK;
    let mut target = None;
    match command {
        Command::Compute { kind, input, format } => {
            let g = read_input(&input, format)?;
            let r = exact_number(&g, kind)?;
            text = format!("{kind} {}\nwitness {}\n", r.value, list(&r.witness));
        }
        Command::CheckSet { kind, input, format, set } => {
            let g = read_input(&input, format)?;
            let s = parse_set(&set, g.order())?;
            if kind != DominationKind::Domination {
                if let Some(v) = g.isolated_vertex() {
                    return Err(Error::IsolatedVertex(v));
                }
            }
            let missing = uncovered(&g, &s, kind);
            if missing.is_empty() {
                text = "valid\n".into();
            } else {
                text = format!("invalid\nuncovered {}\n", list(&missing));
                code = EXIT_FAILED;
            }
        }
        Command::Generate { family, out: path, format } => {
            let id: FamilyId = family.parse()?;
            text = io::write_graph(&generate(&id)?, format);
            target = path;
        }
        Command::Construct { input, format, greedy } => {
            let g = read_input(&input, format)?;
            let c = construct_dtd_clawfree(&g)?;
            text = format!(
                "size {}\nbound {}\nmethod {}\nset {}\n",
                c.set.len(),
                4 * g.order() / 7,
                c.method,
                list(&c.set)
            );
            if greedy {
                let s = greedy_dtd(&g)?;
                text += &format!("greedy {} {}\n", s.len(), list(&s));
            }
        }
        Command::Verify { theorem, max_n, corpus, jobs, report } => {
            let r = run_theorem(theorem, &VerifyOptions { max_n, corpus, jobs })?;
            text = emit_report(&r, report);
            if !r.passed() {
                code = EXIT_FAILED;
            }
        }
        Command::Enumerate { n, class, corpus, out: path, jobs } => {
            let source = corpus.map_or(Source::Builtin, Source::Graph6File);
            let spec = EnumSpec { order: n, class, source };
            let graphs = match jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build()
                    .map_err(|e| Error::Input(format!("cannot start {j} workers: {e}")))?
                    .install(|| enumerate(&spec))?,
                None => enumerate(&spec)?,
            };
            for g in &graphs {
                text += &io::to_graph6(g);
                text.push('\n');
            }
            target = path;
        }
        Command::Convert { input, format_in, format_out, out: path } => {
            let g = read_input(&input, format_in)?;
            text = io::write_graph(&g, format_out);
            target = path;
        }
    }
    emit(out, target.as_deref(), &text)?;
    Ok(code)
}

/// Parses a comma list of vertices below `order`.
pub fn parse_set(s: &str, order: usize) -> Result<VertexSet> {
    let mut set = VertexSet::new();
    for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().map_err(|_| Error::Input(format!("bad vertex '{tok}' in set list")))?;
        if v >= order {
            return Err(Error::VertexOutOfRange { vertex: v, order });
        }
        set.insert(v);
    }
    Ok(set)
}
