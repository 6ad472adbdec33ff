//! `lg`: command-line access to logical graphs.
//!
//! Exit status is 0 for success or a yes answer, 1 for a well-formed no
//! answer, and 2 for any error. Errors are reported on stderr as a single
//! line `error:<kind>: <message>`.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use logical_graphs::format::{read_graph, to_dot, write_graph, write_graph_with_formula};
use logical_graphs::iso::isomorphisms;
use logical_graphs::oracle::enumerate_formulas;
use logical_graphs::{
    add, alpha_equiv, implies, normalize, parse, subtract, to_formula, to_graph, validate, Formula,
    LabelId, LogicalGraph, RawGraph,
};

#[derive(Parser)]
#[command(
    name = "lg",
    version,
    about = "Logical graphs for multiplicative intuitionistic linear logic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print it back in standard form.
    Parse {
        /// Formula text, or @path to read it from a file.
        formula: String,
    },
    /// Translate a formula to its graph file.
    ToGraph {
        formula: String,
        #[command(flatten)]
        output: Output,
    },
    /// Read a logical graph back as its canonical formula.
    ToFormula { graph: PathBuf },
    /// Print the canonical form of a formula.
    Normalize { formula: String },
    /// Decide whether two formulas or graphs (@path) have isomorphic graphs.
    Equiv { first: String, second: String },
    /// Find isomorphisms between two graph files.
    Iso {
        first: PathBuf,
        second: PathBuf,
        /// Print the number of isomorphisms.
        #[arg(long, conflicts_with = "all")]
        count: bool,
        /// Print every isomorphism, one per line.
        #[arg(long)]
        all: bool,
    },
    /// Decide whether a graph file holds a logical graph.
    Check { graph: PathBuf },
    /// Disjoint union of two graphs; the first is renamed apart.
    Add(Pair),
    /// Union plus edges from the first graph's conclusions to the second's.
    Implies(Pair),
    /// Remove the second graph's vertices, by name, from the first.
    Subtract(Pair),
    /// List a graph's conclusions.
    Conclusions { graph: PathBuf },
    /// Graphviz source for a graph file.
    Dot { graph: PathBuf },
    /// List every formula within the bounds.
    Enumerate {
        /// Comma-separated atom names.
        #[arg(long, value_delimiter = ',', default_value = "p,q")]
        atoms: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_connectives: usize,
        /// Group in-fragment formulas by canonical form instead.
        #[arg(long)]
        classes: bool,
    },
}

#[derive(Args)]
struct Output {
    /// Write the graph here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Pair {
    first: PathBuf,
    second: PathBuf,
    #[command(flatten)]
    output: Output,
}

struct Failure {
    kind: &'static str,
    message: String,
}

impl Failure {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        Failure {
            kind,
            message: message.to_string(),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new("io", format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<RawGraph, Failure> {
    read_graph(&read_text(path)?)
        .map_err(|e| Failure::new(e.kind(), format!("{}: {e}", path.display())))
}

fn load_logical(path: &Path) -> Result<LogicalGraph, Failure> {
    validate(load_graph(path)?)
        .map_err(|e| Failure::new(e.kind(), format!("{}: {e}", path.display())))
}

fn load_formula(arg: &str) -> Result<Formula, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read_text(Path::new(path))?,
        None => arg.to_owned(),
    };
    parse(text.trim()).map_err(|e| Failure::new("syntax", e))
}

/// A formula's graph, or the graph stored at `@path`.
fn load_operand(arg: &str) -> Result<RawGraph, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => load_graph(Path::new(path)),
        None => Ok(to_graph(&load_formula(arg)?)),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::new("io", e))
}

fn emit_graph(out: &mut dyn Write, output: &Output, text: &str) -> Result<(), Failure> {
    match &output.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new("io", format!("{}: {e}", path.display()))),
        None => emit(out, text),
    }
}

fn run(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Parse { formula } => {
            emit(out, &format!("{}\n", load_formula(&formula)?))?;
        }
        Command::ToGraph { formula, output } => {
            let f = load_formula(&formula)?;
            emit_graph(
                out,
                &output,
                &write_graph_with_formula(&to_graph(&f), &f.to_string()),
            )?;
        }
        Command::ToFormula { graph } => {
            emit(out, &format!("{}\n", to_formula(&load_logical(&graph)?)))?;
        }
        Command::Normalize { formula } => {
            let normal =
                normalize(&load_formula(&formula)?).map_err(|e| Failure::new(e.kind(), e))?;
            emit(out, &format!("{normal}\n"))?;
        }
        Command::Equiv { first, second } => {
            let same = alpha_equiv(&load_operand(&first)?, &load_operand(&second)?).is_some();
            emit(
                out,
                if same {
                    "equivalent\n"
                } else {
                    "not equivalent\n"
                },
            )?;
            return Ok(same);
        }
        Command::Iso {
            first,
            second,
            count,
            all,
        } => {
            let (g1, g2) = (load_graph(&first)?, load_graph(&second)?);
            if count || all {
                let maps = isomorphisms(&g1, &g2);
                if count {
                    emit(out, &format!("{}\n", maps.len()))?;
                } else {
                    for m in &maps {
                        emit(out, &format!("{m}\n"))?;
                    }
                }
                return Ok(!maps.is_empty());
            }
            return match alpha_equiv(&g1, &g2) {
                Some(m) => emit(out, &format!("{m}\n")).map(|_| true),
                None => emit(out, "no isomorphism\n").map(|_| false),
            };
        }
        Command::Check { graph } => {
            return match validate(load_graph(&graph)?) {
                Ok(_) => emit(out, "well-formed\n").map(|_| true),
                Err(e) => emit(out, &format!("{e}\n")).map(|_| false),
            };
        }
        Command::Add(pair) => {
            let sum = add(&load_graph(&pair.first)?, &load_graph(&pair.second)?);
            emit_graph(out, &pair.output, &write_graph(&sum.graph))?;
        }
        Command::Implies(pair) => {
            let h = load_logical(&pair.first)?;
            let k = load_logical(&pair.second)?;
            emit_graph(out, &pair.output, &write_graph(&implies(&h, &k).graph))?;
        }
        Command::Subtract(pair) => {
            let rest = subtract(&load_graph(&pair.first)?, &load_graph(&pair.second)?)
                .map_err(|e| Failure::new(e.kind(), e))?;
            emit_graph(out, &pair.output, &write_graph(&rest))?;
        }
        Command::Conclusions { graph } => {
            for v in load_graph(&graph)?.conclusions() {
                emit(out, &format!("{v}\n"))?;
            }
        }
        Command::Dot { graph } => {
            emit(out, &to_dot(&load_graph(&graph)?))?;
        }
        Command::Enumerate {
            atoms,
            max_connectives,
            classes,
        } => {
            let atoms = atoms
                .iter()
                .map(|a| {
                    parse(a)
                        .ok()
                        .and_then(|f| match f {
                            Formula::Atom(label) => Some(label),
                            _ => None,
                        })
                        .ok_or_else(|| Failure::new("usage", format!("`{a}` is not an atom name")))
                })
                .collect::<Result<Vec<LabelId>, _>>()?;
            let formulas = enumerate_formulas(&atoms, max_connectives)
                .map_err(|e| Failure::new(e.kind(), e))?;
            if classes {
                let mut groups: BTreeMap<String, usize> = BTreeMap::new();
                for f in &formulas {
                    if let Ok(normal) = normalize(f) {
                        *groups.entry(normal.to_string()).or_insert(0) += 1;
                    }
                }
                for (normal, size) in groups {
                    emit(out, &format!("{size}\t{normal}\n"))?;
                }
            } else {
                for f in &formulas {
                    emit(out, &format!("{f}\n"))?;
                }
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or_default();
            eprintln!("error:usage: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let outcome = run(cli.command, &mut out).and_then(|answer| {
        out.flush().map_err(|e| Failure::new("io", e))?;
        Ok(answer)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(failure) => {
            let _ = out.flush();
            eprintln!(
                "error:{}: {}",
                failure.kind,
                failure.message.replace('\n', " ")
            );
            ExitCode::from(2)
        }
    }
}
