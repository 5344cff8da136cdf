use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fbplab_core::presentation::{
    catalan_presentation, free_tree_presentation, hecke0_presentation, lee_l3_presentation,
    lee_l4_presentation, lee_monoid_presentation, CoxeterDiagram, CoxeterMatrix, Presentation,
};
use fbplab_core::suite::{run_suite, SuiteConfig, SUITE_NAMES};
use fbplab_core::transform::{build_gamma_n, enumerate_family, Digraph, FamilyKind};

/// Build finite monoid families and run the verification suites.
///
/// Closure constructions honor the FBPLAB_CAP_MB environment variable as a
/// memory ceiling in megabytes (default 512).
#[derive(Parser)]
#[command(name = "fbplab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite and print its report
    Suite {
        /// Suite name; see `fbplab list-suites`
        name: String,
        /// JSON configuration file (keys: seed, samples, stretch, oracle)
        #[arg(long)]
        config: Option<PathBuf>,
        /// Report format
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Random seed, overriding the configuration file
        #[arg(long)]
        seed: Option<u64>,
    },
    /// List the registered suite names
    ListSuites,
    /// Construct an object and print it in its text file format
    #[command(subcommand)]
    Build(BuildTarget),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum BuildTarget {
    /// Enumerate a transformation family, one map literal per line
    Family {
        /// One of: e, c, ic, pe, pc, ie, poi, opfixtop
        kind: String,
        /// Size of the base chain
        m: usize,
    },
    /// Print a presentation as a `gens:` line plus one relation per line
    Presentation {
        /// One of: catalan, free-tree, hecke0, lee, lee-l3, lee-l4
        which: String,
        /// Index for the sized presentations; a diagram name such as A3,
        /// I2(5), or B3 (or a Coxeter matrix file path) for hecke0
        arg: Option<String>,
    },
    /// Print a digraph as a vertex count line plus one edge pair per line
    Digraph {
        /// One of: path, gamma
        which: String,
        /// Number of path vertices, or spine length for gamma
        n: usize,
    },
}

fn load_config(path: Option<&PathBuf>, seed: Option<u64>) -> Result<SuiteConfig> {
    let mut config = match path {
        Some(p) => {
            let text = fs::read_to_string(p)
                .with_context(|| format!("reading configuration file {}", p.display()))?;
            serde_json::from_str(&text)
                .with_context(|| format!("parsing configuration file {}", p.display()))?
        }
        None => SuiteConfig::default(),
    };
    if let Some(seed) = seed {
        config.seed = seed;
    }
    Ok(config)
}

fn sized_index(which: &str, arg: Option<&String>) -> Result<usize> {
    let Some(arg) = arg else {
        bail!("`{which}` needs an index argument");
    };
    arg.parse()
        .with_context(|| format!("`{which}` index `{arg}` is not a number"))
}

fn build_presentation(which: &str, arg: Option<&String>) -> Result<Presentation> {
    Ok(match which {
        "catalan" => catalan_presentation(sized_index(which, arg)?)?,
        "free-tree" => free_tree_presentation(sized_index(which, arg)?)?,
        "lee" => lee_monoid_presentation(sized_index(which, arg)?)?,
        "lee-l3" => lee_l3_presentation(),
        "lee-l4" => lee_l4_presentation(),
        "hecke0" => {
            let Some(arg) = arg else {
                bail!("`hecke0` needs a diagram name or a Coxeter matrix file");
            };
            let matrix = match CoxeterDiagram::from_name(arg) {
                Ok(diagram) => diagram.matrix()?,
                Err(_) => {
                    let text = fs::read_to_string(arg)
                        .with_context(|| format!("`{arg}` is neither a diagram name nor a readable file"))?;
                    CoxeterMatrix::parse(&text)?
                }
            };
            hecke0_presentation(&matrix)?
        }
        other => bail!("unknown presentation `{other}`; expected catalan, free-tree, hecke0, lee, lee-l3, or lee-l4"),
    })
}

fn build_digraph(which: &str, n: usize) -> Result<Digraph> {
    Ok(match which {
        "path" => Digraph::path(n),
        "gamma" => build_gamma_n(n)?,
        other => bail!("unknown digraph `{other}`; expected path or gamma"),
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Suite {
            name,
            config,
            format,
            seed,
        } => {
            let config = load_config(config.as_ref(), seed)?;
            let report = run_suite(&name, &config)?;
            match format {
                Format::Json => print!("{}", report.emit_json()),
                Format::Text => print!("{}", report.emit_text()),
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::ListSuites => {
            for name in SUITE_NAMES {
                println!("{name}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Build(target) => {
            match target {
                BuildTarget::Family { kind, m } => {
                    let kind: FamilyKind = kind.parse()?;
                    for map in enumerate_family(kind, m)? {
                        println!("{map}");
                    }
                }
                BuildTarget::Presentation { which, arg } => {
                    print!("{}", build_presentation(&which, arg.as_ref())?);
                }
                BuildTarget::Digraph { which, n } => {
                    print!("{}", build_digraph(&which, n)?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
