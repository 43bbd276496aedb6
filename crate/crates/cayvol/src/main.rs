use cayvol::cli::{self, GraphFormat, RealizeArgs};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cayvol",
    version,
    about = "Cayley evolution algebras over exact fields: realize finite groups as \
             automorphism groups, analyze algebras, export graphs, run verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Realize a finite group as the automorphism group of a simple
    /// Cayley evolution algebra
    Realize {
        /// Group spec: cyclic:n, dihedral:n, symmetric:n, alternating:n,
        /// quaternion:8, product:<spec>,<spec>, table:<file>
        #[arg(long)]
        group: String,
        /// Field spec: gf:p, gf:p^m, gf:p^m:c0,c1,...,1, rational
        #[arg(long)]
        field: String,
        /// Generating set: `auto` or comma-separated element indices
        #[arg(long, default_value = "auto")]
        gens: String,
        /// Skip the |k*| >= 2|G| precondition
        #[arg(long)]
        force: bool,
        /// Field to use for the absolute-simplicity re-check
        #[arg(long)]
        extension: Option<String>,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the algebra JSON here
        #[arg(long)]
        algebra_out: Option<PathBuf>,
        /// Also write the weight-function JSON here
        #[arg(long)]
        weights_out: Option<PathBuf>,
        /// Include wall-clock timings in the report (non-deterministic)
        #[arg(long)]
        timings: bool,
    },
    /// Analyze an algebra file: regularity, degeneracy, simplicity
    Analyze {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the full automorphism group of a regular algebra file
    Aut {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the attached graph of an algebra file
    ExportDot {
        file: PathBuf,
        /// Carry structure constants as edge labels
        #[arg(long)]
        weighted: bool,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the structure matrix as CSV
    ExportCsv {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite
    Verify {
        /// One of: realization, determinant-formula, class-function,
        /// graphs, oracles, extension
        #[arg(long)]
        suite: String,
        /// Print per-case wall-clock timings
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn emit(text: &str, out: &Option<PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, cayvol::Error> {
    match cli.command {
        Command::Realize {
            group,
            field,
            gens,
            force,
            extension,
            out,
            algebra_out,
            weights_out,
            timings,
        } => {
            let result = cli::cmd_realize(&RealizeArgs {
                group,
                field,
                gens,
                force,
                extension,
                timings,
            })?;
            if let Some(path) = &algebra_out {
                std::fs::write(path, &result.algebra_json)?;
            }
            if let Some(path) = &weights_out {
                std::fs::write(path, &result.weights_json)?;
            }
            emit(&result.report.to_json(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { file, out } => {
            let report = cli::cmd_analyze(&file.to_string_lossy())?;
            emit(&report.to_json(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Aut { file, out } => {
            let report = cli::cmd_aut(&file.to_string_lossy())?;
            emit(&report.to_json(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportDot {
            file,
            weighted,
            format,
            out,
        } => {
            let format = match format {
                Format::Dot => GraphFormat::Dot,
                Format::Json => GraphFormat::Json,
            };
            let text = cli::cmd_export_dot(&file.to_string_lossy(), weighted, format)?;
            emit(&text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportCsv { file, out } => {
            let text = cli::cmd_export_csv(&file.to_string_lossy())?;
            emit(&text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, timings } => {
            let (summary, all_pass) = cli::cmd_verify(&suite, timings)?;
            print!("{summary}");
            if all_pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap would exit 2; the documented usage-error code is 1
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
