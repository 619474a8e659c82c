//! Command-line entry point.
//!
//! Exit codes: 0 success, 1 no witness found, 2 theorem violation or internal
//! inconsistency, 64 usage error, 74 I/O failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hitomezashi_core::render::{render_ascii, render_svg, RenderOptions};
use hitomezashi_core::theorems::find_witness;
use hitomezashi_core::{catalogue, classify, Error as CoreError, FriezePattern, GroupLabel};
use thiserror::Error;

use crate::patternfile::{format_line, parse_patterns, ParseError};
use crate::{census, report};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO_WITNESS: u8 = 1;
pub const EXIT_INCONSISTENT: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_IO: u8 = 74;

#[derive(Debug, Parser)]
#[command(name = "hitomezashi", version, about = "Two-sided hitomezashi frieze symmetry tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PatternArgs {
    /// Repeating unit of the vertical word, e.g. 1000110
    #[arg(long, requires = "y", conflicts_with = "file")]
    pub x: Option<String>,
    /// Horizontal word, at least two bits
    #[arg(long, requires = "x")]
    pub y: Option<String>,
    /// File of `x=<bits> y=<bits>` lines
    #[arg(long, required_unless_present = "x")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Svg,
    Ascii,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the two-sided frieze group of a pattern
    Classify {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long)]
        json: bool,
    },
    /// Draw both sides of a pattern
    Render {
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long, default_value_t = 2)]
        periods: usize,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long, default_value_t = 20.0)]
        cell_size: f64,
        #[arg(long, default_value_t = 1)]
        gap_rows: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the words of the reverse side
    Dual {
        #[command(flatten)]
        pattern: PatternArgs,
    },
    /// Classify every pattern within the bounds, as CSV
    Enumerate {
        #[arg(long)]
        max_x: usize,
        #[arg(long)]
        max_y: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the impossibility results over a census
    VerifyTheorems {
        #[arg(long, default_value_t = 8)]
        max_x: usize,
        #[arg(long, default_value_t = 7)]
        max_y: usize,
        #[arg(long)]
        json: bool,
    },
    /// Find the first enumerated pattern with a given label
    Witness {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 8)]
        max_x: usize,
        #[arg(long, default_value_t = 7)]
        max_y: usize,
    },
    /// List the 31 two-sided frieze groups
    Catalogue {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(e) if is_usage(e) => EXIT_USAGE,
            CliError::Core(_) => EXIT_INCONSISTENT,
            CliError::Io(_) | CliError::Csv(_) => EXIT_IO,
        }
    }
}

fn is_usage(e: &CoreError) -> bool {
    !matches!(e, CoreError::SignatureNotInCatalogue)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn patterns_from(args: &PatternArgs) -> Result<Vec<FriezePattern>, CliError> {
    match (&args.x, &args.y, &args.file) {
        (Some(x), Some(y), None) => Ok(vec![FriezePattern::parse(x, y)?]),
        (None, None, Some(path)) => {
            let patterns = parse_patterns(&fs::read_to_string(path)?)?;
            if patterns.is_empty() {
                return Err(CliError::Usage(format!("{}: no patterns", path.display())));
            }
            Ok(patterns)
        }
        _ => Err(CliError::Usage("give --x and --y, or --file".to_owned())),
    }
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Output of `classify` for one pattern.
pub fn classify_output(p: &FriezePattern, json: bool) -> Result<String, CoreError> {
    let report = classify(p)?;
    Ok(if json {
        report::classification_json(&report)
    } else {
        format!("{}\n", report.label)
    })
}

fn execute(command: &Command, stdout: &mut dyn Write) -> Result<u8, CliError> {
    match command {
        Command::Classify { pattern, json } => {
            for p in patterns_from(pattern)? {
                stdout.write_all(classify_output(&p, *json)?.as_bytes())?;
            }
            Ok(EXIT_OK)
        }
        Command::Render { pattern, periods, format, cell_size, gap_rows, out } => {
            let patterns = patterns_from(pattern)?;
            let [p] = patterns.as_slice() else {
                return Err(CliError::Usage("render takes exactly one pattern".to_owned()));
            };
            let opts = RenderOptions::new(*periods, *cell_size, *gap_rows)?;
            let text = match format {
                Format::Svg => render_svg(p, &opts),
                Format::Ascii => render_ascii(p, &opts),
            };
            emit(&text, out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Dual { pattern } => {
            for p in patterns_from(pattern)? {
                writeln!(stdout, "{}", format_line(&p.dual()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Enumerate { max_x, max_y, out } => {
            let rows = census::census(*max_x, *max_y)?;
            match out {
                Some(path) => census::write_csv(&rows, fs::File::create(path)?)?,
                None => census::write_csv(&rows, &mut *stdout)?,
            }
            Ok(EXIT_OK)
        }
        Command::VerifyTheorems { max_x, max_y, json } => {
            let report = census::verify(*max_x, *max_y)?;
            let text = if *json {
                report::theorem_json(&report)
            } else {
                report::theorem_text(&report)
            };
            stdout.write_all(text.as_bytes())?;
            Ok(if report.is_clean() { EXIT_OK } else { EXIT_INCONSISTENT })
        }
        Command::Witness { group, max_x, max_y } => {
            let label: GroupLabel = group
                .parse()
                .map_err(|_| CliError::Usage(format!("unknown group label {group:?}")))?;
            match find_witness(label.as_str(), *max_x, *max_y)? {
                Some(p) => {
                    writeln!(stdout, "{}", format_line(&p))?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(stdout, "none")?;
                    Ok(EXIT_NO_WITNESS)
                }
            }
        }
        Command::Catalogue { json } => {
            let entries = catalogue();
            let text = if *json {
                report::catalogue_json(&entries)
            } else {
                report::catalogue_text(&entries)
            };
            stdout.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}
