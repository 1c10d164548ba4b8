//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on input errors, 2 when an internal
//! invariant fails.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::enumerate::{tabulate_with, EnumerationError, Equivalence};
use crate::reference::{ComparisonError, ComparisonReport};
use crate::report::{ClassificationRecord, ReportRecord};
use crate::scheme::{Scheme, SchemeError};
use crate::surface::SurfaceError;
use crate::symmetry::SymmetryGroup;
use crate::vertices::vertex_labeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "quadglue", version, about = "Classify and enumerate polygon gluings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the surface of a chordless polygon with the given scheme.
    Classify {
        scheme: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Canonical form under all rotations and reflections.
    Canon { scheme: String },
    /// Vertex class letter of every corner.
    Vertices { scheme: String },
    /// Glue the free sides at two 1-based positions.
    Glue {
        scheme: String,
        first: usize,
        second: usize,
        /// Glue with equal exponents instead of inverse ones.
        #[arg(long)]
        non_orientable: bool,
    },
    /// Count gluing classes per surface type for n quadrilaterals.
    Enumerate {
        #[arg(long)]
        quads: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Include class representatives per row.
        #[arg(long)]
        list: bool,
        /// Compare against the published counts instead.
        #[arg(long)]
        compare: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Internal(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<SchemeError> for CliError {
    fn from(e: SchemeError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::QuadCountOutOfRange(_) => CliError::Input(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<ComparisonError> for CliError {
    fn from(e: ComparisonError) -> Self {
        match e {
            ComparisonError::NoReference(_) => CliError::Input(e.to_string()),
            ComparisonError::Enumeration(inner) => inner.into(),
        }
    }
}

fn parse(text: &str) -> Result<Scheme, CliError> {
    Ok(text.parse::<Scheme>()?)
}

fn to_zero_based(index: usize, len: usize) -> Result<usize, CliError> {
    if index == 0 || index > len {
        return Err(CliError::Input(format!(
            "position {index} out of range 1..={len}"
        )));
    }
    Ok(index - 1)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Classify { scheme, format } => {
            let record = ClassificationRecord::for_scheme(&parse(scheme)?)?;
            let text = match format {
                Format::Table => record.to_table(),
                Format::Json => record.to_json(),
                Format::Csv => record.to_csv(),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Canon { scheme } => {
            let scheme = parse(scheme)?;
            let canonical = SymmetryGroup::dihedral(scheme.len()).canonical_form(&scheme)?;
            writeln!(out, "{canonical}")?;
        }
        Command::Vertices { scheme } => {
            let labeling = vertex_labeling(&parse(scheme)?);
            writeln!(out, "{}", labeling.letters().join(" "))?;
        }
        Command::Glue {
            scheme,
            first,
            second,
            non_orientable,
        } => {
            let scheme = parse(scheme)?;
            let i = to_zero_based(*first, scheme.len())?;
            let j = to_zero_based(*second, scheme.len())?;
            writeln!(out, "{}", scheme.glue(i, j, !non_orientable)?)?;
        }
        Command::Enumerate {
            quads,
            format,
            list,
            compare,
        } => {
            let text = if *compare {
                let report = ComparisonReport::build(*quads)?;
                match format {
                    Format::Table => report.to_table(),
                    Format::Json => report.to_json(),
                    Format::Csv => report.to_csv(),
                }
            } else {
                let record = ReportRecord::new(&tabulate_with(*quads, Equivalence::Stabilizer, *list)?, *list);
                match format {
                    Format::Table => record.to_table(),
                    Format::Json => record.to_json(),
                    Format::Csv => record.to_csv(),
                }
            };
            out.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

/// Parse `args` (program name first), run, and return the exit status.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    match run(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
