//! `linkctl`: classify linkages, export complexes and meshes, reproduce the
//! admissibility tables and check the six representative pentagons.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
//! 3 internal invariant violation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use polylink::complex::build_complex;
use polylink::geometry::perform_surgery;
use polylink::io::{
    export_complex_json, export_mesh, render_tables_with, verify_all, write_output, IoError,
    MeshFormat,
};
use polylink::representatives::default_epsilon;
use polylink::topology::{classify_linkage, ClassifyError};
use polylink::{ComplexError, GeometryError, Linkage, Rational};

#[derive(Parser)]
#[command(name = "linkctl", version, about = "Moduli spaces of planar polygonal linkages")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the moduli space of a linkage.
    Classify {
        /// Edge lengths, e.g. `1,1,1,1/100,2`.
        lengths: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Export the cell structure as JSON.
    Complex {
        lengths: String,
        #[arg(long, value_enum, default_value_t = ComplexFormat::Json)]
        format: ComplexFormat,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Export the surgery mesh of a pentagon.
    Mesh {
        lengths: String,
        #[arg(short, long)]
        output: PathBuf,
        /// obj, ply or json.
        #[arg(long, default_value = "obj")]
        format: String,
        /// Fan-triangulate faces.
        #[arg(long)]
        triangulate: bool,
    },
    /// Print the step-2 and step-3 admissibility tables.
    Tables {
        /// Value substituted for ε.
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Classify the six representatives and compare with their expected types.
    Verify {
        #[arg(long)]
        epsilon: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexFormat {
    Json,
}

enum Failure {
    Mismatch,
    Invalid(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch => 1,
            Failure::Invalid(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Invalid(e.to_string())
}

fn complex_failure(e: ComplexError) -> Failure {
    match e {
        ComplexError::UnsupportedSize(_) | ComplexError::ArityMismatch { .. } => invalid(e),
        ComplexError::Invalid(_) => Failure::Internal(e.to_string()),
    }
}

fn geometry_failure(e: GeometryError) -> Failure {
    match e {
        GeometryError::ArityMismatch { .. } => invalid(e),
        GeometryError::Complex(c) => complex_failure(c),
        other => Failure::Internal(other.to_string()),
    }
}

fn io_failure(e: IoError) -> Failure {
    match e {
        IoError::UnsupportedFormat(_) | IoError::IoFailure { .. } => invalid(e),
        IoError::Json(_) => Failure::Internal(e.to_string()),
    }
}

fn parse_linkage(text: &str) -> Result<Linkage, Failure> {
    text.parse().map_err(invalid)
}

fn parse_epsilon(text: Option<&str>) -> Result<Rational, Failure> {
    let Some(text) = text else {
        return Ok(default_epsilon());
    };
    let eps: Rational = text.trim().parse().map_err(|e| invalid(format!("bad ε `{text}`: {e}")))?;
    if !eps.is_positive() {
        return Err(invalid(format!("ε must be positive, got {eps}")));
    }
    Ok(eps)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { lengths, format } => {
            let linkage = parse_linkage(&lengths)?;
            let report = classify_linkage(&linkage).map_err(|e| match e {
                ClassifyError::Complex(c) => complex_failure(c),
                ClassifyError::Geometry(g) => geometry_failure(g),
                ClassifyError::Topology(t) => Failure::Internal(t.to_string()),
            })?;
            match format {
                ReportFormat::Text => print!("{}", report.to_text()),
                ReportFormat::Json => print!("{}", report.to_json()),
            }
        }
        Command::Complex {
            lengths,
            format: ComplexFormat::Json,
            output,
        } => {
            let linkage = parse_linkage(&lengths)?;
            let complex = build_complex(&linkage).map_err(complex_failure)?;
            let text = export_complex_json(&complex);
            match output {
                Some(path) => write_output(&path, text.as_bytes()).map_err(io_failure)?,
                None => print!("{text}"),
            }
        }
        Command::Mesh {
            lengths,
            output,
            format,
            triangulate,
        } => {
            let format: MeshFormat = format.parse().map_err(io_failure)?;
            let linkage = parse_linkage(&lengths)?;
            let mesh = perform_surgery(&linkage).map_err(geometry_failure)?;
            let bytes = export_mesh(&mesh, format, triangulate).map_err(io_failure)?;
            write_output(&output, &bytes).map_err(io_failure)?;
        }
        Command::Tables { epsilon } => {
            let eps = parse_epsilon(epsilon.as_deref())?;
            print!("{}", render_tables_with(&eps).map_err(invalid)?);
        }
        Command::Verify { epsilon } => {
            let eps = parse_epsilon(epsilon.as_deref())?;
            let report = verify_all(&eps);
            print!("{}", report.to_text());
            if !report.all_passed() {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Mismatch => {}
                Failure::Invalid(msg) => eprintln!("linkctl: {msg}"),
                Failure::Internal(msg) => eprintln!("linkctl: internal error: {msg}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
