//! `lorenz-fiber`: analyse Lorenz links given by hanging Young diagrams.
//!
//! Data goes to stdout, diagnostics and timings to stderr. Exit status is 0 on
//! success, 1 when a verification suite finds violations (or a computation
//! fails), 2 on usage and input errors.

mod output;
mod verify;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lorenz_fiber::record::Analysis;
use lorenz_fiber::sweep::{map_ordered, ExecMode};
use lorenz_fiber::{enumerate_family, YoungDiagram};

#[derive(Parser)]
#[command(
    name = "lorenz-fiber",
    version,
    about = "Lorenz links from hanging Young diagrams: monodromy, spectra and dilatation bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on one diagram.
    Analyze(AnalyzeArgs),
    /// One record per member of a Lorenz_{b,k} family, as CSV or JSON lines.
    Enumerate(EnumerateArgs),
    /// Like `enumerate`, as an aligned text table.
    Table(FamilyArgs),
    /// Run a verification suite; exit 1 on any violation.
    Verify(verify::VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Column lengths, e.g. `4,3,1`.
    #[arg(long, conflicts_with_all = ["json", "input"])]
    columns: Option<String>,
    /// Diagram as JSON, e.g. `{"columns":[4,3,1]}`.
    #[arg(long, conflicts_with = "input")]
    json: Option<String>,
    /// File holding the JSON diagram; `-` reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Also print the braid word and the V, J, H and H⁻¹ matrices.
    #[arg(long)]
    matrices: bool,
    #[arg(long, value_enum, default_value_t = AnalyzeFormat::Text)]
    format: AnalyzeFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum AnalyzeFormat {
    Text,
    Json,
}

#[derive(Args, Clone)]
pub(crate) struct FamilyArgs {
    /// Width of the rectangle.
    #[arg(long)]
    b: usize,
    /// Largest mixing-zone size.
    #[arg(long)]
    k_max: usize,
    /// Rectangle heights, `l_min..l_max` or a single value.
    #[arg(long, value_parser = parse_range)]
    l: (usize, usize),
    /// Evaluate the family sequentially instead of on the thread pool.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

pub(crate) fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{x}` is not a non-negative integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo == 0 {
        return Err("heights must be ≥ 1".into());
    }
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

pub(crate) fn parse_columns(s: &str) -> Result<YoungDiagram, String> {
    let cols = s
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| format!("columns: `{}` is not a non-negative integer", x.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    YoungDiagram::from_columns(cols).map_err(|e| format!("columns: {e}"))
}

fn parse_json_diagram(text: &str) -> Result<YoungDiagram, String> {
    serde_json::from_str(text).map_err(|e| format!("diagram JSON: {e}"))
}

/// Failure of a command: a message and the exit status.
pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub(crate) fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub(crate) fn compute(message: impl ToString) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }
}

fn read_diagram(args: &AnalyzeArgs) -> Result<YoungDiagram, Failure> {
    if let Some(c) = &args.columns {
        return parse_columns(c).map_err(Failure::usage);
    }
    if let Some(j) = &args.json {
        return parse_json_diagram(j).map_err(Failure::usage);
    }
    let Some(path) = &args.input else {
        return Err(Failure::usage(
            "one of --columns, --json or --input is required",
        ));
    };
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    parse_json_diagram(&text).map_err(Failure::usage)
}

fn analyze(args: AnalyzeArgs, out: &mut impl Write) -> Result<(), Failure> {
    let d = read_diagram(&args)?;
    let start = Instant::now();
    let analysis = Analysis::new(&d).map_err(Failure::compute)?;
    let text = match args.format {
        AnalyzeFormat::Text => output::analysis_text(&analysis, args.matrices),
        AnalyzeFormat::Json => output::analysis_json(&analysis, args.matrices),
    };
    out.write_all(text.as_bytes()).map_err(Failure::compute)?;
    eprintln!("analyzed {d} in {:.3}s", start.elapsed().as_secs_f64());
    Ok(())
}

pub(crate) fn family_records(f: &FamilyArgs) -> Result<Vec<Analysis>, Failure> {
    if f.b == 0 {
        return Err(Failure::usage("--b must be ≥ 1"));
    }
    let diagrams: Vec<YoungDiagram> = enumerate_family(f.b, f.k_max, f.l.0, f.l.1).collect();
    let mode = if f.sequential {
        ExecMode::Sequential
    } else {
        ExecMode::default()
    };
    map_ordered(&diagrams, mode, Analysis::new)
        .into_iter()
        .collect::<Result<_, _>>()
        .map_err(Failure::compute)
}

fn enumerate(args: EnumerateArgs, out: &mut impl Write) -> Result<(), Failure> {
    let start = Instant::now();
    let analyses = family_records(&args.family)?;
    let records: Vec<_> = analyses.iter().map(Analysis::record).collect();
    let text = match args.format {
        TableFormat::Csv => output::records_csv(&records),
        TableFormat::Json => output::records_json_lines(&records),
    };
    out.write_all(text.as_bytes()).map_err(Failure::compute)?;
    eprintln!(
        "enumerated {} diagrams in {:.3}s",
        records.len(),
        start.elapsed().as_secs_f64()
    );
    Ok(())
}

fn table(args: FamilyArgs, out: &mut impl Write) -> Result<(), Failure> {
    let records: Vec<_> = family_records(&args)?
        .iter()
        .map(Analysis::record)
        .collect();
    out.write_all(output::records_table(&records).as_bytes())
        .map_err(Failure::compute)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Analyze(a) => analyze(a, &mut out),
        Command::Enumerate(a) => enumerate(a, &mut out),
        Command::Table(a) => table(a, &mut out),
        Command::Verify(a) => verify::run(a, &mut out),
    };
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(1),
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..6"), Ok((2, 6)));
        assert_eq!(parse_range("4"), Ok((4, 4)));
        assert!(parse_range("0..3").is_err());
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("a..3").is_err());
    }

    #[test]
    fn columns() {
        assert_eq!(parse_columns("4, 3,1").unwrap().columns(), &[4, 3, 1]);
        assert!(parse_columns("0")
            .unwrap_err()
            .contains("columns must be ≥ 1"));
        assert!(parse_columns("2,3").is_err());
        assert!(parse_columns("x").is_err());
    }

    #[test]
    fn json_diagram() {
        assert_eq!(
            parse_json_diagram(r#"{"columns":[3,1]}"#)
                .unwrap()
                .columns(),
            &[3, 1]
        );
        assert!(parse_json_diagram(r#"{"columns":[1,3]}"#).is_err());
        assert!(parse_json_diagram(r#"{"cols":[1]}"#).is_err());
    }
}
