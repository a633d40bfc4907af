use std::fs::File;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use infonorm::io::{format_output, parse_records, run, Format, Precision, Task};
use infonorm::{Measure, RenyiMode};

const MODE_TABLE: &str = "\
Input modes and payload arity:
  generic    p1..pn (n >= 2), optional imprecision s
  neutro3    T I F
  neutro2    mu nu omega
  bifuzzy    mu nu
  ifs        mu nu            (mu + nu <= 1)
  imprecise  mu sigma         (sigma <= 1/2)
  partition  w1..wn (n >= 2)  (weights sum to 1)

CSV input header: id,mode,s,p1,p2,...  (trailing empty cells allowed)
JSONL input: {\"id\":\"a\",\"mode\":\"generic\",\"p\":[0.2,0.3],\"s\":0.1}

Exit status: 0 all rows ok, 1 some rows failed, 2 usage or I/O failure.";

#[derive(Parser)]
#[command(name = "infonorm", version, about = "Normalize incomplete or contradictory information and measure its uncertainty", after_help = MODE_TABLE)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit normalized vectors with their definedness profile.
    #[command(after_help = MODE_TABLE)]
    Normalize(IoArgs),
    /// Emit one entropy value per record.
    #[command(after_help = MODE_TABLE)]
    Entropy {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long, value_enum, default_value_t = MeasureArg::Shannon)]
        measure: MeasureArg,
        /// Order of the Tsallis or Rényi entropy.
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, value_enum, default_value_t = RenyiModeArg::Standard)]
        renyi_mode: RenyiModeArg,
    },
}

#[derive(Args)]
struct IoArgs {
    /// Input file; `-` or absent reads stdin.
    input: Option<PathBuf>,
    /// Input format, inferred from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Output format; defaults to the input format.
    #[arg(long, value_enum)]
    output_format: Option<FormatArg>,
    /// Significant digits of emitted numbers (1-17).
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Jsonl,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Jsonl => Format::Jsonl,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Shannon,
    Onicescu,
    Tsallis,
    Renyi,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenyiModeArg {
    Standard,
    Paper,
}

fn build_measure(measure: MeasureArg, alpha: Option<f64>, mode: RenyiModeArg) -> Result<Measure, String> {
    let order = match (measure, alpha) {
        (MeasureArg::Shannon | MeasureArg::Onicescu, Some(_)) => {
            return Err("--alpha only applies to tsallis and renyi".into())
        }
        (MeasureArg::Tsallis | MeasureArg::Renyi, None) => {
            return Err("--alpha is required for tsallis and renyi".into())
        }
        (_, Some(a)) if !(a.is_finite() && a > 0.0) => {
            return Err(format!("--alpha must be positive, got {a}"))
        }
        (_, a) => a.unwrap_or_default(),
    };
    Ok(match measure {
        MeasureArg::Shannon => Measure::Shannon,
        MeasureArg::Onicescu => Measure::Onicescu,
        MeasureArg::Tsallis => Measure::Tsallis { order },
        MeasureArg::Renyi => Measure::Renyi {
            order,
            mode: match mode {
                RenyiModeArg::Standard => RenyiMode::Standard,
                RenyiModeArg::Paper => RenyiMode::PaperLiteral,
            },
        },
    })
}

fn execute(io_args: IoArgs, task: Task) -> Result<bool, String> {
    let from_stdin = io_args
        .input
        .as_ref()
        .is_none_or(|p| p.as_os_str() == "-");
    let input_format = match (io_args.format, &io_args.input) {
        (Some(f), _) => f.into(),
        (None, Some(path)) if !from_stdin => Format::from_extension(path).ok_or_else(|| {
            format!(
                "cannot infer format of {}; pass --format",
                path.display()
            )
        })?,
        _ => return Err("reading stdin requires --format".into()),
    };
    let output_format = io_args.output_format.map_or(input_format, Format::from);
    let precision = Precision::new(io_args.precision).expect("range checked by clap");

    let reader: Box<dyn Read> = if from_stdin {
        Box::new(io::stdin().lock())
    } else {
        let path = io_args.input.as_ref().expect("checked above");
        Box::new(File::open(path).map_err(|e| format!("{}: {e}", path.display()))?)
    };
    let records = parse_records(reader, input_format).map_err(|e| e.to_string())?;
    let rows = run(&records, task);

    let writer: Box<dyn Write> = match &io_args.output {
        Some(path) => Box::new(File::create(path).map_err(|e| format!("{}: {e}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    };
    format_output(&rows, writer, output_format, precision).map_err(|e| e.to_string())?;

    Ok(rows.iter().any(|r| r.is_error()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Normalize(io_args) => execute(io_args, Task::Normalize),
        Command::Entropy {
            io,
            measure,
            alpha,
            renyi_mode,
        } => build_measure(measure, alpha, renyi_mode)
            .and_then(|m| execute(io, Task::Entropy(m))),
    };
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("infonorm: {msg}");
            ExitCode::from(2)
        }
    }
}
