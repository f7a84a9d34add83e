use std::path::PathBuf;
use std::process::ExitCode;

use bihom_core::{Parity, Scalar};
use bihom_tools::{parse_document, run_pipeline, Command, Flags};
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

/// Construct and verify BiHom-Lie and 3-BiHom-Lie superalgebras.
///
/// Exit codes: 0 pass, 1 verification failure, 2 input error.
#[derive(Parser, Debug)]
#[command(name = "bihom", version)]
struct Args {
    /// One of verify, twist3, induce-tau, derivations, quasiderivation,
    /// check-rb, rb-bracket, prop43, prop44, prop46, check-nijenhuis,
    /// n-brackets, deformation-check, trivial-deformation, prop56, prop59, prop510.
    command: Command,

    /// Algebra-description file.
    input: PathBuf,

    /// Rota-Baxter weight, overriding the document's `lambda`.
    #[arg(long, value_name = "P/Q", value_parser = parse_scalar, allow_hyphen_values = true)]
    weight: Option<Scalar>,

    /// Power of alpha in (alpha^s, beta^r)-derivations.
    #[arg(long, default_value_t = 0)]
    s: u32,

    /// Power of beta.
    #[arg(long, default_value_t = 0)]
    r: u32,

    #[arg(long, value_enum, default_value = "even")]
    parity: ParityArg,

    /// Stop each identity check at its first violation.
    #[arg(long)]
    fail_fast: bool,

    /// Write the derived document here instead of printing it.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "human")]
    format: Format,

    /// Induce from a tau that fails its conditions; the result is reported unverified.
    #[arg(long)]
    override_tau_conditions: bool,
}

fn parse_scalar(s: &str) -> Result<Scalar, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    };
    let doc = match parse_document(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    };
    let flags = Flags {
        weight: args.weight,
        s: args.s,
        r: args.r,
        parity: match args.parity {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        },
        fail_fast: args.fail_fast,
        override_tau_conditions: args.override_tau_conditions,
    };
    let report = match run_pipeline(&doc, args.command, &flags) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}: {e}", args.input.display());
            return ExitCode::from(2);
        }
    };
    let out_path = args.output.as_ref().map(|p| p.display().to_string());
    if let (Some(path), Some(doc)) = (&args.output, &report.output) {
        if let Err(e) = std::fs::write(path, doc.to_canonical_string()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    match args.format {
        Format::Human => print!("{}", report.human(out_path.as_deref())),
        Format::Machine => {
            println!("{}", serde_json::to_string_pretty(&report.to_json(out_path.as_deref())).expect("report is JSON"))
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
