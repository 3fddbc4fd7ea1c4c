use std::process::ExitCode;

use clap::Parser;
use vca_cli::{run, Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match &cli.input {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => Some(text),
            Err(err) => {
                eprintln!("error: cannot read {}: {err}", path.display());
                return ExitCode::from(2);
            }
        },
        None => None,
    };
    let report = run(&cli, text.as_deref());
    match cli.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    ExitCode::from(report.exit_code() as u8)
}
