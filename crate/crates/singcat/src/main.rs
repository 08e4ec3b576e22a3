use std::process::ExitCode;

use clap::Parser;
use singcat::cli::{Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match singcat::run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("JSON values always serialize") + "\n",
        Format::Text => report.to_text(),
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code())
}
