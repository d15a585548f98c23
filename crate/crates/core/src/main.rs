use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use endotriv::cli::{error_json, exit_code, run, AnalysisConfig, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let doc = serde_json::json!({ "error": "UsageError", "message": e.to_string(), "exit_code": 1 });
            eprintln!("{doc}");
            return ExitCode::from(1);
        }
    };
    let cfg = match AnalysisConfig::from_args(&cli.config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{}", error_json(&e));
            return ExitCode::from(exit_code(&e) as u8);
        }
    };
    let (code, out, err) = run(cli.command, &cfg);
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    ExitCode::from(code as u8)
}
