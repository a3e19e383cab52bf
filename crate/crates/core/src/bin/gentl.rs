use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gentl::cli::{run, JobConfig, EXIT_OK, EXIT_USAGE};

fn main() -> ExitCode {
    let cfg = match JobConfig::try_parse() {
        Ok(cfg) => cfg.with_env_overrides(),
        Err(err) => {
            let _ = err.print();
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return ExitCode::from(code as u8);
        }
    };
    let outcome = run(&cfg);
    if let Some(diagnostic) = &outcome.diagnostic {
        eprintln!("error: {diagnostic}");
    }
    let _ = std::io::stdout().write_all(outcome.document.as_bytes());
    ExitCode::from(outcome.code as u8)
}
