use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use squarefold_cli::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    if let Some(msg) = &outcome.diagnostic {
        eprintln!("error: {msg}");
    }
    if let Some(env) = &outcome.envelope {
        let text = env.render(cli.format);
        let written = match &cli.out {
            Some(path) => fs::write(path, text),
            None => std::io::stdout().write_all(text.as_bytes()),
        };
        if let Err(e) = written {
            eprintln!("error: cannot write report: {e}");
            return ExitCode::from(squarefold_cli::EXIT_INVALID);
        }
    }
    ExitCode::from(outcome.exit)
}
