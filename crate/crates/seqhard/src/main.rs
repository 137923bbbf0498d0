use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use seqhard::cli::{run, Cli, Output};
use seqhard::report::render;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match run(&cli) {
        Ok(Output::Report(kv)) => {
            let _ = stdout.write_all(render(&kv, cli.json).as_bytes());
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            let _ = stdout.write_all(s.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(Output::Verdict(outcome)) => {
            let _ = stdout.write_all(render(&outcome.report(), cli.json).as_bytes());
            if outcome.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("seqhard: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
