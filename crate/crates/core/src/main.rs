use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use fusionburnside::cli::{run, Args, RunConfig};

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = run(&RunConfig::from(args));
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.status as u8)
}
