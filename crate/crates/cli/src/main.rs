use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use poincare_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = execute(&cli, &mut out).and_then(|()| out.flush().map_err(Into::into));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            drop(out);
            if cli.json {
                eprintln!("{}", e.to_json());
            } else {
                eprintln!("poincare: {e}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
