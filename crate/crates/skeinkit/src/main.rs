use std::io::Write;
use std::process::ExitCode;

use skeinkit::cli::DEFAULT_TABLE_CAP;
use skeinkit::{run, Env};

fn main() -> ExitCode {
    let table_cap = std::env::var("SKEINKIT_MAX_DEGREE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_TABLE_CAP);
    let mut stdin = std::io::stdin();
    let outcome = run(std::env::args_os(), &mut Env { stdin: &mut stdin, table_cap });
    let written = if outcome.code == 0 {
        std::io::stdout().write_all(outcome.output.as_bytes())
    } else {
        std::io::stderr().write_all(outcome.output.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.code as u8)
}
