use std::io::Write;
use std::process::ExitCode;

use braidld::cli;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let env_cap = std::env::var(cli::CAP_ENV).ok();
    let out = cli::run(&args, env_cap.as_deref());
    // Broken pipes are not worth a panic.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
