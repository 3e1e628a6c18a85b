use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let status = golden_secant_cli::run(std::env::args_os(), &mut out, &mut err);
    ExitCode::from(status.0 as u8)
}
