use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(cgdom::cli::run(std::env::args()))
}
