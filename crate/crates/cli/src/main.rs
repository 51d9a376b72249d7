use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(berge_forge::cli::run(std::env::args_os()) as u8)
}
