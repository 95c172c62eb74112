use std::process::ExitCode;

fn main() -> ExitCode {
    ratiosect_cli::run(std::env::args_os())
}
