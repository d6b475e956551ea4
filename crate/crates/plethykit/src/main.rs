use std::process::ExitCode;

fn main() -> ExitCode {
    plethykit::cli::main_with_args(std::env::args_os())
}
