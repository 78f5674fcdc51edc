use std::process::ExitCode;

fn main() -> ExitCode {
    parcyl::cli::run()
}
