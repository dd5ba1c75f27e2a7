use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(unicoder_cli::run(std::env::args_os()))
}
