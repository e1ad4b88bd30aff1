use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(liyorke_cli::run(std::env::args_os()))
}
