use std::process::ExitCode;

fn main() -> ExitCode {
    qrelcode::cli::main()
}
