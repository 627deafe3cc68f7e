use std::process::ExitCode;

fn main() -> ExitCode {
    cyclometria_cli::app::main_entry()
}
