use std::process::ExitCode;

fn main() -> ExitCode {
    photon_soliton::cli::run()
}
