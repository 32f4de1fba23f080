use std::process::ExitCode;

fn main() -> ExitCode {
    let code = vbs_entanglement::cli::run_from(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code)
}
