use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = evolalg::cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(evolalg::cli::EXIT_INPUT as u8);
    }
    let code = evolalg::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
