use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = hyperg::cli::run(std::env::args(), &mut out, &mut err);
    let _ = out.flush();
    let _ = err.flush();
    ExitCode::from(code as u8)
}
