use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = eck::cli::run(std::env::args_os());
    eprint!("{}", out.stderr);
    match &out.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &out.stdout) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
        }
    }
    ExitCode::from(out.code as u8)
}
