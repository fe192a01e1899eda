use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (outcome, output) = pbern_cli::run(std::env::args_os());
    eprint!("{}", outcome.diagnostics);
    let written = match output {
        Some(path) => std::fs::write(&path, &outcome.document)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout()
            .write_all(outcome.document.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("pbern: {msg}");
        return ExitCode::from(pbern_cli::EXIT_FAILED as u8);
    }
    ExitCode::from(outcome.code as u8)
}
