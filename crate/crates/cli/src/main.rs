use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use entwine_cli::commands::{execute, Cli};
use entwine_core::Error;

fn threads() -> Result<(), String> {
    let Ok(v) = std::env::var("ENTWINE_THREADS") else {
        return Ok(());
    };
    let n: usize = v.parse().map_err(|_| format!("ENTWINE_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("ENTWINE_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match execute(&cli) {
        Ok((code, out)) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let rejected = matches!(e.downcast_ref::<Error>(), Some(Error::NotVerified(_)));
            ExitCode::from(if rejected { 1 } else { 2 })
        }
    }
}
