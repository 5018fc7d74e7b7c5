mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{Ctx, Failure};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.global.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(usize::from(w)).build_global() {
            eprintln!("totecc: cannot start {w} workers: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Ctx {
        allow_large: cli.global.allow_large,
        quiet: cli.global.quiet,
    };
    let result = match &cli.command {
        Command::Eps(a) => commands::eps(a),
        Command::Family(a) => commands::family(a),
        Command::Rewrite(a) => commands::rewrite(a),
        Command::Enumerate(a) => commands::enumerate(a, &ctx),
        Command::Search(a) => commands::search(a, &ctx),
        Command::Verify(a) => commands::verify(a, &ctx),
        Command::Conjecture(a) => commands::conjecture(a, &ctx),
    };
    let (report, code) = match result {
        Ok(r) => (r, 0),
        Err(Failure::Verification(r)) => (r, 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("totecc: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = report.render(cli.global.format);
    let written = match &cli.global.output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string())
        }
    };
    if let Err(e) = written {
        eprintln!("totecc: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
