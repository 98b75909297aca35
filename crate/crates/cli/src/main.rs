use std::time::Instant;

use clap::Parser;
use torq::Cli;

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    let (code, rep) = torq::run(&cli);
    if cli.verbose {
        eprintln!("torq {} {}", rep.command, rep.problem);
        for line in &rep.transcript {
            eprintln!("  {line}");
        }
        if let Some(e) = &rep.error {
            eprintln!("error ({}): {}", e.kind, e.message);
        }
        eprintln!("status {} (exit {code}) in {:.3}s", rep.status, start.elapsed().as_secs_f64());
    }
    let json = rep.to_json();
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &json),
        None => {
            print!("{json}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("cannot write report: {e}");
        std::process::exit(2);
    }
    std::process::exit(code);
}
