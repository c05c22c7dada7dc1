use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use ascent_core::session::{error_report, execute, parse_session, ExecOptions, Format, Status};
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

/// Run a session file: declare a ring, bind modules, and compute Ext, Tor,
/// depth, resolutions and ascent criteria.
#[derive(Parser)]
#[command(name = "ascent", version)]
struct Args {
    /// Session file; reads stdin when omitted or `-`.
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
    /// Seed for every `verify` command, overriding the session.
    #[arg(long)]
    seed: Option<u64>,
}

fn read_input(file: Option<&PathBuf>) -> std::io::Result<String> {
    match file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let format = match args.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    let source = args.file.as_ref().map_or_else(|| "<stdin>".to_string(), |p| p.display().to_string());
    let text = match read_input(args.file.as_ref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("ascent: {source}: {e}");
            return ExitCode::from(2);
        }
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("ascent: {source}:{e}");
            if matches!(format, Format::Json) {
                println!("{}", error_report("parse", &e).render(format));
            }
            return ExitCode::from(2);
        }
    };
    let reports = execute(&session, &ExecOptions { seed: args.seed });
    for r in &reports {
        println!("{}", r.render(format));
        if let Some(e) = &r.error {
            eprintln!("ascent: {}: [{}] {}", r.command, e.class, e.message);
        }
    }
    if reports.iter().all(|r| r.status == Status::Ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
