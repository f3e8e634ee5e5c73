use std::fs;
use std::io;

use clap::ValueEnum;
use meanconvex::report::{to_json, witnesses_csv, ReportFile};

use crate::OutputArgs;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Result of one command: the report, a human summary and the exit status.
pub struct Outcome {
    pub report: ReportFile,
    pub text: String,
    pub exit: u8,
}

pub fn emit(outcome: &Outcome, out: &OutputArgs) -> io::Result<()> {
    let json = to_json(&outcome.report).map_err(io::Error::other)?;
    if let Some(path) = &out.json {
        fs::write(path, &json)?;
    }
    if let Some(path) = &out.csv {
        fs::write(path, witnesses_csv(&outcome.report.witnesses))?;
    }
    match out.format {
        Format::Text => print!("{}", outcome.text),
        Format::Json => print!("{json}"),
        Format::Csv => print!("{}", witnesses_csv(&outcome.report.witnesses)),
    }
    if outcome.exit == 2 {
        if let Some(msg) = &outcome.report.message {
            eprintln!("error: {msg}");
        }
    }
    Ok(())
}
