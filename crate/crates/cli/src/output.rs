use serde::{Deserialize, Serialize};
use serde_json::Value;

use realgr_core::realform::Catalog;

use crate::{Command, Format};

pub const OUTPUT_SCHEMA: &str = "realgr-output/1";

/// Machine-format record, one per invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema: String,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub success: bool,
    pub catalog_version: String,
    pub library_version: String,
}

/// What a subcommand produced.
pub struct Outcome {
    pub inputs: Value,
    pub results: Value,
    pub text: String,
    pub success: bool,
}

pub fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Table1 { .. } => "table1",
        Command::Classify { .. } => "classify",
        Command::Restricted { .. } => "restricted",
        Command::Components { .. } => "components",
        Command::Poset { .. } => "poset",
        Command::Character { .. } => "character",
        Command::Specialize { .. } => "specialize",
        Command::Branch { .. } => "branch",
        Command::Satake { .. } => "satake validate",
        Command::Selftest { .. } => "selftest",
    }
}

pub fn emit(format: Format, cmd: &Command, catalog: &Catalog, outcome: &Outcome) {
    match format {
        Format::Text => print!("{}", outcome.text),
        Format::Machine => {
            let record = OutputRecord {
                schema: OUTPUT_SCHEMA.to_string(),
                command: command_name(cmd).to_string(),
                inputs: outcome.inputs.clone(),
                results: outcome.results.clone(),
                success: outcome.success,
                catalog_version: catalog.version().to_string(),
                library_version: realgr_core::VERSION.to_string(),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&record).expect("records serialize")
            );
        }
    }
}
