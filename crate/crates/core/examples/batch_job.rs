//! Runs a TOML job file through the report layer, the same path the
//! `torelli` binary uses, and prints the report as text and JSON.
//!
//! ```text
//! cargo run -p torelli --example batch_job -- crates/core/examples/configs/genus4_johnson.toml
//! ```

use std::path::PathBuf;

use torelli::report::{run, JobConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args_os().nth(1).map(PathBuf::from).unwrap_or_else(|| {
        [env!("CARGO_MANIFEST_DIR"), "examples", "configs", "figure1_act.toml"]
            .iter()
            .collect()
    });
    let config = JobConfig::from_toml_str(&std::fs::read_to_string(&path)?)?;
    let report = run(&config)?;
    print!("{}", report.to_text());
    println!();
    print!("{}", report.to_json());
    if !report.all_pass() {
        let failed: Vec<_> = report.failed().map(|c| c.identity.as_str()).collect();
        return Err(format!("identities failed: {}", failed.join(", ")).into());
    }
    Ok(())
}
