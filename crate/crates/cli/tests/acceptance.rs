//! Runs every acceptance criterion once and prints one line per criterion.
//!
//! `BERGE_FORGE_SEED` picks the fuzz seed (default 0).

use std::process::ExitCode;

use berge_forge::verify::Verifier;

fn main() -> ExitCode {
    let seed = std::env::var("BERGE_FORGE_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut verifier = Verifier::new(seed);
    let reports = verifier.run_all();
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("\nacceptance: {} passed, {failed} failed", reports.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
