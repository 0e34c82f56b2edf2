//! Runs every acceptance criterion, prints one PASS/FAIL line each and fails
//! if any claim does not hold or overruns its time budget.

use std::process::ExitCode;

use permclass::checks;

fn main() -> ExitCode {
    let outcomes = checks::run_all();
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.ok()).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
