//! Run the named verification checks over the full desk-scale corpus and
//! print one line per check, exactly like `nsg verify all`.
//!
//! ```bash
//! cargo run --release --example verification_sweep
//! ```

use nsg::report::{verify_all, VerifyOptions};

fn main() {
    let opts = VerifyOptions {
        budget: 80,
        trials: 25,
        ..VerifyOptions::default()
    };
    println!(
        "running all checks (budget {}, trials {}, seed {})\n",
        opts.budget, opts.trials, opts.seed
    );
    let reports = verify_all(&opts);
    for r in &reports {
        println!(
            "{:32} {:5} ({} ms)",
            r.command,
            if r.passed() { "pass" } else { "FAIL" },
            r.timing_ms
        );
    }
    let failing: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.command.as_str())
        .collect();
    if failing.is_empty() {
        println!("\nall checks passed");
    } else {
        println!("\nfailing checks {failing:?}");
        println!("each failure is either a saturated-boundary family of the");
        println!("parameter rectangle or the k != 2 Frobenius transform;");
        println!("the README lists the exact counts.");
    }
}
