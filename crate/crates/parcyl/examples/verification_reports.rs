//! Running the built-in verification suites programmatically: canonical
//! grids, deterministic grid jitter, and the text/CSV/JSON renderings the
//! command-line front end exposes.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run --example verification_reports
//! ```

use parcyl::limits::LimitId;
use parcyl::report::{run_laplace_suite, run_limits_suite, run_reps_suite};

fn main() {
    // The canonical grids (seed 0) replay the full verification matrix.
    let reps = run_reps_suite(None, 0, None);
    let laplace = run_laplace_suite(None, 0, None);
    let limits = run_limits_suite(None, 0, None);
    for report in [&reps, &laplace, &limits] {
        println!(
            "suite {:16} {:3} cases, {} failed   ({:.2} s)",
            report.suite, report.summary.total, report.summary.failed, report.wall_seconds
        );
    }

    // A nonzero seed re-rolls every continuous coordinate by ±1% while
    // preserving the domain structure (boundary pairs stay on x + y = 0).
    // The identities hold on the perturbed grid too — they are identities.
    let jittered = run_reps_suite(None, 20260823, None);
    println!(
        "\njittered grid (seed 20260823): {} cases, {} failed",
        jittered.summary.total, jittered.summary.failed
    );
    let canonical_first = &reps.rows[0];
    let jittered_first = &jittered.rows[0];
    println!("  canonical first row: {} {}", canonical_first.case_id, canonical_first.params);
    println!("  jittered  first row: {} {}", jittered_first.case_id, jittered_first.params);

    // Single-case view, as the command line's --entry filter would show it.
    let golden = run_limits_suite(None, 0, Some(LimitId::RatioGolden));
    print!("\n{}", golden.to_text());

    // Machine formats are byte-deterministic for a fixed configuration and
    // seed; wall time lives only in the text rendering.
    let again = run_limits_suite(None, 0, Some(LimitId::RatioGolden));
    println!("\nJSON bytes stable across runs: {}", golden.to_json() == again.to_json());
    let csv = golden.to_csv();
    print!("\n{csv}");
}
