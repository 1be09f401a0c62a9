//! Tally and reporting helpers for the acceptance suite in `tests/acceptance.rs`.

use std::time::{Duration, Instant};

use hooklab::verify::{self, SweepConfig, VerificationReport};

#[derive(Default)]
pub struct Criterion {
    checks: usize,
    failures: Vec<String>,
}

impl Criterion {
    pub fn check(&mut self, label: impl Into<String>, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(label.into());
        }
    }

    pub fn timed<T>(&mut self, label: &str, limit: Duration, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        self.check(format!("{label} took {took:.2?}, limit {limit:?}"), took <= limit);
        out
    }

    pub fn reports(&mut self, reports: &[VerificationReport], max_bound: Option<f64>) {
        for r in reports {
            let d = r.d.map(|d| format!(" d={d}")).unwrap_or_default();
            let label = format!("{} on {}{d}", r.identity, r.shape);
            self.check(label.clone(), r.pass);
            if let Some(max) = max_bound {
                let bound = r.error_bound.unwrap_or(f64::INFINITY);
                self.check(format!("{label}: error bound {bound:e} ≥ {max:e}"), bound < max);
            }
        }
    }
}

/// Sweeps `ids` (as accepted by [`verify::resolve_identities`]) with seed 7 and 20 random points.
pub fn sweep(ids: &str, max_size: usize, truncation: Option<usize>) -> Vec<VerificationReport> {
    let cfg = SweepConfig {
        max_size,
        identities: verify::resolve_identities(ids).unwrap(),
        seed: 7,
        trials: 20,
        truncation,
    };
    verify::sweep(&cfg)
}

/// Failing items printed under a red criterion.
const SHOWN_FAILURES: usize = 8;

/// Runs every criterion, printing `criterion N: PASS|FAIL` and the first failing
/// items of each; true when all pass.
pub fn run_all(criteria: &[fn() -> Criterion]) -> bool {
    let mut all = true;
    for (i, run) in criteria.iter().enumerate() {
        let start = Instant::now();
        let c = run();
        let status = if c.failures.is_empty() { "PASS" } else { "FAIL" };
        all &= c.failures.is_empty();
        println!(
            "criterion {}: {status} ({}/{} checks, {:.1?})",
            i + 1,
            c.checks - c.failures.len(),
            c.checks,
            start.elapsed()
        );
        for f in c.failures.iter().take(SHOWN_FAILURES) {
            println!("    {f}");
        }
        if c.failures.len() > SHOWN_FAILURES {
            println!("    … and {} more", c.failures.len() - SHOWN_FAILURES);
        }
    }
    all
}
