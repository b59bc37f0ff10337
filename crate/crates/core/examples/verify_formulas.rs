//! Checks every degeneration identity for `2 <= n <= 8` in parallel.

use eck::algebra::DEFAULT_SEED;
use eck::identities::{verify_many, FormulaId};

fn main() -> eck::Result<()> {
    let mut jobs = Vec::new();
    for n in 2..=8 {
        for f in FormulaId::ALL {
            if f == FormulaId::RemarkK {
                jobs.extend((0..n / 2).map(|k| (f, n, Some(k))));
            } else {
                jobs.push((f, n, None));
            }
        }
    }
    for r in verify_many(&jobs, DEFAULT_SEED) {
        let r = r?;
        let k = r.k.map(|k| format!(" k={k}")).unwrap_or_default();
        let mark = if r.verified { "ok" } else { "FAILED" };
        println!(
            "{:<20} n={}{:<5} {:>4} checks  {mark}  ({:.0} ms)",
            r.formula.name(),
            r.n,
            k,
            r.per_point.len(),
            r.timing_ms
        );
    }
    Ok(())
}
