//! Builds the nonnegative `δ, S_w` forms of `CCQ_n` and `CQ_n` and checks
//! them by exact back-substitution.

use std::time::Instant;

use eck::positivity::{check_nonnegative, delta_zero_consistent, to_positive_form, PositiveKind};

fn main() -> eck::Result<()> {
    let small = to_positive_form(PositiveKind::CQ, 2)?;
    println!("CQ_2 = {small}\n");
    for n in 2..=8 {
        for kind in [PositiveKind::CCQ, PositiveKind::CQ] {
            let start = Instant::now();
            let form = to_positive_form(kind, n)?;
            let cert = check_nonnegative(&form);
            let consistent = delta_zero_consistent(&form)?;
            println!(
                "{kind:?}_{n}: {:>6} terms  nonnegative={}  roundtrip={}  delta=0 consistent={}  ({:.0} ms)",
                cert.terms,
                cert.nonnegative,
                cert.roundtrip_ok,
                consistent,
                start.elapsed().as_secs_f64() * 1e3
            );
        }
    }
    Ok(())
}
