//! Raw `t`-series of a diagonal class, with `y = u - 1` and `T = e^{-ut}`.
//! Each coefficient is a Laurent polynomial in `u`.

use eck::hirzebruch::{affine_class, AffineSpace};
use eck::specialize::{diagonalize, expand, YSpec};

fn main() -> eck::Result<()> {
    let n = 3;
    let d = diagonalize(&affine_class(AffineSpace::CCQ, n)?)?;
    println!("CCQ_{n} on the diagonal: {}", d.reduce());
    let s = expand(&d, &YSpec::Shifted, true, n + 4)?;
    for j in s.min()..s.cutoff() {
        let c = s.coeff(j).unwrap();
        let terms: Vec<String> = c.terms().map(|(e, x)| format!("{x} u^{e}")).collect();
        println!(
            "t^{j:>2}: {}",
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        );
    }
    Ok(())
}
