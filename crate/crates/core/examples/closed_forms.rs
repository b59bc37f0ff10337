//! Diagonal restriction `T_i = 1` of `CCQ_n` next to the closed forms in `T`, `y`.

use eck::hirzebruch::{affine_class, AffineSpace};
use eck::specialize::{closed_form, diagonalize};

fn main() -> eck::Result<()> {
    for n in 2..=9 {
        let d = diagonalize(&affine_class(AffineSpace::CCQ, n)?)?;
        let f = closed_form(n)?;
        println!("n={n}  equal={}", d.equals(&f));
        if n <= 3 {
            println!("  {}", f.reduce());
        }
    }
    Ok(())
}
