//! Lowest `t` term of the diagonal classes at `y = 0`, `T = e^{-t}`.

use eck::hirzebruch::{affine_class, AffineSpace};
use eck::specialize::{bottom_term, diagonalize, multidegree};

fn main() -> eck::Result<()> {
    for n in 2..=8 {
        for kind in [AffineSpace::Cn, AffineSpace::CQ, AffineSpace::CX] {
            let d = diagonalize(&affine_class(kind, n)?)?;
            let (c, e) = multidegree(&d, n)?;
            let (ys, _) = bottom_term(&d, n)?;
            let ys: Vec<String> = ys.iter().map(|x| x.to_string()).collect();
            println!("{kind}_{n}: {c} t^{e}   (with y: [{}])", ys.join(", "));
        }
    }
    Ok(())
}
