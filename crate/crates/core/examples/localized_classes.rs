//! Fixed-point values of every projective and affine class for a small `n`,
//! as h-factor products and as reduced rational functions.

use eck::format::Style;
use eck::hirzebruch::{affine_class, projective_class, AffineSpace, ProjectiveSpace};

fn main() -> eck::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for kind in [
        ProjectiveSpace::P,
        ProjectiveSpace::Q,
        ProjectiveSpace::X,
        ProjectiveSpace::Qc,
        ProjectiveSpace::Xc,
    ] {
        let c = projective_class(kind, n)?;
        println!("{kind}_{n}");
        for v in &c.values {
            println!("  {:>5}: {}", v.point.to_string(), v.expr.render(Style::Text));
        }
    }
    for kind in [
        AffineSpace::Cn,
        AffineSpace::CQ,
        AffineSpace::CX,
        AffineSpace::CCQ,
        AffineSpace::CCX,
    ] {
        let c = affine_class(kind, n)?;
        let v = &c.values[0];
        println!("{kind}_{n} = {}", v.expr.render(Style::Text));
        println!("      = {}", v.value.reduce());
    }
    Ok(())
}
