//! χ_y genera of the projective classes, by summing fixed-point values.

use eck::hirzebruch::ProjectiveSpace;
use eck::identities::chi_y;

fn main() -> eck::Result<()> {
    println!("{:>3} {:>4}  coefficients of 1, y, y^2, ...", "n", "");
    for n in 2..=8 {
        for kind in [
            ProjectiveSpace::P,
            ProjectiveSpace::Q,
            ProjectiveSpace::X,
            ProjectiveSpace::Qc,
            ProjectiveSpace::Xc,
        ] {
            let c: Vec<String> = chi_y(kind, n)?.iter().map(|x| x.to_string()).collect();
            println!("{n:>3} {:>4}  [{}]", kind.to_string(), c.join(", "));
        }
    }
    Ok(())
}
