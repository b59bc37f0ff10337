use eck::hirzebruch::AffineSpace;
use eck::specialize::{csm_of, csm_sum_formula, csm_sum_formula_odd};

fn main() -> eck::Result<()> {
    for n in 2..=9 {
        let ccq = csm_of(AffineSpace::CCQ, n)?;
        let ccx = csm_of(AffineSpace::CCX, n)?;
        let family = if n % 2 == 0 {
            csm_sum_formula(n)
        } else {
            csm_sum_formula_odd(n)
        };
        println!("n={n}");
        println!("  CCQ  {ccq}");
        println!("  CCX  {ccx}");
        println!("  sum family matches: {}", ccq == family);
        if n % 2 == 1 {
            println!("  displayed odd sum:  {}", csm_sum_formula(n));
        }
    }
    Ok(())
}
