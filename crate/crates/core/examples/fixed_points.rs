//! Fixed points of the product of two uniform long cycles.

use sepprob::counting::{fixed_point_distribution, fixed_point_moments, fpf_probability};

fn main() -> sepprob::Result<()> {
    for n in [2usize, 3, 5, 10] {
        let (mean, var) = fixed_point_moments(n)?;
        println!("n={n:2}  P(no fixed point)={}  mean={mean}  variance={var}", fpf_probability(n)?);
    }
    let dist = fixed_point_distribution(7)?;
    for (i, p) in dist.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
        println!("  n=7  P(X={i}) = {p} ≈ {}", p.to_decimal(6));
    }
    Ok(())
}
