//! Separation and isolation probabilities, cross-checked against the
//! exhaustive oracle at n = 6.

use num_bigint::BigUint;
use sepprob::counting::{iso_prob_ncycle, sep_prob_ncycle};
use sepprob::{ExactRational, IntegerPartition, Oracle};

fn main() -> sepprob::Result<()> {
    let n = 6;
    let oracle = Oracle::global();
    let long = IntegerPartition::single(n);
    let f: BigUint = (1..n as u32).product::<u32>().into();
    let pairs = &f * &f;
    println!("{:>2} {:>12} {:>12} {:>10}", "m", "separated", "enumerated", "fixed");
    for m in 0..n {
        let counted: BigUint = (1..=n).map(|k| oracle.p(&long, m, k)).sum::<sepprob::Result<_>>()?;
        println!(
            "{m:>2} {:>12} {:>12} {:>10}",
            sep_prob_ncycle(n, m)?.to_string(),
            ExactRational::ratio(&counted, &pairs)?.to_string(),
            iso_prob_ncycle(n, m)?.to_string()
        );
    }
    println!("σ at n = 40, m = 5: {}", sep_prob_ncycle(40, 5)?.to_decimal(12));
    Ok(())
}
