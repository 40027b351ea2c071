//! Products whose cycles stay inside consecutive blocks.

use sepprob::counting::alpha_separated_count;
use sepprob::partition::compositions_of;
use sepprob::Oracle;

fn main() -> sepprob::Result<()> {
    let oracle = Oracle::global();
    for alpha in compositions_of(5) {
        let formula = alpha_separated_count(&alpha)?;
        let counted = oracle.alpha(&alpha)?;
        println!("α={:<10} {formula:>4} {counted:>4}", alpha.to_string());
    }
    Ok(())
}
