//! Tables for arbitrary diagonal types from the recurrences, compared with
//! the oracle, then extended past the oracle's reach.

use sepprob::counting::{p_table, resolve_s_reading, resolve_i_reading, BaseValueSource};
use sepprob::{Oracle, TableKind};

fn main() -> sepprob::Result<()> {
    let oracle = Oracle::global();
    let (s, reports) = resolve_s_reading(oracle, 6)?;
    for r in &reports {
        println!("separated base, {} reading: {}/{} disagree", r.reading, r.mismatches, r.cases);
    }
    println!("selected: {s}");
    let (i, _) = resolve_i_reading(oracle, 6)?;
    println!("isolated base selected: {i}");

    let ours = p_table(6, 2, BaseValueSource::ClosedForm)?;
    let truth = oracle.table(6, 2, TableKind::Separated)?;
    println!("n=6 m=2: {} entries, {} differences", ours.len(), ours.diff(&truth).len());

    let big = p_table(10, 3, BaseValueSource::ClosedForm)?;
    for (lambda, k, v) in big.entries().take(8) {
        println!("  λ={:<8} k={k:<2} {v}", lambda.to_string());
    }
    println!("  ... {} nonzero entries, total {}", big.len(), big.total());
    Ok(())
}
