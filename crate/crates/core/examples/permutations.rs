//! Composition, cycle types and the separation/isolation predicates.

use sepprob::perm::enumerate_n_cycles;
use sepprob::Permutation;

fn main() -> sepprob::Result<()> {
    let p: Permutation = "(1 2 3)".parse()?;
    let q: Permutation = "2,3,1".parse()?;
    // (p∘q)(x) = p(q(x))
    let pq = p.compose(&q)?;
    println!("{p} ∘ {q} = {pq}");
    println!("one-line: {:?}", pq.one_line());

    let r = Permutation::from_cycles(6, &[vec![1, 5, 6], vec![3, 4, 2]])?;
    println!("{r} has cycle type {} ({} cycles)", r.cycle_type(), r.cycle_count());

    let s: Permutation = "(1 3)(2 4)".parse()?;
    for m in 0..=4 {
        println!("{s}: separates {m}? {}  isolates {m}? {}", s.separates(m)?, s.isolates(m)?);
    }

    let cycles: Vec<String> = enumerate_n_cycles(4).map(|c| c.to_string()).collect();
    println!("{} long cycles on [4]: {}", cycles.len(), cycles.join(" "));
    Ok(())
}
