//! Diagonal, exceedance classes, block transpositions, reflection and the
//! doubling construction on a small plane permutation.

use sepprob::PlanePermutation;

fn main() -> sepprob::Result<()> {
    let pp = PlanePermutation::from_rows(&[1, 3, 6, 2, 5, 4], &[5, 4, 1, 3, 6, 2])?;
    println!("{}", pp.render());
    println!("diagonal: {}", pp.diagonal());

    let c = pp.classify();
    println!("exceedances {:?}, trivial {:?}, NTAEs {:?}", c.exceedances, c.trivial, c.ntaes);

    let r = pp.reflect();
    let n = pp.n();
    println!(
        "Ne = {}, Ne(reflected) = {}, n + 1 - C(π) - C(D) = {}",
        pp.ntae_count(),
        r.ntae_count(),
        n + 1 - pp.pi().cycle_count() - pp.diagonal().cycle_count()
    );

    let t = pp.transpose_blocks(1, 2, 4)?;
    println!("after swapping blocks (1,2,4):\n{}", t.render());
    println!("diagonal unchanged: {}", t.diagonal() == pp.diagonal());

    let small = PlanePermutation::from_rows(&[1, 2, 3, 4, 5, 6], &[4, 5, 6, 1, 2, 3])?;
    let hat = small.hat();
    println!("doubled:\n{}", hat.render_with_bars(Some(small.n())));
    println!("doubled diagonal: {}", hat.diagonal());
    Ok(())
}
