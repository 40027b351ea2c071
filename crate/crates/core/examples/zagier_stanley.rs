//! Counts for a long-cycle diagonal: the m = 0 reduction and its
//! separated and isolated analogues, for n up to 12.

use sepprob::counting::{i_ncycle, p_ncycle, zagier_stanley};

fn main() -> sepprob::Result<()> {
    for n in [4usize, 7, 12] {
        println!("n = {n}");
        for k in (1..=n).rev().step_by(2) {
            let zs = zagier_stanley(n, k)?;
            let sep: Vec<String> = (0..=3.min(n))
                .map(|m| p_ncycle(n, m, k).map(|v| v.to_string()))
                .collect::<sepprob::Result<_>>()?;
            let iso: Vec<String> = (0..=3.min(n - 1))
                .map(|m| i_ncycle(n, m, k).map(|v| v.to_string()))
                .collect::<sepprob::Result<_>>()?;
            println!("  k={k:2}  m=0: {zs}  separated m=0..3: {}  fixed m=0..3: {}", sep.join(" "), iso.join(" "));
        }
    }
    Ok(())
}
