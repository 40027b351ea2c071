use num_bigint::BigUint;
use num_traits::Zero;

use sepprob::counting::{factorial, p_ncycle, zagier_stanley};
use sepprob::oracle::{Census, CensusFilter};
use sepprob::partition::partitions_of;
use sepprob::{Error, IntegerPartition, Oracle, OracleMode, OracleQuery};

#[test]
fn totals_cover_every_plane_permutation() {
    let oracle = Oracle::global();
    for n in 1..=6 {
        let mut total = BigUint::zero();
        for lambda in partitions_of(n) {
            for k in 1..=n {
                total += oracle.p(&lambda, 0, k).unwrap();
            }
        }
        assert_eq!(total, factorial(n - 1) * factorial(n));
    }
}

#[test]
fn repeated_and_chunked_builds_agree() {
    let a = Census::build(6).unwrap();
    let b = Census::build(6).unwrap();
    assert_eq!(a, b);
    for chunks in [1, 5, 17, 120] {
        assert_eq!(Census::build_chunked(6, chunks).unwrap(), a);
    }
}

#[test]
fn stratified_marginals_match() {
    let oracle = Oracle::global();
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            for m in 0..=n {
                for k in 1..=n {
                    let strat = oracle.p_stratified(&lambda, m, k).unwrap();
                    let sum: BigUint = strat.values().sum();
                    assert_eq!(sum, oracle.p(&lambda, m, k).unwrap());
                    // a + k ≤ n since Ne = n - a - k ≥ 0
                    assert!(strat.keys().all(|&a| a + k <= n));
                }
            }
        }
    }
}

#[test]
fn long_cycle_rows_match_closed_forms() {
    let oracle = Oracle::global();
    for n in 1..=7 {
        let long = IntegerPartition::single(n);
        for k in 1..=n {
            assert_eq!(oracle.p(&long, 0, k).unwrap(), zagier_stanley(n, k).unwrap());
            for m in 0..=n {
                assert_eq!(oracle.p(&long, m, k).unwrap(), p_ncycle(n, m, k).unwrap());
            }
        }
    }
}

#[test]
fn isolated_without_constraint_equals_separated() {
    let oracle = Oracle::global();
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            for k in 1..=n {
                assert_eq!(oracle.i(&lambda, 0, k).unwrap(), oracle.p(&lambda, 0, k).unwrap());
            }
        }
    }
}

#[test]
fn fixed_point_totals_and_means() {
    let oracle = Oracle::global();
    for n in 2..=7 {
        let dist = oracle.fixed_point_distribution(n).unwrap();
        let total: BigUint = dist.values().sum();
        let f = factorial(n - 1);
        assert_eq!(total, &f * &f);
        let weighted: BigUint = dist.iter().map(|(&i, c)| c * i).sum();
        // mean n/(n-1): Σ i·c · (n-1) = n · total
        assert_eq!(weighted * (n - 1), total * n);
    }
}

#[test]
fn queries_and_refusals() {
    let oracle = Oracle::with_cap(5).unwrap();
    let q = OracleQuery {
        n: 6,
        mode: OracleMode::FixedPointDistribution,
        diagonal: None,
        vertical_cycles: None,
        vertical_type: None,
        exceedances: None,
    };
    assert_eq!(oracle.run(&q).unwrap_err(), Error::OracleCap { n: 6, cap: 5 });
    assert!(matches!(Oracle::with_cap(10), Err(Error::OracleCap { .. })));
    let census = oracle.census(4).unwrap();
    let by_type = census
        .count(&CensusFilter::separated(2).diagonal(&IntegerPartition::single(4)).vertical_type(&"3+1".parse().unwrap()))
        .unwrap();
    let by_count = census
        .count(&CensusFilter::separated(2).diagonal(&IntegerPartition::single(4)).vertical_cycles(2))
        .unwrap();
    let other = census
        .count(&CensusFilter::separated(2).diagonal(&IntegerPartition::single(4)).vertical_type(&"2+2".parse().unwrap()))
        .unwrap();
    assert_eq!(by_type + other, by_count);
}
