mod common;

use common::{corpus, row};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use periodic_syt::tableau::DEFAULT_ENUMERATION_LIMIT;
use periodic_syt::transfer::{build_transfer_system_by_enumeration, index_subtableau};
use periodic_syt::{
    build_transfer_system, count_syt, count_via_transfer, enumerate_syt, IntMatrix, TransferError, TransferLimits,
};

fn to_int(x: BigUint) -> BigInt {
    BigInt::from(x)
}

#[test]
fn transfer_counts_match_direct_counts() {
    for (name, pair) in corpus() {
        let ts = build_transfer_system(&pair, TransferLimits::default()).unwrap();
        let mut checked = 0;
        for n in ts.n0..=ts.n0 + 4 {
            let shape = pair.shifted(n).unwrap();
            if shape.len() > 24 {
                break;
            }
            let direct = to_int(count_syt(&shape));
            assert_eq!(count_via_transfer(&ts, n).unwrap(), direct, "{name} n = {n}");
            if shape.len() <= 14 {
                assert_eq!(BigInt::from(enumerate_syt(&shape, 14).unwrap().len()), direct, "{name} n = {n}");
            }
            checked += 1;
        }
        assert!(checked >= 1, "{name}: nothing in range");
    }
}

#[test]
fn both_builders_agree() {
    for (name, pair) in corpus() {
        let g = pair.geometry().unwrap();
        if g.coefficient.len() > 18 || pair.shifted(g.n0).unwrap().len() > 18 {
            continue;
        }
        let fast = build_transfer_system(&pair, TransferLimits::default()).unwrap();
        let slow = build_transfer_system_by_enumeration(&pair, TransferLimits::default(), 18).unwrap();
        assert_eq!(fast, slow, "{name}");
    }
}

#[test]
fn structural_invariants() {
    for (name, pair) in corpus() {
        let ts = build_transfer_system(&pair, TransferLimits::default()).unwrap();
        assert_eq!(BigUint::from(ts.dim()), count_syt(&ts.geometry.index), "{name}");
        assert!(ts.basis.windows(2).all(|w| w[0] < w[1]), "{name}");
        assert!(ts.matrix.to_rows().iter().flatten().all(|x| *x >= BigInt::zero()));
        assert!(ts.v0.iter().all(|x| *x >= BigInt::zero()));
        let total: BigInt = ts.v0.iter().sum();
        assert_eq!(total, to_int(count_syt(&pair.shifted(ts.n0).unwrap())), "{name}");
        assert_eq!(ts, build_transfer_system(&pair, TransferLimits::default()).unwrap());
        // every tableau of the coefficient shape is counted exactly once
        let entries: BigInt = ts.matrix.to_rows().iter().flatten().sum();
        assert_eq!(entries, to_int(count_syt(&ts.geometry.coefficient)), "{name}");
    }
}

#[test]
fn column_sums_count_top_classes() {
    for (name, pair) in corpus() {
        let ts = build_transfer_system(&pair, TransferLimits::default()).unwrap();
        let g = &ts.geometry;
        if g.coefficient.len() > 16 {
            continue;
        }
        let mut tops = vec![0u64; ts.dim()];
        for t in enumerate_syt(&g.coefficient, 16).unwrap() {
            let top = periodic_syt::transfer::top_index_subtableau(g, &t).unwrap();
            tops[ts.basis_index(&top).unwrap()] += 1;
        }
        for (c, expected) in tops.iter().enumerate() {
            let sum: BigInt = (0..ts.dim()).map(|r| ts.matrix[(r, c)].clone()).sum();
            assert_eq!(sum, BigInt::from(*expected), "{name} column {c}");
        }
    }
}

#[test]
fn index_classes_of_the_three_row() {
    let pair = row(3, 1);
    let ts = build_transfer_system(&pair, TransferLimits::default()).unwrap();
    for m in ts.n0..ts.n0 + 4 {
        let mut sizes = vec![0u64; ts.dim()];
        for t in enumerate_syt(&pair.shifted(m).unwrap(), DEFAULT_ENUMERATION_LIMIT).unwrap() {
            let i = index_subtableau(&pair, &ts.geometry, &t, m).unwrap();
            sizes[ts.basis_index(&i).expect("index subtableau outside the basis")] += 1;
        }
        assert_eq!(sizes.iter().sum::<u64>(), 1 << (m - 1));
        if m == ts.n0 {
            assert_eq!(sizes.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(), ts.v0);
        }
    }
}

#[test]
fn powers_of_two_for_the_three_row() {
    let pair = row(3, 1);
    let ts = build_transfer_system(&pair, TransferLimits::default()).unwrap();
    for n in 1..=12usize {
        let expected = BigInt::from(1u64 << (n - 1));
        assert_eq!(to_int(count_syt(&pair.shifted(n).unwrap())), expected);
        if n >= ts.n0 {
            assert_eq!(count_via_transfer(&ts, n).unwrap(), expected);
        } else {
            assert!(matches!(count_via_transfer(&ts, n), Err(TransferError::BelowRange { .. })));
        }
    }
}

#[test]
fn printed_small_row_matrices() {
    let m4 = build_transfer_system(&row(4, 1), TransferLimits::default()).unwrap();
    assert_eq!(m4.matrix, IntMatrix::from_rows(&[vec![3, 4], vec![2, 3]]).unwrap());
    let m5 = build_transfer_system(&row(5, 1), TransferLimits::default()).unwrap();
    let printed: Vec<Vec<i64>> = vec![
        vec![4, 5, 5, 6, 6, 7, 7],
        vec![3, 4, 4, 5, 5, 6, 6],
        vec![3, 4, 4, 5, 5, 6, 6],
        vec![2, 3, 3, 4, 4, 5, 5],
        vec![2, 3, 3, 4, 4, 5, 5],
        vec![0, 0, 2, 0, 3, 0, 4],
        vec![0, 0, 2, 0, 3, 0, 4],
    ];
    assert_eq!(m5.matrix, IntMatrix::from_rows(&printed).unwrap());
}

#[test]
fn six_row_starts_at_four_copies() {
    let pair = row(6, 1);
    let g = pair.geometry().unwrap();
    assert_eq!(g.n0, 4);
    let fits = |m: usize| {
        let sh = pair.shifted(m).unwrap();
        g.index.translate(sh.bottom_right_anchor(&g.index).unwrap()).is_subset(&sh)
    };
    assert!(!fits(3) && fits(4));
    let ts = build_transfer_system(&pair, TransferLimits::default()).unwrap();
    assert_eq!(ts.dim(), 66);
    assert_eq!(count_via_transfer(&ts, 4).unwrap(), to_int(count_syt(&pair.shifted(4).unwrap())));
}

#[test]
fn dimension_limit_is_enforced() {
    let err = build_transfer_system(&row(6, 1), TransferLimits { max_dim: 65 }).unwrap_err();
    assert!(matches!(err, TransferError::EnumerationLimitExceeded { dim: 66, limit: 65 }));
}
