mod common;

use common::{inertia_oracle, random_symmetric, random_unimodular, rational_det};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twobridge::goeritz::{determinant, signature, IntMatrix};

fn mat(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows.to_vec()).unwrap()
}

fn triple(m: &IntMatrix) -> (usize, usize, usize) {
    let s = signature(m).unwrap();
    (s.n_plus, s.n_minus, s.n_zero)
}

#[test]
fn oracle_sanity() {
    assert_eq!(inertia_oracle(&[vec![-3]]), (0, 1, 0));
    assert_eq!(inertia_oracle(&[vec![0, 1], vec![1, 0]]), (1, 1, 0));
    assert_eq!(inertia_oracle(&[vec![0, 0], vec![0, 0]]), (0, 0, 2));
    assert_eq!(
        inertia_oracle(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]),
        (1, 2, 0)
    );
}

#[test]
fn congruence_invariance_against_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.gen_range(1..=6);
        let rows = random_symmetric(&mut rng, n, 4);
        let u = random_unimodular(&mut rng, n, 2 * n);
        let m = mat(&rows);
        let Some(moved) = m.congruence(&mat(&u)) else {
            continue;
        };
        assert!(moved.is_symmetric());
        let expected = inertia_oracle(&rows);
        assert_eq!(triple(&m), expected, "{rows:?}");
        assert_eq!(triple(&moved), expected, "{rows:?} under {u:?}");
        assert_eq!(inertia_oracle(&moved.rows()), expected);
        // Unimodular congruence preserves the determinant exactly.
        assert_eq!(determinant(&moved), determinant(&m));
        assert_eq!(determinant(&m), rational_det(&rows));
        checked += 1;
    }
}

fn symmetric() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(-6i64..=6, n * n).prop_map(move |v| {
            let mut m = vec![vec![0; n]; n];
            for i in 0..n {
                for j in i..n {
                    m[i][j] = v[i * n + j];
                    m[j][i] = v[i * n + j];
                }
            }
            m
        })
    })
}

proptest! {
    #[test]
    fn inertia_matches_oracle(rows in symmetric()) {
        prop_assert_eq!(triple(&mat(&rows)), inertia_oracle(&rows));
    }

    #[test]
    fn inertia_accounts_for_every_dimension(rows in symmetric()) {
        let s = signature(&mat(&rows)).unwrap();
        prop_assert_eq!(s.dim(), rows.len());
        prop_assert_eq!(s.n_zero == 0, !determinant(&mat(&rows)).is_zero());
    }

    #[test]
    fn bareiss_matches_rational_elimination(rows in symmetric()) {
        prop_assert_eq!(determinant(&mat(&rows)), rational_det(&rows));
    }

    #[test]
    fn negation_swaps_inertia(rows in symmetric()) {
        let neg: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        let (p, m, z) = triple(&mat(&rows));
        prop_assert_eq!(triple(&mat(&neg)), (m, p, z));
        prop_assert_eq!(determinant(&mat(&neg)).abs(), determinant(&mat(&rows)).abs());
    }
}
