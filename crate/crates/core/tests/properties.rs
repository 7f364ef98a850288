use latmult_core::bijection::{sigma, tau};
use latmult_core::permutation::{lds_length, rsk};
use latmult_core::{LatticePath, Partition, PathSequence, Permutation, StandardTableau};
use proptest::prelude::*;

fn path_strategy_of(ell: usize) -> impl Strategy<Value = LatticePath> {
    Just(vec![false; ell].into_iter().chain(vec![true; ell]).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|ups| {
            ups.into_iter()
                .map(|u| if u { 'U' } else { 'R' })
                .collect::<String>()
                .parse()
                .unwrap()
        })
}

fn path_strategy(max_ell: usize) -> impl Strategy<Value = LatticePath> {
    (1..=max_ell).prop_flat_map(path_strategy_of)
}

fn permutation_strategy(max_len: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_len).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|w| Permutation::new(w).unwrap())
    })
}

proptest! {
    #[test]
    fn reflect_is_an_involution(p in path_strategy(10)) {
        prop_assert_eq!(p.reflect().reflect(), p.clone());
        prop_assert_eq!(LatticePath::from_heights(p.heights()).unwrap(), p);
    }

    #[test]
    fn path_sequence_json_roundtrip(
        (ell, raw) in (1usize..8).prop_flat_map(|ell| (Just(ell), prop::collection::vec(path_strategy_of(ell), 1..5)))
    ) {
        // Column-wise order statistics of any paths are again paths, and nested.
        let mut heights: Vec<Vec<i32>> = raw.iter().map(|p| p.heights().to_vec()).collect();
        for x in 0..ell {
            let mut col: Vec<i32> = heights.iter().map(|h| h[x]).collect();
            col.sort_unstable();
            for (h, v) in heights.iter_mut().zip(col) {
                h[x] = v;
            }
        }
        let paths = heights.iter().map(|h| LatticePath::from_heights(h).unwrap()).collect();
        let z = PathSequence::new(paths).unwrap();
        let json = serde_json::to_string(&z).unwrap();
        prop_assert_eq!(serde_json::from_str::<PathSequence>(&json).unwrap(), z);
    }

    #[test]
    fn schensted_and_tableau_json(w in permutation_strategy(30)) {
        let (p, q) = rsk(&w);
        prop_assert_eq!(p.height(), lds_length(&w));
        prop_assert_eq!(p.shape(), q.shape());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<StandardTableau>(&json).unwrap(), p.clone());
        let shape_json = serde_json::to_string(p.shape()).unwrap();
        prop_assert_eq!(&serde_json::from_str::<Partition>(&shape_json).unwrap(), p.shape());
    }

    #[test]
    fn tau_sigma_roundtrip_on_random_tableaux(w in permutation_strategy(9), extra in 0usize..3) {
        let (x, _) = rsk(&w);
        let k = x.height().max(2) + extra;
        let z = tau(&x, k).unwrap();
        prop_assert!(z.is_self_conjugate());
        prop_assert_eq!(sigma(&z).unwrap(), x);
    }
}
