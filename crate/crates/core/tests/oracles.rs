//! Independent brute-force oracles checked against the library.
//!
//! Nothing here reuses the library's search or counting code paths: paths
//! are generated from subsets of move positions, band membership is computed
//! from explicit box sets, and admissibility is evaluated literally.

use std::collections::{BTreeSet, HashMap, HashSet};

use latmult_core::admissible::{is_admissible, satisfies_diagonal_condition, sequence_type};
use latmult_core::enumerate::{count_by_type, enumerate_admissible, enumerate_self_conjugate};
use latmult_core::lattice::{color_counts, path_leq, ColoredSquare};
use latmult_core::partition::{factorial, partitions_of, syt_sum, syt_sum_squares};
use latmult_core::permutation::{count_avoiders, for_each_permutation, lds_length, rsk, AvoiderMethod};
use latmult_core::tableau::enumerate_syt;
use latmult_core::{LatticePath, Limits, Partition, PathSequence, Permutation};
use num_bigint::BigUint;

type BoxSet = BTreeSet<(i32, i32)>;

/// Every monotone path on the `ell × ell` square, from `U`-position subsets.
fn all_paths(ell: usize) -> Vec<LatticePath> {
    let n = 2 * ell;
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == ell)
        .map(|mask| {
            let s: String = (0..n).map(|i| if mask >> i & 1 == 1 { 'U' } else { 'R' }).collect();
            s.parse().unwrap()
        })
        .collect()
}

/// Boxes strictly under the path, found by walking it: a right move at
/// height `y` over column `x` has every box of that column with top edge
/// `≤ y` beneath it.
fn boxes_below(p: &LatticePath) -> BoxSet {
    let ell = p.ell() as i32;
    let (mut x, mut y) = (0, -ell);
    let mut out = BoxSet::new();
    for c in p.to_string().chars() {
        if c == 'U' {
            y += 1;
        } else {
            for b in -(ell - 1)..=y {
                out.insert((x, b));
            }
            x += 1;
        }
    }
    out
}

fn boxes_above(p: &LatticePath) -> BoxSet {
    let all: BoxSet = ColoredSquare::new(p.ell()).unwrap().boxes().collect();
    all.difference(&boxes_below(p)).copied().collect()
}

fn leq_by_boxes(p: &LatticePath, q: &LatticePath) -> bool {
    boxes_above(q).is_subset(&boxes_above(p))
}

/// `t[i][j]` from box sets.
fn table_oracle(paths: &[LatticePath], ell: usize) -> HashMap<(usize, i32), i64> {
    let k = paths.len() + 1;
    let below: Vec<BoxSet> = paths.iter().map(boxes_below).collect();
    let l = ell as i32;
    let mut t = HashMap::new();
    for j in -(l - 1)..l {
        for i in 0..k {
            t.insert((i, j), 0);
        }
    }
    for a in 0..l {
        for b in -(l - 1)..=0 {
            let band = if below[0].contains(&(a, b)) {
                1
            } else if let Some(i) = (1..paths.len()).find(|&i| below[i].contains(&(a, b)) && !below[i - 1].contains(&(a, b))) {
                i + 1
            } else {
                0
            };
            *t.get_mut(&(band, a + b)).unwrap() += 1;
        }
    }
    t
}

fn diagonal_oracle(p: &LatticePath) -> bool {
    // Vertices never rise above y = x − ℓ.
    let ell = p.ell() as i32;
    let (mut x, mut y) = (0, -ell);
    p.to_string().chars().all(|c| {
        if c == 'U' {
            y += 1
        } else {
            x += 1
        }
        y <= x - ell
    })
}

fn admissible_oracle(paths: &[LatticePath], ell: usize) -> bool {
    if !diagonal_oracle(&paths[0]) {
        return false;
    }
    let k = paths.len() + 1;
    let t = table_oracle(paths, ell);
    let l = ell as i64;
    for i in 2..k {
        for j in -(ell as i32 - 1)..ell as i32 {
            let tij = t[&(i, j)];
            let sum: i64 = (1..i).map(|a| t[&(a, j)]).sum();
            let bound = t[&(i - 1, j)].min(l - j.abs() as i64 - t[&(1, j)] - sum);
            if tij > bound {
                return false;
            }
            if j > 0 && tij > t[&(i, j - 1)] {
                return false;
            }
            if j < 0 && tij > t[&(i, j + 1)] {
                return false;
            }
        }
    }
    true
}

/// All nested `(k−1)`-tuples of paths, nesting judged by box containment.
fn nested_tuples(ell: usize, k: usize) -> Vec<Vec<LatticePath>> {
    let paths = all_paths(ell);
    let mut out: Vec<Vec<LatticePath>> = paths.iter().map(|p| vec![p.clone()]).collect();
    for _ in 2..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                paths
                    .iter()
                    .filter(|q| leq_by_boxes(prefix.last().unwrap(), q))
                    .map(|q| {
                        let mut v = prefix.clone();
                        v.push(q.clone());
                        v
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

fn key(z: &PathSequence) -> String {
    z.paths().iter().map(|p| p.to_string()).collect()
}

#[test]
fn enumerator_matches_literal_definition() {
    let limits = Limits::default();
    for ell in 1..=4 {
        for k in 2..=4 {
            let mut want: Vec<String> = nested_tuples(ell, k)
                .into_iter()
                .filter(|ps| admissible_oracle(ps, ell))
                .map(|ps| ps.iter().map(|p| p.to_string()).collect())
                .collect();
            want.sort();
            let got: Vec<String> = enumerate_admissible(ell, k, &limits).unwrap().iter().map(key).collect();
            assert_eq!(got, want, "ell={ell} k={k}");
        }
    }
}

#[test]
fn is_admissible_matches_literal_definition() {
    for ell in 1..=3 {
        for k in 2..=4 {
            for ps in nested_tuples(ell, k) {
                let z = PathSequence::new(ps.clone()).unwrap();
                assert_eq!(is_admissible(&z), admissible_oracle(&ps, ell), "{z}");
            }
        }
    }
}

#[test]
fn color_table_matches_box_sets() {
    for ell in 1..=3 {
        for ps in nested_tuples(ell, 4) {
            let z = PathSequence::new(ps.clone()).unwrap();
            let t = color_counts(&z);
            let oracle = table_oracle(&ps, ell);
            for ((i, j), v) in oracle {
                assert_eq!(t.get(i, j) as i64, v, "{z} band {i} color {j}");
            }
        }
    }
}

#[test]
fn nesting_agrees_with_box_containment_and_is_a_partial_order() {
    for ell in 1..=4 {
        let paths = all_paths(ell);
        for p in &paths {
            assert!(path_leq(p, p).unwrap());
            for q in &paths {
                let leq = path_leq(p, q).unwrap();
                assert_eq!(leq, leq_by_boxes(p, q), "{p} <= {q}");
                if leq && path_leq(q, p).unwrap() {
                    assert_eq!(p, q);
                }
            }
        }
        if ell <= 3 {
            for p in &paths {
                for q in &paths {
                    for r in &paths {
                        if path_leq(p, q).unwrap() && path_leq(q, r).unwrap() {
                            assert!(path_leq(p, r).unwrap());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn reflection_is_an_involution_and_mirrors_boxes() {
    for ell in 1..=6 {
        for p in all_paths(ell) {
            let r = p.reflect();
            assert_eq!(r.reflect(), p);
            // (a, b) ↦ (−b, −a) across y = −x.
            let mirrored: BoxSet = boxes_below(&p).iter().map(|&(a, b)| (-b, -a)).collect();
            assert_eq!(boxes_below(&r), mirrored, "{p}");
            assert_eq!(p.is_self_conjugate(), r == p);
        }
    }
}

#[test]
fn reflected_sequences_mirror_colors() {
    for ell in 1..=4 {
        for ps in nested_tuples(ell, 3) {
            let z = PathSequence::new(ps.clone()).unwrap();
            let mirrored = PathSequence::new(ps.iter().map(LatticePath::reflect).collect()).unwrap();
            let (t, m) = (color_counts(&z), color_counts(&mirrored));
            for i in 0..z.k() {
                for j in t.colors() {
                    assert_eq!(m.get(i, j), t.get(i, -j));
                }
            }
        }
    }
}

#[test]
fn band_sums_hold_for_enumerated_sequences() {
    let limits = Limits::default();
    for ell in 1..=5 {
        for k in 2..=5 {
            for z in enumerate_admissible(ell, k, &limits).unwrap() {
                let t = z.color_counts();
                for j in t.colors() {
                    let total: u32 = (0..k).map(|i| t.get(i, j)).sum();
                    assert_eq!(total as usize, ell - j.unsigned_abs() as usize);
                }
                let ty = sequence_type(&z).unwrap();
                assert_eq!(ty.size(), ell);
                assert!(ty.height() <= k);
            }
        }
    }
}

#[test]
fn admissibility_is_representation_independent() {
    for ell in 1..=3 {
        for ps in nested_tuples(ell, 3) {
            let by_moves = PathSequence::new(ps.clone()).unwrap();
            let by_heights =
                PathSequence::new(ps.iter().map(|p| LatticePath::from_heights(p.heights()).unwrap()).collect()).unwrap();
            assert_eq!(is_admissible(&by_moves), is_admissible(&by_heights));
            assert_eq!(
                satisfies_diagonal_condition(&ps[0]),
                ps[0].heights().iter().enumerate().all(|(a, &h)| h + ell as i32 <= a as i32)
            );
        }
    }
}

#[test]
fn k_two_is_only_the_diagonal_condition() {
    for ell in 1..=5 {
        for p in all_paths(ell) {
            let z = PathSequence::new(vec![p.clone()]).unwrap();
            assert_eq!(is_admissible(&z), satisfies_diagonal_condition(&p));
        }
    }
}

#[test]
fn counts_are_monotone_in_k_and_stabilize() {
    let limits = Limits::default();
    for ell in 1..=5 {
        let counts: Vec<usize> = (2..=5).map(|k| enumerate_admissible(ell, k, &limits).unwrap().len()).collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]), "ell={ell}: {counts:?}");
        for (i, &c) in counts.iter().enumerate() {
            if i + 2 > ell {
                assert_eq!(BigUint::from(c), factorial(ell));
            }
        }
    }
}

#[test]
fn squaring_identities_per_type() {
    let limits = Limits::default();
    for ell in 1..=5 {
        for k in 2..=5 {
            let all = enumerate_admissible(ell, k, &limits).unwrap();
            assert_eq!(BigUint::from(all.len()), syt_sum_squares(ell, k).unwrap());
            let sc = enumerate_self_conjugate(ell, k, &limits).unwrap();
            assert_eq!(BigUint::from(sc.len()), syt_sum(ell, k).unwrap());
            let unique: HashSet<_> = all.iter().collect();
            assert_eq!(unique.len(), all.len());
            let tally = count_by_type(ell, k, &limits).unwrap();
            let shapes: Vec<_> = tally.entries().iter().map(|e| e.shape.clone()).collect();
            assert_eq!(shapes, partitions_of(ell, k).unwrap());
            for e in tally.entries() {
                let f = e.shape.count_syt();
                assert_eq!(e.admissible, &f * &f, "ell={ell} k={k} {}", e.shape);
                assert_eq!(e.self_conjugate, f);
            }
        }
    }
}

/// Partitions by filtering all weakly decreasing sequences built from
/// compositions.
fn partitions_oracle(n: usize, max_height: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << (n - 1) {
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.len() <= max_height {
            out.insert(parts);
        }
    }
    out
}

#[test]
fn partitions_match_composition_oracle() {
    for n in 1..=10 {
        for h in 1..=n {
            let got = partitions_of(n, h).unwrap();
            let set: BTreeSet<Vec<usize>> = got.iter().map(|p| p.parts().to_vec()).collect();
            assert_eq!(set.len(), got.len(), "duplicates at n={n} h={h}");
            assert_eq!(set, partitions_oracle(n, h));
            // Reverse-lexicographic.
            assert!(got.windows(2).all(|w| w[0].parts() > w[1].parts()));
            assert!(got.iter().all(|p| p.size() == n && p.height() <= h));
        }
    }
}

#[test]
fn conjugation_is_an_involution_preserving_f() {
    for n in 1..=10 {
        for p in partitions_of(n, n).unwrap() {
            let c = p.conjugate();
            assert_eq!(c.conjugate(), p);
            assert_eq!(c.count_syt(), p.count_syt());
        }
    }
}

#[test]
fn hook_grid_matches_direct_count() {
    // Hook = boxes to the right + boxes below + itself, counted on the diagram.
    for n in 1..=8 {
        for p in partitions_of(n, n).unwrap() {
            let parts = p.parts();
            let grid = p.hook_lengths();
            for (i, row) in grid.iter().enumerate() {
                for (j, &h) in row.iter().enumerate() {
                    let arm = parts[i] - j - 1;
                    let leg = parts[i + 1..].iter().filter(|&&r| r > j).count();
                    assert_eq!(h, arm + leg + 1);
                }
            }
        }
    }
}

#[test]
fn syt_brute_fill_oracle() {
    // Try every placement of 1..=n into the diagram cells.
    for p in [vec![2, 1], vec![2, 2], vec![3, 1, 1], vec![3, 2]] {
        let shape = Partition::new(p.clone()).unwrap();
        let n = shape.size();
        let mut count = 0u32;
        for_each_permutation(n, |w| {
            let mut rows = Vec::new();
            let mut it = w.iter().copied();
            for &len in &p {
                rows.push(it.by_ref().take(len).collect::<Vec<_>>());
            }
            if latmult_core::StandardTableau::new(rows).is_ok() {
                count += 1;
            }
        });
        assert_eq!(BigUint::from(count), shape.count_syt(), "{shape}");
        assert_eq!(enumerate_syt(&shape, &Limits::default()).unwrap().len() as u32, count);
    }
}

#[test]
fn sum_of_squares_is_factorial() {
    for n in 1..=8 {
        let total: BigUint = partitions_of(n, n)
            .unwrap()
            .iter()
            .map(|p| {
                let f = p.count_syt();
                &f * &f
            })
            .sum();
        assert_eq!(total, factorial(n));
    }
}

fn catalan(upto: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::from(1u32)];
    for n in 0..upto {
        let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        c.push(next);
    }
    c
}

#[test]
fn two_row_avoiders_are_catalan() {
    for (ell, c) in catalan(8).into_iter().enumerate().skip(1) {
        assert_eq!(count_avoiders(ell, 2, AvoiderMethod::Brute, &Limits::default()).unwrap(), c);
    }
}

#[test]
fn rsk_is_a_bijection_onto_tableau_pairs() {
    for ell in 1..=7 {
        let mut pairs = HashSet::new();
        let mut shapes: HashMap<Partition, BigUint> = HashMap::new();
        for_each_permutation(ell, |w| {
            let perm = Permutation::new(w.to_vec()).unwrap();
            let (p, q) = rsk(&perm);
            assert_eq!(p.shape(), q.shape());
            assert_eq!(lds_length(&perm), p.height(), "{perm}");
            *shapes.entry(p.shape().clone()).or_default() += 1u32;
            assert!(pairs.insert((p, q)), "duplicate pair for {perm}");
        });
        for p in partitions_of(ell, ell).unwrap() {
            let f = p.count_syt();
            assert_eq!(shapes[&p], &f * &f);
        }
    }
}

#[test]
fn three_avoider_counts_agree() {
    let limits = Limits::default();
    for ell in 1..=7 {
        for k in 2..=6 {
            let formula = syt_sum_squares(ell, k).unwrap();
            assert_eq!(count_avoiders(ell, k, AvoiderMethod::Brute, &limits).unwrap(), formula);
            assert_eq!(count_avoiders(ell, k, AvoiderMethod::Rsk, &limits).unwrap(), formula);
        }
    }
}

fn lds_dp(w: &[usize]) -> usize {
    let mut best = vec![1usize; w.len()];
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] > w[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[test]
fn patience_lds_matches_quadratic_dp() {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_1234);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=50);
        let mut w: Vec<usize> = (1..=n).collect();
        w.shuffle(&mut rng);
        let perm = Permutation::new(w.clone()).unwrap();
        assert_eq!(lds_length(&perm), lds_dp(&w), "{w:?}");
    }
}
