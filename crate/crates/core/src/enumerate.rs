//! Exhaustive enumeration of admissible and self-conjugate path sequences.
//!
//! The search is depth-first: `p₁`, then `p₂ ≥ p₁`, and so on. Each path is
//! grown one column at a time by choosing its column level (the number of up
//! moves before that column's right move). Nesting and the diagonal condition
//! bound the level directly. The band bounds of a color are checked as soon
//! as every box of that color has been assigned: negative colors finalize
//! column by column, color `0` and the positive colors at the last column.
//!
//! Levels are tried in increasing order, which is lexicographic order on move
//! strings, so sequences come out ordered by `p₁‖p₂‖…`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::admissible::type_of_table;
use crate::error::{invalid, Error, Limits, Result};
use crate::lattice::{LatticePath, PathSequence};
use crate::partition::{partitions_of, Partition};

fn check_args(ell: usize, k: usize, limits: &Limits) -> Result<()> {
    if ell == 0 {
        return invalid("ell must be at least 1");
    }
    if k < 2 {
        return invalid(format!("k must be at least 2, got {k}"));
    }
    if ell > u8::MAX as usize {
        return invalid(format!("ell = {ell} is beyond what the enumerator encodes"));
    }
    Limits::check("ell", ell, limits.max_enum_ell)?;
    Limits::check("k", k, limits.max_enum_k)
}

struct Search<F> {
    ell: usize,
    paths: usize,
    /// `levels[i][a]`: up moves before the `(a+1)`-th right move of path `i`.
    levels: Vec<Vec<u8>>,
    /// `below[i][j + ℓ − 1]`: `j`-colored boxes below path `i` (partial while
    /// path `i` is being built).
    below: Vec<Vec<u32>>,
    visit: F,
}

impl<F: FnMut(&[Vec<u8>])> Search<F> {
    fn new(ell: usize, k: usize, visit: F) -> Self {
        Search {
            ell,
            paths: k - 1,
            levels: vec![vec![0; ell]; k - 1],
            below: vec![vec![0; 2 * ell - 1]; k - 1],
            visit,
        }
    }

    fn color_index(&self, j: i32) -> usize {
        (j + self.ell as i32 - 1) as usize
    }

    /// Adds (or removes) the boxes of column `a` lying below a path at `level`.
    fn tally_column(&mut self, path: usize, a: usize, level: u8, add: bool) {
        let ell = self.ell;
        for r in ell - level as usize..ell {
            let idx = a + ell - 1 - r;
            if add {
                self.below[path][idx] += 1;
            } else {
                self.below[path][idx] -= 1;
            }
        }
    }

    /// `t_i^j` for path index `path ≥ 1` (band `path + 1`).
    fn band(&self, path: usize, idx: usize) -> i64 {
        let prev = if path == 0 { 0 } else { self.below[path - 1][idx] };
        self.below[path][idx] as i64 - prev as i64
    }

    fn bounds_ok(&self, path: usize, j: i32) -> bool {
        let idx = self.color_index(j);
        let t = self.band(path, idx);
        let t_prev = self.band(path - 1, idx);
        let room = self.ell as i64
            - j.abs() as i64
            - self.below[0][idx] as i64
            - self.below[path - 1][idx] as i64;
        t <= t_prev && t <= room
    }

    /// `t_i^{inner}` may not exceed `t_i^{outer}` when `inner` is one step
    /// further from color zero.
    fn monotone_ok(&self, path: usize, outer: i32, inner: i32) -> bool {
        self.band(path, self.color_index(outer)) >= self.band(path, self.color_index(inner))
    }

    /// Checks every constraint that became decidable once column `a` of
    /// path `path ≥ 1` was fixed.
    fn column_ok(&self, path: usize, a: usize) -> bool {
        let l = self.ell as i32;
        if a + 1 < self.ell {
            let j = a as i32 - (l - 1);
            self.bounds_ok(path, j) && (j - 1 < -(l - 1) || self.monotone_ok(path, j, j - 1))
        } else {
            (0..l).all(|j| self.bounds_ok(path, j))
                && (l == 1 || self.monotone_ok(path, 0, -1))
                && (1..l).all(|j| self.monotone_ok(path, j - 1, j))
        }
    }

    fn run_path(&mut self, path: usize) {
        if path == self.paths {
            (self.visit)(&self.levels);
            return;
        }
        self.run_column(path, 0);
    }

    fn run_column(&mut self, path: usize, a: usize) {
        let mut lo = if a == 0 { 0 } else { self.levels[path][a - 1] };
        if path > 0 {
            lo = lo.max(self.levels[path - 1][a]);
        }
        // p₁ must stay weakly below the diagonal.
        let hi = if path == 0 { a as u8 } else { self.ell as u8 };
        for level in lo..=hi {
            self.levels[path][a] = level;
            self.tally_column(path, a, level, true);
            if path == 0 || self.column_ok(path, a) {
                if a + 1 == self.ell {
                    self.run_path(path + 1);
                } else {
                    self.run_column(path, a + 1);
                }
            }
            self.tally_column(path, a, level, false);
        }
    }

    /// Seeds path 0 with fixed levels and runs the remaining paths.
    fn run_from(&mut self, first: &[u8]) {
        self.levels[0].copy_from_slice(first);
        for (a, &level) in first.iter().enumerate() {
            self.tally_column(0, a, level, true);
        }
        self.run_path(1);
    }
}

fn to_sequence(levels: &[Vec<u8>]) -> PathSequence {
    PathSequence::new_unchecked(
        levels
            .iter()
            .map(|l| LatticePath::from_levels_unchecked(l))
            .collect(),
    )
}

/// Streams every admissible sequence, in canonical order, to `visit`.
pub fn for_each_admissible(
    ell: usize,
    k: usize,
    limits: &Limits,
    mut visit: impl FnMut(&PathSequence),
) -> Result<()> {
    check_args(ell, k, limits)?;
    let mut search = Search::new(ell, k, |levels: &[Vec<u8>]| visit(&to_sequence(levels)));
    search.run_path(0);
    Ok(())
}

/// Column levels of every path satisfying the diagonal condition.
fn first_paths(ell: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    Search::new(ell, 2, |levels: &[Vec<u8>]| out.push(levels[0].clone())).run_path(0);
    out
}

fn subtree(ell: usize, k: usize, first: &[u8]) -> Vec<PathSequence> {
    let mut out = Vec::new();
    Search::new(ell, k, |levels: &[Vec<u8>]| out.push(to_sequence(levels))).run_from(first);
    out
}

/// Every admissible sequence of `k − 1` paths on the `ell × ell` square,
/// ordered lexicographically by concatenated move strings.
pub fn enumerate_admissible(ell: usize, k: usize, limits: &Limits) -> Result<Vec<PathSequence>> {
    check_args(ell, k, limits)?;
    let firsts = first_paths(ell);
    if k == 2 {
        return Ok(firsts
            .iter()
            .map(|l| to_sequence(std::slice::from_ref(l)))
            .collect());
    }
    #[cfg(feature = "parallel")]
    let chunks: Vec<Vec<PathSequence>> = {
        use rayon::prelude::*;
        firsts.par_iter().map(|f| subtree(ell, k, f)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let chunks: Vec<Vec<PathSequence>> = firsts.iter().map(|f| subtree(ell, k, f)).collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// The self-conjugate members of [`enumerate_admissible`], same order.
pub fn enumerate_self_conjugate(
    ell: usize,
    k: usize,
    limits: &Limits,
) -> Result<Vec<PathSequence>> {
    let mut out = Vec::new();
    for_each_admissible(ell, k, limits, |z| {
        if z.is_self_conjugate() {
            out.push(z.clone());
        }
    })?;
    Ok(out)
}

/// Brute-force counts `(|𝒯|, |S|)` without materializing the sequences.
pub fn count_admissible(ell: usize, k: usize, limits: &Limits) -> Result<(BigUint, BigUint)> {
    let (mut all, mut sc) = (BigUint::zero(), BigUint::zero());
    for_each_admissible(ell, k, limits, |z| {
        all += 1u32;
        if z.is_self_conjugate() {
            sc += 1u32;
        }
    })?;
    Ok((all, sc))
}

/// Tally for sequences of one type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCount {
    pub shape: Partition,
    pub admissible: BigUint,
    pub self_conjugate: BigUint,
}

/// Per-type tallies keyed by every partition of `ℓ` with height `≤ k`, in
/// reverse-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeTally {
    entries: Vec<TypeCount>,
}

impl TypeTally {
    pub fn entries(&self) -> &[TypeCount] {
        &self.entries
    }

    pub fn get(&self, shape: &Partition) -> Option<&TypeCount> {
        self.entries.iter().find(|e| &e.shape == shape)
    }
}

pub fn count_by_type(ell: usize, k: usize, limits: &Limits) -> Result<TypeTally> {
    check_args(ell, k, limits)?;
    let shapes = partitions_of(ell, k)?;
    let index: HashMap<Partition, usize> =
        shapes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut entries: Vec<TypeCount> = shapes
        .into_iter()
        .map(|shape| TypeCount {
            shape,
            admissible: BigUint::zero(),
            self_conjugate: BigUint::zero(),
        })
        .collect();
    let mut failure = None;
    for_each_admissible(ell, k, limits, |z| {
        if failure.is_some() {
            return;
        }
        let shape = match type_of_table(&z.color_counts()) {
            Ok(s) => s,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        let Some(&i) = index.get(&shape) else {
            failure = Some(Error::Internal(format!("type {shape} of {z} is not a partition of {ell} with height <= {k}")));
            return;
        };
        entries[i].admissible += BigUint::one();
        if z.is_self_conjugate() {
            entries[i].self_conjugate += BigUint::one();
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(TypeTally { entries }),
    }
}
