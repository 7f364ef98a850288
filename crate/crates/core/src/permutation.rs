//! Permutations, longest decreasing subsequences and RSK row insertion.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Limits, Result};
use crate::partition::syt_sum_squares;
use crate::tableau::StandardTableau;

/// A word `w₁…w_ℓ` rearranging `1..=ℓ`. Serialized as a JSON array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        if word.is_empty() {
            return invalid("a permutation needs at least one letter");
        }
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &w in &word {
            if w == 0 || w > n || seen[w] {
                return invalid(format!("{word:?} is not a permutation of 1..={n}"));
            }
            seen[w] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

/// One-line notation such as `26873415` (at most nine letters).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::InvalidArgument(format!("bad letter {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.word.len() > 9 { " " } else { "" };
        for (i, w) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Length of the longest strictly decreasing subsequence, by patience piles.
pub fn lds_length(w: &Permutation) -> usize {
    lds_of(&w.word)
}

fn lds_of(word: &[usize]) -> usize {
    // tops[i]: largest possible last entry of a decreasing run of length i+1;
    // strictly decreasing in i.
    let mut tops: Vec<usize> = Vec::with_capacity(word.len());
    for &x in word {
        let pile = tops.partition_point(|&t| t > x);
        if pile == tops.len() {
            tops.push(x);
        } else {
            tops[pile] = x;
        }
    }
    tops.len()
}

/// Row-inserts `x`, returning the (0-based) row where a new cell was added.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&y| y < x);
        if pos == row.len() {
            row.push(x);
            return r;
        }
        std::mem::swap(&mut row[pos], &mut x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Insertion and recording tableaux `(P, Q)` of the Robinson–Schensted
/// correspondence, by row insertion.
pub fn rsk(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (t, &x) in w.word.iter().enumerate() {
        let r = row_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(t + 1);
    }
    (
        StandardTableau::new(p).expect("row insertion yields a standard tableau"),
        StandardTableau::new(q).expect("recording tableau is standard"),
    )
}

/// Number of rows of the insertion tableau, without building `Q`.
fn insertion_height(word: &[usize]) -> usize {
    let mut rows = Vec::new();
    for &x in word {
        row_insert(&mut rows, x);
    }
    rows.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AvoiderMethod {
    /// Filter all `ℓ!` words by longest decreasing subsequence.
    Brute,
    /// Run row insertion on all `ℓ!` words and keep shapes of height `≤ k`.
    Rsk,
    /// `Σ (f^λ)²` over `λ ⊢ ℓ`, `ht(λ) ≤ k`.
    Formula,
}

impl FromStr for AvoiderMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(AvoiderMethod::Brute),
            "rsk" => Ok(AvoiderMethod::Rsk),
            "formula" => Ok(AvoiderMethod::Formula),
            other => invalid(format!("unknown method {other:?} (expected brute, rsk or formula)")),
        }
    }
}

/// Calls `f` on every permutation of `1..=n`, in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut word: Vec<usize> = (1..=n).collect();
    loop {
        f(&word);
        if !next_permutation(&mut word) {
            break;
        }
    }
}

fn next_permutation(w: &mut [usize]) -> bool {
    let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
        return false;
    };
    let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Counts permutations of `1..=ell` starting with `first` that satisfy `keep`.
fn count_with_prefix(ell: usize, first: usize, keep: &(impl Fn(&[usize]) -> bool + Sync)) -> u64 {
    let rest: Vec<usize> = (1..=ell).filter(|&v| v != first).collect();
    let mut word = Vec::with_capacity(ell);
    let mut tail = rest.clone();
    let mut count = 0;
    loop {
        word.clear();
        word.push(first);
        word.extend_from_slice(&tail);
        if keep(&word) {
            count += 1;
        }
        if !next_permutation(&mut tail) {
            break;
        }
    }
    count
}

fn count_matching(ell: usize, keep: impl Fn(&[usize]) -> bool + Sync) -> BigUint {
    #[cfg(feature = "parallel")]
    let total: u64 = {
        use rayon::prelude::*;
        (1..=ell)
            .into_par_iter()
            .map(|first| count_with_prefix(ell, first, &keep))
            .sum()
    };
    #[cfg(not(feature = "parallel"))]
    let total: u64 = (1..=ell).map(|first| count_with_prefix(ell, first, &keep)).sum();
    BigUint::from(total)
}

/// Number of `(k+1)k⋯21`-avoiding permutations of `1..=ell`, i.e. those whose
/// longest decreasing subsequence has length at most `k`.
pub fn count_avoiders(
    ell: usize,
    k: usize,
    method: AvoiderMethod,
    limits: &Limits,
) -> Result<BigUint> {
    if ell == 0 {
        return invalid("ell must be at least 1");
    }
    if k < 2 {
        return invalid(format!("k must be at least 2, got {k}"));
    }
    match method {
        AvoiderMethod::Formula => syt_sum_squares(ell, k),
        AvoiderMethod::Brute => {
            Limits::check("ell for brute counting (try the formula method)", ell, limits.max_perm_ell)?;
            Ok(count_matching(ell, |w| lds_of(w) <= k))
        }
        AvoiderMethod::Rsk => {
            Limits::check("ell for RSK counting (try the formula method)", ell, limits.max_perm_ell)?;
            Ok(count_matching(ell, |w| insertion_height(w) <= k))
        }
    }
}
