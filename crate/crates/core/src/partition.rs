//! Integer partitions, hook lengths and the hook length formula.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A partition `λ₁ ≥ λ₂ ≥ … ≥ λ_h > 0` of a positive integer.
///
/// Serialized as a JSON array of its parts, e.g. `[4,2,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return invalid("the empty partition is not supported");
        }
        if parts.contains(&0) {
            return invalid(format!("partition parts must be positive: {parts:?}"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("partition parts must be weakly decreasing: {parts:?}"));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `ℓ = Σ λ_i`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `ht(λ)`.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.parts[0])
            .map(|col| self.parts.iter().take_while(|&&row| row > col).count())
            .collect();
        Partition { parts }
    }

    /// Hook lengths `h(i, j) = λ_i + λ'_j − i − j + 1`, one row per part.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                // 0-based i, j: λ_i + λ'_j − i − j − 1.
                (0..row).map(|j| row + conj.parts[j] - i - j - 1).collect()
            })
            .collect()
    }

    /// `f^λ`, the number of standard Young tableaux of shape `λ`, by the hook
    /// length formula.
    pub fn count_syt(&self) -> BigUint {
        let numerator = factorial(self.size());
        let denominator = self
            .hook_lengths()
            .iter()
            .flatten()
            .fold(BigUint::one(), |acc, &h| acc * h);
        assert!(
            (&numerator % &denominator).is_zero(),
            "hook product of {self} does not divide {}!",
            self.size()
        );
        numerator / denominator
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// All partitions of `ell` with at most `max_height` parts, in
/// reverse-lexicographic order: `(5), (4,1), (3,2), (3,1,1), …`.
pub fn partitions_of(ell: usize, max_height: usize) -> Result<Vec<Partition>> {
    if ell == 0 {
        return invalid("ell must be at least 1");
    }
    if max_height == 0 {
        return invalid("max_height must be at least 1");
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(max_height);
    fill(ell, ell, max_height, &mut current, &mut out);
    Ok(out)
}

fn fill(
    remaining: usize,
    max_part: usize,
    slots: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if slots == 0 {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        // The remaining slots cannot absorb what is left.
        if part * slots < remaining {
            break;
        }
        current.push(part);
        fill(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}

fn check_sum_args(ell: usize, k: usize) -> Result<()> {
    if ell == 0 {
        return invalid("ell must be at least 1");
    }
    if k < 2 {
        return invalid(format!("k must be at least 2, got {k}"));
    }
    Ok(())
}

/// `Σ f^λ` over `λ ⊢ ell` with `ht(λ) ≤ k`.
pub fn syt_sum(ell: usize, k: usize) -> Result<BigUint> {
    check_sum_args(ell, k)?;
    Ok(partitions_of(ell, k)?.iter().map(Partition::count_syt).sum())
}

/// `Σ (f^λ)²` over `λ ⊢ ell` with `ht(λ) ≤ k`.
pub fn syt_sum_squares(ell: usize, k: usize) -> Result<BigUint> {
    check_sum_args(ell, k)?;
    Ok(partitions_of(ell, k)?
        .iter()
        .map(|p| {
            let f = p.count_syt();
            &f * &f
        })
        .sum())
}
