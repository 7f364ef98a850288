//! Weight arithmetic for the affine Lie algebra `ŝl(n)`.
//!
//! Roots are stored by their coefficients over the simple roots
//! `α₀…α_{n−1}`, weights by their values on the simple coroots `h₀…h_{n−1}`.
//! The pairing is `α_j(h_i) = a_ij`. The `d`-coordinate is not tracked, so
//! shifts by the null root `δ` are invisible here.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::partition::syt_sum_squares;

/// The generalized Cartan matrix of type `A_{n−1}^{(1)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineCartan {
    entries: Vec<Vec<i64>>,
}

impl AffineCartan {
    /// For `n = 2` the neighbor rule and the wrap-around rule hit the same
    /// entries, which accumulate to `−2`.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return invalid(format!("affine sl(n) needs n >= 2, got {n}"));
        }
        let entries: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            return 2;
                        }
                        let mut a = 0;
                        if i.abs_diff(j) == 1 {
                            a -= 1;
                        }
                        if (i, j) == (0, n - 1) || (i, j) == (n - 1, 0) {
                            a -= 1;
                        }
                        a
                    })
                    .collect()
            })
            .collect();
        assert!(
            entries.iter().all(|row| row.iter().sum::<i64>() == 0),
            "affine Cartan rows must sum to zero"
        );
        Ok(AffineCartan { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

/// `Σ c_i α_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RootVector {
    coeffs: Vec<i64>,
}

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return invalid("a root vector of affine sl(n) needs n >= 2 coefficients");
        }
        Ok(RootVector { coeffs })
    }

    pub fn zero(n: usize) -> Self {
        RootVector { coeffs: vec![0; n] }
    }

    /// `δ = α₀ + α₁ + ⋯ + α_{n−1}`.
    pub fn null_root(n: usize) -> Self {
        RootVector { coeffs: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

/// A weight recorded by its pairings `μ(h_i)`, with the level `k` of the
/// `kΛ₀` it was derived from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    pub level: i64,
    pub pairings: Vec<i64>,
}

impl WeightVector {
    pub fn n(&self) -> usize {
        self.pairings.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.pairings.iter().all(|&p| p >= 0)
    }
}

fn check_ell(ell: usize, n: usize) -> Result<()> {
    if n < 2 {
        return invalid(format!("affine sl(n) needs n >= 2, got {n}"));
    }
    if ell == 0 || ell > n / 2 {
        return invalid(format!(
            "ell = {ell} is outside 1..=floor(n/2) = 1..={} for n = {n}",
            n / 2
        ));
    }
    Ok(())
}

/// `γ_ℓ = ℓα₀ + (ℓ−1)α₁ + ⋯ + α_{ℓ−1} + α_{n−ℓ+1} + ⋯ + (ℓ−1)α_{n−1}`.
pub fn gamma(ell: usize, n: usize) -> Result<RootVector> {
    check_ell(ell, n)?;
    let mut coeffs = vec![0i64; n];
    coeffs[0] = ell as i64;
    for i in 1..ell {
        coeffs[i] = (ell - i) as i64;
        coeffs[n - i] = (ell - i) as i64;
    }
    Ok(RootVector { coeffs })
}

/// Pairings of `kΛ₀ − g`: `μ(h_i) = k·δ_{i0} − Σ_j a_ij c_j`.
pub fn weight_pairings(k: i64, g: &RootVector) -> WeightVector {
    let cartan = AffineCartan::new(g.n()).expect("root vectors have n >= 2");
    let pairings = cartan
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let level = if i == 0 { k } else { 0 };
            level - row.iter().zip(&g.coeffs).map(|(a, c)| a * c).sum::<i64>()
        })
        .collect();
    WeightVector { level: k, pairings }
}

/// `mult_{kΛ₀}(kΛ₀ − γ_ℓ) = Σ_{λ ⊢ ℓ, ht(λ) ≤ k} (f^λ)²`. The value does not
/// depend on `n`, which only bounds `ℓ ≤ ⌊n/2⌋`.
pub fn multiplicity(n: usize, k: usize, ell: usize) -> Result<BigUint> {
    check_ell(ell, n)?;
    if k < 2 {
        return invalid(format!("k must be at least 2, got {k}"));
    }
    syt_sum_squares(ell, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub ell: usize,
    pub gamma: RootVector,
    pub weight: WeightVector,
    #[serde(serialize_with = "as_decimal")]
    pub multiplicity: BigUint,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// `kΛ₀ − γ_ℓ` for `1 ≤ ℓ ≤ ⌊n/2⌋`, each checked dominant. These are the
/// maximal dominant weights of `V(kΛ₀)` in this family; maximality itself is
/// not recomputed.
pub fn maximal_dominant_family(n: usize, k: usize) -> Result<Vec<FamilyMember>> {
    if n < 2 {
        return invalid(format!("affine sl(n) needs n >= 2, got {n}"));
    }
    if k < 2 {
        return invalid(format!("k must be at least 2, got {k}"));
    }
    (1..=n / 2)
        .map(|ell| {
            let g = gamma(ell, n)?;
            let weight = weight_pairings(k as i64, &g);
            if !weight.is_dominant() {
                return Err(Error::Internal(format!(
                    "kΛ₀ − γ_{ell} with n = {n}, k = {k} has pairings {:?}",
                    weight.pairings
                )));
            }
            Ok(FamilyMember {
                ell,
                gamma: g,
                weight,
                multiplicity: multiplicity(n, k, ell)?,
            })
        })
        .collect()
}
