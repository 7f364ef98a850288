//! `tau` / `sigma` between standard tableaux of height `≤ k` and
//! self-conjugate admissible sequences, and the split/join pairing of an
//! admissible sequence with two self-conjugate ones of the same type.
//!
//! Every path is cut after move `ℓ`, where it meets the `0`-diagonal.

use crate::admissible::{is_admissible, sequence_type};
use crate::error::{invalid, Error, Result};
use crate::lattice::{LatticePath, Move, PathSequence};
use crate::tableau::StandardTableau;

fn internal(e: Error) -> Error {
    Error::Internal(e.to_string())
}

/// Path `i` (1-based) moves up at step `v ≤ ℓ` exactly when `v` sits in rows
/// `2..=i+1` of `x`; the second half is the reflection of the first.
pub fn tau(x: &StandardTableau, k: usize) -> Result<PathSequence> {
    if k < 2 {
        return invalid(format!("k must be at least 2, got {k}"));
    }
    if x.height() > k {
        return invalid(format!(
            "tableau of shape {} has height {} > k = {k}",
            x.shape(),
            x.height()
        ));
    }
    let row = x.row_index();
    let paths = (1..k)
        .map(|i| {
            let half: Vec<Move> = row[1..]
                .iter()
                .map(|r| if (2..=i + 1).contains(r) { Move::U } else { Move::R })
                .collect();
            LatticePath::from_first_half(&half)
        })
        .collect::<Result<Vec<_>>>()
        .map_err(internal)?;
    let z = PathSequence::new(paths).map_err(internal)?;
    if !is_admissible(&z) {
        return Err(Error::Internal(format!("tau image {z} is not admissible")));
    }
    let ty = sequence_type(&z)?;
    if &ty != x.shape() {
        return Err(Error::Internal(format!(
            "tau image has type {ty}, tableau has shape {}",
            x.shape()
        )));
    }
    Ok(z)
}

/// Inverse of [`tau`]: scan moves `1..=ℓ`; value `i` goes to the first row if
/// every path moves right, else to row `m + 1` for the first path `p_m`
/// moving up.
pub fn sigma(z: &PathSequence) -> Result<StandardTableau> {
    if !z.is_self_conjugate() {
        return Err(Error::PreconditionViolation(format!("sequence {z} is not self-conjugate")));
    }
    let shape = sequence_type(z)?;
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); z.k()];
    for step in 0..z.ell() {
        let r = z
            .paths()
            .iter()
            .position(|p| p.moves()[step] == Move::U)
            .map_or(0, |m| m + 1);
        rows[r].push(step + 1);
        if rows[r].len() > shape.parts().get(r).copied().unwrap_or(0) {
            return Err(Error::Internal(format!(
                "sigma overfilled row {} of shape {shape} for {z}",
                r + 1
            )));
        }
    }
    rows.truncate(shape.height());
    let x = StandardTableau::new(rows).map_err(internal)?;
    if x.shape() != &shape {
        return Err(Error::Internal(format!("sigma of {z} has shape {}, expected {shape}", x.shape())));
    }
    Ok(x)
}

fn checked_sequence(paths: Vec<LatticePath>, what: &str) -> Result<PathSequence> {
    let z = PathSequence::new(paths).map_err(internal)?;
    if !is_admissible(&z) {
        return Err(Error::Internal(format!("{what} {z} is not admissible")));
    }
    Ok(z)
}

/// `(Z₁, Z₂)`: reflect the part of each path below (resp. above) the
/// `0`-diagonal over it.
pub fn split(z: &PathSequence) -> Result<(PathSequence, PathSequence)> {
    if !is_admissible(z) {
        return Err(Error::PreconditionViolation(format!("sequence {z} is not admissible")));
    }
    let lower = z
        .paths()
        .iter()
        .map(|p| LatticePath::from_first_half(p.first_half()))
        .collect::<Result<Vec<_>>>()
        .map_err(internal)?;
    let upper = z
        .paths()
        .iter()
        .map(|p| LatticePath::from_second_half(p.second_half()))
        .collect::<Result<Vec<_>>>()
        .map_err(internal)?;
    Ok((
        checked_sequence(lower, "lower split")?,
        checked_sequence(upper, "upper split")?,
    ))
}

/// Inverse of [`split`]: the part of `z1` below the `0`-diagonal glued to
/// the part of `z2` above it. Both inputs must be self-conjugate, admissible
/// and of the same type.
pub fn join(z1: &PathSequence, z2: &PathSequence) -> Result<PathSequence> {
    if z1.ell() != z2.ell() || z1.k() != z2.k() {
        return invalid(format!(
            "cannot join sequences on (ell, k) = ({}, {}) and ({}, {})",
            z1.ell(),
            z1.k(),
            z2.ell(),
            z2.k()
        ));
    }
    for z in [z1, z2] {
        if !z.is_self_conjugate() {
            return Err(Error::PreconditionViolation(format!("sequence {z} is not self-conjugate")));
        }
    }
    let (t1, t2) = (sequence_type(z1)?, sequence_type(z2)?);
    if t1 != t2 {
        return invalid(format!("cannot join sequences of different types {t1} and {t2}"));
    }
    let paths = z1
        .paths()
        .iter()
        .zip(z2.paths())
        .map(|(lo, hi)| {
            let mut moves = lo.first_half().to_vec();
            moves.extend_from_slice(hi.second_half());
            LatticePath::from_moves(moves)
        })
        .collect::<Result<Vec<_>>>()
        .map_err(internal)?;
    checked_sequence(paths, "join")
}
