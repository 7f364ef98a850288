//! Admissibility of a nested path sequence and its type.

use crate::error::{Error, Result};
use crate::lattice::{ColorCountTable, LatticePath, Move, PathSequence};
use crate::partition::Partition;

/// `p` stays weakly below the diagonal `y = x − ℓ`: every prefix of the move
/// string has at least as many `R` as `U`.
pub fn satisfies_diagonal_condition(p: &LatticePath) -> bool {
    let mut depth = 0i32;
    p.moves().iter().all(|m| {
        depth += match m {
            Move::R => 1,
            Move::U => -1,
        };
        depth >= 0
    })
}

/// Colors `0, 1, −1, 2, −2, …` so each monotonicity constraint compares with
/// a color that has already been visited.
fn colors_outward(ell: usize) -> impl Iterator<Item = i32> {
    let l = ell as i32;
    std::iter::once(0).chain((1..l).flat_map(|d| [d, -d]))
}

/// Whether band `i` (`2 ≤ i ≤ k−1`) satisfies every bound for the table.
fn band_ok(t: &ColorCountTable, i: usize) -> bool {
    let ell = t.ell() as i64;
    colors_outward(t.ell()).all(|j| {
        let tij = t.get(i, j) as i64;
        if tij > t.get(i - 1, j) as i64 {
            return false;
        }
        let below_prev: i64 = (1..i).map(|a| t.get(a, j) as i64).sum();
        let room = ell - j.abs() as i64 - t.get(1, j) as i64 - below_prev;
        if tij > room {
            return false;
        }
        match j.signum() {
            1 => tij <= t.get(i, j - 1) as i64,
            -1 => tij <= t.get(i, j + 1) as i64,
            _ => true,
        }
    })
}

/// The full admissibility predicate on an already-nested sequence.
pub fn is_admissible(z: &PathSequence) -> bool {
    if !satisfies_diagonal_condition(&z.paths()[0]) {
        return false;
    }
    if z.k() == 2 {
        return true;
    }
    let t = z.color_counts();
    (2..z.k()).all(|i| band_ok(&t, i))
}

/// The partition `(t₀⁰, t₁⁰, …, t_{k−1}⁰)` with trailing zeros dropped.
pub fn sequence_type(z: &PathSequence) -> Result<Partition> {
    if !is_admissible(z) {
        return Err(Error::PreconditionViolation(format!(
            "sequence {z} is not admissible"
        )));
    }
    type_of_table(&z.color_counts())
}

pub(crate) fn type_of_table(t: &ColorCountTable) -> Result<Partition> {
    let zero: Vec<usize> = (0..t.k()).map(|i| t.get(i, 0) as usize).collect();
    if zero.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Internal(format!(
            "0-color band counts {zero:?} of an admissible sequence are not weakly decreasing"
        )));
    }
    let parts: Vec<usize> = zero.into_iter().take_while(|&c| c > 0).collect();
    Partition::new(parts).map_err(|e| Error::Internal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(paths: &[&str]) -> PathSequence {
        PathSequence::parse(paths).unwrap()
    }

    #[test]
    fn diagonal_condition() {
        assert!(satisfies_diagonal_condition(&"RU".parse().unwrap()));
        assert!(!satisfies_diagonal_condition(&"UR".parse().unwrap()));
        assert!(!satisfies_diagonal_condition(&"RUURRU".parse().unwrap()));
        let fig = LatticePath::from_first_half(&[Move::R, Move::U, Move::R, Move::R, Move::R, Move::U]).unwrap();
        assert!(satisfies_diagonal_condition(&fig));
    }

    #[test]
    fn one_by_one_square() {
        assert!(is_admissible(&seq(&["RU"])));
        assert!(!is_admissible(&seq(&["UR"])));
        assert_eq!(sequence_type(&seq(&["RU"])).unwrap().parts(), &[1]);
        assert!(matches!(
            sequence_type(&seq(&["UR"])),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn coincident_paths_have_empty_bands() {
        assert!(is_admissible(&seq(&["RRUU", "RRUU"])));
    }

    #[test]
    fn two_by_two_types() {
        assert_eq!(sequence_type(&seq(&["RRUU"])).unwrap().parts(), &[2]);
        assert_eq!(sequence_type(&seq(&["RURU"])).unwrap().parts(), &[1, 1]);
    }

    #[test]
    fn outward_color_order() {
        assert_eq!(colors_outward(3).collect::<Vec<_>>(), vec![0, 1, -1, 2, -2]);
        assert_eq!(colors_outward(1).collect::<Vec<_>>(), vec![0]);
    }
}
