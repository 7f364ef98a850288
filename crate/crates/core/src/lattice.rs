//! The colored `ℓ × ℓ` square, monotone lattice paths on it, and the
//! color-count table of a nested path sequence.
//!
//! Coordinates follow the usual picture: the square sits in the fourth
//! quadrant with its top-left corner at the origin. The box whose upper-left
//! corner is `(a, b)`, `0 ≤ a < ℓ`, `−ℓ < b ≤ 0`, has color `a + b`, so the
//! `0`-colored boxes run down the anti-diagonal from `(0,0)` to `(ℓ,−ℓ)`.
//! Paths go from `(0, −ℓ)` to `(ℓ, 0)` by unit right (`R`) and up (`U`) moves.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    R,
    U,
}

impl Move {
    pub fn swapped(self) -> Move {
        match self {
            Move::R => Move::U,
            Move::U => Move::R,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Move::R => 'R',
            Move::U => 'U',
        }
    }
}

/// The colored square `Y` of side `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoredSquare {
    ell: usize,
}

impl ColoredSquare {
    pub fn new(ell: usize) -> Result<Self> {
        if ell == 0 {
            return invalid("the square side must be at least 1");
        }
        Ok(ColoredSquare { ell })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Color of the box with upper-left corner `(a, b)`.
    pub fn box_color(&self, a: i32, b: i32) -> Result<i32> {
        let l = self.ell as i32;
        if !(0..l).contains(&a) || !(-(l - 1)..=0).contains(&b) {
            return invalid(format!("({a},{b}) is not a box corner of the {l}x{l} square"));
        }
        Ok(a + b)
    }

    /// Number of `j`-colored boxes, `ℓ − |j|` (zero outside the color range).
    pub fn boxes_of_color(&self, j: i32) -> usize {
        (self.ell as i32 - j.abs()).max(0) as usize
    }

    /// Upper-left corners of every box, column by column.
    pub fn boxes(&self) -> impl Iterator<Item = (i32, i32)> {
        let l = self.ell as i32;
        (0..l).flat_map(move |a| (-(l - 1)..=0).map(move |b| (a, b)))
    }
}

/// A monotone staircase from `(0, −ℓ)` to `(ℓ, 0)`.
///
/// The move string is canonical; the column heights `u_1..u_ℓ` (the
/// y-coordinate of the horizontal step over each column) are derived once at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    moves: Vec<Move>,
    heights: Vec<i32>,
}

impl LatticePath {
    pub fn from_moves(moves: Vec<Move>) -> Result<Self> {
        let ups = moves.iter().filter(|&&m| m == Move::U).count();
        let rights = moves.len() - ups;
        if moves.is_empty() || ups != rights {
            return invalid(format!(
                "a lattice path needs equal positive numbers of R and U moves, got {rights} R and {ups} U"
            ));
        }
        let ell = rights as i32;
        let mut heights = Vec::with_capacity(rights);
        let mut y = -ell;
        for &m in &moves {
            match m {
                Move::U => y += 1,
                Move::R => heights.push(y),
            }
        }
        Ok(LatticePath { moves, heights })
    }

    /// Builds the path whose horizontal step over column `x` sits at
    /// `heights[x-1]`.
    pub fn from_heights(heights: &[i32]) -> Result<Self> {
        let ell = heights.len() as i32;
        if ell == 0 {
            return invalid("a lattice path needs at least one column");
        }
        if heights.iter().any(|h| !(-ell..=0).contains(h)) {
            return invalid(format!("heights must lie in [-{ell}, 0]: {heights:?}"));
        }
        if heights.windows(2).any(|w| w[0] > w[1]) {
            return invalid(format!("heights must be weakly increasing: {heights:?}"));
        }
        let mut moves = Vec::with_capacity(2 * heights.len());
        let mut y = -ell;
        for &h in heights {
            moves.extend(std::iter::repeat_n(Move::U, (h - y) as usize));
            moves.push(Move::R);
            y = h;
        }
        moves.extend(std::iter::repeat_n(Move::U, (-y) as usize));
        Ok(LatticePath {
            moves,
            heights: heights.to_vec(),
        })
    }

    /// Builds a path from column levels `v_x = u_x + ℓ` (the number of up
    /// moves before the x-th right move). Caller guarantees validity.
    pub(crate) fn from_levels_unchecked(levels: &[u8]) -> Self {
        let ell = levels.len();
        let mut moves = Vec::with_capacity(2 * ell);
        let mut prev = 0u8;
        for &v in levels {
            moves.extend(std::iter::repeat_n(Move::U, (v - prev) as usize));
            moves.push(Move::R);
            prev = v;
        }
        moves.extend(std::iter::repeat_n(Move::U, ell - prev as usize));
        let heights = levels.iter().map(|&v| v as i32 - ell as i32).collect();
        LatticePath { moves, heights }
    }

    /// The path completed from its first `ℓ` moves by reflection.
    pub fn from_first_half(half: &[Move]) -> Result<Self> {
        let mut moves = half.to_vec();
        moves.extend(reflected(half));
        LatticePath::from_moves(moves)
    }

    /// The path completed from its last `ℓ` moves by reflection.
    pub fn from_second_half(half: &[Move]) -> Result<Self> {
        let mut moves = reflected(half);
        moves.extend_from_slice(half);
        LatticePath::from_moves(moves)
    }

    pub fn ell(&self) -> usize {
        self.heights.len()
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn heights(&self) -> &[i32] {
        &self.heights
    }

    /// Moves from `(0, −ℓ)` up to the `0`-diagonal.
    pub fn first_half(&self) -> &[Move] {
        &self.moves[..self.ell()]
    }

    pub fn second_half(&self) -> &[Move] {
        &self.moves[self.ell()..]
    }

    /// Whether the box with upper-left corner `(a, b)` lies below the path.
    pub fn is_below(&self, a: i32, b: i32) -> bool {
        self.heights[a as usize] >= b
    }

    /// Mirror image across the anti-diagonal `y = −x`: reverse the moves and
    /// swap `R ↔ U`.
    pub fn reflect(&self) -> LatticePath {
        LatticePath::from_moves(reflected(&self.moves)).expect("reflection preserves validity")
    }

    pub fn is_self_conjugate(&self) -> bool {
        let n = self.moves.len();
        (0..self.ell()).all(|i| self.moves[i] == self.moves[n - 1 - i].swapped())
    }
}

fn reflected(moves: &[Move]) -> Vec<Move> {
    moves.iter().rev().map(|m| m.swapped()).collect()
}

/// `p ≤ q` when every box above `q` is also above `p`, i.e. `p` lies weakly
/// below `q` in every column.
pub fn path_leq(p: &LatticePath, q: &LatticePath) -> Result<bool> {
    if p.ell() != q.ell() {
        return invalid(format!("paths on different squares: {} vs {}", p.ell(), q.ell()));
    }
    Ok(p.heights.iter().zip(&q.heights).all(|(a, b)| a <= b))
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.moves.iter().try_for_each(|m| write!(f, "{}", m.as_char()))
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let moves = s
            .chars()
            .map(|c| match c {
                'R' | 'r' => Ok(Move::R),
                'U' | 'u' => Ok(Move::U),
                other => invalid(format!("unexpected move {other:?} in path {s:?}")),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::from_moves(moves)
    }
}

impl Serialize for LatticePath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LatticePath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An ordered tuple `p₁ ≤ p₂ ≤ … ≤ p_{k−1}` of nested paths on one square.
///
/// Serialized as `{"ell": n, "k": n, "paths": ["RU…", …]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSequence", into = "RawSequence")]
pub struct PathSequence {
    paths: Vec<LatticePath>,
}

#[derive(Serialize, Deserialize)]
struct RawSequence {
    ell: usize,
    k: usize,
    paths: Vec<LatticePath>,
}

impl TryFrom<RawSequence> for PathSequence {
    type Error = Error;

    fn try_from(raw: RawSequence) -> Result<Self> {
        if raw.k < 2 || raw.paths.len() != raw.k - 1 {
            return invalid(format!(
                "k = {} requires exactly k-1 paths, got {}",
                raw.k,
                raw.paths.len()
            ));
        }
        let z = PathSequence::new(raw.paths)?;
        if z.ell() != raw.ell {
            return invalid(format!("paths have side {}, declared ell = {}", z.ell(), raw.ell));
        }
        Ok(z)
    }
}

impl From<PathSequence> for RawSequence {
    fn from(z: PathSequence) -> Self {
        RawSequence {
            ell: z.ell(),
            k: z.k(),
            paths: z.paths,
        }
    }
}

impl PathSequence {
    pub fn new(paths: Vec<LatticePath>) -> Result<Self> {
        let Some(first) = paths.first() else {
            return invalid("a path sequence needs at least one path (k >= 2)");
        };
        let ell = first.ell();
        for (i, pair) in paths.windows(2).enumerate() {
            if pair[1].ell() != ell {
                return invalid(format!("path {} has side {}, expected {ell}", i + 2, pair[1].ell()));
            }
            if !path_leq(&pair[0], &pair[1])? {
                return invalid(format!("paths {} and {} are not nested", i + 1, i + 2));
            }
        }
        Ok(PathSequence { paths })
    }

    /// Parses move strings, e.g. `["RURU", "RRUU"]`.
    pub fn parse<S: AsRef<str>>(paths: &[S]) -> Result<Self> {
        PathSequence::new(
            paths
                .iter()
                .map(|s| s.as_ref().parse())
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub(crate) fn new_unchecked(paths: Vec<LatticePath>) -> Self {
        PathSequence { paths }
    }

    pub fn ell(&self) -> usize {
        self.paths[0].ell()
    }

    /// Number of bands; the sequence holds `k − 1` paths.
    pub fn k(&self) -> usize {
        self.paths.len() + 1
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.paths.iter().all(LatticePath::is_self_conjugate)
    }

    /// The table `t_i^j` of `j`-colored boxes in each band.
    pub fn color_counts(&self) -> ColorCountTable {
        color_counts(self)
    }
}

impl fmt::Display for PathSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.paths.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// `t[i][j]`: band `1` is below `p₁`, band `i` (`2 ≤ i ≤ k−1`) is below `p_i`
/// and above `p_{i−1}`, band `0` is above `p_{k−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorCountTable {
    ell: usize,
    k: usize,
    /// `counts[i][j + ℓ − 1]`.
    counts: Vec<Vec<u32>>,
}

impl ColorCountTable {
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Colors present on the square, `−(ℓ−1)..=ℓ−1`.
    pub fn colors(&self) -> std::ops::RangeInclusive<i32> {
        let l = self.ell as i32;
        -(l - 1)..=(l - 1)
    }

    /// `t_i^j`; zero for colors outside the square.
    pub fn get(&self, band: usize, color: i32) -> u32 {
        let idx = color + self.ell as i32 - 1;
        if idx < 0 || idx as usize >= 2 * self.ell - 1 {
            return 0;
        }
        self.counts[band][idx as usize]
    }

    /// Row `i` of the table, indexed by `j + ℓ − 1`.
    pub fn band(&self, band: usize) -> &[u32] {
        &self.counts[band]
    }
}

pub fn color_counts(z: &PathSequence) -> ColorCountTable {
    let ell = z.ell();
    let mut counts = vec![vec![0u32; 2 * ell - 1]; z.k()];
    let square = ColoredSquare { ell };
    for (a, b) in square.boxes() {
        let band = z
            .paths
            .iter()
            .position(|p| p.is_below(a, b))
            .map_or(0, |i| i + 1);
        counts[band][(a + b + ell as i32 - 1) as usize] += 1;
    }
    ColorCountTable {
        ell,
        k: z.k(),
        counts,
    }
}
