//! Standard Young tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Limits, Result};
use crate::partition::Partition;

/// A standard filling of a Young diagram with `1..=ℓ`.
///
/// Serialized as a JSON array of rows, e.g. `[[1,3],[2]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidArgument(format!("tableau shape: {e}")))?;
        let size = shape.size();
        let mut seen = vec![false; size + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > size || seen[v] {
                return invalid(format!("tableau entries must be exactly 1..={size}"));
            }
            seen[v] = true;
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return invalid(format!("row {} is not strictly increasing", i + 1));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(below, above)| below <= above) {
                return invalid(format!("column entries fail to increase into row {}", i + 1));
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn height(&self) -> usize {
        self.shape.height()
    }

    /// 1-based row containing `value`, if present.
    pub fn row_of(&self, value: usize) -> Option<usize> {
        self.rows
            .iter()
            .position(|row| row.contains(&value))
            .map(|i| i + 1)
    }

    /// For each value `1..=ℓ`, its 1-based row.
    pub fn row_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.size() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                idx[v] = i + 1;
            }
        }
        idx
    }

    fn reading_word(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }
}

impl TryFrom<Vec<Vec<usize>>> for StandardTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<usize>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.size().to_string().len();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v:>width$}")?;
            }
        }
        Ok(())
    }
}

/// Every standard tableau of shape `shape`, ordered lexicographically by the
/// row-major reading of entries.
///
/// Values are placed one at a time into any cell that keeps the partial
/// filling a Young diagram, so the number of leaves equals `f^λ`.
pub fn enumerate_syt(shape: &Partition, limits: &Limits) -> Result<Vec<StandardTableau>> {
    Limits::check("tableau size", shape.size(), limits.max_syt_size)?;
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&n| Vec::with_capacity(n)).collect();
    let mut out = Vec::new();
    place(1, shape, &mut rows, &mut out);
    out.sort_by(|a, b| a.reading_word().cmp(b.reading_word()));
    Ok(out)
}

fn place(
    value: usize,
    shape: &Partition,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<StandardTableau>,
) {
    if value > shape.size() {
        out.push(StandardTableau {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    for i in 0..rows.len() {
        let len = rows[i].len();
        let fits = len < shape.parts()[i] && (i == 0 || rows[i - 1].len() > len);
        if fits {
            rows[i].push(value);
            place(value + 1, shape, rows, out);
            rows[i].pop();
        }
    }
}
