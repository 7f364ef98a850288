//! Exact enumeration and counting of admissible sequences of lattice paths on
//! a colored square, their bijections with standard Young tableaux, and the
//! affine `sl(n)` weight multiplicities they compute.
//!
//! All counts are arbitrary-precision integers. The modules mirror the layers
//! of the theory:
//!
//! * [`partition`] and [`tableau`]: partitions, hook lengths, `f^λ`, and a
//!   backtracking enumerator of standard tableaux.
//! * [`lattice`]: the colored square, monotone paths, nesting, reflection and
//!   the color-count table.
//! * [`admissible`]: the admissibility predicate and the type of a sequence.
//! * [`enumerate`]: exhaustive enumerators for admissible and self-conjugate
//!   sequences, with per-type tallies.
//! * [`bijection`]: `tau`, `sigma`, and the split/join pairing.
//! * [`permutation`]: longest decreasing subsequences, RSK, avoider counts.
//! * [`weights`]: affine Cartan matrix, `γ_ℓ`, `μ_ℓ = kΛ₀ − γ_ℓ`, multiplicity.
//! * [`verify`]: the cross-check suite behind `latmult verify`.

pub mod admissible;
pub mod bijection;
pub mod enumerate;
mod error;
pub mod lattice;
pub mod partition;
pub mod permutation;
pub mod tableau;
pub mod verify;
pub mod weights;

pub use error::{Error, Limits, Result};
pub use lattice::{ColorCountTable, LatticePath, Move, PathSequence};
pub use partition::Partition;
pub use permutation::Permutation;
pub use tableau::StandardTableau;
