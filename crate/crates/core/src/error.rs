use thiserror::Error;

/// Errors produced by the combinatorics engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "resource limit: {what} = {value} exceeds the guard of {limit}; \
         pass --allow-large (or set LATMULT_GUARD_OVERRIDE=1) to lift it"
    )]
    ResourceLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    /// An identity that the construction guarantees did not hold. This always
    /// indicates a bug in this crate.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

/// Size guards for the exhaustive routines.
///
/// The defaults keep every brute-force path small enough to finish in well
/// under a minute. [`Limits::unbounded`] removes them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest tableau size accepted by [`crate::tableau::enumerate_syt`].
    pub max_syt_size: usize,
    /// Largest square side accepted by the path enumerators.
    pub max_enum_ell: usize,
    /// Largest `k` accepted by the path enumerators.
    pub max_enum_k: usize,
    /// Largest permutation length for the brute-force avoider counts.
    pub max_perm_ell: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_syt_size: 12,
            max_enum_ell: 6,
            max_enum_k: 5,
            max_perm_ell: 10,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Limits {
            max_syt_size: usize::MAX,
            max_enum_ell: usize::MAX,
            max_enum_k: usize::MAX,
            max_perm_ell: usize::MAX,
        }
    }

    pub(crate) fn check(what: &'static str, value: usize, limit: usize) -> Result<()> {
        if value > limit {
            Err(Error::ResourceLimit { what, value, limit })
        } else {
            Ok(())
        }
    }
}
