use crate::error::{Error, Result};

/// Size guards applied before any enumeration, matrix construction or solve.
///
/// The defaults keep every computation at desk scale; [`Limits::unbounded`]
/// switches every guard off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_is_n: usize,
    pub max_istar_k: usize,
    pub max_pistar_k: usize,
    /// Largest tensor-space dimension for which an action matrix is built.
    pub max_dimension: usize,
    /// Largest number of unknowns (`d * d`) in a commutant solve.
    pub max_unknowns: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_is_n: 6,
            max_istar_k: 5,
            max_pistar_k: 4,
            max_dimension: 4096,
            max_unknowns: 70_000,
        }
    }
}

impl Limits {
    pub fn unbounded() -> Self {
        Self {
            max_is_n: usize::MAX,
            max_istar_k: usize::MAX,
            max_pistar_k: usize::MAX,
            max_dimension: usize::MAX,
            max_unknowns: usize::MAX,
        }
    }

    pub(crate) fn check(what: &'static str, size: usize, limit: usize) -> Result<()> {
        if size > limit {
            Err(Error::Guard { what, size, limit })
        } else {
            Ok(())
        }
    }
}
