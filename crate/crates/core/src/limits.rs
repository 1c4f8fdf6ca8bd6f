use alloc::format;

use crate::{Error, Result};

/// Size caps for the constructions whose cost is exponential in the number
/// of word variables.
///
/// The underlying alphabet of an NFH with k variables over Σ has
/// `(|Σ|+1)^k` letters, so everything that enumerates it is bounded by `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest variable count accepted by complement, union, intersection
    /// and the decision procedures.
    pub max_k: usize,
    /// Largest variable count for the k^k / k! closures.
    pub max_closure_k: usize,
    /// Largest underlying alphabet that is ever materialized.
    pub max_alphabet: usize,
    /// Largest number of states any single construction may produce.
    pub max_states: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_k: 4,
            max_closure_k: 3,
            max_alphabet: 1 << 14,
            max_states: 1 << 18,
        }
    }
}

impl Limits {
    pub(crate) fn check_k(&self, k: usize, what: &str) -> Result<()> {
        if k > self.max_k {
            return Err(Error::ResourceLimit(format!(
                "{what} needs {k} variables, cap is {}",
                self.max_k
            )));
        }
        Ok(())
    }

    pub(crate) fn check_closure_k(&self, k: usize) -> Result<()> {
        if k > self.max_closure_k {
            return Err(Error::ResourceLimit(format!(
                "closure over {k} variables, cap is {}",
                self.max_closure_k
            )));
        }
        Ok(())
    }

    pub(crate) fn check_states(&self, n: usize) -> Result<()> {
        if n > self.max_states {
            return Err(Error::ResourceLimit(format!(
                "construction reached {n} states, cap is {}",
                self.max_states
            )));
        }
        Ok(())
    }
}
