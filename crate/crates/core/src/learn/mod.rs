//! Active learning of alternation-free NFH in the style of L*.
//!
//! The learner keeps an [`ObservationTable`] over k-tuple letters, asks a
//! [`Teacher`] membership questions about the hyperwords `set(unzip(w))`,
//! and grows `k` whenever the teacher returns a counterexample with more
//! than `k` words.

use alloc::string::String;

mod learner;
mod table;
mod teacher;

pub use learner::{learn, learn_traced};
pub use table::ObservationTable;
pub use teacher::{automated_teacher, AutomatedTeacher};

use crate::{Error, Hyperword, Limits, Nfh, Result, Sigma};

/// Which side of the comparison a counterexample belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Polarity {
    /// In the target hyperlanguage but rejected by the candidate.
    InTarget,
    /// Accepted by the candidate but outside the target.
    InCandidate,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    pub hyperword: Hyperword,
    pub polarity: Polarity,
}

/// The oracle the learner queries.
pub trait Teacher {
    fn sigma(&self) -> &Sigma;

    fn member(&mut self, s: &Hyperword) -> Result<bool>;

    /// `None` when the candidate recognizes the target hyperlanguage;
    /// otherwise a counterexample with as few words as possible.
    fn equivalent(&mut self, candidate: &Nfh) -> Result<Option<Counterexample>>;
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LearnerConfig {
    /// Largest variable count the learner may reach.
    pub max_k: usize,
    pub max_iterations: usize,
    /// Longest word a counterexample may contain.
    pub max_word_length: usize,
    /// Distinct membership queries the table may issue.
    pub max_queries: usize,
    pub limits: Limits,
}

impl Default for LearnerConfig {
    fn default() -> Self {
        LearnerConfig {
            max_k: 4,
            max_iterations: 500,
            max_word_length: 64,
            max_queries: 1 << 20,
            limits: Limits::default(),
        }
    }
}

impl LearnerConfig {
    pub(crate) fn validate(&self) -> Result<()> {
        if self.max_k == 0 || self.max_iterations == 0 || self.max_word_length == 0 || self.max_queries == 0 {
            return Err(Error::PreconditionViolated(String::from(
                "learner bounds must be positive",
            )));
        }
        Ok(())
    }
}

/// One line of the learner trace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceEvent {
    /// One of `query`, `candidate`, `incomplete`, `counterexample`, `lift`,
    /// `done`.
    pub event: &'static str,
    pub iteration: usize,
    pub k: usize,
    pub detail: String,
}
