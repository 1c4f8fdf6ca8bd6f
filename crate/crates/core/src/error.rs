use alloc::string::String;

/// Errors raised by the hyperautomata operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zip word is not legal: {0}")]
    IllegalZipWord(String),
    #[error("index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("invalid arity: {0}")]
    InvalidArity(String),
    #[error("letter is not in the automaton alphabet: {0}")]
    UnknownLetter(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("wrong fragment: {0}")]
    WrongFragment(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("invalid interleaving: {0}")]
    InvalidInterleaving(String),
    #[error("the regular language is empty")]
    EmptyRegularLanguage,
    #[error("hyperwords must be nonempty")]
    EmptyHyperword,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("observation table is not closed")]
    TableNotClosed,
    #[error("query budget exceeded: {0}")]
    QueryBudgetExceeded(String),
    #[error("learning budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("teacher answers are inconsistent: {0}")]
    TeacherInconsistent(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
