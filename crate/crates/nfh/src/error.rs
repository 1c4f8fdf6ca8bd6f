use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] nfh_core::Error),
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for input and usage problems, 3 for unsupported fragments, 4 when
    /// a resource or search budget runs out.
    pub fn exit_code(&self) -> i32 {
        use nfh_core::Error as E;
        match self {
            CliError::Core(E::Unsupported(_) | E::WrongFragment(_)) => 3,
            CliError::Core(E::ResourceLimit(_) | E::BudgetExceeded(_) | E::QueryBudgetExceeded(_)) => 4,
            _ => 2,
        }
    }
}
