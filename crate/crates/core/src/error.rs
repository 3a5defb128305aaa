use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An index past the end of a finite range.
    #[error("index {index} out of range (valid: {valid})")]
    Range { index: usize, valid: String },

    /// Brute-force enumeration asked for more than the configured budget.
    #[error(
        "n = {n} exceeds the brute-force budget (max n = {max}) for {semantics}; \
         use the per-tree or recurrence path instead"
    )]
    Budget {
        n: usize,
        max: usize,
        semantics: &'static str,
    },

    #[error("operation unsupported: {0}")]
    Unsupported(String),

    /// A closed form produced something that cannot be a count. This points
    /// at a transcription bug in the formula, not at the caller.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}
