use std::fmt;

use thiserror::Error;

/// Position-tagged failure from the presentation parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownGenerator(String),
    DuplicateGenerator(String),
    NegativeCoefficient,
    MissingGenerators,
    UnknownClass(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::UnknownGenerator(name) => write!(f, "unknown generator `{name}`"),
            ParseErrorKind::DuplicateGenerator(name) => {
                write!(f, "generator `{name}` declared twice")
            }
            ParseErrorKind::NegativeCoefficient => write!(f, "negative coefficient"),
            ParseErrorKind::MissingGenerators => write!(f, "no `generators:` declaration"),
            ParseErrorKind::UnknownClass(c) => write!(f, "unknown class `{c}`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("distribution is not precentral: {0}")]
    NotPrecentral(String),

    #[error("generator sets differ: {0}")]
    MismatchedGenerators(String),

    #[error("prefix has zero probability")]
    ZeroProbabilityPrefix,

    #[error("declared class `{declared}` contradicted: {detail}")]
    ClassMismatch { declared: String, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
