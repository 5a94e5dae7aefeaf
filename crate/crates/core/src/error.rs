use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error(
        "invalid symbol {0:?}: symbols are single printable characters other than _ # ( ) , |"
    )]
    InvalidSymbol(char),
    #[error("invalid identifier `{0}`")]
    InvalidIdentifier(String),
    #[error("undeclared symbol `{0}`")]
    UndeclaredSymbol(char),
    #[error("undeclared state `{0}`")]
    UndeclaredState(String),
    #[error("duplicate initial declaration")]
    DuplicateInitial,
    #[error("missing `{0}` declaration")]
    Missing(&'static str),
    #[error("duplicate declaration of `{0}`")]
    Duplicate(String),
    #[error("undeclared nonterminal `{0}`")]
    UndeclaredNonterminal(String),
    #[error("production is not linear: more than one nonterminal on the right side")]
    NotLinear,
    #[error("nonterminal `{0}` is indistinguishable from a run of terminals")]
    AmbiguousNonterminal(String),
    #[error("unknown oracle `{0}`")]
    UnknownOracle(String),
    #[error("symbol `{symbol}` is outside the alphabet of oracle {oracle}")]
    OracleAlphabet { oracle: String, symbol: char },
}

impl Error {
    pub(crate) fn at(self, line: usize) -> Self {
        match self {
            e @ Error::AtLine { .. } => e,
            e => Error::AtLine {
                line,
                source: Box::new(e),
            },
        }
    }

    /// The innermost error, without line information.
    pub fn kind(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.kind(),
            e => e,
        }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            Error::AtLine { line, .. } => Some(*line),
            _ => None,
        }
    }
}
