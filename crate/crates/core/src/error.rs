use thiserror::Error;

use crate::presentation::SpecError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("exponent overflow on generator `{0}`")]
    Overflow(String),
    #[error("malformed word: {0}")]
    WordSyntax(String),
    #[error("chambers {0} and {1} are not adjacent")]
    NotAdjacent(String, String),
    #[error("gallery is not minimal")]
    NotMinimal,
    #[error("element or subset does not belong to this presentation")]
    SpecMismatch,
    #[error("ball exceeds the cap of {0} elements")]
    BallCap(usize),
    #[error("word longer than the search bound {0}")]
    SearchBound(usize),
    #[error("the Coxeter matrix is not right-angled")]
    NotRightAngled,
    #[error("{0} entries in the Coxeter matrix are not integral in the geometric representation")]
    NotIntegral(String),
    #[error("matrix entry overflow")]
    MatrixOverflow,
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Stable short code, printed by the command line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Spec(SpecError::Syntax { .. }) => "SPEC_SYNTAX",
            Error::Spec(SpecError::UnknownName(_) | SpecError::BadSet(_)) => "BAD_SET",
            Error::Spec(_) => "SPEC_INVALID",
            Error::Overflow(_) => "OVERFLOW",
            Error::WordSyntax(_) => "WORD_SYNTAX",
            Error::NotAdjacent(..) => "NOT_ADJACENT",
            Error::NotMinimal => "NOT_MINIMAL",
            Error::SpecMismatch => "SPEC_MISMATCH",
            Error::BallCap(_) => "BALL_CAP",
            Error::SearchBound(_) => "SEARCH_BOUND",
            Error::NotRightAngled => "NOT_RIGHT_ANGLED",
            Error::NotIntegral(_) => "NOT_INTEGRAL",
            Error::MatrixOverflow => "MATRIX_OVERFLOW",
            Error::Io(_) => "IO",
        }
    }
}
