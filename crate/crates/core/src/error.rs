use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,
    #[error("invalid character {0:?} at position {1}")]
    InvalidCharacter(char, usize),
    #[error("malformed word {0:?}: {1}")]
    Malformed(String, &'static str),
    #[error("shift by {shift} exceeds word length {len}")]
    ShiftTooLarge { shift: usize, len: usize },
    #[error("word {0} contains no {1}")]
    MissingLetter(String, char),
    #[error("word {0} is neither L-maximal nor R-minimal")]
    NotCanonical(String),
    #[error("word {0} is not L-maximal")]
    NotLMaximal(String),
    #[error("word {0} must contain both letters")]
    SingleLetter(String),
    #[error("p={p}, q={q}: {reason}")]
    InvalidTorusParameters {
        p: u64,
        q: u64,
        reason: &'static str,
    },
    #[error("tree depth {depth} exceeds the bound {bound}")]
    DepthTooLarge { depth: usize, bound: usize },
    #[error("{0} and {1} are not Farey neighbours")]
    NotNeighbors(String, String),
    #[error("expected {0} < {1}")]
    WrongOrder(String, String),
    #[error("pair ({0}, {1}) is not admissible")]
    NotAdmissible(String, String),
    #[error("duplicate cyclic class {0}")]
    DuplicateClass(String),
    #[error("genus requires a knot, braid has {0} components")]
    NotAKnot(usize),
    #[error("family {family}: {clause}")]
    FamilyConstraint { family: u8, clause: String },
}
