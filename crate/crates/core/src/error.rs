use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {0:?} occurs more than once in the alphabet")]
    DuplicateLetter(char),

    #[error("letter {letter:?} at position {position} is not in the alphabet")]
    NotInAlphabet { letter: char, position: usize },

    #[error("input contains a character that is not a single byte: {0:?}")]
    MultiByteLetter(char),

    #[error("an alphabet holds at most 256 letters")]
    AlphabetTooLarge,

    #[error("words are over different alphabets")]
    AlphabetMismatch,

    #[error("lexicographic comparison needs equal lengths, got {left} and {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("position {position} is outside 1..={len}")]
    InvalidPosition { position: usize, len: usize },

    #[error("operation needs a nonempty word")]
    EmptyWord,

    #[error("more than {cap} rankers would be produced")]
    TooManyRankers { cap: usize },

    #[error("invalid ranker {0:?}: expected X:<letters> or Y:<letters>")]
    RankerSyntax(String),

    #[error("oracle guard exceeded: estimated {estimate} items, guard is {guard}")]
    GuardExceeded { estimate: u128, guard: u128 },

    #[error("oracle refuses words longer than {bound} (got {len})")]
    OracleBound { len: usize, bound: usize },

    #[error("oracle refuses alphabets larger than {bound} (got {size})")]
    OracleAlphabet { size: usize, bound: usize },

    #[error("product automaton budget exceeded: {needed} states, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("coordinate type cannot hold the saturation bound {bound}")]
    CoordinateOverflow { bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
