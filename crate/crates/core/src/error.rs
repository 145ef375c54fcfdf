use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid game: n={n}, m={m} (both counts must be at least 1)")]
    InvalidSpec { n: usize, m: usize },

    /// The constructive algorithms assume at least as many black as white checkers.
    #[error("game ({n}, {m}) must be mirrored first: algorithm requires n >= m")]
    NotCanonical { n: usize, m: usize },

    #[error("illegal move from position {pos} (vacant at {vacant})")]
    IllegalMove { pos: usize, vacant: usize },

    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: u64 },

    #[error("state graph exceeds the vertex cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("cannot parse board: {0}")]
    ParseBoard(String),

    #[error("cannot parse direction {0:?}")]
    ParseDirection(String),
}
