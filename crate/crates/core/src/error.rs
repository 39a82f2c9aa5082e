use thiserror::Error;

/// Errors raised by the workbench. Every fallible operation returns one of
/// these instead of panicking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The relation handed to a poset constructor is not a partial order.
    #[error("not a partial order: {0}")]
    NotAnOrder(String),

    /// The cover relation contains a cycle.
    #[error("cycle in order relation through element {0}")]
    Cycle(usize),

    /// An element index is outside the carrier.
    #[error("index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    /// The carrier is larger than the bitset representation allows.
    #[error("carrier of size {0} exceeds the hard limit of 128 points")]
    CarrierTooLarge(usize),

    /// An enumeration would exceed a configured cap.
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    /// The operation is not available for this kind of space.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A precondition on the arguments failed.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A space file could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
