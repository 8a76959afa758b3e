use thiserror::Error;

/// Errors raised by graph construction, parsing and the bounded searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("simple-cycle enumeration exceeded the cap of {cap} cycles")]
    CycleCapExceeded { cap: usize },

    #[error("iterated line graph L^{k} would have {order} vertices, above the cap of {cap}")]
    GrowthCapExceeded { k: usize, order: usize, cap: usize },

    #[error("iteration count {k} exceeds the cap of {cap}")]
    IterationCapExceeded { k: usize, cap: usize },
}

impl Error {
    /// True for errors caused by a configured resource limit rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::CycleCapExceeded { .. }
                | Error::GrowthCapExceeded { .. }
                | Error::IterationCapExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
