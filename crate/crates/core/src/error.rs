use alloc::string::String;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a host on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("triple [{}, {}, {}] repeats a vertex", .0[0], .0[1], .0[2])]
    DegenerateTriple([usize; 3]),
    #[error("{name} = {value} is out of range ({expected})")]
    ParameterOutOfRange {
        name: &'static str,
        value: usize,
        expected: &'static str,
    },
    #[error("forbidden structure {spec} cannot be checked on a {host} host")]
    HostMismatch { spec: String, host: &'static str },
    #[error("witness rejected: {0}")]
    InvalidWitness(&'static str),
    #[error("graph is not C{0}-free")]
    NotCycleFree(usize),
    #[error("edge {edge} violates the greedy-linear precondition: {reason}")]
    Precondition { edge: usize, reason: &'static str },
    #[error("derandomized guarantee violated: {0}")]
    GuaranteeViolated(String),
    #[error("formula {0} needs an inner estimate that was not supplied")]
    MissingBase(&'static str),
    #[error("inner estimate does not match: {0}")]
    BaseMismatch(String),
    #[error("invalid search problem: {0}")]
    InvalidProblem(String),
    #[error("universe too large: {0}")]
    UniverseTooLarge(String),
}

pub type Result<T> = core::result::Result<T, Error>;
