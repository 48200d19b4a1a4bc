use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TangleError {
    #[error("slice {index}: position {pos} out of range for width {width}")]
    PositionOutOfRange { index: usize, pos: usize, width: usize },
    #[error("closed count {closed} exceeds width {width}")]
    TooManyClosed { closed: usize, width: usize },
    #[error("inadmissible closure: a closed component appears and no trace is available")]
    Inadmissible,
    #[error("component index {0} out of range")]
    NoSuchComponent(usize),
    #[error("not a knot: the diagram has {0} components")]
    NotAKnot(usize),
    #[error("move {name} does not match at slice {at}")]
    PatternMismatch { name: &'static str, at: usize },
    #[error("move {0} needs a pure braid word (no C or C- slices)")]
    NotABraid(&'static str),
    #[error("cannot destabilize: the stabilization pattern is absent")]
    NoStabilization,
    #[error("inconsistent crossing list: {0}")]
    Inconsistent(String),
    #[error("crossing list is not realizable by the layout: {0}")]
    Layout(String),
}
