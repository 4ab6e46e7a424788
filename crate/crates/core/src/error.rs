use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element identifier `{0}`")]
    DuplicateElement(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("cover relation contains a cycle: {}", .0.join(" < "))]
    Cycle(Vec<String>),

    #[error("element `{0}` is not minimal")]
    NotMinimal(String),

    #[error("poset has {elements} elements, oracle bound is {bound}")]
    TooManyElements { elements: usize, bound: usize },

    #[error("poset has more than {bound} order ideals (oracle bound)")]
    TooManyIdeals { bound: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
