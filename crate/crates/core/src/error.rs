use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("quiver has an oriented cycle through vertex {0}")]
    Cycle(i64),
    #[error("duplicate vertex label {0}")]
    DuplicateVertex(i64),
    #[error("duplicate arrow id {0:?}")]
    DuplicateArrow(String),
    #[error("arrow {arrow:?} uses unknown vertex {vertex}")]
    UnknownVertex { arrow: String, vertex: i64 },
    #[error("quiver is not of Dynkin type: {0}")]
    NotDynkin(String),
    #[error("dimension vector {0} is not a positive root")]
    NotARoot(String),
    #[error("summand set is not a basic 2-term silting complex: {0}")]
    NotSilting(String),
    #[error("Hom into a shift by {0} is not supported")]
    UnsupportedShift(i32),
    #[error("cannot compose classes of shift {0} and {1}")]
    ShiftMismatch(i32, i32),
    #[error("projective resolution of simple {vertex} exceeds length {cap}")]
    ResolutionTooLong { vertex: usize, cap: usize },
    #[error("Cartan matrix is not invertible")]
    SingularCartan,
    #[error("global dimension {0} lies outside 0..=3")]
    GlobalDimensionOutOfRange(usize),
    #[error("no Dynkin type has Coxeter polynomial {0:?}")]
    NoTiltedType(Vec<i64>),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
