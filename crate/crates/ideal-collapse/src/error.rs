use thiserror::Error;

/// Everything that can go wrong across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    CompositeCharacteristic(u64),
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u64 },
    #[error("internal error: no irreducible polynomial of degree {degree} over F_{p}")]
    NoModulusFound { p: u64, degree: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("operands have different variable counts")]
    ArityMismatch,
    #[error("field is infinite; exhaustive enumeration is impossible")]
    InfiniteField,
    #[error("total degree {0} exceeds the 2^20 cap")]
    DegreeOverflow(u64),
    #[error("field size {size} exceeds the desk-scale cap of {cap}")]
    FieldTooLarge { size: u64, cap: u64 },
    #[error("linear change of variables is singular")]
    SingularTransform,
    #[error("no root-free witness of degree <= {max_degree} found")]
    NoWitnessFound { max_degree: usize },
    #[error("witness degree bound must be at least 2, got {0}")]
    InvalidDegreeBound(usize),
    #[error("search space of {size} points exceeds the cap of {cap}")]
    SearchSpaceTooLarge { size: u64, cap: u64 },
    #[error("cannot monicize a constant polynomial")]
    ConstantInput,
    #[error("no shear makes the polynomial monic in the last variable")]
    NoMonicizerFound,
    #[error("{line}:{col}: syntax error: expected {expected}")]
    Syntax {
        line: usize,
        col: usize,
        expected: String,
    },
    #[error("{line}:{col}: unknown variable `{name}`")]
    UnknownVariable {
        name: String,
        line: usize,
        col: usize,
    },
    #[error("{line}:{col}: {message}")]
    FieldLiteral {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("duplicate generator name `{0}`")]
    DuplicateGeneratorName(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariableName(String),
    #[error("no generator named `{0}` in this system")]
    UnknownGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
