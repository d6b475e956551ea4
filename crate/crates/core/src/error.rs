use thiserror::Error;

/// Errors raised by the algorithmic core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing")]
    NotWeaklyDecreasing,
    #[error("partition has {length} parts, more than k = {k}")]
    LengthExceedsK { length: usize, k: usize },
    #[error("cell ({row}, {col}) lies outside the Young diagram")]
    CellOutsideDiagram { row: usize, col: usize },
    #[error("q-analog requires a positive argument")]
    NonPositiveArgument,
    #[error("division leaves a nonzero remainder or a non-integer coefficient")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("partition has {length} parts but the ambient dimension is d + 1 = {dim}")]
    LengthExceedsDimension { length: usize, dim: usize },
    #[error("delta = ({0}, {1}) is not a partition")]
    InvalidDelta(usize, usize),
    #[error("tableau enumeration exceeded the budget of {0} fillings")]
    EnumerationBudgetExceeded(u64),
    #[error("instance enumeration exceeded the cap of {0} instances")]
    BudgetExceeded(usize),
    #[error("instances are not SL(2)-isomorphic")]
    NotSLIsomorphic,
    #[error("equal P-polynomials but |lambda| d - |mu| e = {0} is odd")]
    ParityViolation(i128),
    #[error("partition weight must be positive")]
    ZeroWeight,
    #[error("sequence lengths do not match the staircase shape")]
    ShapeMismatch,
    #[error("staircase has no rows and no slack, so d = -1")]
    EmptyDiagram,
}

pub type Result<T> = core::result::Result<T, Error>;
