use thiserror::Error;

use crate::shape::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("shape is empty")]
    EmptyShape,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("removing mu empties row {row}")]
    EmptyRow { row: i64 },
    #[error("shape does not contain the cell (1,1)")]
    MissingOrigin,
    #[error("shape is not connected")]
    Disconnected,
    #[error("row {row} is not a contiguous run of cells")]
    RowNotContiguous { row: i64 },
    #[error("rows {row} and {next} do not step down and to the right like a skew shape")]
    NotSkew { row: i64, next: i64 },
    #[error("interior column {col} has no cell with horizontal neighbours on both sides")]
    InteriorColumnViolation { col: i64 },
    #[error("at least one copy is required")]
    NoCopies,
    #[error("translated copies {first} and {second} overlap")]
    OverlappingCopies { first: usize, second: usize },
    #[error("period and shift are not compatible: {0}")]
    NotCompatible(Incompatibility),
    #[error("index/coefficient shapes did not stabilise by {copies} copies")]
    UnstableShape { copies: usize },
}

/// Why a period and shift number fail to form a compatible pair.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Incompatibility {
    #[error("unbounded columns (horizontal step {step} < 1)")]
    UnboundedColumns { step: i64 },
    #[error("translated copies overlap")]
    OverlappingCopies,
    #[error("{copies}-copy union is not periodic: {reason}")]
    NotPeriodic { copies: usize, reason: Box<ShapeError> },
    #[error("bottom row of the period has no cell at offset w")]
    IndexCellMissing,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("entries are not injective (value {0} repeated)")]
    RepeatedEntry(u32),
    #[error("entries decrease between adjacent cells {0} and {1}")]
    NotIncreasing(Cell, Cell),
    #[error("entries are not exactly 1..={0}")]
    NotStandard(usize),
    #[error("shape has {cells} cells, over the enumeration limit of {limit}")]
    ShapeTooLarge { cells: usize, limit: usize },
    #[error("shape has {count} standard tableaux, over the limit of {limit}")]
    TooManyTableaux { count: String, limit: usize },
    #[error("no standard tableau of this shape has the {0} property")]
    ConstructionFailed(&'static str),
    #[error("index {index} is outside 1..{max}")]
    IndexOutOfRange { index: u32, max: usize },
    #[error("shape is empty")]
    EmptyShape,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransferError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("transfer dimension {dim} exceeds the limit of {limit}")]
    EnumerationLimitExceeded { dim: usize, limit: usize },
    #[error("n = {n} is below the transfer range (n0 = {n0}); count directly instead")]
    BelowRange { n: usize, n0: usize },
    #[error("tableau is not on the coefficient shape")]
    NotOnCoefficientShape,
    #[error("shape with {copies} copies is too small for the index shape (n0 = {n0})")]
    ShapeTooSmall { copies: usize, n0: usize },
    #[error("restricted tableau is not a basis tableau")]
    NotInBasis,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is empty")]
    EmptyMatrix,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("at least {needed} terms are required, got {got}")]
    TooFewTerms { needed: usize, got: usize },
    #[error("the shortest recurrence has non-integral coefficients")]
    NonIntegral,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("subset is not contained in the index shape")]
    NotASubset,
    #[error("subset is not redundant: {0}")]
    NotRedundant(String),
    #[error("partition covers {got} basis elements, system has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("rows within an equivalence class differ")]
    RowsNotIdentical,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("cannot parse spec: {0}")]
    Parse(String),
    #[error("spec must give either \"cells\" or \"lambda\" (with optional \"mu\"), not both")]
    AmbiguousShape,
    #[error("spec gives no shape")]
    MissingShape,
    #[error(transparent)]
    Shape(#[from] ShapeError),
}
