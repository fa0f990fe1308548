use thiserror::Error;

/// Errors raised by grid, field, and snapshot operations.
#[derive(Debug, Error)]
pub enum FieldError {
    #[error("grid dimensions must be at least 4x4, got {nx}x{ny}")]
    GridTooSmall { nx: usize, ny: usize },
    #[error("grid spacing must be positive and finite, got {0}")]
    BadSpacing(f64),
    #[error("field data length {len} does not match grid {nx}x{ny}")]
    DataLengthMismatch { len: usize, nx: usize, ny: usize },
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("snapshot io: {0}")]
    Io(#[from] std::io::Error),
    #[error("snapshot header corrupt: {0}")]
    BadSnapshot(String),
}
