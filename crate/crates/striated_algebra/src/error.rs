use thiserror::Error;

/// Errors reported by direction-family and correction-matrix routines.
#[derive(Debug, Error)]
pub enum StriatedError {
    #[error("wedge takes d-1 vectors in R^d with d in {{2, 3}}; got {count} vectors of lengths {lens:?}")]
    WedgeShape { count: usize, lens: Vec<usize> },

    #[error("direction family is empty")]
    EmptyFamily,

    #[error("no sample points supplied")]
    NoSamples,

    #[error("matrix argument is not symmetric (asymmetry {defect:.3e})")]
    NotSymmetric { defect: f64 },

    #[error("matrix argument is not antisymmetric (defect {defect:.3e})")]
    NotAntisymmetric { defect: f64 },

    #[error("matrix is singular (det = {det:.3e})")]
    SingularMatrix { det: f64 },

    #[error("last column must equal the cross product of the first two (defect {defect:.3e})")]
    LastColumnNotWedge { defect: f64 },

    #[error("direction magnitude {norm:.3e} falls below the family infimum {threshold:.3e}")]
    WeakDirection { norm: f64, threshold: f64 },

    #[error("family infimum must be positive and finite, got {0:.3e}")]
    BadInfimum(f64),

    #[error("partition scale {scale:.3e} is unresolved: need at least 4 x grid spacing = {min:.3e}")]
    UnresolvedScale { scale: f64, min: f64 },

    #[error("no family member stays above I/2 = {threshold:.3e} on bump {label} (best minimum {best:.3e})")]
    MemberMagnitude {
        label: usize,
        best: f64,
        threshold: f64,
    },

    #[error("partition bumps sum to {sum:.6} instead of 1 at pulled-back point ({x:.4}, {y:.4})")]
    PartitionCoverage { x: f64, y: f64, sum: f64 },

    #[error("frame member |Y{index}| = {norm:.3e} is at or below I/2 = {threshold:.3e}")]
    WeakFrameMember {
        index: usize,
        norm: f64,
        threshold: f64,
    },

    #[error("near-parallel frame: |Y1 x Y2| = {norm:.3e} is below I/4 = {threshold:.3e}")]
    NearParallelFrame { norm: f64, threshold: f64 },

    #[error("velocity is not divergence-free at ({x:.4}, {y:.4}, {z:.4}): div u = {div:.3e}")]
    NotSolenoidal { x: f64, y: f64, z: f64, div: f64 },

    #[error("fields live on different grids")]
    GridMismatch,

    #[error("input contains non-finite values")]
    NonFinite,

    #[error("snapshot i/o failed: {0}")]
    Field(#[from] fields::FieldError),
}
