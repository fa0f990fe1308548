use thiserror::Error;

#[derive(Debug, Error)]
pub enum BiotSavartError {
    #[error("vorticity field contains non-finite samples")]
    NonFinite,
    #[error("vorticity support touches the outermost grid ring; enlarge the box")]
    SupportTouchesBoundary,
    #[error(
        "split radius {radius} outside [{min}, {max}] \
         (2 x spacing up to the support-to-boundary margin)"
    )]
    BadSplitRadius { radius: f64, min: f64, max: f64 },
    #[error("near/far split radius {radius} must lie in [4 x spacing = {min}, 1]")]
    BadPvRadius { radius: f64, min: f64 },
    #[error("inner cutoff scale {h} unresolved; needs at least 2 x spacing = {min}")]
    UnresolvedCutoff { h: f64, min: f64 },
}
