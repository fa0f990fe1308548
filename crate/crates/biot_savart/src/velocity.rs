//! Velocity recovery `u = K * omega` by direct midpoint summation.
//!
//! The kernel is odd, so over the cell containing the target the leading
//! contribution cancels; the excluded cell (anything within half a spacing
//! of the target) costs only the local Taylor remainder.  Sums run in grid
//! order per target and in parallel over targets, so results are
//! deterministic for a fixed grid.

use crate::vorticity::VorticityField;
use fields::{Grid2, Vec2, VectorField2};
use kernels::k2_raw;
use kernels::quadrature::convolve_vec;

/// Velocity at each target point.
pub fn velocity(vf: &VorticityField, targets: &[Vec2]) -> Vec<Vec2> {
    convolve_vec(k2_raw, vf.sources(), targets, 0.5 * vf.spacing())
}

/// Velocity sampled on an arbitrary evaluation grid.
pub fn velocity_on_grid(vf: &VorticityField, eval: &Grid2) -> VectorField2 {
    let targets: Vec<Vec2> = (0..eval.len())
        .map(|k| eval.point(k % eval.nx, k / eval.nx))
        .collect();
    let values = velocity(vf, &targets);
    let mut out = VectorField2::zeros(*eval);
    for (k, v) in values.into_iter().enumerate() {
        out.set(k % eval.nx, k / eval.nx, v);
    }
    out
}

/// Velocity on the vorticity's own grid.
pub fn velocity_grid(vf: &VorticityField) -> VectorField2 {
    velocity_on_grid(vf, vf.grid())
}
