//! Negative-exponent estimate through the Newtonian potential.
//!
//! A divergence lies one derivative below the Holder scale; its potential
//! gradient `v = grad F_2 * (div Z)` lies back on it, and the report norm of
//! `v` is the working surrogate for the negative norm.  The kernel is
//! locally integrable, so plain midpoint quadrature (singular cell skipped)
//! suffices.

use crate::estimators::holder_report_vec;
use crate::report::{HolderError, NegHolderReport, PairMode, Shell};
use fields::{divergence, Grid2, ScalarField2, Vec2, VectorField2};
use kernels::quadrature::{convolve_vec, source_cells};
use kernels::grad_f2;

/// `grad F_2 * g` evaluated on every `stride`-th grid point of `g`'s grid.
///
/// Returns the field on the strided subgrid.  `stride = 1` keeps the full
/// resolution; larger strides cut the target count for all-pairs budgets.
pub fn potential_gradient(g: &ScalarField2, stride: usize) -> Result<VectorField2, HolderError> {
    let stride = stride.max(1);
    let grid = &g.grid;
    let start = stride / 2;
    let nx = (grid.nx - start + stride - 1) / stride;
    let ny = (grid.ny - start + stride - 1) / stride;
    if nx < 4 || ny < 4 {
        return Err(HolderError::TooFewSamples { need: 16, got: nx * ny });
    }
    let sub = Grid2::new(nx, ny, grid.point(start, start), grid.spacing * stride as f64)
        .map_err(|_| HolderError::TooFewSamples { need: 16, got: nx * ny })?;

    let mut targets = Vec::with_capacity(sub.len());
    for j in 0..ny {
        for i in 0..nx {
            targets.push(sub.point(i, j));
        }
    }
    let sources = source_cells(g);
    let skip = 0.5 * grid.spacing;
    let vals = convolve_vec(|d| grad_f2(d).unwrap_or(Vec2::ZERO), &sources, &targets, skip);

    let mut out = VectorField2::zeros(sub);
    for (k, v) in vals.iter().enumerate() {
        out.x[k] = v.x;
        out.y[k] = v.y;
    }
    Ok(out)
}

/// Negative-exponent estimate from divergence samples.
pub fn neg_holder_estimate(
    div_z: &ScalarField2,
    alpha: f64,
    shell: Shell,
    mode: PairMode,
    stride: usize,
) -> Result<NegHolderReport, HolderError> {
    let v = potential_gradient(div_z, stride)?;
    let report = holder_report_vec(&v, alpha, shell, mode)?;
    Ok(NegHolderReport { alpha, value: report.norm(), method: "potential_estimate" })
}

/// Same estimate with the divergence taken from the field by fourth-order
/// centered differences; use only on resolved data.
pub fn neg_holder_from_field(
    z: &VectorField2,
    alpha: f64,
    shell: Shell,
    mode: PairMode,
    stride: usize,
) -> Result<NegHolderReport, HolderError> {
    let div = divergence(z);
    neg_holder_estimate(&div, alpha, shell, mode, stride)
}
