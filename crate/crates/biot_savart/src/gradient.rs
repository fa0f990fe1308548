//! Velocity-gradient recovery from vorticity.
//!
//! The gradient of the reconstructed velocity splits into a local rotation
//! and a principal-value integral:
//!
//!   grad u (x) = (omega(x) / 2) J + PV int grad K(x - y) omega(y) dy,
//!
//! with `J` the quarter-turn matrix.  The PV term is symmetric and
//! trace-free (so the assembled gradient is automatically divergence-free),
//! and the local rotation carries the whole antisymmetric part.
//!
//! Inside a disc of the chosen split radius around the target the kernel's
//! zero mean on circles lets us subtract `omega(x)` from the density: the
//! subtracted integrand is no longer singular for Holder data, the cell
//! containing the target drops out (its residual vanishes with the
//! spacing), and the midpoint sum converges.  Outside the disc the plain
//! kernel is summed against the nonzero cells only.

use crate::error::BiotSavartError;
use crate::vorticity::VorticityField;
use fields::{par, Mat2, MatrixField2, ScalarField2, Vec2};
use kernels::grad_k2_raw;

/// Velocity gradient at one point, split into its construction parts:
/// `grad = sym + (omega / 2) J`.
#[derive(Clone, Copy, Debug)]
pub struct GradSample {
    /// The assembled gradient.
    pub grad: Mat2,
    /// The principal-value integral; symmetric and trace-free.
    pub sym: Mat2,
    /// Vorticity at the evaluation point.
    pub omega: f64,
}

/// Velocity gradient over a whole grid with the same decomposition.
#[derive(Clone, Debug)]
pub struct GradVelocityField {
    pub grad: MatrixField2,
    /// Symmetric part (the PV integral) at every point.
    pub sym: MatrixField2,
    /// Coefficient of the antisymmetric part: `omega / 2` at every point.
    pub half_omega: ScalarField2,
}

/// The split radius must resolve at least two cells and keep the near
/// window inside the grid wherever the subtraction is active.
fn check_radius(vf: &VorticityField, radius: f64) -> Result<(), BiotSavartError> {
    let min = 2.0 * vf.spacing();
    let max = vf.support_margin();
    if !(radius >= min && radius <= max) {
        return Err(BiotSavartError::BadSplitRadius { radius, min, max });
    }
    Ok(())
}

/// The PV integral at `x`: vorticity-subtracted midpoint sum over the disc
/// of radius `radius`, plain kernel sum against the nonzero cells outside.
fn pv_at(vf: &VorticityField, x: Vec2, radius: f64, wx: f64) -> Mat2 {
    let g = vf.grid();
    let s = g.spacing;
    let area = g.cell_area();
    let r2 = radius * radius;
    let skip2 = (0.49 * s) * (0.49 * s);

    let mut pv = Mat2::ZERO;
    let (tx, ty) = g.frac_coords(x);
    let reach = radius / s + 1.0;
    let i0 = (tx - reach).floor().max(0.0) as usize;
    let j0 = (ty - reach).floor().max(0.0) as usize;
    let i1 = ((tx + reach).ceil() as usize).min(g.nx - 1);
    let j1 = ((ty + reach).ceil() as usize).min(g.ny - 1);
    for j in j0..=j1 {
        for i in i0..=i1 {
            let d = x - g.point(i, j);
            let d2 = d.norm_sq();
            if d2 > r2 || d2 <= skip2 {
                continue;
            }
            let dw = vf.omega().at(i, j) - wx;
            if dw != 0.0 {
                pv += grad_k2_raw(d) * (dw * area);
            }
        }
    }
    for &(c, m) in vf.sources() {
        let d = x - c;
        if d.norm_sq() > r2 {
            pv += grad_k2_raw(d) * m;
        }
    }
    pv
}

fn grad_sample(vf: &VorticityField, x: Vec2, radius: f64) -> GradSample {
    let wx = vf.omega_at(x);
    let sym = pv_at(vf, x, radius, wx);
    let grad = sym + Mat2::ROT90 * (0.5 * wx);
    GradSample { grad, sym, omega: wx }
}

/// Velocity gradient at a single point.
pub fn grad_velocity_at(
    vf: &VorticityField,
    x: Vec2,
    radius: f64,
) -> Result<GradSample, BiotSavartError> {
    check_radius(vf, radius)?;
    Ok(grad_sample(vf, x, radius))
}

/// Velocity gradient at each target point, in parallel.
pub fn grad_velocity(
    vf: &VorticityField,
    targets: &[Vec2],
    radius: f64,
) -> Result<Vec<GradSample>, BiotSavartError> {
    check_radius(vf, radius)?;
    Ok(par::map_collect(targets.len(), |t| {
        grad_sample(vf, targets[t], radius)
    }))
}

/// Velocity gradient on the vorticity's own grid.
pub fn grad_velocity_grid(
    vf: &VorticityField,
    radius: f64,
) -> Result<GradVelocityField, BiotSavartError> {
    check_radius(vf, radius)?;
    let g = *vf.grid();
    let samples = par::map_collect(g.len(), |k| {
        grad_sample(vf, g.point(k % g.nx, k / g.nx), radius)
    });
    let mut grad = MatrixField2::zeros(g);
    let mut sym = MatrixField2::zeros(g);
    let mut half_omega = ScalarField2::zeros(g);
    for (k, gs) in samples.into_iter().enumerate() {
        grad.set_flat(k, gs.grad);
        sym.set_flat(k, gs.sym);
        half_omega.set(k % g.nx, k / g.nx, 0.5 * gs.omega);
    }
    Ok(GradVelocityField {
        grad,
        sym,
        half_omega,
    })
}
