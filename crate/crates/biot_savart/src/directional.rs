//! Directional pairings of the velocity gradient and the curl/divergence
//! exchange identity.
//!
//! Pairing the gradient with a direction field `Y` moves one derivative off
//! the kernel onto the data, at the price of a convolution with
//! `div(omega Y)`:
//!
//!   (Y . grad) u (x) = int grad K(x - y) [Y(x) - Y(y)] omega(y) dy
//!                      + (K * div(omega Y))(x).
//!
//! Pairing with the quarter-turn of `Y` instead gives
//!
//!   (Y_perp . grad) u (x) = int grad K(x - y) [Y_perp(x) - Y_perp(y)] omega(y) dy
//!                           - (K * div(omega Y))_perp(x) - omega(x) Y(x),
//!
//! where the minus sign on the turned convolution comes from applying the
//! exchange identity `K * div Z = Z_perp - (K * curl Z)_perp` to
//! `Z = omega Y_perp` together with `curl(Z_perp) = div Z` and
//! `(Z_perp)_perp = -Z`.  A divergence-carrying test field distinguishes
//! the two sign choices numerically; only this one closes the identity.
//!
//! The differenced kernel term is only `1/|x - y|`-singular, so a plain
//! midpoint sum with the target's own cell excluded converges without any
//! principal-value handling.

use crate::error::BiotSavartError;
use crate::gradient::grad_velocity_at;
use crate::vorticity::VorticityField;
use fields::{curl, divergence, Grid2, ScalarField2, Vec2, VectorField2};
use kernels::quadrature::source_cells;
use kernels::{grad_k2_raw, k2_raw};

/// `int grad K(x - y) [Y(x) - Y(y)] omega(y) dy` by midpoint quadrature.
fn kernel_difference_sum<Y>(vf: &VorticityField, y: &Y, x: Vec2, yx: Vec2) -> Vec2
where
    Y: Fn(Vec2) -> Vec2,
{
    let s = vf.spacing();
    let skip2 = (0.49 * s) * (0.49 * s);
    let mut acc = Vec2::ZERO;
    for &(c, m) in vf.sources() {
        let d = x - c;
        if d.norm_sq() <= skip2 {
            continue;
        }
        acc += grad_k2_raw(d).mul_vec(yx - y(c)) * m;
    }
    acc
}

/// `(K * rho)(x)` for a density `rho` supported where the vorticity is:
/// midpoint sum over the support box, singular cell skipped.
fn convolve_density<D>(vf: &VorticityField, rho: &D, x: Vec2) -> Vec2
where
    D: Fn(Vec2) -> f64,
{
    let Some((i0, i1, j0, j1)) = vf.support_index_box() else {
        return Vec2::ZERO;
    };
    let g = vf.grid();
    let area = g.cell_area();
    let skip2 = (0.49 * g.spacing) * (0.49 * g.spacing);
    let mut acc = Vec2::ZERO;
    for j in j0..=j1 {
        for i in i0..=i1 {
            let c = g.point(i, j);
            let d = x - c;
            if d.norm_sq() <= skip2 {
                continue;
            }
            let v = rho(c);
            if v != 0.0 {
                acc += k2_raw(d) * (v * area);
            }
        }
    }
    acc
}

/// The directional derivative `(Y . grad) u (x)` evaluated through the
/// differenced-kernel identity.  `div_omega_y` supplies `div(omega Y)`.
pub fn directional_grad_u<Y, D>(vf: &VorticityField, y: Y, div_omega_y: D, x: Vec2) -> Vec2
where
    Y: Fn(Vec2) -> Vec2,
    D: Fn(Vec2) -> f64,
{
    let yx = y(x);
    kernel_difference_sum(vf, &y, x, yx) + convolve_density(vf, &div_omega_y, x)
}

/// Residual `|LHS - RHS|` of the quarter-turn pairing identity at `x`,
/// with the left side evaluated as `grad u (x) . Y_perp(x)` through
/// [`grad_velocity_at`] at the given split radius.
pub fn perp_directional_residual<Y, D>(
    vf: &VorticityField,
    y: Y,
    div_omega_y: D,
    x: Vec2,
    radius: f64,
) -> Result<f64, BiotSavartError>
where
    Y: Fn(Vec2) -> Vec2,
    D: Fn(Vec2) -> f64,
{
    let gs = grad_velocity_at(vf, x, radius)?;
    let yx = y(x);
    let lhs = gs.grad.mul_vec(yx.perp());
    let yperp = |p: Vec2| y(p).perp();
    let t1 = kernel_difference_sum(vf, &yperp, x, yx.perp());
    let conv = convolve_density(vf, &div_omega_y, x);
    let rhs = t1 - conv.perp() - yx * gs.omega;
    Ok((lhs - rhs).norm())
}

/// Pointwise residual of `K * div Z = Z_perp - (K * curl Z)_perp` on an
/// evaluation grid.  Divergence and curl are taken by finite differences on
/// `Z`'s own grid; both convolutions use midpoint quadrature with the
/// singular cell skipped.
pub fn k_curl_div_residual(z: &VectorField2, eval: &Grid2) -> ScalarField2 {
    let div_sources = source_cells(&divergence(z));
    let curl_sources = source_cells(&curl(z));
    let skip2 = (0.5 * z.grid.spacing) * (0.5 * z.grid.spacing);
    ScalarField2::from_fn(*eval, |p| {
        let mut k_div = Vec2::ZERO;
        for &(c, m) in &div_sources {
            let d = p - c;
            if d.norm_sq() > skip2 {
                k_div += k2_raw(d) * m;
            }
        }
        let mut k_curl = Vec2::ZERO;
        for &(c, m) in &curl_sources {
            let d = p - c;
            if d.norm_sq() > skip2 {
                k_curl += k2_raw(d) * m;
            }
        }
        (k_div - z.sample_bilinear(p).perp() + k_curl.perp()).norm()
    })
}
