//! Principal-value singular transforms and windowed kernel pairings.
//!
//! The transforms here all regularize by differencing the data at the
//! target: `T f(x) = PV int L(x, y) (f(y) - f(x)) dy`.  For kernels with
//! finite weighted star norms and Holder data the differenced integrand is
//! integrable, so a midpoint sum with the target's own cell excluded
//! converges; no symmetric-exclusion limit is needed.
//!
//! The windowed pairings integrate derivatives of the annular-window
//! potential kernel `mu_{r,h} grad F` (`F` the planar fundamental
//! solution) against differenced data on an independent midpoint lattice
//! over the window's annulus, decoupling the quadrature step from any
//! vorticity grid.  Their magnitudes scale like `r^alpha` for `C^alpha`
//! data — the scaling the crate tests measure.

use fields::{par, Grid2, Mat2, MatrixField2, ScalarField2, Vec2};
use kernels::{grad_mu, hess_f2_raw, mu, CutoffSpec};
use std::f64::consts::PI;

/// Gradient of the planar fundamental solution, `z / (2 pi |z|^2)`,
/// away from the origin.
#[inline]
fn grad_f2_raw(z: Vec2) -> Vec2 {
    z * (1.0 / (2.0 * PI * z.norm_sq()))
}

/// `PV int L(x, y) (f(y) - f(x)) dy` for a scalar kernel, sampled on
/// `eval`.  Integration runs over `f`'s whole grid box by midpoint rule;
/// the kernel must vanish (or carry all its mass) inside that box.
pub fn singular_transform_scalar<L>(l: L, f: &ScalarField2, eval: &Grid2) -> ScalarField2
where
    L: Fn(Vec2, Vec2) -> f64 + Sync,
{
    let g = f.grid;
    let area = g.cell_area();
    let skip2 = (0.49 * g.spacing) * (0.49 * g.spacing);
    ScalarField2::from_fn(*eval, |x| {
        let fx = f.sample_bilinear(x);
        let mut acc = 0.0;
        for j in 0..g.ny {
            for i in 0..g.nx {
                let y = g.point(i, j);
                if (x - y).norm_sq() <= skip2 {
                    continue;
                }
                let df = f.at(i, j) - fx;
                if df != 0.0 {
                    acc += l(x, y) * df * area;
                }
            }
        }
        acc
    })
}

/// Matrix-kernel version of [`singular_transform_scalar`].
pub fn singular_transform_matrix<L>(l: L, f: &ScalarField2, eval: &Grid2) -> MatrixField2
where
    L: Fn(Vec2, Vec2) -> Mat2 + Sync,
{
    let g = f.grid;
    let area = g.cell_area();
    let skip2 = (0.49 * g.spacing) * (0.49 * g.spacing);
    MatrixField2::from_fn(*eval, |x| {
        let fx = f.sample_bilinear(x);
        let mut acc = Mat2::ZERO;
        for j in 0..g.ny {
            for i in 0..g.nx {
                let y = g.point(i, j);
                if (x - y).norm_sq() <= skip2 {
                    continue;
                }
                let df = f.at(i, j) - fx;
                if df != 0.0 {
                    acc += l(x, y) * (df * area);
                }
            }
        }
        acc
    })
}

/// `int grad[mu_{r,h} grad F](x - y) (f(x) - f(y)) g(y) dy` over the
/// window's annulus, on a midpoint lattice of the given step.  Rows are
/// summed sequentially and combined in order, so the result is
/// deterministic.
pub fn window_gradient_pairing<F, G>(
    f: F,
    g: G,
    x: Vec2,
    window: CutoffSpec,
    step: f64,
) -> Mat2
where
    F: Fn(Vec2) -> f64 + Sync,
    G: Fn(Vec2) -> f64 + Sync,
{
    let outer = window.outer_radius();
    let n = (2.0 * outer / step).ceil() as usize;
    let dz = 2.0 * outer / n as f64;
    let area = dz * dz;
    let h2 = window.h * window.h;
    let outer2 = outer * outer;
    let fx = f(x);
    let rows = par::map_collect(n, |j| {
        let zy = -outer + (j as f64 + 0.5) * dz;
        let mut acc = Mat2::ZERO;
        for i in 0..n {
            let z = Vec2::new(-outer + (i as f64 + 0.5) * dz, zy);
            let z2 = z.norm_sq();
            if z2 <= h2 || z2 >= outer2 {
                continue;
            }
            let kernel = Mat2::outer(grad_f2_raw(z), grad_mu(window, z))
                + hess_f2_raw(z) * mu(window, z);
            let y = x - z;
            acc += kernel * ((fx - f(y)) * g(y) * area);
        }
        acc
    });
    let mut total = Mat2::ZERO;
    for row in rows {
        total += row;
    }
    total
}

/// `int (mu_{r,h} grad F)(x - y) f(y) dy` over the window's annulus on a
/// midpoint lattice.  The window is radial, so the kernel has zero mean and
/// the pairing equals its data-differenced form, which is what is summed.
pub fn window_potential_pairing<F>(f: F, x: Vec2, window: CutoffSpec, step: f64) -> Vec2
where
    F: Fn(Vec2) -> f64 + Sync,
{
    let outer = window.outer_radius();
    let n = (2.0 * outer / step).ceil() as usize;
    let dz = 2.0 * outer / n as f64;
    let area = dz * dz;
    let h2 = window.h * window.h;
    let outer2 = outer * outer;
    let fx = f(x);
    let rows = par::map_collect(n, |j| {
        let zy = -outer + (j as f64 + 0.5) * dz;
        let mut acc = Vec2::ZERO;
        for i in 0..n {
            let z = Vec2::new(-outer + (i as f64 + 0.5) * dz, zy);
            let z2 = z.norm_sq();
            if z2 <= h2 || z2 >= outer2 {
                continue;
            }
            acc += grad_f2_raw(z) * (mu(window, z) * (f(x - z) - fx) * area);
        }
        acc
    });
    let mut total = Vec2::ZERO;
    for row in rows {
        total += row;
    }
    total
}
