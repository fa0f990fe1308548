//! Centered finite differences on cell-centered fields.
//!
//! Interior points two or more cells from the edge use the fourth-order
//! five-point stencil `(-f2 + 8 f1 - 8 f-1 + f-2) / 12h`; points one cell
//! deep fall back to second-order centered, and edge points to one-sided
//! second order.

use crate::{par, MatrixField2, ScalarField2, Vec2, VectorField2};

/// d/dx of one component plane at `(i, j)`.
fn ddx(data: &[f64], nx: usize, ny: usize, h: f64, i: usize, j: usize) -> f64 {
    let _ = ny;
    let at = |ii: usize| data[j * nx + ii];
    if i >= 2 && i + 2 < nx {
        (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * h)
    } else if i >= 1 && i + 1 < nx {
        (at(i + 1) - at(i - 1)) / (2.0 * h)
    } else if i == 0 {
        (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h)
    } else {
        (3.0 * at(i) - 4.0 * at(i - 1) + at(i - 2)) / (2.0 * h)
    }
}

/// d/dy of one component plane at `(i, j)`.
fn ddy(data: &[f64], nx: usize, ny: usize, h: f64, i: usize, j: usize) -> f64 {
    let at = |jj: usize| data[jj * nx + i];
    if j >= 2 && j + 2 < ny {
        (-at(j + 2) + 8.0 * at(j + 1) - 8.0 * at(j - 1) + at(j - 2)) / (12.0 * h)
    } else if j >= 1 && j + 1 < ny {
        (at(j + 1) - at(j - 1)) / (2.0 * h)
    } else if j == 0 {
        (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h)
    } else {
        (3.0 * at(j) - 4.0 * at(j - 1) + at(j - 2)) / (2.0 * h)
    }
}

/// Gradient of a scalar field.
pub fn gradient(f: &ScalarField2) -> VectorField2 {
    let g = f.grid;
    let vals = par::map_collect(g.len(), |k| {
        let (i, j) = (k % g.nx, k / g.nx);
        Vec2::new(
            ddx(&f.data, g.nx, g.ny, g.spacing, i, j),
            ddy(&f.data, g.nx, g.ny, g.spacing, i, j),
        )
    });
    let mut out = VectorField2::zeros(g);
    for (k, v) in vals.into_iter().enumerate() {
        out.x[k] = v.x;
        out.y[k] = v.y;
    }
    out
}

/// Divergence of a vector field.
pub fn divergence(v: &VectorField2) -> ScalarField2 {
    let g = v.grid;
    let data = par::map_collect(g.len(), |k| {
        let (i, j) = (k % g.nx, k / g.nx);
        ddx(&v.x, g.nx, g.ny, g.spacing, i, j) + ddy(&v.y, g.nx, g.ny, g.spacing, i, j)
    });
    ScalarField2 { grid: g, data }
}

/// Scalar curl `d(v_y)/dx - d(v_x)/dy`.
pub fn curl(v: &VectorField2) -> ScalarField2 {
    let g = v.grid;
    let data = par::map_collect(g.len(), |k| {
        let (i, j) = (k % g.nx, k / g.nx);
        ddx(&v.y, g.nx, g.ny, g.spacing, i, j) - ddy(&v.x, g.nx, g.ny, g.spacing, i, j)
    });
    ScalarField2 { grid: g, data }
}

/// Jacobian of a vector field with rows `(grad v_x; grad v_y)`, i.e. entry
/// `(i, j)` holds the j-th partial of the i-th component.
pub fn jacobian(v: &VectorField2) -> MatrixField2 {
    let g = v.grid;
    let mut out = MatrixField2::zeros(g);
    let vals = par::map_collect(g.len(), |k| {
        let (i, j) = (k % g.nx, k / g.nx);
        (
            ddx(&v.x, g.nx, g.ny, g.spacing, i, j),
            ddy(&v.x, g.nx, g.ny, g.spacing, i, j),
            ddx(&v.y, g.nx, g.ny, g.spacing, i, j),
            ddy(&v.y, g.nx, g.ny, g.spacing, i, j),
        )
    });
    for (k, (xx, xy, yx, yy)) in vals.into_iter().enumerate() {
        out.xx[k] = xx;
        out.xy[k] = xy;
        out.yx[k] = yx;
        out.yy[k] = yy;
    }
    out
}
