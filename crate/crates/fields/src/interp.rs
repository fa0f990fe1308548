//! Bilinear and bicubic (Catmull-Rom) interpolation on cell-centered data.
//!
//! Stencil indices are clamped at the domain edge, which replicates the
//! boundary value; all fields of interest decay to zero well inside the
//! grid, so the clamp never sees non-trivial data in practice.

use crate::Grid2;

#[inline]
fn clamp_idx(i: i64, n: usize) -> usize {
    i.clamp(0, n as i64 - 1) as usize
}

/// Bilinear interpolation of `data` (layout `j * nx + i`) at fractional
/// cell coordinates `(tx, ty)`.
pub fn bilinear(grid: &Grid2, data: &[f64], tx: f64, ty: f64) -> f64 {
    let ix = tx.floor();
    let iy = ty.floor();
    let fx = tx - ix;
    let fy = ty - iy;
    let i0 = clamp_idx(ix as i64, grid.nx);
    let i1 = clamp_idx(ix as i64 + 1, grid.nx);
    let j0 = clamp_idx(iy as i64, grid.ny);
    let j1 = clamp_idx(iy as i64 + 1, grid.ny);
    let v00 = data[j0 * grid.nx + i0];
    let v10 = data[j0 * grid.nx + i1];
    let v01 = data[j1 * grid.nx + i0];
    let v11 = data[j1 * grid.nx + i1];
    let a = v00 + (v10 - v00) * fx;
    let b = v01 + (v11 - v01) * fx;
    a + (b - a) * fy
}

/// Catmull-Rom cubic through `p0..p3` (samples at -1, 0, 1, 2) at `t` in
/// `[0, 1]`.  C1 across cells and exact on quadratics.
#[inline]
fn catmull_rom(p0: f64, p1: f64, p2: f64, p3: f64, t: f64) -> f64 {
    0.5 * (2.0 * p1
        + (p2 - p0) * t
        + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * t * t
        + (3.0 * p1 - p0 - 3.0 * p2 + p3) * t * t * t)
}

/// Bicubic interpolation at fractional cell coordinates `(tx, ty)`.
pub fn bicubic(grid: &Grid2, data: &[f64], tx: f64, ty: f64) -> f64 {
    let ix = tx.floor();
    let iy = ty.floor();
    let fx = tx - ix;
    let fy = ty - iy;
    let mut rows = [0.0; 4];
    for (k, row) in rows.iter_mut().enumerate() {
        let j = clamp_idx(iy as i64 + k as i64 - 1, grid.ny);
        let base = j * grid.nx;
        let p: [f64; 4] = std::array::from_fn(|l| {
            let i = clamp_idx(ix as i64 + l as i64 - 1, grid.nx);
            data[base + i]
        });
        *row = catmull_rom(p[0], p[1], p[2], p[3], fx);
    }
    catmull_rom(rows[0], rows[1], rows[2], rows[3], fy)
}
