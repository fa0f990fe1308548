//! Fundamental solutions of the Laplacian and the derived velocity kernels.
//!
//! In two dimensions the fundamental solution is `log|x| / 2pi` and the
//! velocity kernel is its perpendicular gradient `K(x) = x_perp / (2pi |x|^2)`
//! with `x_perp = (-x2, x1)`.  In three dimensions the fundamental solution
//! is `-1 / (4pi |x|)` and the corresponding kernel is `x / (4pi |x|^3)`.
//! The `_raw` variants assume `x != 0` and are meant for quadrature loops
//! that have already excluded the singular cell.

use fields::{Mat2, Vec2, Vec3};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KernelError {
    #[error("kernel evaluated at its singularity")]
    AtSingularity,
    #[error("kernel argument has non-finite components")]
    NonFinite,
}

const TWO_PI: f64 = 2.0 * PI;
const FOUR_PI: f64 = 4.0 * PI;

/// Planar fundamental solution `log|x| / 2pi`.
pub fn f2(x: Vec2) -> Result<f64, KernelError> {
    check2(x)?;
    Ok(x.norm().ln() / TWO_PI)
}

/// Spatial fundamental solution `-1 / (4pi |x|)`.
pub fn f3(x: Vec3) -> Result<f64, KernelError> {
    if !(x.x.is_finite() && x.y.is_finite() && x.z.is_finite()) {
        return Err(KernelError::NonFinite);
    }
    if x.norm_sq() == 0.0 {
        return Err(KernelError::AtSingularity);
    }
    Ok(-1.0 / (FOUR_PI * x.norm()))
}

/// Gradient of the planar fundamental solution, `x / (2pi |x|^2)`.
pub fn grad_f2(x: Vec2) -> Result<Vec2, KernelError> {
    check2(x)?;
    Ok(x * (1.0 / (TWO_PI * x.norm_sq())))
}

/// Hessian of the planar fundamental solution away from the origin:
/// `(I - 2 x x^T / r^2) / (2 pi r^2)`. Symmetric with zero trace.
#[inline]
pub fn hess_f2_raw(x: Vec2) -> Mat2 {
    let r2 = x.norm_sq();
    let scale = 1.0 / (TWO_PI * r2);
    let q = 2.0 * scale / r2;
    let off = -q * x.x * x.y;
    Mat2::new(scale - q * x.x * x.x, off, off, scale - q * x.y * x.y)
}

/// Planar velocity kernel `x_perp / (2pi |x|^2)`.
pub fn k2(x: Vec2) -> Result<Vec2, KernelError> {
    check2(x)?;
    Ok(k2_raw(x))
}

/// Spatial kernel `x / (4pi |x|^3)`.
pub fn k3(x: Vec3) -> Result<Vec3, KernelError> {
    if x.norm_sq() == 0.0 {
        return Err(KernelError::AtSingularity);
    }
    let r = x.norm();
    Ok(x * (1.0 / (FOUR_PI * r * r * r)))
}

/// Gradient of the planar velocity kernel as a matrix with entries
/// `d K_i / d x_j`.
pub fn grad_k2(x: Vec2) -> Result<Mat2, KernelError> {
    check2(x)?;
    Ok(grad_k2_raw(x))
}

#[inline]
fn check2(x: Vec2) -> Result<(), KernelError> {
    if !x.is_finite() {
        return Err(KernelError::NonFinite);
    }
    if x.norm_sq() == 0.0 {
        return Err(KernelError::AtSingularity);
    }
    Ok(())
}

/// `k2` without the singularity check; caller guarantees `x != 0`.
#[inline]
pub fn k2_raw(x: Vec2) -> Vec2 {
    x.perp() * (1.0 / (TWO_PI * x.norm_sq()))
}

/// `grad_k2` without the singularity check.
///
/// Writing `J` for the quarter-turn matrix, the closed form is
/// `(J / r^2 - 2 x_perp x^T / r^4) / 2pi`; it is symmetric with zero trace.
#[inline]
pub fn grad_k2_raw(x: Vec2) -> Mat2 {
    let r2 = x.norm_sq();
    let inv_r2 = 1.0 / (TWO_PI * r2);
    let inv_r4 = 2.0 * inv_r2 / r2;
    let p = x.perp();
    Mat2::new(
        -p.x * x.x * inv_r4,
        -1.0 * inv_r2 - p.x * x.y * inv_r4,
        1.0 * inv_r2 - p.y * x.x * inv_r4,
        -p.y * x.y * inv_r4,
    )
}

/// Second derivatives of the planar velocity kernel: the pair
/// `(d/dx1 grad K, d/dx2 grad K)` evaluated away from the origin.
///
/// From `2pi K_i' j = J_ij / r^2 - 2 (x_perp)_i x_j / r^4` the derivative in
/// direction `k` is
/// `-2 J_ij x_k / r^4 - 2 [J_ik x_j + (x_perp)_i d_jk] / r^4
///  + 8 (x_perp)_i x_j x_k / r^6`.
pub fn grad2_k2_raw(x: Vec2) -> [Mat2; 2] {
    let r2 = x.norm_sq();
    let r4 = r2 * r2;
    let r6 = r4 * r2;
    let p = x.perp();
    let xs = [x.x, x.y];
    let ps = [p.x, p.y];
    // J entries: J[i][j].
    let jm = [[0.0, -1.0], [1.0, 0.0]];
    let mut out = [Mat2::ZERO; 2];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut m = Mat2::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                let delta_jk = if j == k { 1.0 } else { 0.0 };
                let t = -2.0 * jm[i][j] * xs[k] / r4
                    - 2.0 * (jm[i][k] * xs[j] + ps[i] * delta_jk) / r4
                    + 8.0 * ps[i] * xs[j] * xs[k] / r6;
                m.m[i][j] = t / TWO_PI;
            }
        }
        *slot = m;
    }
    out
}
