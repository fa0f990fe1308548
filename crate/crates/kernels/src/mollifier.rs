//! A radial smooth mollifier built from the bump profile.
//!
//! `rho(x) = c_d * bump(|x|)` with `c_d` chosen once per dimension so the
//! integral over the whole space equals one; the normalization constant is
//! computed by high-resolution Simpson quadrature and cached.

use crate::cutoff::{bump, bump_deriv};
use fields::Vec2;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Simpson integral of `f` over `[a, b]` with `n` (even) panels.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = if n % 2 == 0 { n } else { n + 1 };
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + k as f64 * h);
    }
    s * h / 3.0
}

/// Normalization constant `c_d` with `integral of c_d * bump(|x|) = 1`
/// over `R^d`, for `d` in `{2, 3}`.
pub fn rho_normalization(dim: usize) -> f64 {
    static C2: OnceLock<f64> = OnceLock::new();
    static C3: OnceLock<f64> = OnceLock::new();
    match dim {
        2 => *C2.get_or_init(|| {
            1.0 / (2.0 * PI * simpson(|t| t * bump(t), 0.0, 2.0, 8192))
        }),
        3 => *C3.get_or_init(|| {
            1.0 / (4.0 * PI * simpson(|t| t * t * bump(t), 0.0, 2.0, 8192))
        }),
        _ => panic!("mollifier only defined for dimensions 2 and 3"),
    }
}

/// The planar mollifier profile at radius `t` (unit scale).
pub fn rho(dim: usize, t: f64) -> f64 {
    rho_normalization(dim) * bump(t)
}

/// Planar mollifier at scale `eps`: `eps^-2 rho(|x| / eps)`, supported in
/// `|x| <= 2 eps`.
pub fn rho_eps(eps: f64, x: Vec2) -> f64 {
    rho(2, x.norm() / eps) / (eps * eps)
}

/// Gradient of [`rho_eps`].
pub fn grad_rho_eps(eps: f64, x: Vec2) -> Vec2 {
    let n = x.norm();
    if n == 0.0 {
        return Vec2::ZERO;
    }
    let scale = rho_normalization(2) * bump_deriv(n / eps) / (eps * eps * eps * n);
    x * scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mollifier_integrates_to_one() {
        // Midpoint quadrature on a grid, independent of the Simpson cache.
        let eps = 0.3;
        let n = 400;
        let h = 2.1 * eps / n as f64 * 2.0;
        let mut total = 0.0;
        for j in 0..n {
            for i in 0..n {
                let x = Vec2::new(
                    -2.1 * eps + (i as f64 + 0.5) * h,
                    -2.1 * eps + (j as f64 + 0.5) * h,
                );
                total += rho_eps(eps, x) * h * h;
            }
        }
        assert!((total - 1.0).abs() < 1e-6, "mass {total}");
    }

    #[test]
    fn mollifier_support_and_gradient() {
        let eps = 0.1;
        assert_eq!(rho_eps(eps, Vec2::new(0.21, 0.0)), 0.0);
        assert!(rho_eps(eps, Vec2::ZERO) > 0.0);
        let x = Vec2::new(0.13, 0.05);
        let h = 1e-7;
        let fd = (rho_eps(eps, Vec2::new(x.x + h, x.y)) - rho_eps(eps, Vec2::new(x.x - h, x.y)))
            / (2.0 * h);
        let g = grad_rho_eps(eps, x);
        assert!((g.x - fd).abs() < 1e-3 * g.norm().max(1.0));
    }
}
