//! Smooth radial cutoffs and the annular cutoff used to split the
//! principal-value velocity-gradient integral into near and far parts.

use fields::Vec2;
use thiserror::Error;

/// Radial bump profile: `1` for `t <= 1`, `0` for `t >= 2`, and
/// `exp(1 - 1 / (1 - (t-1)^2))` in between.  Smooth and non-increasing.
pub fn bump(t: f64) -> f64 {
    if t <= 1.0 {
        1.0
    } else if t >= 2.0 {
        0.0
    } else {
        let s = t - 1.0;
        (1.0 - 1.0 / (1.0 - s * s)).exp()
    }
}

/// Derivative of [`bump`] with respect to `t`.
pub fn bump_deriv(t: f64) -> f64 {
    if t <= 1.0 || t >= 2.0 {
        0.0
    } else {
        let s = t - 1.0;
        let q = 1.0 - s * s;
        bump(t) * (-2.0 * s / (q * q))
    }
}

/// Radial bump at scale `r`: equals `1` on `|x| <= r`, `0` outside `|x| >= 2r`.
pub fn bump_radial(r: f64, x: Vec2) -> f64 {
    bump(x.norm() / r)
}

/// Gradient of [`bump_radial`].
pub fn grad_bump_radial(r: f64, x: Vec2) -> Vec2 {
    let n = x.norm();
    if n == 0.0 {
        return Vec2::ZERO;
    }
    x * (bump_deriv(n / r) / (r * n))
}

/// Smooth unit step: `0` for `s <= 0`, `1` for `s >= 1`, strictly
/// increasing in between (the classical `exp(-1/s)` partition step).
pub fn smooth_step(s: f64) -> f64 {
    #[inline]
    fn psi(s: f64) -> f64 {
        if s <= 0.0 {
            0.0
        } else {
            (-1.0 / s).exp()
        }
    }
    let a = psi(s);
    let b = psi(1.0 - s);
    a / (a + b)
}

/// Derivative of [`smooth_step`]; vanishes outside `(0, 1)`.
pub fn smooth_step_deriv(s: f64) -> f64 {
    if s <= 0.0 || s >= 1.0 {
        return 0.0;
    }
    // With psi(s) = exp(-1/s): S = psi / (psi + psib), psib(s) = psi(1 - s),
    // psi' = psi / s^2, and S' = (psi' psib + psi psib') / (psi + psib)^2.
    let psi = (-1.0 / s).exp();
    let psib = (-1.0 / (1.0 - s)).exp();
    let dpsi = psi / (s * s);
    let dpsib = psib / ((1.0 - s) * (1.0 - s));
    let denom = psi + psib;
    (dpsi * psib + psi * dpsib) / (denom * denom)
}

#[derive(Debug, Error)]
pub enum CutoffError {
    #[error("annular cutoff requires 0 < 2h < r, got h = {h}, r = {r}")]
    BadWindow { h: f64, r: f64 },
}

/// Annular cutoff window `mu_{r,h} = bump_r (1 - bump_h)`: vanishes for
/// `|x| <= h` and `|x| >= 2r`, equals `1` on `2h <= |x| <= r`.
#[derive(Clone, Copy, Debug)]
pub struct CutoffSpec {
    pub r: f64,
    pub h: f64,
}

impl CutoffSpec {
    pub fn new(r: f64, h: f64) -> Result<Self, CutoffError> {
        if !(h > 0.0 && 2.0 * h < r) {
            return Err(CutoffError::BadWindow { h, r });
        }
        Ok(CutoffSpec { r, h })
    }

    /// Outer radius of the window's support.
    pub fn outer_radius(&self) -> f64 {
        2.0 * self.r
    }
}

/// The annular window value at `x`.
pub fn mu(spec: CutoffSpec, x: Vec2) -> f64 {
    bump_radial(spec.r, x) * (1.0 - bump_radial(spec.h, x))
}

/// Gradient of the annular window.
pub fn grad_mu(spec: CutoffSpec, x: Vec2) -> Vec2 {
    let ar = bump_radial(spec.r, x);
    let ah = bump_radial(spec.h, x);
    grad_bump_radial(spec.r, x) * (1.0 - ah) - grad_bump_radial(spec.h, x) * ar
}
