use fields::{Mat2, Vec2};
use kernels::bump;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProfileError {
    #[error("breakpoints must be finite, positive, and strictly increasing")]
    BadBreakpoints,
    #[error("correction matrix needs an inner support gap, but the profile is nonzero near the origin")]
    NoInnerGap,
    #[error("cutoff scale {delta} must lie in (0, {gap}] (the inner support gap)")]
    BadCutoffScale { delta: f64, gap: f64 },
}

/// Compactly supported radial vorticity profile `g(|x|)`, polynomial on
/// each piece, with the swirl primitive `G(r) = int_0^r rho g(rho) d rho`
/// evaluated in closed form.
#[derive(Clone, Debug)]
pub struct RadialProfile {
    /// Right endpoints of the pieces; piece `k` covers `[ends[k-1], ends[k])`.
    ends: Vec<f64>,
    /// Polynomial coefficients of `g` on each piece, constant term first.
    coeffs: Vec<Vec<f64>>,
    /// `G` accumulated up to each piece end.
    cum: Vec<f64>,
}

fn piece_swirl_integral(coeffs: &[f64], a: f64, b: f64) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c * (b.powi(k as i32 + 2) - a.powi(k as i32 + 2)) / (k as f64 + 2.0))
        .sum()
}

impl RadialProfile {
    pub fn from_pieces(pieces: Vec<(f64, Vec<f64>)>) -> Result<Self, ProfileError> {
        if pieces.is_empty() {
            return Err(ProfileError::BadBreakpoints);
        }
        let mut prev = 0.0;
        for (end, _) in &pieces {
            if !end.is_finite() || *end <= prev {
                return Err(ProfileError::BadBreakpoints);
            }
            prev = *end;
        }
        let mut ends = Vec::with_capacity(pieces.len());
        let mut coeffs = Vec::with_capacity(pieces.len());
        let mut cum = Vec::with_capacity(pieces.len());
        let mut start = 0.0;
        let mut acc = 0.0;
        for (end, c) in pieces {
            acc += piece_swirl_integral(&c, start, end);
            ends.push(end);
            coeffs.push(c);
            cum.push(acc);
            start = end;
        }
        Ok(RadialProfile { ends, coeffs, cum })
    }

    /// The unit vortex patch scaled to `radius`: `g = 1` on `[0, radius)`.
    pub fn patch(radius: f64) -> Self {
        RadialProfile::from_pieces(vec![(radius, vec![1.0])]).expect("patch breakpoints are valid")
    }

    /// Annular patch: `g = 1` on `[r0, r1)`, zero elsewhere.
    pub fn ring(r0: f64, r1: f64) -> Self {
        RadialProfile::from_pieces(vec![(r0, vec![]), (r1, vec![1.0])])
            .expect("ring breakpoints are valid")
    }

    pub fn g(&self, r: f64) -> f64 {
        let r = r.abs();
        for (k, end) in self.ends.iter().enumerate() {
            if r < *end {
                return self.coeffs[k]
                    .iter()
                    .rev()
                    .fold(0.0, |acc, c| acc * r + c);
            }
        }
        0.0
    }

    /// `G(r) = int_0^r rho g(rho) d rho`, exact per piece.
    pub fn big_g(&self, r: f64) -> f64 {
        let r = r.abs();
        let mut start = 0.0;
        for (k, end) in self.ends.iter().enumerate() {
            if r < *end {
                let prior = if k == 0 { 0.0 } else { self.cum[k - 1] };
                return prior + piece_swirl_integral(&self.coeffs[k], start, r);
            }
            start = *end;
        }
        *self.cum.last().expect("profile has at least one piece")
    }

    pub fn support_radius(&self) -> f64 {
        *self.ends.last().expect("profile has at least one piece")
    }

    /// Radius of the largest initial interval on which `g` vanishes
    /// identically (zero when the profile is active at the origin).
    pub fn inner_gap(&self) -> f64 {
        let mut gap = 0.0;
        for (k, end) in self.ends.iter().enumerate() {
            if self.coeffs[k].iter().any(|c| *c != 0.0) {
                break;
            }
            gap = *end;
        }
        gap
    }
}

/// Velocity of the radial vortex: `u(x) = x^perp G(r) / r^2`.
pub fn radial_u(p: &RadialProfile, x: Vec2) -> Vec2 {
    let r2 = x.norm_sq();
    if r2 < 1e-300 {
        return Vec2::ZERO;
    }
    x.perp() * (p.big_g(r2.sqrt()) / r2)
}

/// Trace-free strain pattern driven by the mean swirl inside radius `r`;
/// enters the radial velocity gradient with weight `G(r)/r^4`.
fn mean_swirl_strain(x: Vec2) -> Mat2 {
    let cross = 2.0 * x.x * x.y;
    let diff = x.y * x.y - x.x * x.x;
    Mat2::new(cross, diff, diff, -cross)
}

/// Local tangential-shear pattern `x^perp (x)^T`; divided by `r^2` it is
/// exactly the correction matrix of the unit tangential direction.
fn tangential_pattern(x: Vec2) -> Mat2 {
    Mat2::outer(x.perp(), x)
}

/// Velocity gradient of the radial vortex,
/// `(G(r)/r^4) [mean swirl strain] + (g(r)/r^2) [tangential pattern]`.
pub fn radial_grad_u(p: &RadialProfile, x: Vec2) -> Mat2 {
    let r2 = x.norm_sq();
    if r2 < 1e-300 {
        // Solid-body limit: pure rotation at half the central vorticity.
        return Mat2::ROT90 * (p.g(0.0) / 2.0);
    }
    let r = r2.sqrt();
    mean_swirl_strain(x) * (p.big_g(r) / (r2 * r2)) + tangential_pattern(x) * (p.g(r) / r2)
}

/// Correction matrix of the radial vortex with the cutoff scale `delta`:
/// `chi(r) / r^2` times the tangential pattern, where `chi` rises from `0`
/// at `delta/2` to `1` at `delta`. Needs `delta` inside the inner support
/// gap so that `omega * A` stays smooth at the origin.
pub fn radial_a_with(p: &RadialProfile, delta: f64, x: Vec2) -> Result<Mat2, ProfileError> {
    let gap = p.inner_gap();
    if gap <= 0.0 {
        return Err(ProfileError::NoInnerGap);
    }
    if !(delta > 0.0 && delta <= gap) {
        return Err(ProfileError::BadCutoffScale { delta, gap });
    }
    let r2 = x.norm_sq();
    if r2 < 1e-300 {
        return Ok(Mat2::ZERO);
    }
    let chi = 1.0 - bump(x.norm() / (delta / 2.0));
    Ok(tangential_pattern(x) * (chi / r2))
}

/// [`radial_a_with`] at the default cutoff scale, half the inner gap.
pub fn radial_a(p: &RadialProfile, x: Vec2) -> Result<Mat2, ProfileError> {
    radial_a_with(p, p.inner_gap() / 2.0, x)
}

/// The corrected gradient `grad u - omega A` of the radial vortex: only
/// the mean-swirl strain survives, weighted by `G(r)/r^4`. (For profiles
/// with an inner gap this holds with A as in [`radial_a`]; for the patch
/// it holds with the pure tangential correction `r^{-2}` pattern.)
pub fn radial_corrected(p: &RadialProfile, x: Vec2) -> Mat2 {
    let r2 = x.norm_sq();
    if r2 < 1e-300 {
        return Mat2::ZERO;
    }
    mean_swirl_strain(x) * (p.big_g(r2.sqrt()) / (r2 * r2))
}
