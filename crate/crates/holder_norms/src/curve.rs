//! `C^{1+alpha}` norm of a sampled curve: sup of the curve, its difference
//! derivative, and the derivative's Holder seminorm in the arc parameter.

use crate::report::{check_alpha, HolderError};
use fields::{par, Vec2};

fn orient(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

fn segments_cross(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    o1 * o2 < 0.0 && o3 * o4 < 0.0
}

/// The three summands of a curve's `C^{1+alpha}` norm.
#[derive(Debug, Clone, Copy)]
pub struct CurveNorm {
    pub sup: f64,
    pub sup_deriv: f64,
    pub deriv_seminorm: f64,
}

impl CurveNorm {
    pub fn total(&self) -> f64 {
        self.sup + self.sup_deriv + self.deriv_seminorm
    }
}

/// `||gamma||_inf + ||gamma'||_inf + [gamma']_alpha` for a curve sampled
/// uniformly in arc length.  `closed` selects periodic differences; open
/// curves (periodically extended straight pieces and the like) use one-sided
/// differences at the ends.
pub fn curve_c1alpha_norm(samples: &[Vec2], alpha: f64, closed: bool) -> Result<f64, HolderError> {
    curve_c1alpha_parts(samples, alpha, closed).map(|p| p.total())
}

/// Same estimate with the summands reported separately.
pub fn curve_c1alpha_parts(
    samples: &[Vec2],
    alpha: f64,
    closed: bool,
) -> Result<CurveNorm, HolderError> {
    check_alpha(alpha)?;
    let n = samples.len();
    if n < 8 {
        return Err(HolderError::TooFewSamples { need: 8, got: n });
    }

    // Arc-length parameterization sanity: consecutive chords comparable.
    let chords: Vec<f64> = (0..if closed { n } else { n - 1 })
        .map(|i| (samples[(i + 1) % n] - samples[i]).norm())
        .collect();
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for &c in &chords {
        lo = lo.min(c);
        hi = hi.max(c);
    }
    if lo <= 0.0 || hi / lo > 3.0 {
        return Err(HolderError::DegenerateSpacing(if lo > 0.0 { hi / lo } else { f64::INFINITY }));
    }

    // Simple-curve check over non-adjacent segment pairs.
    let nseg = chords.len();
    let crossings = par::sum(nseg, |i| {
        let mut hits = 0.0;
        for j in i + 2..nseg {
            if closed && i == 0 && j == nseg - 1 {
                continue;
            }
            let (a, b) = (samples[i], samples[(i + 1) % n]);
            let (c, d) = (samples[j], samples[(j + 1) % n]);
            if segments_cross(a, b, c, d) {
                hits += 1.0;
            }
        }
        hits
    });
    if crossings > 0.0 {
        return Err(HolderError::SelfIntersecting);
    }

    let step = chords.iter().sum::<f64>() / nseg as f64;
    let deriv: Vec<Vec2> = (0..n)
        .map(|i| {
            if closed {
                (samples[(i + 1) % n] - samples[(i + n - 1) % n]) * (1.0 / (2.0 * step))
            } else if i == 0 {
                (samples[1] * 4.0 - samples[0] * 3.0 - samples[2]) * (1.0 / (2.0 * step))
            } else if i == n - 1 {
                (samples[n - 1] * 3.0 - samples[n - 2] * 4.0 + samples[n - 3]) * (1.0 / (2.0 * step))
            } else {
                (samples[i + 1] - samples[i - 1]) * (1.0 / (2.0 * step))
            }
        })
        .collect();

    let sup_curve = par::max(n, |i| samples[i].norm());
    let sup_deriv = par::max(n, |i| deriv[i].norm());
    let seminorm = par::max(n, |i| {
        let mut best = 0.0f64;
        for j in i + 1..n {
            let gap = if closed {
                (j - i).min(n - (j - i)) as f64 * step
            } else {
                (j - i) as f64 * step
            };
            if gap > 0.0 {
                best = best.max((deriv[i] - deriv[j]).norm() / gap.powf(alpha));
            }
        }
        best
    });

    let parts = CurveNorm { sup: sup_curve, sup_deriv, deriv_seminorm: seminorm };
    if parts.total().is_finite() {
        Ok(parts)
    } else {
        Err(HolderError::NonFinite)
    }
}
