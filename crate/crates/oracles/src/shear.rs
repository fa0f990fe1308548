use fields::{Mat2, Vec2};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ShearError {
    #[error("shear strip needs c < d and at least 16 sample nodes")]
    BadStrip,
}

/// Horizontal shear flow `u = (-int_c^{x2} W, 0)` with vorticity `W(x2)`
/// confined to the strip `c <= x2 <= d`. The profile is stored on uniform
/// nodes with its mean removed, so the velocity vanishes on both sides of
/// the strip and the total vorticity is zero.
pub struct ShearProfile {
    c: f64,
    d: f64,
    step: f64,
    w: Vec<f64>,
    /// Trapezoid cumulative of `w` from `c`; zero-mean makes the last
    /// entry vanish to roundoff.
    prim: Vec<f64>,
}

impl ShearProfile {
    pub fn from_samples(c: f64, d: f64, mut samples: Vec<f64>) -> Result<Self, ShearError> {
        let n = samples.len();
        if !(d > c) || n < 16 || samples.iter().any(|v| !v.is_finite()) {
            return Err(ShearError::BadStrip);
        }
        let step = (d - c) / (n - 1) as f64;
        // Remove the trapezoid mean so the primitive returns to zero at d.
        let mut integral = 0.0;
        for k in 0..n - 1 {
            integral += 0.5 * step * (samples[k] + samples[k + 1]);
        }
        let mean = integral / (d - c);
        for v in &mut samples {
            *v -= mean;
        }
        let mut prim = vec![0.0; n];
        for k in 1..n {
            prim[k] = prim[k - 1] + 0.5 * step * (samples[k - 1] + samples[k]);
        }
        Ok(ShearProfile { c, d, step, w: samples, prim })
    }

    pub fn from_fn<F: Fn(f64) -> f64>(c: f64, d: f64, n: usize, w: F) -> Result<Self, ShearError> {
        if !(d > c) || n < 16 {
            return Err(ShearError::BadStrip);
        }
        let step = (d - c) / (n - 1) as f64;
        Self::from_samples(c, d, (0..n).map(|k| w(c + k as f64 * step)).collect())
    }

    /// The mean-removed vorticity profile; zero outside the strip.
    pub fn w(&self, y: f64) -> f64 {
        if y <= self.c || y >= self.d {
            return 0.0;
        }
        let t = (y - self.c) / self.step;
        let i = (t.floor() as usize).min(self.w.len() - 2);
        let frac = t - i as f64;
        self.w[i] * (1.0 - frac) + self.w[i + 1] * frac
    }

    /// `int_c^y W`; zero below the strip and (by the zero mean) above it.
    pub fn primitive(&self, y: f64) -> f64 {
        if y <= self.c {
            return 0.0;
        }
        if y >= self.d {
            return *self.prim.last().expect("profile is nonempty");
        }
        let t = (y - self.c) / self.step;
        let i = (t.floor() as usize).min(self.prim.len() - 2);
        let frac = t - i as f64;
        self.prim[i] * (1.0 - frac) + self.prim[i + 1] * frac
    }

    /// Residual of the zero-mean normalization (the primitive at `d`).
    pub fn mean_residual(&self) -> f64 {
        *self.prim.last().expect("profile is nonempty")
    }
}

pub struct ShearSample {
    pub u: Vec2,
    pub grad_u: Mat2,
    pub omega: f64,
    /// Correction matrix of the horizontal direction; `grad_u - omega * a`
    /// vanishes identically for every shear.
    pub a: Mat2,
}

/// All closed-form fields of the shear at one point.
pub fn shear_fields(p: &ShearProfile, x: Vec2) -> ShearSample {
    let w = p.w(x.y);
    ShearSample {
        u: Vec2::new(-p.primitive(x.y), 0.0),
        grad_u: Mat2::new(0.0, -w, 0.0, 0.0),
        omega: w,
        a: Mat2::new(0.0, -1.0, 0.0, 0.0),
    }
}
