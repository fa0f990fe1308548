use std::f64::consts::TAU;

use fields::{Mat2, Vec2};
use kernels::rho;

use crate::radial::RadialProfile;

/// Radial profile of the disc indicator of radius `radius` mollified at
/// scale `eps`, tabulated densely together with its swirl primitive
/// `G(r) = int_0^r rho g`. The profile is `1` inside `radius - 2 eps`,
/// `0` outside `radius + 2 eps`, and smooth in between.
pub struct MollifiedPatch {
    pub radius: f64,
    pub eps: f64,
    dr: f64,
    g: Vec<f64>,
    big_g: Vec<f64>,
}

/// Angular measure of the circle of radius `s` about a point at distance
/// `r` from the origin that lies inside the disc of radius `big_r`.
fn disc_aperture(r: f64, s: f64, big_r: f64) -> f64 {
    if r < 1e-14 {
        return if s < big_r { TAU } else { 0.0 };
    }
    if s <= big_r - r {
        return TAU;
    }
    if s <= r - big_r || s >= r + big_r {
        return 0.0;
    }
    2.0 * ((r * r + s * s - big_r * big_r) / (2.0 * r * s)).clamp(-1.0, 1.0).acos()
}

impl MollifiedPatch {
    pub fn new(radius: f64, eps: f64) -> Self {
        assert!(radius > 0.0 && eps > 0.0 && 2.0 * eps < radius, "mollification scale must fit inside the disc");
        let dr = eps / 64.0;
        let extent = radius + 2.0 * eps + 2.0 * dr;
        let n = (extent / dr).ceil() as usize + 1;

        // g(r) = int rho_eps(s) s * aperture(r, s) ds over s in [0, 2 eps],
        // by composite Simpson.
        let panels = 256;
        let ds = 2.0 * eps / panels as f64;
        let weight = |k: usize| -> f64 {
            if k == 0 || k == panels {
                1.0
            } else if k % 2 == 1 {
                4.0
            } else {
                2.0
            }
        };
        let g: Vec<f64> = (0..n)
            .map(|i| {
                let r = i as f64 * dr;
                let mut acc = 0.0;
                for k in 0..=panels {
                    let s = k as f64 * ds;
                    let radial_density = rho(2, s / eps) / (eps * eps);
                    acc += weight(k) * radial_density * s * disc_aperture(r, s, radius);
                }
                acc * ds / 3.0
            })
            .collect();

        let mut big_g = vec![0.0; n];
        for i in 1..n {
            let (ra, rb) = ((i - 1) as f64 * dr, i as f64 * dr);
            big_g[i] = big_g[i - 1] + 0.5 * dr * (ra * g[i - 1] + rb * g[i]);
        }

        MollifiedPatch { radius, eps, dr, g, big_g }
    }

    fn interp(table: &[f64], dr: f64, r: f64, beyond: f64) -> f64 {
        let t = r.abs() / dr;
        let i = t.floor() as usize;
        if i + 1 >= table.len() {
            return beyond;
        }
        let frac = t - i as f64;
        table[i] * (1.0 - frac) + table[i + 1] * frac
    }

    /// The mollified indicator profile `g(r)`.
    pub fn omega(&self, r: f64) -> f64 {
        Self::interp(&self.g, self.dr, r, 0.0)
    }

    /// Swirl primitive `G(r)`; constant (the total mass over 2 pi) beyond
    /// the support.
    pub fn big_g(&self, r: f64) -> f64 {
        let last = *self.big_g.last().expect("table is nonempty");
        Self::interp(&self.big_g, self.dr, r, last)
    }

    pub fn u(&self, x: Vec2) -> Vec2 {
        let r2 = x.norm_sq();
        if r2 < 1e-300 {
            return Vec2::ZERO;
        }
        x.perp() * (self.big_g(r2.sqrt()) / r2)
    }

    pub fn grad_u(&self, x: Vec2) -> Mat2 {
        let r2 = x.norm_sq();
        if r2 < 1e-300 {
            return Mat2::ROT90 * (self.omega(0.0) / 2.0);
        }
        let r = r2.sqrt();
        let cross = 2.0 * x.x * x.y;
        let diff = x.y * x.y - x.x * x.x;
        let strain = Mat2::new(cross, diff, diff, -cross);
        strain * (self.big_g(r) / (r2 * r2)) + Mat2::outer(x.perp(), x) * (self.omega(r) / r2)
    }

    /// Sharp counterpart (the unmollified patch), for comparisons.
    pub fn sharp(&self) -> RadialProfile {
        RadialProfile::patch(self.radius)
    }
}
