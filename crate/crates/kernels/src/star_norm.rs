//! Monte-Carlo estimation of the weighted pair-kernel norms
//!
//! ```text
//! star(L)  = sup_{x,y} ( |x-y|^2 |L(x,y)| + |x-y|^3 |grad_x L(x,y)| )
//! star2(L) = star(L) + sup_x  integral_{|y-x| >= 1} |L(x,y)| dy
//! ```
//!
//! for planar kernels.  The supremum is searched with anchor points `x`
//! stratified over a caller-supplied box and offsets `y - x` drawn
//! log-uniformly in radius, which resolves the near-diagonal scaling of
//! singular kernels; the far-field tail is a midpoint integral over the
//! kernel's `y`-support.  Seeded sampling keeps estimates reproducible.

use fields::{par, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct PairKernel2<'a> {
    /// Largest absolute component of `L(x, y)`.
    pub value: &'a (dyn Fn(Vec2, Vec2) -> f64 + Sync),
    /// Largest absolute component of the `x`-gradient of `L(x, y)`.
    pub grad_x: &'a (dyn Fn(Vec2, Vec2) -> f64 + Sync),
    /// Box of anchor points `x` to stratify over.
    pub x_box: (Vec2, Vec2),
    /// Box containing the support of `L(x, .)` for every anchor.
    pub y_support: (Vec2, Vec2),
}

#[derive(Clone, Copy, Debug)]
pub struct StarNorms {
    pub star: f64,
    pub star2: f64,
}

fn box_diameter(lo: Vec2, hi: Vec2) -> f64 {
    (hi - lo).norm()
}

/// Estimate both weighted norms with `budget` near-diagonal samples.
///
/// A non-finite kernel sample makes the corresponding norm infinite, which
/// callers should treat as "unbounded kernel".
pub fn kernel_star_norms(k: &PairKernel2, budget: usize, seed: u64) -> StarNorms {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (xlo, xhi) = k.x_box;
    let (ylo, yhi) = k.y_support;
    let diam = box_diameter(
        Vec2::new(xlo.x.min(ylo.x), xlo.y.min(ylo.y)),
        Vec2::new(xhi.x.max(yhi.x), xhi.y.max(yhi.y)),
    )
    .max(1e-3);
    let (log_min, log_max) = ((1e-4f64).ln(), diam.ln());

    let mut star = 0.0f64;
    for _ in 0..budget {
        let x = Vec2::new(
            rng.gen_range(xlo.x..=xhi.x),
            rng.gen_range(xlo.y..=xhi.y),
        );
        // Half the samples walk log-radially away from the anchor, the other
        // half probe the support box uniformly.
        let y = if rng.gen_bool(0.5) {
            let r = (rng.gen_range(log_min..=log_max)).exp();
            let th = rng.gen_range(0.0..std::f64::consts::TAU);
            x + Vec2::new(th.cos(), th.sin()) * r
        } else {
            Vec2::new(rng.gen_range(ylo.x..=yhi.x), rng.gen_range(ylo.y..=yhi.y))
        };
        let d = (x - y).norm();
        if d == 0.0 {
            continue;
        }
        let v = (k.value)(x, y);
        let g = (k.grad_x)(x, y);
        if !v.is_finite() || !g.is_finite() {
            return StarNorms {
                star: f64::INFINITY,
                star2: f64::INFINITY,
            };
        }
        star = star.max(d * d * v.abs() + d * d * d * g.abs());
    }

    // Far-field L1 tail over a coarse anchor lattice.
    let probes = 5usize;
    let n = 160usize;
    let hx = (yhi.x - ylo.x) / n as f64;
    let hy = (yhi.y - ylo.y) / n as f64;
    let tails = par::map_collect(probes * probes, |p| {
        let (pi, pj) = (p % probes, p / probes);
        let x = Vec2::new(
            xlo.x + (pi as f64 + 0.5) * (xhi.x - xlo.x) / probes as f64,
            xlo.y + (pj as f64 + 0.5) * (xhi.y - xlo.y) / probes as f64,
        );
        let mut acc = 0.0;
        for j in 0..n {
            for i in 0..n {
                let y = Vec2::new(
                    ylo.x + (i as f64 + 0.5) * hx,
                    ylo.y + (j as f64 + 0.5) * hy,
                );
                if (y - x).norm_sq() < 1.0 {
                    continue;
                }
                acc += (k.value)(x, y).abs() * hx * hy;
            }
        }
        acc
    });
    let tail = tails.into_iter().fold(0.0f64, f64::max);
    if !tail.is_finite() {
        return StarNorms {
            star: f64::INFINITY,
            star2: f64::INFINITY,
        };
    }
    StarNorms {
        star,
        star2: star + tail,
    }
}
