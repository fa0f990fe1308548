//! Pair-enumeration engines behind every grid estimator.
//!
//! Exhaustive mode walks a precomputed offset window around each anchor;
//! sampled mode draws anchors and log-dyadic separations with a seeded
//! generator and snaps the second endpoint to the grid, so its pair set is
//! a subset of the exhaustive one and the estimate can only be lower.

use crate::report::{
    check_alpha, HolderError, HolderReport, PairMode, Shell, DEFAULT_PAIRS_PER_SHELL,
    DEFAULT_SEED, EXHAUSTIVE_LIMIT,
};
use fields::{par, Grid2, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Grid-backed samples seen through magnitude and pair-distance closures.
pub(crate) struct GridSamples<'a> {
    pub grid: &'a Grid2,
    pub mask: Option<&'a [bool]>,
    /// `|f(x_i)|`
    pub mag: &'a (dyn Fn(usize) -> f64 + Sync),
    /// `|f(x_i) - f(x_j)|`
    pub dist: &'a (dyn Fn(usize, usize) -> f64 + Sync),
}

impl GridSamples<'_> {
    fn active(&self, idx: usize) -> bool {
        self.mask.map_or(true, |m| m[idx])
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.grid.len()).filter(|&i| self.active(i)).collect()
    }
}

pub(crate) fn grid_report(
    samples: &GridSamples,
    alpha: f64,
    shell: Shell,
    mode: PairMode,
) -> Result<HolderReport, HolderError> {
    check_alpha(alpha)?;
    let spacing = samples.grid.spacing;
    if shell.min_sep < spacing * (1.0 - 1e-9) {
        return Err(HolderError::ShellBelowSpacing { min_sep: shell.min_sep, spacing });
    }
    let anchors = samples.active_indices();
    if anchors.len() < 2 {
        return Err(HolderError::EmptyMask);
    }

    let linf = par::max(anchors.len(), |k| (samples.mag)(anchors[k]));
    let (seminorm, pairs_used) = match mode {
        PairMode::Exhaustive => exhaustive(samples, alpha, shell),
        PairMode::Sampled { pairs_per_shell, seed } => {
            sampled(samples, &anchors, alpha, shell, pairs_per_shell, seed)
        }
        PairMode::Auto => {
            if anchors.len() <= EXHAUSTIVE_LIMIT {
                exhaustive(samples, alpha, shell)
            } else {
                sampled(samples, &anchors, alpha, shell, DEFAULT_PAIRS_PER_SHELL, DEFAULT_SEED)
            }
        }
    };
    if pairs_used == 0 {
        return Err(HolderError::EmptyShell);
    }
    if !linf.is_finite() || !seminorm.is_finite() {
        return Err(HolderError::NonFinite);
    }
    Ok(HolderReport { alpha, linf, seminorm, pairs_used, shell })
}

/// Half-plane offsets `(di, dj, r^-alpha)` with separation inside the shell.
fn offsets(spacing: f64, alpha: f64, shell: Shell) -> Vec<(i64, i64, f64)> {
    let w = (shell.max_sep / spacing).floor() as i64 + 1;
    let mut out = Vec::new();
    for dj in 0..=w {
        let lo = if dj == 0 { 1 } else { -w };
        for di in lo..=w {
            let r = spacing * ((di * di + dj * dj) as f64).sqrt();
            if r >= shell.min_sep * (1.0 - 1e-12) && r <= shell.max_sep * (1.0 + 1e-12) {
                out.push((di, dj, r.powf(-alpha)));
            }
        }
    }
    out
}

fn exhaustive(samples: &GridSamples, alpha: f64, shell: Shell) -> (f64, usize) {
    let grid = samples.grid;
    let offs = offsets(grid.spacing, alpha, shell);
    let (nx, ny) = (grid.nx as i64, grid.ny as i64);
    let rows: Vec<(f64, u64)> = par::map_collect(grid.ny, |jy| {
        let mut best = 0.0f64;
        let mut count = 0u64;
        for jx in 0..grid.nx {
            let i = jy * grid.nx + jx;
            if !samples.active(i) {
                continue;
            }
            for &(di, dj, inv_ra) in &offs {
                let ox = jx as i64 + di;
                let oy = jy as i64 + dj;
                if ox < 0 || ox >= nx || oy >= ny {
                    continue;
                }
                let j = oy as usize * grid.nx + ox as usize;
                if !samples.active(j) {
                    continue;
                }
                let q = (samples.dist)(i, j) * inv_ra;
                if q > best {
                    best = q;
                }
                count += 1;
            }
        }
        (best, count)
    });
    let mut best = 0.0f64;
    let mut count = 0usize;
    for (b, c) in rows {
        best = best.max(b);
        count += c as usize;
    }
    (best, count)
}

fn sampled(
    samples: &GridSamples,
    anchors: &[usize],
    alpha: f64,
    shell: Shell,
    pairs_per_shell: usize,
    seed: u64,
) -> (f64, usize) {
    let grid = samples.grid;
    let mut edges = vec![shell.min_sep];
    let mut a = shell.min_sep;
    while a * 2.0 < shell.max_sep {
        a *= 2.0;
        edges.push(a);
    }
    edges.push(shell.max_sep);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0.0f64;
    let mut count = 0usize;
    for band in edges.windows(2) {
        let (lo, hi) = (band[0], band[1]);
        let mut accepted = 0usize;
        let mut attempts = 0usize;
        while accepted < pairs_per_shell && attempts < pairs_per_shell * 8 {
            attempts += 1;
            let i = anchors[rng.gen_range(0..anchors.len())];
            let xi = grid.point(i % grid.nx, i / grid.nx);
            let theta = rng.gen::<f64>() * TAU;
            let rho = lo + rng.gen::<f64>() * (hi - lo);
            let target = xi + Vec2::new(rho * theta.cos(), rho * theta.sin());
            let Some((ox, oy)) = grid.nearest(target) else {
                continue;
            };
            let j = grid.idx(ox, oy);
            if j == i || !samples.active(j) {
                continue;
            }
            let r = (grid.point(ox, oy) - xi).norm();
            if r < shell.min_sep || r > shell.max_sep {
                continue;
            }
            let q = (samples.dist)(i, j) * r.powf(-alpha);
            if q > best {
                best = q;
            }
            accepted += 1;
        }
        count += accepted;
    }
    (best, count)
}

/// Holder report over an arbitrary finite point set with scalar values;
/// pairs are enumerated exhaustively.
pub fn holder_report_points(
    points: &[Vec2],
    values: &[f64],
    alpha: f64,
    shell: Shell,
) -> Result<HolderReport, HolderError> {
    check_alpha(alpha)?;
    let n = points.len();
    if n < 2 || values.len() != n {
        return Err(HolderError::TooFewSamples { need: 2, got: n.min(values.len()) });
    }
    let linf = par::max(n, |i| values[i].abs());
    let rows: Vec<(f64, u64)> = par::map_collect(n, |i| {
        let mut best = 0.0f64;
        let mut count = 0u64;
        for j in i + 1..n {
            let r = (points[i] - points[j]).norm();
            if r < shell.min_sep || r > shell.max_sep {
                continue;
            }
            let q = (values[i] - values[j]).abs() * r.powf(-alpha);
            if q > best {
                best = q;
            }
            count += 1;
        }
        (best, count)
    });
    let mut seminorm = 0.0f64;
    let mut pairs_used = 0usize;
    for (b, c) in rows {
        seminorm = seminorm.max(b);
        pairs_used += c as usize;
    }
    if pairs_used == 0 {
        return Err(HolderError::EmptyShell);
    }
    if !linf.is_finite() || !seminorm.is_finite() {
        return Err(HolderError::NonFinite);
    }
    Ok(HolderReport { alpha, linf, seminorm, pairs_used, shell })
}
