//! Midpoint-rule convolutions of a vector kernel against a compactly
//! supported scalar density.
//!
//! The density's nonzero cells are gathered once (center, mass) and summed
//! in grid order per target; targets are processed in parallel, so results
//! are deterministic for a fixed grid regardless of thread count.

use fields::{par, ScalarField2, Vec2};

/// Nonzero cells of `f` as `(center, value * cell_area)`, in grid order.
pub fn source_cells(f: &ScalarField2) -> Vec<(Vec2, f64)> {
    let area = f.grid.cell_area();
    let mut out = Vec::new();
    for j in 0..f.grid.ny {
        for i in 0..f.grid.nx {
            let v = f.at(i, j);
            if v != 0.0 {
                out.push((f.grid.point(i, j), v * area));
            }
        }
    }
    out
}

/// `(kernel * f)(x)` for each target, skipping sources within
/// `skip_radius` of the target (the singular cell).
pub fn convolve_vec<K>(kernel: K, sources: &[(Vec2, f64)], targets: &[Vec2], skip_radius: f64) -> Vec<Vec2>
where
    K: Fn(Vec2) -> Vec2 + Sync + Send,
{
    let skip2 = skip_radius * skip_radius;
    par::map_collect(targets.len(), |t| {
        let x = targets[t];
        let mut acc = Vec2::ZERO;
        for &(p, m) in sources {
            let d = x - p;
            if d.norm_sq() <= skip2 {
                continue;
            }
            acc += kernel(d) * m;
        }
        acc
    })
}
