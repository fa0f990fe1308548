use fields::{par, ScalarField2, Vec2};
use kernels::k2_raw;

fn direct_sum(cells: &[(Vec2, f64)], skip_radius: f64, targets: &[Vec2]) -> Vec<Vec2> {
    let skip_sq = skip_radius * skip_radius;
    par::map_collect(targets.len(), |t| {
        let x = targets[t];
        let mut acc = Vec2::ZERO;
        for (y, mass) in cells {
            let d = x - *y;
            if d.norm_sq() > skip_sq {
                acc += k2_raw(d) * *mass;
            }
        }
        acc
    })
}

/// Velocity induced by a sampled vorticity field, intended as a slow but
/// trustworthy comparison point: midpoint quadrature at the native spacing
/// and at a 2x block-coarsened spacing, combined by Richardson
/// extrapolation of the midpoint rule's quadratic error. Cells within half
/// a spacing of the target are dropped (the integrand is odd there).
pub fn reference_velocity(omega: &ScalarField2, targets: &[Vec2]) -> Vec<Vec2> {
    let grid = omega.grid;
    let area = grid.cell_area();

    let mut fine = Vec::new();
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let v = omega.at(i, j);
            if v != 0.0 {
                fine.push((grid.point(i, j), v * area));
            }
        }
    }

    // 2x2 block aggregation; odd remainder rows/columns stay single cells.
    let mut coarse = Vec::new();
    let mut jb = 0;
    while jb < grid.ny {
        let jt = (jb + 2).min(grid.ny);
        let mut ib = 0;
        while ib < grid.nx {
            let it = (ib + 2).min(grid.nx);
            let mut mass = 0.0;
            let mut center = Vec2::ZERO;
            let mut count = 0.0;
            for j in jb..jt {
                for i in ib..it {
                    mass += omega.at(i, j) * area;
                    center += grid.point(i, j);
                    count += 1.0;
                }
            }
            if mass != 0.0 {
                coarse.push((center * (1.0 / count), mass));
            }
            ib = it;
        }
        jb = jt;
    }

    let half = 0.5 * grid.spacing;
    let fine_vals = direct_sum(&fine, half, targets);
    let coarse_vals = direct_sum(&coarse, 2.0 * half, targets);
    fine_vals
        .into_iter()
        .zip(coarse_vals)
        .map(|(f, c)| (f * 4.0 - c) * (1.0 / 3.0))
        .collect()
}
