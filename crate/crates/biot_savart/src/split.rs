//! Near/far splitting of the velocity-gradient integral.
//!
//! Multiplying the kernel by a radial window `a_r` (one inside radius `r`,
//! zero outside `2r`) splits the PV integral of `grad K` against the
//! vorticity into a near part and a far part.  The near part is evaluated
//! through the annular window `mu_{r,h} = a_r (1 - a_h)`, which vanishes
//! near the origin, so `grad(mu K)` is bounded and the sum needs no
//! principal value at all; the far part's kernel `grad((1 - a_r) K)` decays
//! like `|x - y|^{-2}` and is summed against the nonzero cells only.
//!
//! Shrinking `h` does not recover the plain PV integral: the window-gradient
//! term `K (x) grad(a_h)` concentrates a fixed boundary moment at the
//! origin, `int K (x) grad(a_h) dz = -J/2` with `J` the quarter-turn,
//! independent of `h`.  The near and far parts therefore reassemble the
//! *full* velocity gradient,
//!
//!   near + far -> PV int grad K(x - y) omega(y) dy + (omega(x) / 2) J,
//!
//! not its PV part alone.  The crate tests pin this down on a plateau
//! probe, where the PV part vanishes by symmetry while the sum reproduces
//! the rotation term exactly.
//!
//! The trace of the near matrix is returned as a quadrature diagnostic: the
//! kernel is tangential while the window gradient is radial, and `grad K`
//! is trace-free, so in two dimensions the trace vanishes identically in
//! exact arithmetic.

use crate::error::BiotSavartError;
use crate::vorticity::VorticityField;
use fields::{Mat2, Vec2};
use kernels::{
    bump_radial, grad_bump_radial, grad_k2_raw, grad_mu, k2_raw, mu, CutoffSpec,
};

/// The two halves of the split and the trace diagnostic of the near part.
#[derive(Clone, Copy, Debug)]
pub struct PvSplit {
    pub near: Mat2,
    pub far: Mat2,
    pub tr_near: f64,
}

/// Evaluates the near/far split of the velocity-gradient integral at `x`
/// with the given annular window.  The split radius `cutoff.r` must lie in
/// `[4 x spacing, 1]` and the inner scale `cutoff.h` must resolve at least
/// two cells.
pub fn pv_split(
    vf: &VorticityField,
    x: Vec2,
    cutoff: CutoffSpec,
) -> Result<PvSplit, BiotSavartError> {
    let s = vf.spacing();
    if !(cutoff.r >= 4.0 * s && cutoff.r <= 1.0) {
        return Err(BiotSavartError::BadPvRadius {
            radius: cutoff.r,
            min: 4.0 * s,
        });
    }
    if cutoff.h < 2.0 * s {
        return Err(BiotSavartError::UnresolvedCutoff {
            h: cutoff.h,
            min: 2.0 * s,
        });
    }

    let g = vf.grid();
    let area = g.cell_area();
    let outer = cutoff.outer_radius();
    let outer2 = outer * outer;
    let h2 = cutoff.h * cutoff.h;

    // Near: grad(mu K) = mu grad K + K (x) grad mu, supported on the
    // annulus h <= |z| <= 2r; bounded, so an ordinary midpoint sum.
    let mut near = Mat2::ZERO;
    let (tx, ty) = g.frac_coords(x);
    let reach = outer / s + 1.0;
    let i0 = (tx - reach).floor().max(0.0) as usize;
    let j0 = (ty - reach).floor().max(0.0) as usize;
    let i1 = ((tx + reach).ceil() as usize).min(g.nx - 1);
    let j1 = ((ty + reach).ceil() as usize).min(g.ny - 1);
    for j in j0..=j1 {
        for i in i0..=i1 {
            let w = vf.omega().at(i, j);
            if w == 0.0 {
                continue;
            }
            let z = x - g.point(i, j);
            let z2 = z.norm_sq();
            if z2 <= h2 || z2 >= outer2 {
                continue;
            }
            let term = Mat2::outer(k2_raw(z), grad_mu(cutoff, z)) + grad_k2_raw(z) * mu(cutoff, z);
            near += term * (w * area);
        }
    }

    // Far: grad((1 - a_r) K) = (1 - a_r) grad K - K (x) grad a_r,
    // vanishing identically inside radius r.
    let mut far = Mat2::ZERO;
    let r2 = cutoff.r * cutoff.r;
    for &(c, m) in vf.sources() {
        let z = x - c;
        if z.norm_sq() <= r2 {
            continue;
        }
        let term = grad_k2_raw(z) * (1.0 - bump_radial(cutoff.r, z))
            - Mat2::outer(k2_raw(z), grad_bump_radial(cutoff.r, z));
        far += term * m;
    }

    Ok(PvSplit {
        near,
        far,
        tr_near: near.trace(),
    })
}
