//! Compactly supported vorticity snapshots.
//!
//! A [`VorticityField`] wraps a scalar grid sample of the vorticity together
//! with everything the reconstruction integrals ask for repeatedly: the
//! nonzero cells as midpoint quadrature sources, the support bounding box and
//! its distance to the grid boundary, and the `L^1`, `L^2`, `L^inf` norms.
//! The wrapped field is immutable, so evaluation over many targets can run
//! in parallel against one snapshot.

use crate::error::BiotSavartError;
use fields::{Grid2, ScalarField2, Vec2};
use kernels::quadrature::source_cells;

/// Vorticity sample with compact support strictly inside its grid box.
#[derive(Clone, Debug)]
pub struct VorticityField {
    omega: ScalarField2,
    sources: Vec<(Vec2, f64)>,
    support_idx: Option<(usize, usize, usize, usize)>,
    support_lo: Vec2,
    support_hi: Vec2,
    margin: f64,
    support_radius: f64,
    l1: f64,
    l2: f64,
    linf: f64,
}

impl VorticityField {
    /// Wraps `omega`, rejecting non-finite samples and fields whose support
    /// reaches the outermost cell ring (the far-field sums assume the
    /// support ends strictly inside the box).
    pub fn new(omega: ScalarField2) -> Result<Self, BiotSavartError> {
        if !omega.is_finite() {
            return Err(BiotSavartError::NonFinite);
        }
        let g = omega.grid;
        for i in 0..g.nx {
            if omega.at(i, 0) != 0.0 || omega.at(i, g.ny - 1) != 0.0 {
                return Err(BiotSavartError::SupportTouchesBoundary);
            }
        }
        for j in 0..g.ny {
            if omega.at(0, j) != 0.0 || omega.at(g.nx - 1, j) != 0.0 {
                return Err(BiotSavartError::SupportTouchesBoundary);
            }
        }

        let sources = source_cells(&omega);
        let mut support_idx: Option<(usize, usize, usize, usize)> = None;
        for j in 0..g.ny {
            for i in 0..g.nx {
                if omega.at(i, j) != 0.0 {
                    support_idx = Some(match support_idx {
                        None => (i, i, j, j),
                        Some((i0, i1, j0, j1)) => (i0.min(i), i1.max(i), j0.min(j), j1.max(j)),
                    });
                }
            }
        }

        let half = 0.5 * g.spacing;
        let (box_lo, box_hi) = g.bounds();
        let (support_lo, support_hi, margin, support_radius) = match support_idx {
            None => {
                let c = Vec2::new(0.5 * (box_lo.x + box_hi.x), 0.5 * (box_lo.y + box_hi.y));
                (c, c, 0.5 * (box_hi.x - box_lo.x), 0.0)
            }
            Some((i0, i1, j0, j1)) => {
                let lo = g.point(i0, j0) - Vec2::new(half, half);
                let hi = g.point(i1, j1) + Vec2::new(half, half);
                let mut rad2 = 0.0f64;
                for &(c, _) in &sources {
                    rad2 = rad2.max(c.norm_sq());
                }
                let margin = (lo.x - box_lo.x)
                    .min(lo.y - box_lo.y)
                    .min(box_hi.x - hi.x)
                    .min(box_hi.y - hi.y);
                (lo, hi, margin, rad2.sqrt() + half * std::f64::consts::SQRT_2)
            }
        };

        let l1 = omega.l1();
        let l2 = omega.l2();
        let linf = omega.linf();
        Ok(VorticityField {
            omega,
            sources,
            support_idx,
            support_lo,
            support_hi,
            margin,
            support_radius,
            l1,
            l2,
            linf,
        })
    }

    pub fn grid(&self) -> &Grid2 {
        &self.omega.grid
    }

    pub fn spacing(&self) -> f64 {
        self.omega.grid.spacing
    }

    pub fn omega(&self) -> &ScalarField2 {
        &self.omega
    }

    /// Vorticity at an arbitrary point: bilinear inside the box (exact at
    /// cell centers), zero outside.
    pub fn omega_at(&self, x: Vec2) -> f64 {
        if self.omega.grid.contains(x) {
            self.omega.sample_bilinear(x)
        } else {
            0.0
        }
    }

    /// Nonzero cells as `(center, value * cell_area)` quadrature sources.
    pub fn sources(&self) -> &[(Vec2, f64)] {
        &self.sources
    }

    /// Bounding box of the nonzero cells (outer cell edges).
    pub fn support_box(&self) -> (Vec2, Vec2) {
        (self.support_lo, self.support_hi)
    }

    /// Inclusive index rectangle `(i0, i1, j0, j1)` of the nonzero cells,
    /// or `None` for an identically zero field.
    pub fn support_index_box(&self) -> Option<(usize, usize, usize, usize)> {
        self.support_idx
    }

    /// Distance from the support box to the grid boundary.
    pub fn support_margin(&self) -> f64 {
        self.margin
    }

    /// Radius of a disc about the origin covering every nonzero cell.
    pub fn support_radius(&self) -> f64 {
        self.support_radius
    }

    pub fn l1(&self) -> f64 {
        self.l1
    }

    pub fn l2(&self) -> f64 {
        self.l2
    }

    pub fn linf(&self) -> f64 {
        self.linf
    }

    /// `max(L^1, L^inf)`, the natural size of data lying in both spaces.
    pub fn l1_linf(&self) -> f64 {
        self.l1.max(self.linf)
    }
}
