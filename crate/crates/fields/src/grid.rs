//! Uniform cell-centered grids.
//!
//! Sample locations sit at cell centers, so a field value doubles as the
//! midpoint-rule density of its cell and quadrature weights are uniformly
//! `spacing^2`.

use crate::{FieldError, Vec2};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid2 {
    pub nx: usize,
    pub ny: usize,
    /// Center of cell `(0, 0)`.
    pub origin: Vec2,
    pub spacing: f64,
}

impl Grid2 {
    pub fn new(nx: usize, ny: usize, origin: Vec2, spacing: f64) -> Result<Self, FieldError> {
        if nx < 4 || ny < 4 {
            return Err(FieldError::GridTooSmall { nx, ny });
        }
        if !(spacing.is_finite() && spacing > 0.0) {
            return Err(FieldError::BadSpacing(spacing));
        }
        Ok(Grid2 {
            nx,
            ny,
            origin,
            spacing,
        })
    }

    /// An `n x n` grid of cells tiling the square `[-half_width, half_width]^2`.
    pub fn centered_square(n: usize, half_width: f64) -> Result<Self, FieldError> {
        let spacing = 2.0 * half_width / n as f64;
        let o = -half_width + 0.5 * spacing;
        Grid2::new(n, n, Vec2::new(o, o), spacing)
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.nx && j < self.ny);
        j * self.nx + i
    }

    pub fn point(&self, i: usize, j: usize) -> Vec2 {
        Vec2::new(
            self.origin.x + i as f64 * self.spacing,
            self.origin.y + j as f64 * self.spacing,
        )
    }

    /// Fractional cell coordinates of `p`; cell `(i, j)` has coordinates
    /// `(i, j)` at its center.
    pub fn frac_coords(&self, p: Vec2) -> (f64, f64) {
        (
            (p.x - self.origin.x) / self.spacing,
            (p.y - self.origin.y) / self.spacing,
        )
    }

    /// Index of the cell whose center is nearest to `p`, or `None` when the
    /// rounded index falls outside the grid.
    pub fn nearest(&self, p: Vec2) -> Option<(usize, usize)> {
        let (tx, ty) = self.frac_coords(p);
        let i = tx.round();
        let j = ty.round();
        if i < 0.0 || j < 0.0 || i >= self.nx as f64 || j >= self.ny as f64 {
            return None;
        }
        Some((i as usize, j as usize))
    }

    /// Lower-left and upper-right corners of the covered box.
    pub fn bounds(&self) -> (Vec2, Vec2) {
        let h = 0.5 * self.spacing;
        let lo = Vec2::new(self.origin.x - h, self.origin.y - h);
        let hi = Vec2::new(
            self.origin.x + (self.nx as f64 - 0.5) * self.spacing,
            self.origin.y + (self.ny as f64 - 0.5) * self.spacing,
        );
        (lo, hi)
    }

    pub fn contains(&self, p: Vec2) -> bool {
        let (lo, hi) = self.bounds();
        p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y
    }

    /// Cell area, the midpoint quadrature weight.
    pub fn cell_area(&self) -> f64 {
        self.spacing * self.spacing
    }
}
