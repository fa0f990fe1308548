//! Scalar-, vector-, and matrix-valued fields sampled on a [`Grid2`].

use crate::interp::{bicubic, bilinear};
use crate::{par, FieldError, Grid2, Mat2, Vec2};

/// A scalar field sampled at cell centers, stored row-major (`j * nx + i`).
#[derive(Clone, Debug)]
pub struct ScalarField2 {
    pub grid: Grid2,
    pub data: Vec<f64>,
}

impl ScalarField2 {
    pub fn zeros(grid: Grid2) -> Self {
        ScalarField2 {
            grid,
            data: vec![0.0; grid.len()],
        }
    }

    pub fn from_data(grid: Grid2, data: Vec<f64>) -> Result<Self, FieldError> {
        if data.len() != grid.len() {
            return Err(FieldError::DataLengthMismatch {
                len: data.len(),
                nx: grid.nx,
                ny: grid.ny,
            });
        }
        Ok(ScalarField2 { grid, data })
    }

    /// Sample `f` at every cell center, in parallel.
    pub fn from_fn<F>(grid: Grid2, f: F) -> Self
    where
        F: Fn(Vec2) -> f64 + Sync,
    {
        let nx = grid.nx;
        let data = par::map_collect(grid.len(), |k| f(grid.point(k % nx, k / nx)));
        ScalarField2 { grid, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.data[self.grid.idx(i, j)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let k = self.grid.idx(i, j);
        self.data[k] = v;
    }

    pub fn sample_bilinear(&self, p: Vec2) -> f64 {
        let (tx, ty) = self.grid.frac_coords(p);
        bilinear(&self.grid, &self.data, tx, ty)
    }

    pub fn sample_bicubic(&self, p: Vec2) -> f64 {
        let (tx, ty) = self.grid.frac_coords(p);
        bicubic(&self.grid, &self.data, tx, ty)
    }

    pub fn linf(&self) -> f64 {
        par::max(self.data.len(), |k| self.data[k].abs())
    }

    pub fn l1(&self) -> f64 {
        self.grid.cell_area() * par::sum(self.data.len(), |k| self.data[k].abs())
    }

    pub fn l2(&self) -> f64 {
        (self.grid.cell_area() * par::sum(self.data.len(), |k| self.data[k] * self.data[k])).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Pointwise combination with another field on the same grid.
    pub fn zip_with<F>(&self, other: &ScalarField2, f: F) -> Result<ScalarField2, FieldError>
    where
        F: Fn(f64, f64) -> f64 + Sync,
    {
        if self.grid != other.grid {
            return Err(FieldError::GridMismatch);
        }
        let data = par::map_collect(self.data.len(), |k| f(self.data[k], other.data[k]));
        Ok(ScalarField2 {
            grid: self.grid,
            data,
        })
    }
}

/// A vector field with component planes stored like [`ScalarField2`].
#[derive(Clone, Debug)]
pub struct VectorField2 {
    pub grid: Grid2,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

impl VectorField2 {
    pub fn zeros(grid: Grid2) -> Self {
        VectorField2 {
            grid,
            x: vec![0.0; grid.len()],
            y: vec![0.0; grid.len()],
        }
    }

    pub fn from_fn<F>(grid: Grid2, f: F) -> Self
    where
        F: Fn(Vec2) -> Vec2 + Sync,
    {
        let nx = grid.nx;
        let vals = par::map_collect(grid.len(), |k| f(grid.point(k % nx, k / nx)));
        let mut out = VectorField2::zeros(grid);
        for (k, v) in vals.into_iter().enumerate() {
            out.x[k] = v.x;
            out.y[k] = v.y;
        }
        out
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Vec2 {
        let k = self.grid.idx(i, j);
        Vec2::new(self.x[k], self.y[k])
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Vec2) {
        let k = self.grid.idx(i, j);
        self.x[k] = v.x;
        self.y[k] = v.y;
    }

    pub fn sample_bilinear(&self, p: Vec2) -> Vec2 {
        let (tx, ty) = self.grid.frac_coords(p);
        Vec2::new(
            bilinear(&self.grid, &self.x, tx, ty),
            bilinear(&self.grid, &self.y, tx, ty),
        )
    }

    pub fn linf(&self) -> f64 {
        par::max(self.x.len(), |k| {
            Vec2::new(self.x[k], self.y[k]).norm()
        })
    }

    pub fn is_finite(&self) -> bool {
        self.x.iter().chain(self.y.iter()).all(|v| v.is_finite())
    }
}

/// A 2x2-matrix field with one plane per entry.
#[derive(Clone, Debug)]
pub struct MatrixField2 {
    pub grid: Grid2,
    pub xx: Vec<f64>,
    pub xy: Vec<f64>,
    pub yx: Vec<f64>,
    pub yy: Vec<f64>,
}

impl MatrixField2 {
    pub fn zeros(grid: Grid2) -> Self {
        let n = grid.len();
        MatrixField2 {
            grid,
            xx: vec![0.0; n],
            xy: vec![0.0; n],
            yx: vec![0.0; n],
            yy: vec![0.0; n],
        }
    }

    pub fn from_fn<F>(grid: Grid2, f: F) -> Self
    where
        F: Fn(Vec2) -> Mat2 + Sync,
    {
        let nx = grid.nx;
        let vals = par::map_collect(grid.len(), |k| f(grid.point(k % nx, k / nx)));
        let mut out = MatrixField2::zeros(grid);
        for (k, m) in vals.into_iter().enumerate() {
            out.set_flat(k, m);
        }
        out
    }

    #[inline]
    pub fn at_flat(&self, k: usize) -> Mat2 {
        Mat2::new(self.xx[k], self.xy[k], self.yx[k], self.yy[k])
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Mat2 {
        self.at_flat(self.grid.idx(i, j))
    }

    #[inline]
    pub fn set_flat(&mut self, k: usize, m: Mat2) {
        self.xx[k] = m.m[0][0];
        self.xy[k] = m.m[0][1];
        self.yx[k] = m.m[1][0];
        self.yy[k] = m.m[1][1];
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, m: Mat2) {
        let k = self.grid.idx(i, j);
        self.set_flat(k, m);
    }

    pub fn sample_bilinear(&self, p: Vec2) -> Mat2 {
        let (tx, ty) = self.grid.frac_coords(p);
        Mat2::new(
            bilinear(&self.grid, &self.xx, tx, ty),
            bilinear(&self.grid, &self.xy, tx, ty),
            bilinear(&self.grid, &self.yx, tx, ty),
            bilinear(&self.grid, &self.yy, tx, ty),
        )
    }

    /// Supremum of the pointwise operator norm.
    pub fn sup_op_norm(&self) -> f64 {
        par::max(self.xx.len(), |k| self.at_flat(k).op_norm())
    }

    pub fn is_finite(&self) -> bool {
        self.xx
            .iter()
            .chain(self.xy.iter())
            .chain(self.yx.iter())
            .chain(self.yy.iter())
            .all(|v| v.is_finite())
    }
}
