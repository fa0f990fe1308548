//! Holder reports for scalar, vector, and matrix grid fields, with optional
//! subdomain masks.
//!
//! Vector samples are compared in the Euclidean norm, matrix samples in the
//! operator norm, so the reports match the pointwise norms used by the
//! velocity-gradient bounds.

use crate::pairs::{grid_report, GridSamples};
use crate::report::{HolderError, HolderReport, PairMode, Shell};
use fields::{MatrixField2, ScalarField2, VectorField2};

pub fn holder_report(
    f: &ScalarField2,
    alpha: f64,
    shell: Shell,
    mode: PairMode,
) -> Result<HolderReport, HolderError> {
    scalar_masked(f, None, alpha, shell, mode)
}

/// Report restricted to pairs whose endpoints both lie in the mask.
pub fn local_holder(
    f: &ScalarField2,
    mask: &[bool],
    beta: f64,
    shell: Shell,
    mode: PairMode,
) -> Result<HolderReport, HolderError> {
    scalar_masked(f, Some(mask), beta, shell, mode)
}

fn scalar_masked(
    f: &ScalarField2,
    mask: Option<&[bool]>,
    alpha: f64,
    shell: Shell,
    mode: PairMode,
) -> Result<HolderReport, HolderError> {
    let mag = |i: usize| f.data[i].abs();
    let dist = |i: usize, j: usize| (f.data[i] - f.data[j]).abs();
    grid_report(&GridSamples { grid: &f.grid, mask, mag: &mag, dist: &dist }, alpha, shell, mode)
}

pub fn holder_report_vec(
    f: &VectorField2,
    alpha: f64,
    shell: Shell,
    mode: PairMode,
) -> Result<HolderReport, HolderError> {
    let mag = |i: usize| {
        fields::Vec2::new(f.x[i], f.y[i]).norm()
    };
    let dist = |i: usize, j: usize| {
        fields::Vec2::new(f.x[i] - f.x[j], f.y[i] - f.y[j]).norm()
    };
    grid_report(&GridSamples { grid: &f.grid, mask: None, mag: &mag, dist: &dist }, alpha, shell, mode)
}

pub fn holder_report_mat(
    f: &MatrixField2,
    alpha: f64,
    shell: Shell,
    mode: PairMode,
) -> Result<HolderReport, HolderError> {
    matrix_masked(f, None, alpha, shell, mode)
}

pub fn local_holder_mat(
    f: &MatrixField2,
    mask: &[bool],
    beta: f64,
    shell: Shell,
    mode: PairMode,
) -> Result<HolderReport, HolderError> {
    matrix_masked(f, Some(mask), beta, shell, mode)
}

fn matrix_masked(
    f: &MatrixField2,
    mask: Option<&[bool]>,
    alpha: f64,
    shell: Shell,
    mode: PairMode,
) -> Result<HolderReport, HolderError> {
    let mag = |i: usize| f.at_flat(i).op_norm();
    let dist = |i: usize, j: usize| (f.at_flat(i) - f.at_flat(j)).op_norm();
    grid_report(&GridSamples { grid: &f.grid, mask, mag: &mag, dist: &dist }, alpha, shell, mode)
}
