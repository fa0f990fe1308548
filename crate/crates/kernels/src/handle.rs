//! Tagged handles for the homogeneous kernels, carrying their declared
//! homogeneity degree so tests can confirm the evaluated scaling.

use crate::fundamental::{grad_k2_raw, k2_raw, k3, KernelError};
use fields::{Vec2, Vec3};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelKind {
    /// Planar velocity kernel, degree -1.
    K2,
    /// Gradient of the planar velocity kernel, degree -2.
    GradK2,
    /// Spatial kernel, degree -2.
    K3,
    /// Spatial fundamental solution, degree -1.
    F3,
}

#[derive(Clone, Copy, Debug)]
pub struct KernelHandle {
    pub kind: KernelKind,
    pub dim: usize,
    pub degree: i32,
}

impl KernelHandle {
    pub fn new(kind: KernelKind) -> Self {
        let (dim, degree) = match kind {
            KernelKind::K2 => (2, -1),
            KernelKind::GradK2 => (2, -2),
            KernelKind::K3 => (3, -2),
            KernelKind::F3 => (3, -1),
        };
        KernelHandle { kind, dim, degree }
    }

    /// Euclidean norm of the kernel value at `x` (slice of length `dim`).
    pub fn value_norm(&self, x: &[f64]) -> Result<f64, KernelError> {
        assert_eq!(x.len(), self.dim, "argument dimension mismatch");
        match self.kind {
            KernelKind::K2 => {
                let v = Vec2::new(x[0], x[1]);
                if v.norm_sq() == 0.0 {
                    return Err(KernelError::AtSingularity);
                }
                Ok(k2_raw(v).norm())
            }
            KernelKind::GradK2 => {
                let v = Vec2::new(x[0], x[1]);
                if v.norm_sq() == 0.0 {
                    return Err(KernelError::AtSingularity);
                }
                Ok(grad_k2_raw(v).op_norm())
            }
            KernelKind::K3 => Ok(k3(Vec3::new(x[0], x[1], x[2]))?.norm()),
            KernelKind::F3 => Ok(crate::fundamental::f3(Vec3::new(x[0], x[1], x[2]))?.abs()),
        }
    }

    /// Relative mismatch between the declared homogeneity and the scaling
    /// observed between `x` and `lambda * x`.
    pub fn homogeneity_mismatch(&self, x: &[f64], lambda: f64) -> Result<f64, KernelError> {
        let scaled: Vec<f64> = x.iter().map(|&c| c * lambda).collect();
        let v0 = self.value_norm(x)?;
        let v1 = self.value_norm(&scaled)?;
        let predicted = v0 * lambda.powi(self.degree);
        Ok((v1 - predicted).abs() / predicted.abs().max(f64::MIN_POSITIVE))
    }
}
