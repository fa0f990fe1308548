//! Singular kernels and smooth cutoffs for the velocity-reconstruction
//! integrals: fundamental solutions of the Laplacian, their perpendicular
//! and ordinary gradients, radial bump/cutoff functions, a normalized
//! mollifier, and Monte-Carlo estimators for the weighted kernel norms
//! used by the singular-integral estimates.

mod cutoff;
mod fundamental;
mod handle;
mod mollifier;
pub mod quadrature;
mod star_norm;

pub use cutoff::{
    bump, bump_deriv, bump_radial, grad_bump_radial, grad_mu, mu, smooth_step, smooth_step_deriv,
    CutoffSpec,
};
pub use fundamental::{
    f2, f3, grad_f2, grad_k2, grad_k2_raw, grad2_k2_raw, hess_f2_raw, k2, k2_raw, k3, KernelError,
};
pub use handle::{KernelHandle, KernelKind};
pub use mollifier::{grad_rho_eps, rho, rho_eps, rho_normalization};
pub use star_norm::{kernel_star_norms, PairKernel2, StarNorms};
