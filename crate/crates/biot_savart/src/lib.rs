//! Velocity and velocity-gradient recovery from planar vorticity.
//!
//! Everything is built on direct midpoint summation against a compactly
//! supported vorticity snapshot: the velocity convolution, the
//! principal-value gradient with its rotation/strain decomposition, the
//! directional pairing identities that trade a kernel derivative for a
//! derivative of the data, the near/far splitting of the gradient integral
//! by annular windows, and the windowed singular transforms whose Holder
//! bounds the diagnostics measure.  Evaluation is embarrassingly parallel
//! over targets against an immutable snapshot and deterministic for a
//! fixed grid.

mod directional;
mod error;
mod gradient;
mod singular;
mod split;
mod velocity;
mod vorticity;

pub use directional::{directional_grad_u, k_curl_div_residual, perp_directional_residual};
pub use error::BiotSavartError;
pub use gradient::{
    grad_velocity, grad_velocity_at, grad_velocity_grid, GradSample, GradVelocityField,
};
pub use singular::{
    singular_transform_matrix, singular_transform_scalar, window_gradient_pairing,
    window_potential_pairing,
};
pub use split::{pv_split, PvSplit};
pub use velocity::{velocity, velocity_grid, velocity_on_grid};
pub use vorticity::VorticityField;
