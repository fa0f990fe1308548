//! Small dense linear algebra, uniform grids, and sampled field containers
//! shared by the vortex solver and the regularity diagnostics.
//!
//! Everything here is deterministic: operator norms use closed-form
//! singular values rather than iteration, and the parallel helpers reduce
//! over fixed chunks so results do not depend on thread scheduling.

mod error;
mod fd;
mod field;
mod grid;
mod interp;
pub mod par;
mod snapshot;
mod vec;

pub use error::FieldError;
pub use fd::{curl, divergence, gradient, jacobian};
pub use field::{MatrixField2, ScalarField2, VectorField2};
pub use grid::Grid2;
pub use snapshot::{read_scalar, write_scalar, SNAPSHOT_MAGIC};
pub use vec::{Mat2, Mat3, Vec2, Vec3};
