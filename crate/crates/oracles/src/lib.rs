//! Closed-form reference flows: radially symmetric vortices, horizontal
//! shears, mollified discs, and a hand-built direction family adapted to
//! the unit vortex patch. Everything here is exact (or tabulated to far
//! below test tolerances), so other crates use these as ground truth.

mod family;
mod mollified;
mod radial;
mod reference;
mod shear;

pub use family::{family_div, family_len, family_member, perturbed_patch_omega, FAMILY_NAMES};
pub use mollified::MollifiedPatch;
pub use radial::{radial_a, radial_a_with, radial_corrected, radial_grad_u, radial_u, ProfileError, RadialProfile};
pub use reference::reference_velocity;
pub use shear::{shear_fields, ShearError, ShearProfile, ShearSample};
