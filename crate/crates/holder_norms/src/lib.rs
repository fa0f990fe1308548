//! Discrete Holder-norm estimators on grid-sampled fields, point sets, and
//! closed curves, plus the negative-exponent estimate obtained through the
//! Newtonian-potential gradient.
//!
//! All estimators are sups of difference quotients over an explicit pair
//! set, so they lower-bound the continuum norms; sampling bias is always
//! downward.

mod curve;
mod estimators;
mod neg;
mod pairs;
mod report;

pub use curve::{curve_c1alpha_norm, curve_c1alpha_parts, CurveNorm};
pub use estimators::{
    holder_report, holder_report_mat, holder_report_vec, local_holder, local_holder_mat,
};
pub use neg::{neg_holder_estimate, neg_holder_from_field, potential_gradient};
pub use pairs::holder_report_points;
pub use report::{HolderError, HolderReport, NegHolderReport, PairMode, Shell};
