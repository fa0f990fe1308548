use fields::Vec2;
use kernels::{smooth_step, smooth_step_deriv};

use crate::mollified::MollifiedPatch;

/// Where the tangential member ramps on (and the interior member ramps
/// off): the transition lives on `0.12 <= r <= 0.24`, well inside the
/// unit patch.
const RAMP_LO: f64 = 0.12;
const RAMP_WIDTH: f64 = 0.12;

pub const FAMILY_NAMES: [&str; 3] = ["theta", "core", "probe"];

pub fn family_len() -> usize {
    FAMILY_NAMES.len()
}

/// Direction family adapted to the unit vortex patch, evaluated at `x`.
///
/// * `theta` is tangential with unit plateau for `r >= 0.24`, so it covers
///   the patch boundary where the vorticity jumps.
/// * `core` is divergence-free, equals `e_1` at the origin, and carries a
///   tangential swirl collar; past `r = 0.24` it is purely tangential, so
///   member switches out there happen between parallel directions.
/// * `probe` is the constant `e_1`; it floors the family infimum at one.
///
/// Every member is divergence-free.
pub fn family_member(label: usize, x: Vec2) -> Vec2 {
    match label {
        0 => theta(x),
        1 => core(x),
        2 => Vec2::new(1.0, 0.0),
        _ => panic!("direction family has {} members", FAMILY_NAMES.len()),
    }
}

/// Analytic divergence of a family member (identically zero for all three).
pub fn family_div(label: usize, _x: Vec2) -> f64 {
    assert!(label < FAMILY_NAMES.len(), "direction family has {} members", FAMILY_NAMES.len());
    0.0
}

fn theta(x: Vec2) -> Vec2 {
    let r = x.norm();
    if r < 1e-12 {
        return Vec2::ZERO;
    }
    x.perp() * (smooth_step((r - RAMP_LO) / RAMP_WIDTH) / r)
}

fn core(x: Vec2) -> Vec2 {
    let r = x.norm();
    if r < 1e-12 {
        return Vec2::new(1.0, 0.0);
    }
    let s = (r - RAMP_LO) / RAMP_WIDTH;
    let w = 1.0 - smooth_step(s);
    let wp = -smooth_step_deriv(s) / RAMP_WIDTH;
    // Stream function -w(r) x2 + Q(r) with Q' the swirl collar below; both
    // pieces are perp-gradients, so the divergence vanishes identically.
    let swirl = 8.0 * (smooth_step((r - 0.06) / 0.08) - smooth_step((r - 0.26) / 0.14));
    Vec2::new(w + x.y * x.y * wp / r, -x.x * x.y * wp / r) + x.perp() * (swirl / r)
}

/// Vorticity of a mollified patch whose boundary radius is modulated by
/// `1 + amp cos(mode theta)`.
pub fn perturbed_patch_omega(mp: &MollifiedPatch, amp: f64, mode: u32, x: Vec2) -> f64 {
    let r = x.norm();
    if r < 1e-12 {
        return mp.omega(0.0);
    }
    let angle = x.y.atan2(x.x);
    mp.omega(r * (1.0 + amp * (mode as f64 * angle).cos()))
}
