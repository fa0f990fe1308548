//! Report and configuration types shared by all estimators.

use thiserror::Error;

/// Admissible pair separations `[min_sep, max_sep]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shell {
    pub min_sep: f64,
    pub max_sep: f64,
}

impl Shell {
    pub fn new(min_sep: f64, max_sep: f64) -> Result<Self, HolderError> {
        if !(min_sep > 0.0 && max_sep >= min_sep && max_sep.is_finite()) {
            return Err(HolderError::BadShell { min_sep, max_sep });
        }
        Ok(Self { min_sep, max_sep })
    }
}

/// How sample pairs are enumerated.
///
/// `Auto` enumerates exhaustively up to 20k samples and falls back to
/// seeded dyadic-shell sampling above that.
#[derive(Debug, Clone, Copy)]
pub enum PairMode {
    Auto,
    Exhaustive,
    Sampled { pairs_per_shell: usize, seed: u64 },
}

/// Threshold between exhaustive and sampled enumeration in `Auto` mode.
pub(crate) const EXHAUSTIVE_LIMIT: usize = 20_000;

pub(crate) const DEFAULT_PAIRS_PER_SHELL: usize = 4096;
pub(crate) const DEFAULT_SEED: u64 = 0x5eed_0001;

/// Result of a Holder-norm estimate: `norm = linf + seminorm`.
#[derive(Debug, Clone, Copy)]
pub struct HolderReport {
    pub alpha: f64,
    pub linf: f64,
    pub seminorm: f64,
    pub pairs_used: usize,
    pub shell: Shell,
}

impl HolderReport {
    pub fn norm(&self) -> f64 {
        self.linf + self.seminorm
    }

    /// One CSV row: alpha, linf, seminorm, pairs_used, shell_min, shell_max.
    pub fn csv_row(&self) -> String {
        format!(
            "{:.16e},{:.16e},{:.16e},{},{:.16e},{:.16e}",
            self.alpha, self.linf, self.seminorm, self.pairs_used, self.shell.min_sep,
            self.shell.max_sep
        )
    }
}

/// Negative-exponent estimate via the potential gradient of the divergence.
///
/// `value` upper-bounds the target norm only up to the unspecified constant
/// in the equivalence between the two formulations, so it is compared
/// across configurations, never against absolute values.
#[derive(Debug, Clone, Copy)]
pub struct NegHolderReport {
    pub alpha: f64,
    pub value: f64,
    pub method: &'static str,
}

#[derive(Debug, Error)]
pub enum HolderError {
    #[error("Holder exponent must lie strictly between 0 and 1, got {0}")]
    BadExponent(f64),
    #[error("invalid separation shell [{min_sep}, {max_sep}]")]
    BadShell { min_sep: f64, max_sep: f64 },
    #[error("shell floor {min_sep} is below the sample spacing {spacing}")]
    ShellBelowSpacing { min_sep: f64, spacing: f64 },
    #[error("no admissible sample pairs in the separation shell")]
    EmptyShell,
    #[error("need at least {need} samples, got {got}")]
    TooFewSamples { need: usize, got: usize },
    #[error("mask selects fewer than two samples")]
    EmptyMask,
    #[error("field contains non-finite samples")]
    NonFinite,
    #[error("curve samples have degenerate spacing (chord ratio {0:.2})")]
    DegenerateSpacing(f64),
    #[error("curve is self-intersecting")]
    SelfIntersecting,
}

pub(crate) fn check_alpha(alpha: f64) -> Result<(), HolderError> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(HolderError::BadExponent(alpha))
    }
}
