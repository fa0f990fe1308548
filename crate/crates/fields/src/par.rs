//! Deterministic parallel helpers.
//!
//! Work is split into fixed-size chunks; each chunk is reduced sequentially
//! and the per-chunk partials are combined in chunk order.  Because the
//! chunking does not depend on the number of worker threads, floating-point
//! results are identical across runs and across thread-pool sizes.

use rayon::prelude::*;

/// Chunk length used by the deterministic reductions.
pub const CHUNK: usize = 1024;

/// Order-preserving parallel map over `0..n`.
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Deterministic parallel sum of `f(0) + ... + f(n-1)`.
pub fn sum<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let starts: Vec<usize> = (0..n).step_by(CHUNK).collect();
    let partials: Vec<f64> = starts
        .par_iter()
        .map(|&s| {
            let e = (s + CHUNK).min(n);
            let mut acc = 0.0;
            for i in s..e {
                acc += f(i);
            }
            acc
        })
        .collect();
    partials.into_iter().sum()
}

/// Deterministic parallel maximum of `f` over `0..n`; `f` must be finite
/// or NaN-free for the result to be meaningful.
pub fn max<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let starts: Vec<usize> = (0..n).step_by(CHUNK).collect();
    let partials: Vec<f64> = starts
        .par_iter()
        .map(|&s| {
            let e = (s + CHUNK).min(n);
            let mut acc = f64::NEG_INFINITY;
            for i in s..e {
                acc = acc.max(f(i));
            }
            acc
        })
        .collect();
    partials.into_iter().fold(f64::NEG_INFINITY, f64::max)
}
