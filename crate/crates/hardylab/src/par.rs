//! Data-parallel map helpers.
//!
//! Grid scans (frequency profiles, per-λ blow-up work, parameter sweeps) are
//! embarrassingly parallel: every item is a pure function of its input and the
//! results are assembled in input order, so parallel and sequential execution
//! produce bit-identical output. With the `parallel` feature (default) the
//! maps run on rayon; without it they fall back to plain iterators.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when the `parallel` feature is enabled.
/// Results are returned in input order either way.
pub fn adaptive_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Always-sequential map with the same signature as [`adaptive_map`].
/// Kept for benchmarks that compare the two execution strategies.
pub fn sequential_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
