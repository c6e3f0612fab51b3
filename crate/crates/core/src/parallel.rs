//! Batch execution over independent instances.
//!
//! The basis computations are pure functions, so sweeps over many inputs
//! (verification batches, benchmark grids, randomized test suites) are
//! data parallel. With the `parallel` feature disabled everything runs
//! sequentially through the same entry point.

/// Applies `f` to every item, preserving input order. Runs on the rayon
/// pool when the `parallel` feature is enabled and `parallel` is true;
/// otherwise sequentially.
pub fn run_all<I, T, F>(items: &[I], parallel: bool, f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.par_iter().map(&f).collect();
    }
    let _ = parallel;
    items.iter().map(f).collect()
}
