//! Data-parallel plumbing.
//!
//! With the `parallel` feature (the default) the sweep operations fan out
//! over rayon; without it they run as plain sequential loops. Both paths
//! produce results in identical order, so reports are byte-for-byte
//! independent of the parallelism level.

/// Order-preserving map over owned items; parallel when the feature is on.
#[cfg(feature = "parallel")]
pub(crate) fn map_collect<I, T, F>(items: Vec<I>, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Send + Sync,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<I, T, F>(items: Vec<I>, f: F) -> Vec<T>
where
    F: Fn(I) -> T,
{
    items.into_iter().map(f).collect()
}

/// Runs `f` on a thread pool capped at `jobs` workers (when the `parallel`
/// feature is on and `jobs` is given). `None` keeps rayon's default pool;
/// in a sequential build the closure just runs inline.
#[cfg(feature = "parallel")]
pub fn with_parallelism<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(j) if j >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("building rayon pool")
            .install(f),
        _ => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_parallelism<R>(jobs: Option<usize>, f: impl FnOnce() -> R) -> R {
    let _ = jobs;
    f()
}
