//! Data-parallel map used by the verification sweeps.
//!
//! Results always come back in input order, so reports built from them are
//! identical for every worker count. Without the `parallel` feature,
//! [`Execution::Parallel`] silently runs sequentially.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

impl Execution {
    /// True when this build can actually run work in parallel.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Applies `f` to every item, preserving order.
pub fn map_ordered<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Sizes the global worker pool. Only the first call has an effect; returns
/// false if the pool was already initialized (or the build is sequential).
pub fn init_workers(workers: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = workers;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let serial = map_ordered(&items, Execution::Serial, |x| x * x);
        let parallel = map_ordered(&items, Execution::Parallel, |x| x * x);
        assert_eq!(serial, parallel);
        assert_eq!(serial[999], 999 * 999);
    }
}
