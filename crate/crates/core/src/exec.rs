//! Execution strategy for the enumeration loops.
//!
//! With the `parallel` feature (default) partitions are evaluated on the rayon
//! pool; without it every strategy runs sequentially. Results are always
//! returned in partition order, so callers see identical output either way.

use std::ops::RangeInclusive;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this strategy will actually fan out.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps every index of `range` to a batch of items and concatenates the
    /// batches in index order.
    pub fn flat_map<T, F>(self, range: RangeInclusive<i64>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(i64) -> Vec<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return range.into_par_iter().flat_map_iter(f).collect();
        }
        range.flat_map(f).collect()
    }

    /// Maps a slice element-wise, preserving order.
    pub fn map<S, T, F>(self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }
}
