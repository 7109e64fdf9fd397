//! Sequential / data-parallel execution switch for the verification sweeps
//! and the wall BFS. The `parallel` feature enables the rayon-backed mode
//! and makes it the default; without the feature everything runs
//! sequentially through the same entry points.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    #[cfg(feature = "parallel")]
    Rayon,
}

impl Default for Parallelism {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Parallelism::Rayon
    }

    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Parallelism::Sequential
    }
}

impl Parallelism {
    pub const ALL: &'static [Parallelism] = &[
        Parallelism::Sequential,
        #[cfg(feature = "parallel")]
        Parallelism::Rayon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parallelism::Sequential => "sequential",
            #[cfg(feature = "parallel")]
            Parallelism::Rayon => "rayon",
        }
    }
}

/// Map `f` over `items`, preserving order.
pub fn map_collect<T, U, F>(mode: Parallelism, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        Parallelism::Sequential => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Parallelism::Rayon => items.into_par_iter().map(f).collect(),
    }
}
