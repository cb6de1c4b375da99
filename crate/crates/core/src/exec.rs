//! Execution strategy and enumeration limits.
//!
//! Data-parallel loops (orbit enumeration, Burnside sums, oracle sweeps and
//! per-degree homology) run on rayon when the `parallel` feature is enabled.
//! Every loop has a sequential twin producing byte-identical results.

use std::env;

/// Environment variable overriding both enumeration caps.
pub const CAP_ENV: &str = "PERSIST_CAP";

/// Default bound on `(s + r)^n` for closed-form group powers.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Default bound on `p^n` generators in the brute-force oracle.
pub const DEFAULT_ORACLE_CAP: u64 = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[derive(Default)]
pub enum Strategy {
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}


impl Strategy {
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            Strategy::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
        }
    }

    /// Maps `f` over `0..len` and keeps the `Some` results in index order.
    pub fn filter_map_range<U, F>(self, len: u64, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(u64) -> Option<U> + Sync + Send,
    {
        match self {
            Strategy::Sequential => (0..len).filter_map(f).collect(),
            #[cfg(feature = "parallel")]
            Strategy::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().filter_map(f).collect()
            }
        }
    }
}

/// Caps on brute-force enumeration sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub enumeration_cap: u64,
    pub oracle_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with both caps replaced by `PERSIST_CAP` when it is set to
    /// a positive integer.
    pub fn from_env() -> Limits {
        match env::var(CAP_ENV).ok().and_then(|v| v.trim().parse::<u64>().ok()) {
            Some(cap) if cap > 0 => Limits {
                enumeration_cap: cap,
                oracle_cap: cap,
            },
            _ => Limits::default(),
        }
    }
}
