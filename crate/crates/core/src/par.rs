//! Data-parallel helpers with a sequential fallback.
//!
//! The engine's hot loops (identity checks over basis triples, relation
//! generator assembly, corpus fan-out) are embarrassingly parallel over an
//! index range with no shared mutable state. With the `parallel` feature
//! (default) they fan out through rayon; without it they run on plain
//! iterators with identical results. Witness searches use the
//! first-in-index-order element in both configurations, so reported
//! witnesses are deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n` and collects the results in index order.
#[cfg(feature = "parallel")]
pub fn par_map_vec<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..n` and collects the results in index order.
#[cfg(not(feature = "parallel"))]
pub fn par_map_vec<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// First `Some` value of `f` over `0..n`, in index order.
#[cfg(feature = "parallel")]
pub fn par_find_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n).into_par_iter().find_map_first(f)
}

/// First `Some` value of `f` over `0..n`, in index order.
#[cfg(not(feature = "parallel"))]
pub fn par_find_first<T, F>(n: usize, f: F) -> Option<T>
where
    F: Fn(usize) -> Option<T>,
{
    (0..n).find_map(f)
}

/// True iff `pred` holds on every index in `0..n`.
#[cfg(feature = "parallel")]
pub fn par_all<F>(n: usize, pred: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    (0..n).into_par_iter().all(pred)
}

/// True iff `pred` holds on every index in `0..n`.
#[cfg(not(feature = "parallel"))]
pub fn par_all<F>(n: usize, pred: F) -> bool
where
    F: Fn(usize) -> bool,
{
    (0..n).all(pred)
}
