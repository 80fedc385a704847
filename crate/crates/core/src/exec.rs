//! Execution strategy and size limits for exhaustive enumeration.
//!
//! Every exhaustive computation is split into independent work units (path
//! prefixes, slices of trees, ranges of edge masks) and merged with an
//! associative, commutative reduction, so results do not depend on the
//! strategy or on the number of worker threads. Counterexample searches
//! always report the first failure in enumeration order.
//!
//! With the `parallel` feature disabled, [`Strategy::Parallel`] runs on the
//! calling thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::path::{prefix_classes, DyckPath, PathIter};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

/// Caps on exhaustive enumeration sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest semilength any path-based family or check will enumerate.
    pub max_semilength: usize,
    /// Largest vertex count for connected-graph enumeration.
    pub max_graph_vertices: usize,
}

pub const MAX_SEMILENGTH_ENV: &str = "QTCAT_MAX_SEMILENGTH";
pub const MAX_GRAPH_VERTICES_ENV: &str = "QTCAT_MAX_GRAPH_VERTICES";

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_semilength: 14,
            max_graph_vertices: 7,
        }
    }
}

impl Limits {
    /// Defaults overridden by `QTCAT_MAX_SEMILENGTH` / `QTCAT_MAX_GRAPH_VERTICES`.
    /// Graph enumeration is hard-capped at 11 vertices (edge sets are `u64` masks).
    pub fn from_env() -> Self {
        let read = |key: &str| std::env::var(key).ok().and_then(|v| v.trim().parse().ok());
        let d = Limits::default();
        Limits {
            max_semilength: read(MAX_SEMILENGTH_ENV).unwrap_or(d.max_semilength),
            max_graph_vertices: read(MAX_GRAPH_VERTICES_ENV)
                .unwrap_or(d.max_graph_vertices)
                .min(crate::labelled::MAX_GRAPH_VERTICES),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub strategy: Strategy,
    pub limits: Limits,
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            strategy: Strategy::Sequential,
            ..Config::default()
        }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }
}

/// Maps every unit and reduces the results.
pub(crate) fn map_reduce<U, T, Id, M, R>(units: &[U], strategy: Strategy, identity: Id, map: M, reduce: R) -> T
where
    U: Sync,
    T: Send,
    Id: Fn() -> T + Sync + Send,
    M: Fn(&U) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy == Strategy::Parallel {
        return units.par_iter().map(map).reduce(identity, reduce);
    }
    let _ = strategy;
    units.iter().map(map).fold(identity(), reduce)
}

/// First `Some` in unit order.
pub(crate) fn find_first<U, R, F>(units: &[U], strategy: Strategy, f: F) -> Option<R>
where
    U: Sync,
    R: Send,
    F: Fn(&U) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy == Strategy::Parallel {
        return units.par_iter().find_map_first(f);
    }
    let _ = strategy;
    units.iter().find_map(f)
}

fn path_units(n: usize) -> Vec<Vec<crate::path::Step>> {
    prefix_classes(n, 12)
}

/// Folds over every Dyck path of semilength `n`.
pub fn fold_paths<T, Id, F, R>(n: usize, strategy: Strategy, identity: Id, fold: F, reduce: R) -> T
where
    T: Send,
    Id: Fn() -> T + Sync + Send,
    F: Fn(T, &DyckPath) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let units = path_units(n);
    map_reduce(
        &units,
        strategy,
        &identity,
        |prefix| PathIter::with_prefix(prefix, n).fold(identity(), |acc, p| fold(acc, &p)),
        reduce,
    )
}

/// First path (in lexicographic order) for which `f` returns `Some`.
pub fn find_path<R, F>(n: usize, strategy: Strategy, f: F) -> Option<R>
where
    R: Send,
    F: Fn(&DyckPath) -> Option<R> + Sync + Send,
{
    let units = path_units(n);
    find_first(&units, strategy, |prefix| {
        PathIter::with_prefix(prefix, n).find_map(|p| f(&p))
    })
}

const ITEM_CHUNK: usize = 512;

/// First item (in slice order) for which `f` returns `Some`.
pub fn find_item<I, R, F>(items: &[I], strategy: Strategy, f: F) -> Option<R>
where
    I: Sync,
    R: Send,
    F: Fn(&I) -> Option<R> + Sync + Send,
{
    let chunks: Vec<&[I]> = items.chunks(ITEM_CHUNK).collect();
    find_first(&chunks, strategy, |chunk| chunk.iter().find_map(&f))
}

/// Folds over a slice of items in parallel chunks.
pub fn fold_items<I, T, Id, F, R>(items: &[I], strategy: Strategy, identity: Id, fold: F, reduce: R) -> T
where
    I: Sync,
    T: Send,
    Id: Fn() -> T + Sync + Send,
    F: Fn(T, &I) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let chunks: Vec<&[I]> = items.chunks(ITEM_CHUNK).collect();
    map_reduce(
        &chunks,
        strategy,
        &identity,
        |chunk| chunk.iter().fold(identity(), &fold),
        reduce,
    )
}

/// Folds over the integers `0..end`, split into contiguous ranges.
pub fn fold_range<T, Id, F, R>(end: u64, strategy: Strategy, identity: Id, fold: F, reduce: R) -> T
where
    T: Send,
    Id: Fn() -> T + Sync + Send,
    F: Fn(T, u64) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    const RANGE_CHUNK: u64 = 1 << 12;
    let ranges: Vec<(u64, u64)> = (0..end.div_ceil(RANGE_CHUNK))
        .map(|k| (k * RANGE_CHUNK, ((k + 1) * RANGE_CHUNK).min(end)))
        .collect();
    map_reduce(
        &ranges,
        strategy,
        &identity,
        |&(lo, hi)| (lo..hi).fold(identity(), &fold),
        reduce,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_on_path_folds() {
        for n in 0..=8 {
            let count = |s| fold_paths(n, s, || 0u64, |acc, _| acc + 1, |a, b| a + b);
            let area = |s| fold_paths(n, s, || 0u64, |acc, p| acc + p.area() as u64, |a, b| a + b);
            assert_eq!(count(Strategy::Sequential), count(Strategy::Parallel));
            assert_eq!(count(Strategy::Sequential) as u128, crate::path::catalan(n));
            assert_eq!(area(Strategy::Sequential), area(Strategy::Parallel));
        }
    }

    #[test]
    fn find_path_returns_first_in_order() {
        let first = |s| find_path(6, s, |p| (p.dinv() == 3).then(|| p.to_string()));
        let expected = crate::path::enumerate_paths(6)
            .find(|p| p.dinv() == 3)
            .map(|p| p.to_string());
        assert_eq!(first(Strategy::Sequential), expected);
        assert_eq!(first(Strategy::Parallel), expected);
    }

    #[test]
    fn fold_range_covers_every_integer_once() {
        for end in [0u64, 1, 4095, 4096, 10_000] {
            let sum = fold_range(end, Strategy::Parallel, || 0u64, |a, x| a + x, |a, b| a + b);
            assert_eq!(sum, end * end.saturating_sub(1) / 2);
        }
    }
}
