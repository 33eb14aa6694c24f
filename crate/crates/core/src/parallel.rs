//! Data-parallel loop helpers with a sequential fallback.
//!
//! Every helper preserves index order, and callers keep any floating-point
//! reduction inside a single task in a fixed order (reductions never cross
//! the parallel axis). Under that rule the parallel and sequential paths
//! produce bit-identical results, which the determinism tests assert.
//!
//! The `parallel` cargo feature (default) selects rayon; without it all
//! helpers degrade to plain iterators. [`set_sequential`] forces the
//! sequential path at runtime even when the feature is compiled in — used
//! by the benches to compare both paths in one process, and available via
//! the `HARADAPT_SEQUENTIAL=1` environment variable in the CLI.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Force all helpers onto the sequential path (runtime switch).
pub fn set_sequential(force: bool) {
    FORCE_SEQUENTIAL.store(force, Ordering::SeqCst);
}

/// True when helpers will run sequentially (feature off or forced).
pub fn is_sequential() -> bool {
    if cfg!(feature = "parallel") {
        FORCE_SEQUENTIAL.load(Ordering::SeqCst)
    } else {
        true
    }
}

/// Map over a slice, collecting results in input order.
pub fn map_collect<T, O, F>(items: &[T], f: F) -> Vec<O>
where
    T: Sync,
    O: Send,
    F: Fn(&T) -> O + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if !is_sequential() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

/// Map over `0..n`, collecting results in index order.
pub fn map_range<O, F>(n: usize, f: F) -> Vec<O>
where
    O: Send,
    F: Fn(usize) -> O + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if !is_sequential() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Run `f(chunk_index, chunk)` over fixed-size mutable chunks of `data`.
///
/// The chunk is the parallel axis; whatever `f` accumulates inside one
/// chunk stays in that task, so ordering within a chunk is sequential.
pub fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    assert!(chunk > 0, "chunk size must be positive");
    #[cfg(feature = "parallel")]
    if !is_sequential() {
        use rayon::prelude::*;
        data.par_chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
        return;
    }
    data.chunks_mut(chunk).enumerate().for_each(|(i, c)| f(i, c));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_collect_preserves_order() {
        let items: Vec<usize> = (0..1000).collect();
        let out = map_collect(&items, |&x| x * 2);
        assert_eq!(out, (0..1000).map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn chunked_writes_cover_all_slots() {
        let mut data = vec![0usize; 128 * 7];
        for_each_chunk_mut(&mut data, 7, |i, c| {
            for (j, v) in c.iter_mut().enumerate() {
                *v = i * 7 + j;
            }
        });
        assert!(data.iter().enumerate().all(|(i, &v)| v == i));
    }
}
