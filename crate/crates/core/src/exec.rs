//! Single choke point for data-parallel loops.
//!
//! All parallelizable work in this crate is expressed as an order-preserving
//! indexed map, so the rayon path and the sequential fallback produce
//! identical output. Public operations come in pairs (`foo` / `foo_sequential`)
//! that differ only in the flag passed here; the bench suite compares them.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..len`, preserving index order in the output.
///
/// Runs on the rayon pool when `parallel` is true and the `parallel` feature
/// is enabled; otherwise runs sequentially. Work items must not communicate:
/// each derives everything it needs (typically a child RNG stream) from its
/// index.
pub fn map_indexed<T, F>(parallel: bool, len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = parallel;
    (0..len).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential() {
        let f = |i: usize| (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 7;
        assert_eq!(map_indexed(true, 1000, f), map_indexed(false, 1000, f));
    }
}
