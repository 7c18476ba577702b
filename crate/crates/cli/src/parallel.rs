//! Threaded driver for the star-graph verifier.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use gotzmann_core::gotzmann::{labelled_graph_count, verify_masks};
use gotzmann_core::{Counterexample, StarTheoremSummary};

/// Edge masks handed to a worker at a time.
const CHUNK: u64 = 1 << 12;

/// Same contract as [`gotzmann_core::verify_star_theorem`], with the mask
/// space split into chunks shared by `workers` threads. The reported
/// counterexample is the earliest in enumeration order, whatever the
/// scheduling.
///
/// # Panics
///
/// Panics unless `1 <= max_vertices <= 11`.
pub fn verify_star_theorem_parallel(
    max_vertices: usize,
    workers: usize,
) -> Result<StarTheoremSummary, Counterexample> {
    if workers <= 1 {
        return gotzmann_core::verify_star_theorem(max_vertices);
    }
    assert!(
        (1..=11).contains(&max_vertices),
        "labelled enumeration supports 1..=11 vertices"
    );
    let chunks: Vec<(usize, u64, u64)> = (1..=max_vertices)
        .flat_map(|n| {
            let total = labelled_graph_count(n).expect("n <= 11");
            (0..total.div_ceil(CHUNK)).map(move |c| (n, c * CHUNK, ((c + 1) * CHUNK).min(total)))
        })
        .collect();
    let next = AtomicUsize::new(0);
    let mut summary = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut local = StarTheoremSummary::default();
                    while let Some(&(n, lo, hi)) = chunks.get(next.fetch_add(1, Ordering::Relaxed))
                    {
                        local = local.merge(verify_masks(n, lo..hi));
                    }
                    local
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verifier worker panicked"))
            .fold(StarTheoremSummary::default(), StarTheoremSummary::merge)
    });
    match summary.first_counterexample.take() {
        Some(c) => Err(c),
        None => Ok(summary),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_single_threaded_run() {
        for max in 1..=5 {
            let serial = gotzmann_core::verify_star_theorem(max).unwrap();
            for workers in [1, 2, 5] {
                assert_eq!(verify_star_theorem_parallel(max, workers).unwrap(), serial);
            }
        }
    }
}
