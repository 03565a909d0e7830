//! Range partitioning across worker threads. Results come back in chunk
//! order and are merged by the caller, so the output is identical for any
//! worker count.

use tracecodes::Result;

pub fn available_workers() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Run `f` over `workers` contiguous chunks of [0, total) and collect the
/// per-chunk results in chunk order.
pub fn run_chunked<T, F>(total: u64, workers: usize, f: F) -> Result<Vec<T>>
where
    F: Fn(u64, u64) -> Result<T> + Sync,
    T: Send,
{
    let workers = workers.max(1).min(total.max(1) as usize);
    if workers == 1 {
        return Ok(vec![f(0, total)?]);
    }
    let chunk = total.div_ceil(workers as u64);
    std::thread::scope(|scope| {
        let f = &f;
        let handles: Vec<_> = (0..workers as u64)
            .map(|w| {
                let lo = (w * chunk).min(total);
                let hi = ((w + 1) * chunk).min(total);
                scope.spawn(move || f(lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker thread panicked"))
            .collect()
    })
}

/// Elementwise sum of per-chunk dense tallies.
pub fn merge_tallies(parts: Vec<Vec<u64>>) -> Vec<u64> {
    let mut iter = parts.into_iter();
    let mut acc = iter.next().unwrap_or_default();
    for part in iter {
        for (a, b) in acc.iter_mut().zip(&part) {
            *a += b;
        }
    }
    acc
}
