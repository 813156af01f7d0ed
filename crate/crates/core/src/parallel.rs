//! Order-preserving parallel map over independent degree computations.

use rayon::prelude::*;

/// Environment variable holding the worker count.
pub const THREADS_ENV: &str = "CABLEFLOER_THREADS";

/// Worker count from `CABLEFLOER_THREADS`, falling back to rayon's default.
pub fn thread_count() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or_else(rayon::current_num_threads)
}

/// Maps `f` over `items` on `threads` workers; the output order matches the input.
pub fn par_map_with<T, R, F>(threads: usize, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if threads <= 1 || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

/// [`par_map_with`] using [`thread_count`].
pub fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    par_map_with(thread_count(), items, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let xs: Vec<u64> = (0..1000).collect();
        let one = par_map_with(1, &xs, |x| x * x);
        let four = par_map_with(4, &xs, |x| x * x);
        assert_eq!(one, four);
        assert_eq!(four[999], 999 * 999);
    }
}
