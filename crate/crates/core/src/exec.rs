//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature, `Exec::Parallel` runs on rayon; without it,
//! every strategy runs sequentially. Results always come back in input order.

/// Environment variable capping the worker count of parallel sweeps.
pub const WORKERS_ENV: &str = "WEYL_SWEEP_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// Optional cap on worker threads; `None` uses the global pool.
    Parallel(Option<usize>),
    #[default]
    Auto,
}

impl Exec {
    /// `Parallel` capped by `WEYL_SWEEP_WORKERS` when set, else `Auto`.
    pub fn from_env() -> Self {
        match std::env::var(WORKERS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(0) | Some(1) => Exec::Sequential,
            Some(n) => Exec::Parallel(Some(n)),
            None => Exec::Auto,
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            Exec::Parallel(workers) => par_map(items, f, workers),
            Exec::Auto => par_map(items, f, None),
        }
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, R, F>(items: &[T], f: F, workers: Option<usize>) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match workers {
        None => items.par_iter().map(f).collect(),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(f).collect()),
            Err(_) => items.iter().map(f).collect(),
        },
    }
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R, F>(items: &[T], f: F, _workers: Option<usize>) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Exec::Sequential.map(&items, |x| x * x);
        let par = Exec::Parallel(Some(3)).map(&items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(Exec::Auto.map(&items, |x| x + 1)[999], 1000);
    }
}
