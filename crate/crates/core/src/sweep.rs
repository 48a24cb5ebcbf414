//! Order-preserving fan-out over independent work items.
//!
//! With the `parallel` feature, [`ExecMode::Parallel`] runs on a rayon pool
//! whose size is capped by `LORENZ_FIBER_THREADS`; without it every mode runs
//! sequentially. Results always come back in input order.

use std::str::FromStr;

pub const THREADS_ENV: &str = "LORENZ_FIBER_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

impl FromStr for ExecMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sequential" | "seq" => Ok(ExecMode::Sequential),
            "parallel" | "par" => Ok(ExecMode::Parallel),
            other => Err(format!("unknown execution mode `{other}`")),
        }
    }
}

/// Thread cap from the environment; `None` when unset, zero or unparsable.
pub fn thread_limit() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

#[cfg(feature = "parallel")]
fn pool() -> &'static rayon::ThreadPool {
    use std::sync::OnceLock;
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut builder =
            rayon::ThreadPoolBuilder::new().thread_name(|i| format!("lorenz-fiber-{i}"));
        if let Some(n) = thread_limit() {
            builder = builder.num_threads(n);
        }
        builder.build().expect("thread pool")
    })
}

pub fn map_ordered<T, R, F>(items: &[T], mode: ExecMode, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            pool().install(|| items.par_iter().map(&f).collect())
        }
        _ => items.iter().map(f).collect(),
    }
}
