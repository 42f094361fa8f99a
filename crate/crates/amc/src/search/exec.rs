//! Deterministic execution strategy for the scan loops.
//!
//! Searches return the lexicographically first hit in enumeration order.
//! With one worker that is a plain loop; with more, each stratum is scanned
//! by `find_map_first`, whose result depends only on the iteration order,
//! never on the schedule.

use rayon::prelude::*;

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { jobs: 1 }
    }
}

impl SearchOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        SearchOptions {
            jobs: jobs.max(1),
        }
    }
}

pub struct Executor {
    pool: Option<rayon::ThreadPool>,
}

impl Executor {
    pub fn new(opts: SearchOptions) -> Self {
        let pool = if opts.jobs > 1 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.jobs)
                .build()
                .ok()
        } else {
            None
        };
        Executor { pool }
    }

    /// First `Some` produced over `0..len` in index order.
    pub fn find_first<T, F>(&self, len: usize, f: F) -> Option<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match &self.pool {
            Some(pool) => pool.install(|| (0..len).into_par_iter().find_map_first(&f)),
            None => (0..len).find_map(f),
        }
    }
}
