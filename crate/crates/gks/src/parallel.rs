//! Row-parallel grid evaluation on a dedicated rayon pool.

use gks_core::{ComplexValue, RowExecutor};
use rayon::prelude::*;

pub struct RayonExecutor {
    pool: rayon::ThreadPool,
}

impl RayonExecutor {
    /// A pool of `threads` workers; 0 means the available parallelism.
    pub fn new(threads: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let threads = if threads == 0 { default_threads() } else { threads };
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
        Ok(Self { pool })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl RowExecutor for RayonExecutor {
    fn fill_rows(
        &self,
        out: &mut [ComplexValue],
        row_len: usize,
        fill: &(dyn Fn(usize, &mut [ComplexValue]) + Sync),
    ) {
        self.pool.install(|| {
            out.par_chunks_mut(row_len).enumerate().for_each(|(i, row)| fill(i, row));
        });
    }
}
