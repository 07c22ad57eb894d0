//! Library half of the `qmzv` command: run configuration, the parallel
//! relation driver, JSON documents and the verification suites.

pub mod driver;
pub mod document;
pub mod suites;

use qmzv_core::{CircledastVariant, RelationVariant, DEFAULT_PRECISION};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qmzv_core::Error),
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    /// Process exit status: every error surfaced here is a usage or input
    /// problem; verification failures are reported through results instead.
    pub fn exit_code(&self) -> u8 {
        2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub precision: usize,
    pub max_weight: u32,
    pub max_n: usize,
    pub seed: u64,
    pub circledast_variant: CircledastVariant,
    pub variant: RelationVariant,
    /// 0 lets the pool pick one thread per core.
    pub workers: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            precision: DEFAULT_PRECISION,
            max_weight: 4,
            max_n: 3,
            seed: 0,
            circledast_variant: CircledastVariant::PlusHbarZero,
            variant: RelationVariant::Modified,
            workers: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.precision < 2 {
            return Err(CliError::Usage(format!("precision must be at least 2, got {}", self.precision)));
        }
        if self.max_weight < 1 || self.max_n < 1 {
            return Err(CliError::Usage("--max-weight and --max-n must be at least 1".into()));
        }
        Ok(())
    }

    /// Runs `f` inside a pool sized by `workers`.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.workers).build()?;
        Ok(pool.install(f))
    }
}
