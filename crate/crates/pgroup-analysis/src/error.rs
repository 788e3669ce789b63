use group_kernel::KernelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("not a p-group for p = {0}")]
    NotPGroup(u64),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("witness search failed: {0}")]
    WitnessSearchFailed(String),
}

pub type Result<T> = std::result::Result<T, AnalysisError>;
