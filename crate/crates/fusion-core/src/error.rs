use group_kernel::KernelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FusionError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("subgroup is not a p-subgroup for p = {0}")]
    NotPSubgroup(u64),
    #[error("closure exceeded its work cap of {0} events")]
    ClosureCapExceeded(usize),
    #[error("subgroup is not weakly closed")]
    NotWeaklyClosed,
    #[error("operation requires a saturated system")]
    NotSaturated,
    #[error("guaranteed search produced nothing: {0}")]
    SearchFailed(String),
    #[error("invalid generator datum: {0}")]
    InvalidDatum(String),
}

pub type Result<T> = std::result::Result<T, FusionError>;
