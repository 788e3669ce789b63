use thiserror::Error;

#[derive(Debug, Error)]
pub enum KernelError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("{what}: needs {need}, cap is {cap}")]
    CapExceeded { what: &'static str, need: usize, cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a p-group for p = {0}")]
    NotPGroup(u64),
    #[error("element does not belong to the group")]
    NotInGroup,
    #[error("set is not a subgroup")]
    NotSubgroup,
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, KernelError>;
