use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("matrices use different grading schemes ({left} vs {right} indices)")]
    SchemeMismatch { left: usize, right: usize },

    #[error("operand must be homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("all dimension parameters are zero; the algebra is empty")]
    EmptyAlgebra,

    #[error("index {index} outside [1, {total_dim}]")]
    IndexOutOfRange { index: usize, total_dim: usize },

    #[error("suite {suite:?} requires {requirement}")]
    PreconditionUnmet { suite: String, requirement: String },
}
