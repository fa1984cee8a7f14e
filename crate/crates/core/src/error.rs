use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("sign convention violation: squares of the double complex do not commute at {0}")]
    SignConvention(String),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("unknown space `{0}` (expected circle, sphere(n), torus, rp2, or klein)")]
    UnknownSpace(String),
    #[error("rank budget exceeded at degree {degree}: {size} generators (budget {budget})")]
    BudgetExceeded {
        degree: usize,
        size: usize,
        budget: usize,
    },
    #[error("invalid Deligne cocycle: {0}")]
    InvalidCocycle(String),
    #[error("invalid Čech tower: {0}")]
    InvalidTower(String),
    #[error("cochain not closed: delta is nonzero on {0}")]
    NotClosed(String),
    #[error("period {value} against cycle {cycle} is not an integer")]
    NonIntegralPeriod { cycle: usize, value: String },
    #[error("scalar curvature requires weight = degree, got p = {p}, q = {q}")]
    CurvatureWeight { p: usize, q: usize },
    #[error("flat normal form requires zero curvature")]
    NonzeroCurvature,
    #[error("gerbe view requires degree 3, got p = {0}")]
    GerbeDegree(usize),
    #[error("{0}")]
    Json(String),
}

impl Error {
    pub fn bad_input(msg: impl Into<String>) -> Self {
        Error::BadInput(msg.into())
    }
}
