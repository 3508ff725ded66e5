use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero input: {0}")]
    ZeroInput(&'static str),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("infinite intersection: {0}")]
    InfiniteIntersection(String),
    #[error("unsupported germ: {0}")]
    UnsupportedGerm(String),
    #[error("genus mismatch on component {component}: delta total gives genus {genus}")]
    GenusMismatch { component: usize, genus: i64 },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("elimination needs degree {needed}, budget is {budget}")]
    EliminationOverflow { needed: usize, budget: usize },
    #[error("component {0} coincides with a triangle line")]
    CurveContainsTriangleLine(usize),
    #[error("every member of the pencil is degenerate")]
    IdenticallyDegenerate,
    #[error("certification failed: {0}")]
    CertificationFailure(String),
    #[error("expected 3 flexes, found {0}")]
    FlexCountUnexpected(usize),
    #[error("resource budget: {0}")]
    ResourceBudget(String),
    #[error("bad residues: {0}")]
    BadResidues(String),
    #[error("type bound violated: weighted sum {0} > 3")]
    TypeBoundViolated(u32),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("descriptor mismatch: {0}")]
    DescriptorMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
