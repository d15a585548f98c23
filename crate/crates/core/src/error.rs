use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field GF(2^{degree}) is not supported")]
    FieldUnsupported { degree: u32 },
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("declared action does not define a homomorphism: {0}")]
    InvalidAction(String),
    #[error("unsupported recipe: {0}")]
    UnsupportedRecipe(String),
    #[error("size cap exceeded: {0}")]
    SizeCapExceeded(String),
    #[error("Sylow 2-subgroup is not a Klein four group: {0}")]
    NotKleinFour(String),
    #[error("class functions live on different class data")]
    ClassMismatch,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("orthogonality violated: {0}")]
    OrthogonalityError(String),
    #[error("modules are over different groups or fields")]
    GroupMismatch,
    #[error("randomized search exhausted its retry budget: {0}")]
    RandomizationExhausted(String),
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("module does not have trivial source")]
    NotTrivialSource,
    #[error("element is not an involution")]
    NotInvolution,
    #[error("dimension is even; criterion needs dimension prime to 2")]
    EvenDimension,
    #[error("more than one summand with full vertex: {0}")]
    AmbiguousCorrespondent(String),
    #[error("block does not have full defect")]
    NotFullDefect,
    #[error("singular linear system: {0}")]
    SingularSystem(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable kind, used in error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::FieldUnsupported { .. } => "FieldUnsupported",
            Error::FieldTooSmall(_) => "FieldTooSmall",
            Error::InvalidAction(_) => "InvalidAction",
            Error::UnsupportedRecipe(_) => "UnsupportedRecipe",
            Error::SizeCapExceeded(_) => "SizeCapExceeded",
            Error::NotKleinFour(_) => "NotKleinFour",
            Error::ClassMismatch => "ClassMismatch",
            Error::NotSubgroup(_) => "NotSubgroup",
            Error::SchemaError(_) => "SchemaError",
            Error::OrthogonalityError(_) => "OrthogonalityError",
            Error::GroupMismatch => "GroupMismatch",
            Error::RandomizationExhausted(_) => "RandomizationExhausted",
            Error::NotIndecomposable => "NotIndecomposable",
            Error::NotTrivialSource => "NotTrivialSource",
            Error::NotInvolution => "NotInvolution",
            Error::EvenDimension => "EvenDimension",
            Error::AmbiguousCorrespondent(_) => "AmbiguousCorrespondent",
            Error::NotFullDefect => "NotFullDefect",
            Error::SingularSystem(_) => "SingularSystem",
            Error::Invalid(_) => "Invalid",
            Error::Io(_) => "Io",
            Error::Json(_) => "SchemaError",
        }
    }
}
