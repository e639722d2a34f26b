use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}: zero polynomial")]
    ZeroPolynomial(&'static str),

    #[error("Laurent polynomial is not invariant under t -> 1/t (exponents {0})")]
    NotSymmetric(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid JSON input at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("braid letter {letter} out of range for {strands} strands")]
    BraidIndex { letter: i64, strands: usize },

    #[error("torus braid needs p, q >= 2, got ({0}, {1})")]
    TorusParameters(usize, usize),

    #[error("a braid needs at least one strand")]
    NoStrands,

    #[error("split braid closure: generator {0} never occurs, Seifert surface is disconnected")]
    DisconnectedSurface(usize),

    #[error("invalid Seifert data: {0}")]
    InvalidSeifert(String),

    #[error("{0} is defined here for knots only")]
    KnotsOnly(&'static str),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("computed nullity {beta} lies outside [0, {max}]")]
    NullityOutOfRange { beta: usize, max: usize },

    #[error("matrix family is not hermitian at entry ({0}, {1})")]
    NotHermitian(usize, usize),

    #[error("singular family: determinant vanishes identically")]
    SingularFamily,

    #[error("invalid circle point: {0}")]
    InvalidPoint(String),

    #[error("invalid band certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid infection declaration: {0}")]
    InvalidDeclaration(String),

    #[error("hypotheses of the infection theorem not declared: {0}")]
    UndeclaredHypotheses(String),

    #[error("inconsistent bounds: lower {lower} exceeds upper {upper}")]
    InconsistentBounds { lower: u64, upper: u64 },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        let (line, column) = (e.line(), e.column());
        let full = e.to_string();
        let suffix = format!(" at line {line} column {column}");
        let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
        Error::Json { line, column, message }
    }
}
