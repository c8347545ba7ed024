use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is not regular: vertex {u} has degree {du}, vertex {v} has degree {dv}")]
    NotRegular {
        u: usize,
        du: usize,
        v: usize,
        dv: usize,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertex {0} is isolated; normalized Laplacian undefined")]
    IsolatedVertex(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),

    #[error("matrix order {order} exceeds dense limit {limit}")]
    MatrixTooLarge { order: usize, limit: usize },

    #[error("Jacobi eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("leading coefficient is zero")]
    DegeneratePolynomial,

    #[error("negative discriminant {0:e}: roots are complex")]
    NegativeDiscriminant(f64),

    #[error("cubic has a complex root pair (imaginary part {0:e})")]
    ComplexRoots(f64),

    #[error("x = {0} is a pole of the coronal function")]
    Pole(f64),

    #[error("expected {expected} attached graphs, got {got}")]
    AttachmentCount { expected: usize, got: usize },

    #[error("attached graph {0} has no vertices")]
    EmptyAttachment(usize),

    #[error("base graph has no edges")]
    EmptyBase,

    #[error("attached graphs do not share order and degree: {0}")]
    NonUniformAttachments(String),

    #[error("smallest eigenvalue {0} of an attached graph is not zero")]
    MissingZeroEigenvalue(f64),

    #[error("base graph has fewer edges ({m}) than vertices ({n})")]
    FewerEdgesThanVertices { n: usize, m: usize },

    #[error("seed graphs are not normalized-Laplacian cospectral (max deviation {0:e})")]
    NotCospectral(f64),

    #[error("seed graphs have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}
