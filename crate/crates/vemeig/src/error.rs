//! Error taxonomy for the whole crate.
//!
//! Every fallible public operation returns [`Result`]. Variants are grouped by
//! pipeline stage so callers can react to the class of failure (bad input file
//! vs. degenerate geometry vs. solver breakdown) without string matching.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied parameter is out of range (e.g. `n = 0`, `k = 0`).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A polygon or cell is geometrically unusable (zero area, self-intersecting,
    /// triangulation failure).
    #[error("geometry error: {0}")]
    Geometry(String),

    /// A mesh file could not be parsed. Carries the location reported by the
    /// JSON parser so the offending line/field can be found.
    #[error("mesh file parse error at line {line}, column {column}: {message}")]
    MeshParse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A structurally valid mesh file describes an invalid mesh
    /// (index out of range, non-positive cell area, area mismatch, ...).
    #[error("mesh validation error: {0}")]
    MeshValidation(String),

    /// Mesh generation failed (e.g. perturbation kept producing inverted cells
    /// after all retries).
    #[error("mesh generation error: {0}")]
    MeshGeneration(String),

    /// Per-element operator construction failed (singular projector system,
    /// degenerate element).
    #[error("element {cell}: {message}")]
    Element { cell: usize, message: String },

    /// Inconsistent or unusable solver configuration (non-SPD diffusivity,
    /// unknown region label, unsupported family/domain combination).
    #[error("configuration error: {0}")]
    Config(String),

    /// Eigenproblem failures.
    #[error(transparent)]
    Eigsolve(#[from] EigsolveError),

    /// I/O while reading or writing meshes, configs or reports.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Config (JSON) deserialization errors outside of mesh files.
    #[error("config parse error: {0}")]
    ConfigParse(#[from] serde_json::Error),
}

/// Failures specific to the generalized eigenvalue / source solvers.
#[derive(Debug, Error)]
pub enum EigsolveError {
    /// More eigenpairs were requested than the (deflated) problem can provide.
    #[error(
        "requested {requested} eigenpairs but only {available} finite generalized \
         eigenvalues exist after deflation"
    )]
    NotEnoughFinite { requested: usize, available: usize },

    /// The backend eigendecomposition did not converge.
    #[error("eigendecomposition failed to converge")]
    NoConvergence,

    /// The stiffness matrix is singular; for pure-Neumann Laplacians the
    /// constant mode must be removed first.
    #[error(
        "stiffness matrix is singular: a pure-Neumann operator has a constant \
         null mode; impose a mean-zero gauge or a Dirichlet condition"
    )]
    SingularOperator,

    /// A computed eigenpair failed the residual invariant
    /// `||A x - lambda M x|| <= tol (||A|| + |lambda| ||M||)`.
    #[error(
        "eigenpair {index} failed the residual check: residual {residual:.3e} \
         exceeds bound {bound:.3e}"
    )]
    ResidualCheck {
        index: usize,
        residual: f64,
        bound: f64,
    },

    /// Dimension mismatch between the operator matrices.
    #[error("matrix dimension mismatch: A is {a_dim}x{a_dim}, M is {m_dim}x{m_dim}")]
    DimensionMismatch { a_dim: usize, m_dim: usize },
}
