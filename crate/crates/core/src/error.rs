use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("generator basis is not trace-orthonormal (max deviation {deviation:e})")]
    NonOrthogonalBasis { deviation: f64 },

    #[error("Cartan generators do not separate six one-dimensional root spaces")]
    DegenerateCartan,

    #[error("triad does not close under commutation (residual {residual:e})")]
    NotClosed { residual: f64 },

    #[error("triad members are linearly dependent")]
    DependentTriad,

    #[error("triad is abelian (all commutators vanish)")]
    Abelian,

    #[error("raising-operator search converged to unexpected solution ({c1}, {c2})")]
    UnexpectedSolution { c1: f64, c2: f64 },

    #[error("particle number {n} exceeds the limit of {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("expectation value has imaginary residual {imag:e}")]
    ImaginaryResidual { imag: f64 },

    #[error("state and operator live on different Fock bases")]
    BasisMismatch,

    #[error("spinor is not normalized (norm² = {norm_sq})")]
    UnnormalizedSpinor { norm_sq: f64 },

    #[error("angle solver did not converge (best fidelity {fidelity})")]
    NoConvergence { fidelity: f64 },

    #[error("twisting kernel is not diagonal in the magnetic-sublevel basis")]
    KernelNotDiagonal,

    #[error("variance minimum at schedule endpoint χt = {chi_t}; widen the window")]
    ScheduleMiss { chi_t: f64 },

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
