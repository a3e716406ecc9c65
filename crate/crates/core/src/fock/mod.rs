//! Symmetric Fock space of N spin-1 bosons: basis, coherent states, sparse
//! second-quantized operators, expectations and covariances.

pub mod basis;
pub mod operator;
pub mod state;

pub use basis::{build_basis, FockBasis, Occupation, MAX_PARTICLES};
pub use operator::{
    covariance_matrix, expectation, min_eigenvalue, second_quantize, second_quantize_combo,
    SecondQuantizedOperator,
};
pub use state::{coherent_state, ManyBodyState, Spinor};
