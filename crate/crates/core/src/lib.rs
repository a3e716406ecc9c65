//! Classification of su(2) subalgebras of su(3) and exact one-axis-twisting
//! simulations of spin and spin-nematic squeezing for N spin-1 bosons.
//!
//! Modules, bottom up:
//! - [`algebra`]: generators, structure constants, roots, triads, the
//!   raising-operator search.
//! - [`fock`]: symmetric Fock basis, coherent states, sparse operators.
//! - [`dynamics`]: SU(3) rotations of states, angle solving, twisting.
//! - [`squeezing`]: quadrature variances, time optimization, asymptotics.

pub mod algebra;
pub mod dynamics;
pub mod error;
pub mod fock;
mod linalg;
mod optimize;
pub mod squeezing;

pub use algebra::{classify_triad, ObservableCombo, SqueezeType, Su2Triad, Su3Rotation};
pub use dynamics::{EulerAngles, TwistingSchedule};
pub use error::{Error, Result};
pub use fock::{FockBasis, ManyBodyState, SecondQuantizedOperator, Spinor};
pub use linalg::{Mat3, Vec3, C64};
pub use squeezing::{
    asymptotic_prediction, default_schedule, run_squeezing, sweep_scaling, SqueezeResult,
};
