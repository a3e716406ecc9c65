//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use su3squeeze::dynamics::{reference_spinor, reference_triad};
use su3squeeze::fock::{build_basis, coherent_state};
use su3squeeze::{FockBasis, ManyBodyState, SqueezeType, Su2Triad};

/// Reference coherent state and triad of one squeezing family at N particles.
pub struct Fixture {
    pub basis: Arc<FockBasis>,
    pub state: ManyBodyState,
    pub triad: Su2Triad,
}

impl Fixture {
    pub fn new(n: usize, family: SqueezeType) -> Self {
        let basis = build_basis(n).expect("N within limit");
        let state = coherent_state(&basis, &reference_spinor(family));
        Self {
            basis,
            state,
            triad: reference_triad(family),
        }
    }
}

pub const SIZES: [usize; 3] = [50, 100, 200];
