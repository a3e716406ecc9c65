use std::sync::Arc;

use crate::error::{Error, Result};

pub const MAX_PARTICLES: usize = 300;

/// Occupation triple (n₁, n₀, n₋₁).
pub type Occupation = [usize; 3];

/// Symmetric Fock basis of N spin-1 bosons, ordered lexicographically
/// descending in (n₁, n₀).
#[derive(Debug, PartialEq, Eq)]
pub struct FockBasis {
    n_particles: usize,
    states: Vec<Occupation>,
}

impl FockBasis {
    pub fn new(n: usize) -> Result<Arc<FockBasis>> {
        if n > MAX_PARTICLES {
            return Err(Error::SizeLimit {
                n,
                limit: MAX_PARTICLES,
            });
        }
        let mut states = Vec::with_capacity((n + 1) * (n + 2) / 2);
        for n1 in (0..=n).rev() {
            for n0 in (0..=n - n1).rev() {
                states.push([n1, n0, n - n1 - n0]);
            }
        }
        Ok(Arc::new(FockBasis {
            n_particles: n,
            states,
        }))
    }

    pub fn n_particles(&self) -> usize {
        self.n_particles
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[Occupation] {
        &self.states
    }

    pub fn state(&self, idx: usize) -> Occupation {
        self.states[idx]
    }

    /// Position of an occupation triple; `None` if it does not sum to N.
    pub fn index_of(&self, occ: Occupation) -> Option<usize> {
        let n = self.n_particles;
        if occ.iter().sum::<usize>() != n {
            return None;
        }
        let k = n - occ[0];
        Some(k * (k + 1) / 2 + (k - occ[1]))
    }
}

pub fn build_basis(n: usize) -> Result<Arc<FockBasis>> {
    FockBasis::new(n)
}
