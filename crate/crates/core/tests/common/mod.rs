#![allow(dead_code)]

use std::collections::BTreeMap;

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use su3squeeze::{Spinor, C64};

/// (Σₘ ζₘ a†ₘ)ᴺ|vac⟩/√N!, expanded one creation operator at a time.
pub fn symbolic_coherent(n: usize, zeta: [C64; 3]) -> BTreeMap<[usize; 3], C64> {
    let mut state: BTreeMap<[usize; 3], C64> = BTreeMap::new();
    state.insert([0, 0, 0], C64::new(1.0, 0.0));
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for (occ, amp) in &state {
            for m in 0..3 {
                let mut up = *occ;
                up[m] += 1;
                let v = amp * zeta[m] * (up[m] as f64).sqrt();
                *next.entry(up).or_insert(C64::new(0.0, 0.0)) += v;
            }
        }
        state = next;
    }
    let norm = (1..=n).map(|k| k as f64).product::<f64>().sqrt();
    state.values_mut().for_each(|v| *v /= norm);
    state
}

pub fn random_spinor(rng: &mut ChaCha8Rng) -> Spinor {
    let z: [C64; 3] =
        std::array::from_fn(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    Spinor::normalize(z).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// e^{-iχt H}, H Hermitian, by dense diagonalization.
pub fn dense_expm(h: &DMatrix<C64>, chi_t: f64) -> DMatrix<C64> {
    let eig = SymmetricEigen::new(h.clone());
    let v = eig.eigenvectors;
    let d = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| C64::from_polar(1.0, -chi_t * l)));
    &v * d * v.adjoint()
}
