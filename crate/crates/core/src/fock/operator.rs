use std::io::{self, Write};
use std::sync::Arc;

use nalgebra::{DMatrix, SymmetricEigen};

use super::basis::FockBasis;
use super::state::ManyBodyState;
use crate::algebra::ObservableCombo;
use crate::error::{Error, Result};
use crate::linalg::{hermiticity_deviation, Mat3, C64};

const HERMITIAN_TOL: f64 = 1e-12;
const IMAG_TOL: f64 = 1e-9;

/// Σₘₙ Kₘₙ a†ₘaₙ on a symmetric Fock basis, stored row-compressed.
#[derive(Clone, Debug)]
pub struct SecondQuantizedOperator {
    basis: Arc<FockBasis>,
    kernel: Mat3,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    values: Vec<C64>,
}

/// Promotes a Hermitian single-particle kernel to the many-body space.
pub fn second_quantize(basis: &Arc<FockBasis>, kernel: &Mat3) -> Result<SecondQuantizedOperator> {
    let deviation = hermiticity_deviation(kernel);
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let dim = basis.dim();
    let mut row_ptr = Vec::with_capacity(dim + 1);
    let mut cols = Vec::with_capacity(7 * dim);
    let mut values = Vec::with_capacity(7 * dim);
    row_ptr.push(0);
    for (row, t) in basis.states().iter().enumerate() {
        let mut diag = C64::new(0.0, 0.0);
        for m in 0..3 {
            diag += kernel[(m, m)] * t[m] as f64;
        }
        let mut entries: Vec<(usize, C64)> = Vec::with_capacity(7);
        // ⟨t| a†ₘ aₙ |s⟩ with s = t - eₘ + eₙ
        for m in 0..3 {
            if t[m] == 0 {
                continue;
            }
            for n in 0..3 {
                let k = kernel[(m, n)];
                if m == n || k == C64::new(0.0, 0.0) {
                    continue;
                }
                let mut s = *t;
                s[m] -= 1;
                s[n] += 1;
                let col = basis.index_of(s).expect("hop stays in the basis");
                entries.push((col, k * ((t[m] * s[n]) as f64).sqrt()));
            }
        }
        if diag != C64::new(0.0, 0.0) {
            entries.push((row, diag));
        }
        entries.sort_by_key(|e| e.0);
        for (c, v) in entries {
            cols.push(c);
            values.push(v);
        }
        row_ptr.push(cols.len());
    }
    Ok(SecondQuantizedOperator {
        basis: Arc::clone(basis),
        kernel: *kernel,
        row_ptr,
        cols,
        values,
    })
}

pub fn second_quantize_combo(
    basis: &Arc<FockBasis>,
    combo: &ObservableCombo,
) -> Result<SecondQuantizedOperator> {
    second_quantize(basis, &combo.matrix())
}

impl SecondQuantizedOperator {
    pub fn basis(&self) -> &Arc<FockBasis> {
        &self.basis
    }

    pub fn kernel(&self) -> &Mat3 {
        &self.kernel
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn max_row_nnz(&self) -> usize {
        self.row_ptr
            .windows(2)
            .map(|w| w[1] - w[0])
            .max()
            .unwrap_or(0)
    }

    /// (row, col, value) in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        (0..self.dim()).flat_map(move |r| {
            (self.row_ptr[r]..self.row_ptr[r + 1]).map(move |k| (r, self.cols[k], self.values[k]))
        })
    }

    pub fn is_diagonal(&self) -> bool {
        self.triplets().all(|(r, c, v)| r == c || v.norm() == 0.0)
    }

    /// Diagonal entries, used by the twisting evolution.
    pub fn diagonal(&self) -> Vec<C64> {
        let mut d = vec![C64::new(0.0, 0.0); self.dim()];
        for (r, c, v) in self.triplets() {
            if r == c {
                d[r] = v;
            }
        }
        d
    }

    pub fn apply_into(&self, x: &[C64], out: &mut [C64]) {
        for (r, o) in out.iter_mut().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                acc += self.values[k] * x[self.cols[k]];
            }
            *o = acc;
        }
    }

    pub fn apply(&self, x: &[C64]) -> Vec<C64> {
        let mut out = vec![C64::new(0.0, 0.0); x.len()];
        self.apply_into(x, &mut out);
        out
    }

    pub fn to_dense(&self) -> DMatrix<C64> {
        let mut m = DMatrix::zeros(self.dim(), self.dim());
        for (r, c, v) in self.triplets() {
            m[(r, c)] += v;
        }
        m
    }

    /// Max |A_rc - conj(A_cr)| over stored entries.
    pub fn hermiticity_deviation(&self) -> f64 {
        let lookup = |r: usize, c: usize| -> C64 {
            let row = &self.cols[self.row_ptr[r]..self.row_ptr[r + 1]];
            match row.binary_search(&c) {
                Ok(k) => self.values[self.row_ptr[r] + k],
                Err(_) => C64::new(0.0, 0.0),
            }
        };
        self.triplets()
            .map(|(r, c, v)| (v - lookup(c, r).conj()).norm())
            .fold(0.0, f64::max)
    }

    /// CSV rows `row,col,re,im` with a header line.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "row,col,re,im")?;
        for (r, c, v) in self.triplets() {
            writeln!(w, "{r},{c},{:e},{:e}", v.re, v.im)?;
        }
        Ok(())
    }
}

fn check_basis(state: &ManyBodyState, op: &SecondQuantizedOperator) -> Result<()> {
    if state.basis() != op.basis() {
        return Err(Error::BasisMismatch);
    }
    Ok(())
}

fn vdot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// ⟨ψ|A|ψ⟩, which must be real for Hermitian A.
pub fn expectation(state: &ManyBodyState, op: &SecondQuantizedOperator) -> Result<f64> {
    check_basis(state, op)?;
    let psi = state.amplitudes();
    let z = vdot(psi, &op.apply(psi));
    if z.im.abs() > IMAG_TOL {
        return Err(Error::ImaginaryResidual { imag: z.im });
    }
    Ok(z.re)
}

/// Symmetrized covariance C_ij = Re⟨AᵢAⱼ⟩ - ⟨Aᵢ⟩⟨Aⱼ⟩.
pub fn covariance_matrix(
    state: &ManyBodyState,
    ops: &[&SecondQuantizedOperator],
) -> Result<DMatrix<f64>> {
    for op in ops {
        check_basis(state, op)?;
    }
    let psi = state.amplitudes();
    let images: Vec<Vec<C64>> = ops.iter().map(|op| op.apply(psi)).collect();
    let means: Vec<f64> = images
        .iter()
        .map(|w| {
            let z = vdot(psi, w);
            if z.im.abs() > IMAG_TOL {
                Err(Error::ImaginaryResidual { imag: z.im })
            } else {
                Ok(z.re)
            }
        })
        .collect::<Result<_>>()?;
    let k = ops.len();
    Ok(DMatrix::from_fn(k, k, |i, j| {
        // ⟨ψ|AᵢAⱼ|ψ⟩ = (Aᵢψ)†(Aⱼψ); its real part is the symmetrized moment
        vdot(&images[i], &images[j]).re - means[i] * means[j]
    }))
}

/// Smallest eigenvalue of a covariance matrix, for semidefiniteness checks.
pub fn min_eigenvalue(c: &DMatrix<f64>) -> f64 {
    SymmetricEigen::new(c.clone())
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}
