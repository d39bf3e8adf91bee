//! Dense complex linear algebra on small qubit registers.
//!
//! Qubit 1 is the leftmost tensor factor and the most significant bit of a
//! basis index, so `|i1 i2 ... in>` has index `i1*2^(n-1) + ... + in`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for constructing operators that should be exact.
pub const TOL_CONSTRUCTION: f64 = 1e-12;
/// Tolerance for physical identities.
pub const TOL_IDENTITY: f64 = 1e-10;
/// Tolerance for density-matrix validity.
pub const TOL_STATE: f64 = 1e-9;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn r(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Number of qubits for a power-of-two dimension.
pub fn qubit_count(dim: usize) -> Result<usize> {
    if dim == 0 || !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(dim));
    }
    Ok(dim.trailing_zeros() as usize)
}

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<[f64; 2]>,
}

impl TryFrom<MatrixJson> for ComplexMatrix {
    type Error = Error;

    fn try_from(json: MatrixJson) -> Result<Self> {
        let data = json.data.into_iter().map(|[re, im]| c(re, im)).collect();
        ComplexMatrix::new(json.rows, json.cols, data)
    }
}

impl From<ComplexMatrix> for MatrixJson {
    fn from(m: ComplexMatrix) -> Self {
        MatrixJson {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                got: data.len(),
            });
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ComplexMatrix { rows, cols, data }
    }

    /// Builds a matrix from nested rows. Panics on ragged input.
    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let ncols = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == ncols), "ragged rows");
        Self::from_fn(rows.len(), ncols, |i, j| rows[i][j])
    }

    pub fn diagonal(entries: &[Complex64]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i] } else { ZERO })
    }

    /// Square matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[StateVector]) -> Result<Self> {
        let dim = columns.first().map_or(0, StateVector::dim);
        if dim == 0 {
            return Err(Error::EntryCount { rows: 0, cols: 0, got: 0 });
        }
        if let Some(bad) = columns.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch {
                op: "from_columns",
                left: (dim, 1),
                right: (bad.dim(), 1),
            });
        }
        Ok(Self::from_fn(dim, columns.len(), |i, j| columns[j].amplitudes()[i]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> StateVector {
        StateVector::from_amplitudes((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().copied().map(f).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius distance; panics if shapes differ.
    pub fn distance(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.shape(), other.shape(), "distance between mismatched shapes");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn matmul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &ComplexMatrix,
        op: &'static str,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<ComplexMatrix> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(*a, *b)).collect(),
        })
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if self.cols != v.dim() {
            return Err(Error::DimensionMismatch {
                op: "apply",
                left: self.shape(),
                right: (v.dim(), 1),
            });
        }
        let amps = (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v.amplitudes())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect();
        Ok(StateVector::from_amplitudes(amps))
    }

    /// `self * rho * self^dagger`.
    pub fn conjugate(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.matmul(rho)?.matmul(&self.dagger())
    }

    pub fn dagger(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let (ar, ac) = self.shape();
        let (br, bc) = other.shape();
        ComplexMatrix::from_fn(ar * br, ac * bc, |i, j| {
            self.get(i / br, j / bc) * other.get(i % br, j % bc)
        })
    }

    /// Left fold `((m0 ⊗ m1) ⊗ m2) ⊗ ...`.
    pub fn kron_all<'a>(factors: impl IntoIterator<Item = &'a ComplexMatrix>) -> ComplexMatrix {
        factors
            .into_iter()
            .fold(ComplexMatrix::identity(1), |acc, m| acc.kron(m))
    }

    pub fn kron_power(&self, n: usize) -> ComplexMatrix {
        Self::kron_all(std::iter::repeat_n(self, n))
    }

    pub fn hermitian_deviation(&self) -> f64 {
        self.distance(&self.dagger())
    }

    /// `‖A†A − I‖_F`; errors on non-square input.
    pub fn unitarity_deviation(&self) -> Result<f64> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                op: "is_unitary",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let gram = self.dagger().matmul(self)?;
        Ok(gram.distance(&ComplexMatrix::identity(self.rows)))
    }

    pub fn is_unitary(&self, tol: f64) -> Result<bool> {
        Ok(self.unitarity_deviation()? <= tol)
    }

    pub fn det2(&self) -> Result<Complex64> {
        if self.shape() != (2, 2) {
            return Err(Error::DimensionMismatch {
                op: "det2",
                left: self.shape(),
                right: (2, 2),
            });
        }
        Ok(self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0))
    }

    /// Permutes tensor factors: input qubit `k` (0-based) moves to position `perm[k]`.
    pub fn permute_qubits(&self, perm: &[usize]) -> Result<ComplexMatrix> {
        let p = qubit_permutation_matrix(perm, self.rows)?;
        if !self.is_square() {
            return Err(Error::NotSquare {
                op: "permute_qubits",
                rows: self.rows,
                cols: self.cols,
            });
        }
        p.conjugate(self)
    }

    fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }

    fn from_nalgebra(m: &DMatrix<Complex64>) -> Self {
        ComplexMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
    }
}

/// Permutation operator sending input qubit `k` to output position `perm[k]`.
pub fn qubit_permutation_matrix(perm: &[usize], dim: usize) -> Result<ComplexMatrix> {
    let n = qubit_count(dim)?;
    if perm.len() != n {
        return Err(Error::Layout(format!(
            "permutation has {} entries for {n} qubits",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Layout(format!("{perm:?} is not a permutation")));
        }
    }
    let mut out = ComplexMatrix::zeros(dim, dim);
    for src in 0..dim {
        let mut dst = 0;
        for (k, &p) in perm.iter().enumerate() {
            let bit = (src >> (n - 1 - k)) & 1;
            dst |= bit << (n - 1 - p);
        }
        out.set(dst, src, ONE);
    }
    Ok(out)
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, " ")?;
            for j in 0..self.cols {
                let z = self.get(i, j);
                write!(f, " {:+.4}{:+.4}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on a dimension mismatch; use [`ComplexMatrix::matmul`] for a `Result`.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kron(b)
}

pub fn dagger(a: &ComplexMatrix) -> ComplexMatrix {
    a.dagger()
}

pub fn is_unitary(a: &ComplexMatrix, tol: f64) -> Result<bool> {
    a.is_unitary(tol)
}

/// Ket with amplitudes in computational-basis order.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StateJson", into = "StateJson")]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateJson {
    dim: usize,
    amplitudes: Vec<[f64; 2]>,
}

impl TryFrom<StateJson> for StateVector {
    type Error = Error;

    fn try_from(json: StateJson) -> Result<Self> {
        if json.dim == 0 || json.amplitudes.len() != json.dim {
            return Err(Error::EntryCount {
                rows: json.dim,
                cols: 1,
                got: json.amplitudes.len(),
            });
        }
        Ok(StateVector {
            amplitudes: json.amplitudes.into_iter().map(|[re, im]| c(re, im)).collect(),
        })
    }
}

impl From<StateVector> for StateJson {
    fn from(v: StateVector) -> Self {
        StateJson {
            dim: v.dim(),
            amplitudes: v.amplitudes.iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = qubit_count(self.dim()).ok();
        let mut first = true;
        for (i, z) in self.amplitudes.iter().enumerate() {
            if z.norm() < 1e-12 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match n {
                Some(n) => write!(f, "({:+.4}{:+.4}i)|{:0width$b}>", z.re, z.im, i, width = n)?,
                None => write!(f, "({:+.4}{:+.4}i)|{i}>", z.re, z.im)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl StateVector {
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Self {
        assert!(!amplitudes.is_empty(), "state vector must be non-empty");
        StateVector { amplitudes }
    }

    pub fn from_real(amplitudes: &[f64]) -> Self {
        Self::from_amplitudes(amplitudes.iter().map(|&x| r(x)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_amplitudes(vec![ZERO; dim])
    }

    /// Computational basis state `|index>` of dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.amplitudes[index] = ONE;
        v
    }

    /// `|b1 b2 ... bn>` from a string of `0`/`1` characters.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let mut index = 0usize;
        for ch in bits.chars() {
            index = index * 2
                + match ch {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::InvalidState(format!("bad bit string {bits:?}"))),
                };
        }
        if bits.is_empty() {
            return Err(Error::InvalidState("empty bit string".into()));
        }
        Ok(Self::basis(1 << bits.len(), index))
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm() * self.norm() - 1.0).abs() <= TOL_IDENTITY
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        self.scale(r(1.0 / n))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_amplitudes(self.amplitudes.iter().map(|z| z * s).collect())
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                op: "inner",
                left: (self.dim(), 1),
                right: (other.dim(), 1),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn add(&self, other: &StateVector) -> Self {
        assert_eq!(self.dim(), other.dim(), "adding states of different dimension");
        Self::from_amplitudes(
            self.amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn kron(&self, other: &StateVector) -> Self {
        let mut amps = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amps.push(a * b);
            }
        }
        Self::from_amplitudes(amps)
    }

    /// Euclidean distance.
    pub fn distance(&self, other: &StateVector) -> f64 {
        assert_eq!(self.dim(), other.dim(), "distance between states of different dimension");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `|self><self|` as a matrix.
    pub fn outer(&self) -> ComplexMatrix {
        let d = self.dim();
        ComplexMatrix::from_fn(d, d, |i, j| self.amplitudes[i] * self.amplitudes[j].conj())
    }
}

/// A valid quantum state: Hermitian, positive semidefinite, trace one
/// (or trace at most one when built with [`DensityMatrix::new_subnormalized`]).
#[derive(Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl fmt::Debug for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensityMatrix({:?})", self.matrix)
    }
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let rho = Self::new_subnormalized(matrix)?;
        let tr = rho.trace();
        if (tr - 1.0).abs() > TOL_STATE {
            return Err(Error::InvalidState(format!("trace {tr} != 1")));
        }
        Ok(rho)
    }

    /// Accepts trace in `[0, 1]`, as produced by trace-decreasing channels.
    pub fn new_subnormalized(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                op: "density matrix",
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let herm = matrix.hermitian_deviation();
        if herm > TOL_IDENTITY {
            return Err(Error::InvalidState(format!("not Hermitian (deviation {herm:e})")));
        }
        let tr = matrix.trace();
        if tr.im.abs() > TOL_STATE || tr.re > 1.0 + TOL_STATE || tr.re < -TOL_STATE {
            return Err(Error::InvalidState(format!("trace {tr} outside [0, 1]")));
        }
        let min = hermitian_eigen(&matrix)
            .0
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min < -TOL_STATE {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
        Ok(DensityMatrix { matrix })
    }

    /// Wraps a matrix without validation; for internal results that are valid by construction.
    pub(crate) fn from_matrix_unchecked(matrix: ComplexMatrix) -> Self {
        debug_assert!(matrix.is_square());
        DensityMatrix { matrix }
    }

    pub fn pure(state: &StateVector) -> Self {
        DensityMatrix {
            matrix: state.normalized().outer(),
        }
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        Self::pure(&StateVector::basis(dim, index))
    }

    pub fn from_bits(bits: &str) -> Result<Self> {
        Ok(Self::pure(&StateVector::from_bits(bits)?))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        DensityMatrix {
            matrix: ComplexMatrix::identity(dim).scale(r(1.0 / dim as f64)),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn kron(&self, other: &DensityMatrix) -> DensityMatrix {
        DensityMatrix {
            matrix: self.matrix.kron(&other.matrix),
        }
    }

    /// `U rho U^dagger`.
    pub fn evolve(&self, u: &ComplexMatrix) -> Result<DensityMatrix> {
        Ok(DensityMatrix {
            matrix: u.conjugate(&self.matrix)?,
        })
    }

    /// Rescaled to unit trace; unchanged when the trace vanishes.
    pub fn normalized(&self) -> DensityMatrix {
        let tr = self.trace();
        if tr.abs() < 1e-300 {
            return self.clone();
        }
        DensityMatrix {
            matrix: self.matrix.scale(r(1.0 / tr)),
        }
    }

    pub fn distance(&self, other: &DensityMatrix) -> f64 {
        self.matrix.distance(&other.matrix)
    }

    /// Eigenvalues in ascending order, with drift in `[-1e-9, 0)` clamped to zero.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigen(&self.matrix)
            .0
            .into_iter()
            .map(|x| if (-TOL_STATE..0.0).contains(&x) { 0.0 } else { x })
            .collect()
    }

    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }
}

impl<'de> Deserialize<'de> for DensityMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let m = ComplexMatrix::deserialize(de)?;
        DensityMatrix::new(m).map_err(serde::de::Error::custom)
    }
}

/// Eigen-decomposition of a Hermitian matrix: ascending eigenvalues and the
/// matching eigenvectors as columns.
pub fn hermitian_eigen(m: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    assert!(m.is_square(), "hermitian_eigen on non-square matrix");
    // symmetrize to remove rounding asymmetry before the solver sees it
    let sym = (&m.to_nalgebra() + m.to_nalgebra().adjoint()).scale(0.5);
    let eig = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..m.rows()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vecs = ComplexMatrix::from_nalgebra(&eig.eigenvectors);
    let sorted = ComplexMatrix::from_fn(m.rows(), m.cols(), |i, j| vecs.get(i, order[j]));
    (values, sorted)
}

/// Applies `f` to the spectrum of a Hermitian matrix.
pub fn hermitian_function(m: &ComplexMatrix, f: impl Fn(f64) -> f64) -> ComplexMatrix {
    let (values, vecs) = hermitian_eigen(m);
    let fd: Vec<Complex64> = values.into_iter().map(|x| r(f(x))).collect();
    &(&vecs * &ComplexMatrix::diagonal(&fd)) * &vecs.dagger()
}

/// Reduced state on the kept qubits (1-based indices, output in ascending order).
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize], n: usize) -> Result<DensityMatrix> {
    if rho.dim() != 1 << n {
        return Err(Error::DimensionMismatch {
            op: "partial_trace",
            left: (rho.dim(), rho.dim()),
            right: (1 << n, 1 << n),
        });
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    for (i, &q) in kept.iter().enumerate() {
        if q == 0 || q > n || (i > 0 && kept[i - 1] == q) {
            return Err(Error::QubitIndex { index: q, n });
        }
    }
    let traced: Vec<usize> = (1..=n).filter(|q| !kept.contains(q)).collect();
    let bit = |q: usize| n - q;
    let spread = |value: usize, qubits: &[usize]| -> usize {
        let k = qubits.len();
        qubits
            .iter()
            .enumerate()
            .map(|(pos, &q)| ((value >> (k - 1 - pos)) & 1) << bit(q))
            .sum()
    };
    let dk = 1 << kept.len();
    let dt = 1 << traced.len();
    let m = rho.matrix();
    let out = ComplexMatrix::from_fn(dk, dk, |i, j| {
        let (bi, bj) = (spread(i, &kept), spread(j, &kept));
        (0..dt)
            .map(|t| {
                let bt = spread(t, &traced);
                m.get(bi | bt, bj | bt)
            })
            .sum()
    });
    Ok(DensityMatrix::from_matrix_unchecked(out))
}

/// Uhlmann fidelity `(tr sqrt(sqrt(a) b sqrt(a)))^2`, clamped to `[0, 1]`.
pub fn fidelity(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            op: "fidelity",
            left: (a.dim(), a.dim()),
            right: (b.dim(), b.dim()),
        });
    }
    let sqrt_a = hermitian_function(a.matrix(), |x| x.max(0.0).sqrt());
    let inner = &(&sqrt_a * b.matrix()) * &sqrt_a;
    let root_trace: f64 = hermitian_eigen(&inner)
        .0
        .into_iter()
        .map(|x| x.max(0.0).sqrt())
        .sum();
    Ok((root_trace * root_trace).clamp(0.0, 1.0))
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let values = rho.eigenvalues();
    if let Some(&min) = values.first() {
        if min < 0.0 {
            return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
        }
    }
    Ok(values
        .into_iter()
        .filter(|&x| x > 0.0)
        .map(|x| -x * x.log2())
        .sum::<f64>()
        .max(0.0))
}
