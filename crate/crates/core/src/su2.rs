//! SU(2) building blocks: Pauli rotations, x-y-x Euler angles, collective
//! operators `W^{⊗n}`, and the irrep decomposition of `2^{⊗n}`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{r, ComplexMatrix, I, ONE, TOL_CONSTRUCTION, TOL_IDENTITY, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

pub fn pauli(axis: Axis) -> ComplexMatrix {
    match axis {
        Axis::X => ComplexMatrix::from_rows(&[&[ZERO, ONE], &[ONE, ZERO]]),
        Axis::Y => ComplexMatrix::from_rows(&[&[ZERO, -I], &[I, ZERO]]),
        Axis::Z => ComplexMatrix::diagonal(&[ONE, -ONE]),
    }
}

/// `exp(i θ σ_axis) = cos θ I + i sin θ σ_axis`.
pub fn rot(axis: Axis, theta: f64) -> ComplexMatrix {
    let (s, c) = theta.sin_cos();
    let p = pauli(axis);
    ComplexMatrix::from_fn(2, 2, |i, j| {
        let id = if i == j { r(c) } else { ZERO };
        id + I * s * p.get(i, j)
    })
}

/// Angles of `W = exp(iθ₁σx) exp(iθ₂σy) exp(iθ₃σx)`.
///
/// Canonical branch: `θ₂ ∈ [0, π/2]`, `θ₁, θ₃ ∈ (−π, π]`; when `θ₂` sits on
/// either end of its range, `θ₃ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EulerAngles {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
}

impl EulerAngles {
    pub fn new(theta1: f64, theta2: f64, theta3: f64) -> Self {
        EulerAngles { theta1, theta2, theta3 }
    }

    pub fn recompose(&self) -> ComplexMatrix {
        euler_recompose(self)
    }
}

pub fn euler_recompose(angles: &EulerAngles) -> ComplexMatrix {
    let x1 = rot(Axis::X, angles.theta1);
    let y2 = rot(Axis::Y, angles.theta2);
    let x3 = rot(Axis::X, angles.theta3);
    &(&x1 * &y2) * &x3
}

// below this magnitude an off-diagonal or diagonal entry is treated as zero
const DEGENERATE: f64 = 1e-14;

/// Inverts [`euler_recompose`] for a determinant-one unitary.
pub fn euler_decompose(w: &ComplexMatrix) -> Result<EulerAngles> {
    let det = w.det2()?;
    if (det - ONE).norm() > TOL_IDENTITY {
        return Err(Error::NotSpecialUnitary { det });
    }
    let deviation = w.unitarity_deviation()?;
    if deviation > TOL_IDENTITY {
        return Err(Error::NotUnitary { deviation });
    }
    // Conjugating by the Hadamard turns x-y-x into z-(−y)-z:
    // H W H = [[e^{i(a+c)} cos b, −e^{i(a−c)} sin b], [.., ..]].
    let h = hadamard();
    let wz = &(&h * w) * &h;
    let u = wz.get(0, 0);
    let v = wz.get(0, 1);
    let theta2 = v.norm().atan2(u.norm());
    let (theta1, theta3) = if v.norm() < DEGENERATE {
        (u.arg(), 0.0)
    } else if u.norm() < DEGENERATE {
        ((-v).arg(), 0.0)
    } else {
        let sum = u.arg();
        let diff = (-v).arg();
        ((sum + diff) / 2.0, (sum - diff) / 2.0)
    };
    Ok(EulerAngles {
        theta1: wrap_angle(theta1),
        theta2: theta2.clamp(0.0, FRAC_PI_2),
        theta3: wrap_angle(theta3),
    })
}

/// Maps into `(−π, π]`.
fn wrap_angle(theta: f64) -> f64 {
    let mut t = theta % (2.0 * PI);
    if t <= -PI {
        t += 2.0 * PI;
    } else if t > PI {
        t -= 2.0 * PI;
    }
    t
}

pub fn hadamard() -> ComplexMatrix {
    let s = r(std::f64::consts::FRAC_1_SQRT_2);
    ComplexMatrix::from_rows(&[&[s, s], &[s, -s]])
}

/// Divides a 2×2 unitary by the principal square root of its determinant.
pub fn to_special_unitary(w: &ComplexMatrix) -> Result<ComplexMatrix> {
    let det = w.det2()?;
    let deviation = w.unitarity_deviation()?;
    if deviation > TOL_IDENTITY {
        return Err(Error::NotUnitary { deviation });
    }
    Ok(w.scale(det.sqrt().inv()))
}

/// `W^{⊗n}` for a single-qubit unitary.
#[derive(Debug, Clone, PartialEq)]
pub struct CollectiveUnitary {
    w: ComplexMatrix,
    n: usize,
}

impl CollectiveUnitary {
    pub fn new(w: ComplexMatrix, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::QubitCount { n, min: 1, max: 12 });
        }
        let det = w.det2()?;
        let deviation = w.unitarity_deviation()?;
        if deviation > TOL_CONSTRUCTION {
            return Err(Error::NotUnitary { deviation });
        }
        if (det - ONE).norm() > TOL_CONSTRUCTION {
            return Err(Error::NotSpecialUnitary { det });
        }
        Ok(CollectiveUnitary { w, n })
    }

    pub fn single(&self) -> &ComplexMatrix {
        &self.w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> ComplexMatrix {
        collective(&self.w, self.n)
    }
}

pub fn collective(w: &ComplexMatrix, n: usize) -> ComplexMatrix {
    assert!(n >= 1, "collective operator needs at least one qubit");
    w.kron_power(n)
}

/// `S₋ = Σ_i σ₋^(i)` with `σ₋ = |1><0|` (`|0>` is spin up).
pub fn collective_lowering(n: usize) -> ComplexMatrix {
    assert!(n >= 1, "collective operator needs at least one qubit");
    let dim = 1usize << n;
    let mut out = ComplexMatrix::zeros(dim, dim);
    for col in 0..dim {
        for site in 0..n {
            let bit = 1 << (n - 1 - site);
            if col & bit == 0 {
                let row = col | bit;
                out.set(row, col, out.get(row, col) + ONE);
            }
        }
    }
    out
}

/// `Σ_i σ_axis^(i)`.
pub fn collective_sum(axis: Axis, n: usize) -> ComplexMatrix {
    let p = pauli(axis);
    let id = ComplexMatrix::identity(2);
    let dim = 1usize << n;
    (0..n).fold(ComplexMatrix::zeros(dim, dim), |acc, site| {
        let factors: Vec<&ComplexMatrix> = (0..n).map(|k| if k == site { &p } else { &id }).collect();
        &acc + &ComplexMatrix::kron_all(factors)
    })
}

/// One irrep block of `2^{⊗n}`: index `j`, multiplicity `r_j`, dimension `n_j = n + 1 − 2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepBlock {
    pub j: usize,
    pub multiplicity: u64,
    pub dim: usize,
}

impl IrrepBlock {
    /// Total spin `(n_j − 1)/2`.
    pub fn spin(&self) -> f64 {
        (self.dim as f64 - 1.0) / 2.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepDecomposition {
    pub n: usize,
    pub blocks: Vec<IrrepBlock>,
}

pub const MAX_DECOMPOSE_QUBITS: usize = 30;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| {
        // exact: acc * (n - i) is divisible by (i + 1)
        (acc as u128 * (n - i) as u128 / (i + 1) as u128) as u64
    })
}

pub fn multiplicities(n: usize) -> Result<IrrepDecomposition> {
    if !(1..=MAX_DECOMPOSE_QUBITS).contains(&n) {
        return Err(Error::QubitCount {
            n,
            min: 1,
            max: MAX_DECOMPOSE_QUBITS,
        });
    }
    let nn = n as u64;
    let blocks: Vec<IrrepBlock> = (0..=n / 2)
        .map(|j| {
            let jj = j as u64;
            let multiplicity = if j == 0 {
                1
            } else {
                binomial(nn, jj) - binomial(nn, jj - 1)
            };
            IrrepBlock {
                j,
                multiplicity,
                dim: n + 1 - 2 * j,
            }
        })
        .collect();
    let total: u64 = blocks.iter().map(|b| b.multiplicity * b.dim as u64).sum();
    assert_eq!(total, 1u64 << n, "multiplicity formula does not fill 2^{n}");
    Ok(IrrepDecomposition { n, blocks })
}

impl IrrepDecomposition {
    pub fn total_dim(&self) -> u64 {
        self.blocks.iter().map(|b| b.multiplicity * b.dim as u64).sum()
    }

    /// Rows `n,j,r,dim` with header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,j,r,dim\n");
        for b in &self.blocks {
            out.push_str(&format!("{},{},{},{}\n", self.n, b.j, b.multiplicity, b.dim));
        }
        out
    }
}

impl fmt::Display for IrrepDecomposition {
    /// e.g. `4 ⊕ (I2 ⊗ 2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, " ⊕ ")?;
            }
            if b.multiplicity == 1 {
                write!(f, "{}", b.dim)?;
            } else {
                write!(f, "(I{} ⊗ {})", b.multiplicity, b.dim)?;
            }
        }
        Ok(())
    }
}

/// Where a basis column sits in the block decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockSlot {
    /// Index into [`BlockLayout::dims`].
    pub irrep: usize,
    /// Which copy of the irrep.
    pub copy: usize,
    /// Position inside the irrep.
    pub weight: usize,
}

/// Assignment of every column of a basis change to an irrep slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockLayout {
    /// Dimension of each irrep.
    pub dims: Vec<usize>,
    /// Number of copies of each irrep.
    pub copies: Vec<usize>,
    /// `slots[col]`.
    pub slots: Vec<BlockSlot>,
}

impl BlockLayout {
    pub fn validate(&self) -> Result<()> {
        if self.dims.len() != self.copies.len() {
            return Err(Error::Layout("dims and copies differ in length".into()));
        }
        let expected: usize = self.dims.iter().zip(&self.copies).map(|(d, c)| d * c).sum();
        if expected != self.slots.len() {
            return Err(Error::Layout(format!(
                "{} slots for a decomposition of total dimension {expected}",
                self.slots.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for s in &self.slots {
            if s.irrep >= self.dims.len()
                || s.copy >= self.copies[s.irrep]
                || s.weight >= self.dims[s.irrep]
            {
                return Err(Error::Layout(format!("slot {s:?} out of range")));
            }
            if !seen.insert(*s) {
                return Err(Error::Layout(format!("slot {s:?} assigned twice")));
            }
        }
        Ok(())
    }

    fn column_of(&self, irrep: usize, copy: usize, weight: usize) -> usize {
        self.slots
            .iter()
            .position(|s| *s == BlockSlot { irrep, copy, weight })
            .expect("validated layout covers every slot")
    }
}

/// Largest violation of the block pattern in `t† W^{⊗n} t`: entries coupling
/// different irreps or different copies, and differences between copies of
/// the same irrep.
pub fn block_structure_residual(t: &ComplexMatrix, w: &ComplexMatrix, layout: &BlockLayout) -> Result<f64> {
    layout.validate()?;
    if !t.is_square() || t.rows() != layout.slots.len() {
        return Err(Error::Layout(format!(
            "basis change is {:?} but layout has {} slots",
            t.shape(),
            layout.slots.len()
        )));
    }
    let n = crate::linalg::qubit_count(t.rows())?;
    let v = collective(w, n);
    let conj = t.dagger().matmul(&v)?.matmul(t)?;
    let mut worst: f64 = 0.0;
    for (ci, si) in layout.slots.iter().enumerate() {
        for (cj, sj) in layout.slots.iter().enumerate() {
            if si.irrep != sj.irrep || si.copy != sj.copy {
                worst = worst.max(conj.get(ci, cj).norm());
            }
        }
    }
    for (irrep, (&dim, &copies)) in layout.dims.iter().zip(&layout.copies).enumerate() {
        for copy in 1..copies {
            for a in 0..dim {
                for b in 0..dim {
                    let reference =
                        conj.get(layout.column_of(irrep, 0, a), layout.column_of(irrep, 0, b));
                    let other =
                        conj.get(layout.column_of(irrep, copy, a), layout.column_of(irrep, copy, b));
                    worst = worst.max((reference - other).norm());
                }
            }
        }
    }
    Ok(worst)
}

pub fn verify_block_structure(t: &ComplexMatrix, w: &ComplexMatrix, layout: &BlockLayout) -> Result<bool> {
    Ok(block_structure_residual(t, w, layout)? < TOL_IDENTITY)
}

/// The `dim × dim` block of `t† W^{⊗n} t` for one irrep copy.
pub fn irrep_block(
    t: &ComplexMatrix,
    w: &ComplexMatrix,
    layout: &BlockLayout,
    irrep: usize,
    copy: usize,
) -> Result<ComplexMatrix> {
    layout.validate()?;
    let n = crate::linalg::qubit_count(t.rows())?;
    let conj = t.dagger().matmul(&collective(w, n))?.matmul(t)?;
    let dim = layout.dims[irrep];
    Ok(ComplexMatrix::from_fn(dim, dim, |a, b| {
        conj.get(layout.column_of(irrep, copy, a), layout.column_of(irrep, copy, b))
    }))
}
