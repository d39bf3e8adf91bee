//! Symmetry-adapted basis vectors for three qubits and the logical states
//! built from them for four and five qubits.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::linalg::{ComplexMatrix, StateVector};
use crate::su2::{collective, pauli, Axis, BlockLayout, BlockSlot};

/// Which of the two three-qubit bases to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis3Variant {
    /// Spin eigenstates with `|e_{4,1}> = |000>`.
    Original,
    /// Relabelled basis whose encoder is a short permutation-like circuit.
    Redefined,
}

impl Basis3Variant {
    pub const ALL: [Basis3Variant; 2] = [Basis3Variant::Original, Basis3Variant::Redefined];
}

/// `e4[k]` spans the spin-3/2 irrep; `a` and `b` are the two spin-1/2 copies,
/// index 0 being the `m = +1/2` member.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis3 {
    pub e4: [StateVector; 4],
    pub a: [StateVector; 2],
    pub b: [StateVector; 2],
}

fn ket(terms: &[(f64, &str)]) -> StateVector {
    terms
        .iter()
        .map(|&(coef, bits)| {
            StateVector::from_bits(bits)
                .expect("literal bit string")
                .scale(crate::linalg::r(coef))
        })
        .reduce(|acc, v| acc.add(&v))
        .expect("at least one term")
}

/// `−(σx)^{⊗3} v`.
fn flipped(v: &StateVector) -> StateVector {
    let x3 = collective(&pauli(Axis::X), 3);
    x3.apply(v).expect("3-qubit vector").scale(-crate::linalg::ONE)
}

pub fn basis3(variant: Basis3Variant) -> Basis3 {
    let s2 = FRAC_1_SQRT_2;
    let s3 = 1.0 / 3f64.sqrt();
    let s6 = 1.0 / 6f64.sqrt();
    match variant {
        Basis3Variant::Original => Basis3 {
            e4: [
                ket(&[(1.0, "000")]),
                ket(&[(s3, "100"), (s3, "010"), (s3, "001")]),
                ket(&[(s3, "011"), (s3, "101"), (s3, "110")]),
                ket(&[(1.0, "111")]),
            ],
            a: [
                ket(&[(s2, "100"), (-s2, "010")]),
                ket(&[(-s2, "011"), (s2, "101")]),
            ],
            b: [
                ket(&[(s6, "100"), (s6, "010"), (-2.0 * s6, "001")]),
                ket(&[(-s6, "011"), (-s6, "101"), (2.0 * s6, "110")]),
            ],
        },
        Basis3Variant::Redefined => {
            let a1 = ket(&[(s2, "100"), (-s2, "001")]);
            let b1 = ket(&[(s6, "100"), (s6, "001"), (-2.0 * s6, "010")]);
            let e42 = ket(&[(1.0, "111")]);
            let e41 = ket(&[(s3, "100"), (s3, "001"), (s3, "010")]);
            Basis3 {
                e4: [e41.clone(), e42.clone(), flipped(&e42), flipped(&e41)],
                a: [a1.clone(), flipped(&a1)],
                b: [b1.clone(), flipped(&b1)],
            }
        }
    }
}

impl Basis3 {
    pub fn labeled(&self) -> Vec<(&'static str, StateVector)> {
        vec![
            ("e4_1", self.e4[0].clone()),
            ("e4_2", self.e4[1].clone()),
            ("e4_3", self.e4[2].clone()),
            ("e4_4", self.e4[3].clone()),
            ("ea1", self.a[0].clone()),
            ("ea2", self.a[1].clone()),
            ("eb1", self.b[0].clone()),
            ("eb2", self.b[1].clone()),
        ]
    }

    /// Encoder columns for inputs `|000>..|111>`:
    /// `(ea1, eb1, e4_2, e4_1, ea2, eb2, e4_3, e4_4)`.
    pub fn encoder_columns(&self) -> [StateVector; 8] {
        [
            self.a[0].clone(),
            self.b[0].clone(),
            self.e4[1].clone(),
            self.e4[0].clone(),
            self.a[1].clone(),
            self.b[1].clone(),
            self.e4[2].clone(),
            self.e4[3].clone(),
        ]
    }

    /// Projector onto one spin-1/2 copy (`copy` 0 is `a`, 1 is `b`).
    pub fn projector(&self, copy: usize) -> ComplexMatrix {
        let pair = if copy == 0 { &self.a } else { &self.b };
        &pair[0].outer() + &pair[1].outer()
    }
}

/// Irrep slots of the three-qubit encoder columns: irrep 0 is the spin-3/2
/// block (`e4_1..e4_4`), irrep 1 the two spin-1/2 copies.
pub fn ns3_block_layout() -> BlockLayout {
    let slot = |irrep, copy, weight| BlockSlot { irrep, copy, weight };
    BlockLayout {
        dims: vec![4, 2],
        copies: vec![1, 2],
        slots: vec![
            slot(1, 0, 0), // ea1
            slot(1, 1, 0), // eb1
            slot(0, 0, 1), // e4_2
            slot(0, 0, 0), // e4_1
            slot(1, 0, 1), // ea2
            slot(1, 1, 1), // eb2
            slot(0, 0, 2), // e4_3
            slot(0, 0, 3), // e4_4
        ],
    }
}

/// `(|1>|e1> + |0>(σx)^{⊗3}|e1>)/√2` for a three-qubit `m = +1/2` vector `e1`.
pub fn dfs4_logical_from(e1: &StateVector) -> StateVector {
    let x3 = collective(&pauli(Axis::X), 3);
    let one = StateVector::from_bits("1").expect("bit");
    let zero = StateVector::from_bits("0").expect("bit");
    one.kron(e1)
        .add(&zero.kron(&x3.apply(e1).expect("3-qubit vector")))
        .scale(crate::linalg::r(FRAC_1_SQRT_2))
}

/// `[|0>_L, |1>_L]` of the four-qubit decoherence-free subspace.
pub fn dfs4_logical(variant: Basis3Variant) -> [StateVector; 2] {
    let b = basis3(variant);
    [dfs4_logical_from(&b.a[0]), dfs4_logical_from(&b.b[0])]
}

/// `[|00>_L, |01>_L, |10>_L, |11>_L]` of the five-qubit noiseless subsystem,
/// built on the redefined three-qubit basis.
pub fn logical_basis5() -> [StateVector; 4] {
    logical_basis5_with(Basis3Variant::Redefined)
}

pub fn logical_basis5_with(variant: Basis3Variant) -> [StateVector; 4] {
    let b = basis3(variant);
    let s2 = FRAC_1_SQRT_2;
    let s6 = 1.0 / 6f64.sqrt();
    let singlet = ket(&[(s2, "01"), (-s2, "10")]);
    let sym = ket(&[(s6, "01"), (s6, "10")]);
    let up = ket(&[(-2.0 * s6, "00")]);
    let mixed = |e1: &StateVector, e2: &StateVector| sym.kron(e1).add(&up.kron(e2));
    [
        singlet.kron(&b.a[0]),
        singlet.kron(&b.b[0]),
        mixed(&b.a[0], &b.a[1]),
        mixed(&b.b[0], &b.b[1]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::StateVector;

    fn gram_deviation(vs: &[StateVector]) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, u) in vs.iter().enumerate() {
            for (j, v) in vs.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((u.inner(v).unwrap() - crate::linalg::r(expected)).norm());
            }
        }
        worst
    }

    #[test]
    fn original_ea1_coefficients() {
        let b = basis3(Basis3Variant::Original);
        let s = FRAC_1_SQRT_2;
        let mut expected = vec![0.0; 8];
        expected[0b100] = s;
        expected[0b010] = -s;
        assert!(b.a[0].distance(&StateVector::from_real(&expected)) < 1e-15);
    }

    #[test]
    fn both_variants_orthonormal() {
        for v in Basis3Variant::ALL {
            let vs: Vec<StateVector> = basis3(v).labeled().into_iter().map(|(_, v)| v).collect();
            assert!(gram_deviation(&vs) < 1e-12, "{v:?}");
        }
    }

    #[test]
    fn redefined_partners_are_flips() {
        let b = basis3(Basis3Variant::Redefined);
        // hand expansion: −X⊗3 (|100>−|001>)/√2 = (|110>−|011>)/√2
        let s = FRAC_1_SQRT_2;
        let mut expected = vec![0.0; 8];
        expected[0b110] = s;
        expected[0b011] = -s;
        assert!(b.a[1].distance(&StateVector::from_real(&expected)) < 1e-15);
        assert!(b.e4[2].distance(&StateVector::from_bits("000").unwrap().scale(-crate::linalg::ONE)) < 1e-15);
    }

    #[test]
    fn logical5_norms_and_support() {
        let l = logical_basis5();
        assert!(gram_deviation(&l) < 1e-12);
        // |00>_L: weight-2 strings with exactly one excitation on qubits 1,2
        for (idx, z) in l[0].amplitudes().iter().enumerate() {
            if z.norm() > 1e-14 {
                assert_eq!(idx.count_ones(), 2, "index {idx:05b}");
                assert_eq!((idx >> 3).count_ones(), 1, "index {idx:05b}");
            }
        }
        assert!((l[2].norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn dfs4_logical_orthonormal() {
        for v in Basis3Variant::ALL {
            let l = dfs4_logical(v);
            assert!(gram_deviation(&l) < 1e-12);
        }
    }

    #[test]
    fn layout_is_valid() {
        ns3_block_layout().validate().unwrap();
    }
}
