//! Independent reference computations for values the library derives.

use std::f64::consts::FRAC_1_SQRT_2;

use collective_core::codes::{basis3, build_ue3, encode, Basis3Variant};
use collective_core::linalg::{c, hermitian_eigen, partial_trace, r, ComplexMatrix, DensityMatrix, StateVector};
use collective_core::random::{random_density, trial_rng};
use collective_core::su2::{
    collective, collective_lowering, collective_sum, multiplicities, rot, verify_block_structure, Axis,
};
use collective_core::codes::ns3_block_layout;
use collective_core::verify::code_rate_table;
use num_complex::Complex64;

/// Partial trace by explicit index summation; `keep` is 1-based, ascending.
fn brute_partial_trace(rho: &ComplexMatrix, keep: &[usize], n: usize) -> ComplexMatrix {
    let bit = |x: usize, q: usize| (x >> (n - q)) & 1;
    let k = keep.len();
    let mut out = ComplexMatrix::zeros(1 << k, 1 << k);
    for i in 0..(1usize << n) {
        for j in 0..(1usize << n) {
            let traced_equal = (1..=n).filter(|q| !keep.contains(q)).all(|q| bit(i, q) == bit(j, q));
            if !traced_equal {
                continue;
            }
            let sub = |x: usize| keep.iter().fold(0, |acc, &q| (acc << 1) | bit(x, q));
            let (a, b) = (sub(i), sub(j));
            out.set(a, b, out.get(a, b) + rho.get(i, j));
        }
    }
    out
}

#[test]
fn partial_trace_matches_brute_force() {
    let mut rng = trial_rng(21, 0);
    let rho = random_density(8, &mut rng);
    for keep in [vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]] {
        let lib = partial_trace(&rho, &keep, 3).unwrap();
        let brute = brute_partial_trace(rho.matrix(), &keep, 3);
        assert!(lib.matrix().distance(&brute) < 1e-14, "{keep:?}");
    }
    // product input: each factor comes back
    let a = random_density(2, &mut rng);
    let d = random_density(2, &mut rng);
    let product = a.kron(&DensityMatrix::basis(2, 0)).kron(&d);
    assert!(partial_trace(&product, &[3], 3).unwrap().distance(&d) < 1e-14);
    assert!(partial_trace(&product, &[1], 3).unwrap().distance(&a) < 1e-14);
    let zero = partial_trace(&product, &[2], 3).unwrap();
    assert!(zero.distance(&DensityMatrix::basis(2, 0)) < 1e-14);
}

#[test]
fn lowering_maps_ea1_to_ea2() {
    // S₋(|100> − |010>)/√2 = (|110> + |101> − |110> − |011>)/√2 = (|101> − |011>)/√2
    let b = basis3(Basis3Variant::Original);
    let lowered = collective_lowering(3).apply(&b.a[0]).unwrap();
    let mut hand = vec![0.0; 8];
    hand[0b101] = FRAC_1_SQRT_2;
    hand[0b011] = -FRAC_1_SQRT_2;
    assert!(lowered.distance(&StateVector::from_real(&hand)) < 1e-15);
    assert!(lowered.distance(&b.a[1]) < 1e-15);
}

#[test]
fn z_rotation_is_diagonal_in_encoder_basis() {
    // e^{iγσz} gives e^{iγ(#0 − #1)} on a computational string; encoder
    // column order is (ea1, eb1, e4_2, e4_1, ea2, eb2, e4_3, e4_4)
    let gamma = 0.37;
    let code = build_ue3(Basis3Variant::Original);
    let z3 = collective(&rot(Axis::Z, gamma), 3);
    let conj = code.encoder.dagger().matmul(&z3).unwrap().matmul(&code.encoder).unwrap();
    let phases = [1, 1, 1, 3, -1, -1, -1, -3].map(|k| Complex64::from_polar(1.0, k as f64 * gamma));
    assert!(conj.distance(&ComplexMatrix::diagonal(&phases)) < 1e-14);
    assert!(verify_block_structure(&code.encoder, &rot(Axis::Z, gamma), &ns3_block_layout()).unwrap());
}

#[test]
fn block_check_rejects_scrambled_basis() {
    let code = build_ue3(Basis3Variant::Original);
    // swapping a spin-1/2 column with a spin-3/2 column breaks the pattern
    let mut cols: Vec<StateVector> = (0..8).map(|j| code.encoder.column(j)).collect();
    cols.swap(0, 3);
    let t = ComplexMatrix::from_columns(&cols).unwrap();
    let w = rot(Axis::Y, 0.8);
    assert!(!verify_block_structure(&t, &w, &ns3_block_layout()).unwrap());
}

/// Dimension counts of total-spin eigenspaces from diagonalizing `S²`.
fn spin_counts(n: usize) -> Vec<(f64, usize)> {
    let half = r(0.5);
    let s2 = [Axis::X, Axis::Y, Axis::Z]
        .iter()
        .map(|&a| {
            let s = collective_sum(a, n).scale(half);
            &s * &s
        })
        .reduce(|acc, m| &acc + &m)
        .unwrap();
    let (values, _) = hermitian_eigen(&s2);
    let mut counts: Vec<(f64, usize)> = Vec::new();
    for v in values {
        // s(s+1) = v
        let s = ((1.0 + 4.0 * v).sqrt() - 1.0) / 2.0;
        let s = (2.0 * s).round() / 2.0;
        match counts.iter_mut().find(|(x, _)| *x == s) {
            Some((_, k)) => *k += 1,
            None => counts.push((s, 1)),
        }
    }
    counts.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    counts
}

#[test]
fn multiplicities_match_spin_spectrum() {
    for n in 1..=5 {
        let dec = multiplicities(n).unwrap();
        let counts = spin_counts(n);
        assert_eq!(dec.blocks.len(), counts.len(), "n={n}");
        for (block, (s, count)) in dec.blocks.iter().zip(&counts) {
            assert_eq!(block.dim, (2.0 * s) as usize + 1, "n={n}");
            assert_eq!(block.multiplicity as usize * block.dim, *count, "n={n}");
        }
    }
}

/// Exact binomials from Pascal's triangle.
fn pascal(n: usize) -> Vec<Vec<u128>> {
    let mut rows = vec![vec![1u128]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![1u128; i + 1];
        for k in 1..i {
            row[k] = prev[k - 1] + prev[k];
        }
        rows.push(row);
    }
    rows
}

#[test]
fn rate_table_matches_pascal() {
    let tri = pascal(40);
    for row in code_rate_table(40).unwrap() {
        let count = tri[row.n][row.m] - tri[row.n][row.m - 1];
        assert_eq!(row.dim_count as u128, count, "n={}", row.n);
        let mut k = 0;
        while (1u128 << (k + 1)) <= count {
            k += 1;
        }
        assert_eq!(row.k, k, "n={}", row.n);
    }
}

#[test]
fn encoded_plus_state_is_superposed_column() {
    // linearity: |+> data with |0> gauge gives (ea1 + eb1)/√2
    let code = build_ue3(Basis3Variant::Redefined);
    let b = basis3(Basis3Variant::Redefined);
    let plus = StateVector::from_amplitudes(vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)]);
    let rho = encode(&code, None, &DensityMatrix::pure(&plus)).unwrap();
    let expected = b.a[0].add(&b.b[0]).scale(r(FRAC_1_SQRT_2)).outer();
    assert!(rho.matrix().distance(&expected) < 1e-14);
}
