//! Seeded samplers. Every trial owns an independent generator derived from
//! `(seed, trial)`, so results do not depend on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use num_complex::Complex64;

use crate::linalg::{ComplexMatrix, DensityMatrix, StateVector};

pub type TrialRng = ChaCha8Rng;

/// Generator for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Haar-random element of SU(2) from a normalized pair of complex Gaussians.
pub fn haar_su2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let (a, b) = (complex_gaussian(rng), complex_gaussian(rng));
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let (a, b) = (a / norm, b / norm);
    ComplexMatrix::from_rows(&[&[a, -b.conj()], &[b, a.conj()]])
}

/// Haar-random unitary on `dim` dimensions (Gram–Schmidt of a Gaussian matrix).
pub fn haar_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<StateVector> = Vec::with_capacity(dim);
    while cols.len() < dim {
        let mut v = random_vector(dim, rng);
        for u in &cols {
            let overlap = u.inner(&v).expect("same dim");
            v = v.add(&u.scale(-overlap));
        }
        if v.norm() > 1e-8 {
            cols.push(v.normalized());
        }
    }
    ComplexMatrix::from_columns(&cols).expect("dim columns")
}

fn random_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> StateVector {
    StateVector::from_amplitudes((0..dim).map(|_| complex_gaussian(rng)).collect())
}

pub fn random_pure_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> StateVector {
    random_vector(dim, rng).normalized()
}

pub fn random_pure<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    DensityMatrix::pure(&random_pure_vector(dim, rng))
}

/// `G G† / tr(G G†)` with `G` complex Gaussian.
pub fn random_density<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    let g = ComplexMatrix::from_fn(dim, dim, |_, _| complex_gaussian(rng));
    let gg = &g * &g.dagger();
    let tr = gg.trace().re;
    DensityMatrix::new(gg.scale(crate::linalg::r(1.0 / tr))).expect("Wishart sample is a valid state")
}

/// Four non-negative weights summing to `total`.
pub fn random_weights<R: Rng + ?Sized>(total: f64, rng: &mut R) -> [f64; 4] {
    let raw: [f64; 4] = std::array::from_fn(|_| -rng.random::<f64>().max(f64::MIN_POSITIVE).ln());
    let sum: f64 = raw.iter().sum();
    raw.map(|x| total * x / sum)
}

/// Uniform angle in `(−π, π]`.
pub fn random_angle<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    std::f64::consts::PI * (1.0 - 2.0 * rng.random::<f64>())
}
