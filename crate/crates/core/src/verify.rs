//! Randomized and exhaustive certificates for the code identities.
//!
//! Every suite returns a [`VerificationReport`]. Trials run in parallel, each
//! with its own generator from [`trial_rng`], and are collected in trial order,
//! so a report depends only on `(seed, trials)`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::channels::{rotation_channel, MixedUnitaryChannel};
use crate::codes::{
    build, build_gatelist, build_ue3, build_ue3_gatelist, build_ue4_with, build_ue5, column_phase_residual,
    decode, encode, ns3_block_layout, Basis3Variant, CodeFamily, CodeSpec,
};
use crate::error::{Error, Result};
use crate::linalg::{fidelity, r, von_neumann_entropy, ComplexMatrix, DensityMatrix, TOL_IDENTITY, TOL_STATE};
use crate::random::{haar_su2, random_angle, random_density, random_pure, random_weights, trial_rng, TrialRng};
use crate::su2::{binomial, block_structure_residual, collective, multiplicities, rot, Axis, MAX_DECOMPOSE_QUBITS};

pub const MAX_RATE_QUBITS: usize = 40;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub params: Map<String, Value>,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub tolerance: f64,
    pub max_residual: f64,
    pub pass: bool,
    pub details: Vec<TrialRecord>,
}

impl VerificationReport {
    /// `pass` is `max_residual < tolerance`; a NaN residual fails.
    pub fn from_records(suite: &str, seed: u64, tolerance: f64, details: Vec<TrialRecord>) -> Self {
        let max_residual = details
            .iter()
            .map(|d| if d.residual.is_nan() { f64::INFINITY } else { d.residual })
            .fold(0.0, f64::max);
        VerificationReport {
            suite: suite.to_string(),
            seed,
            trials: details.len() as u64,
            tolerance,
            max_residual,
            pass: max_residual < tolerance,
            details,
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} max_residual={:.3e} tolerance={:.0e} trials={} seed={}",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" },
            self.max_residual,
            self.tolerance,
            self.trials,
            self.seed
        )
    }

    pub fn to_json(&self) -> Result<String> {
        crate::json::to_string_fixed(self)
    }
}

fn object(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(map) => map,
        _ => unreachable!("params are built from object literals"),
    }
}

fn variant_name(v: Basis3Variant) -> &'static str {
    match v {
        Basis3Variant::Original => "original",
        Basis3Variant::Redefined => "redefined",
    }
}

/// Runs `trial` for indices `0..trials` in parallel and keeps trial order.
fn run_trials<F>(trials: u64, seed: u64, trial: F) -> Result<Vec<TrialRecord>>
where
    F: Fn(u64, &mut TrialRng) -> Result<(Map<String, Value>, f64)> + Sync,
{
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let (params, residual) = trial(t, &mut rng)?;
            Ok(TrialRecord { trial: t, params, residual })
        })
        .collect()
}

fn matrix_json(m: &ComplexMatrix) -> Value {
    serde_json::to_value(m).expect("matrix serializes")
}

/// Channel weights and the three rotation angles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RotationParams {
    pub p: [f64; 4],
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl RotationParams {
    pub fn channel(&self, n: usize) -> Result<MixedUnitaryChannel> {
        rotation_channel(self.p, self.alpha, self.beta, self.gamma, n)
    }

    fn random(total: f64, rng: &mut TrialRng) -> Self {
        RotationParams {
            p: random_weights(total, rng),
            alpha: random_angle(rng),
            beta: random_angle(rng),
            gamma: random_angle(rng),
        }
    }

    fn to_value(self) -> Value {
        json!({"p": self.p, "alpha": self.alpha, "beta": self.beta, "gamma": self.gamma})
    }
}

/// `‖U†Φ(U(ρ_a⊗|0><0|⊗ρ̂)U†)U − (Σ p_j U_j ρ_a U_j†)⊗|0><0|⊗ρ̂‖_F` for the
/// original three-qubit encoder.
pub fn check_theorem1(
    p: [f64; 4],
    alpha: f64,
    beta: f64,
    gamma: f64,
    rho_a: &DensityMatrix,
    rho_data: &DensityMatrix,
) -> Result<f64> {
    let params = RotationParams { p, alpha, beta, gamma };
    check_theorem1_with(Basis3Variant::Original, &params, rho_a, rho_data)
}

pub fn check_theorem1_with(
    variant: Basis3Variant,
    params: &RotationParams,
    rho_a: &DensityMatrix,
    rho_data: &DensityMatrix,
) -> Result<f64> {
    let code = build_ue3(variant);
    let channel = params.channel(3)?;
    let encoded = encode(&code, Some(rho_a), rho_data)?;
    let unencoded = channel.apply(&encoded)?.evolve(&code.encoder.dagger())?;

    // reference side built from 2×2 factors only
    let singles = [
        ComplexMatrix::identity(2),
        rot(Axis::X, params.alpha),
        rot(Axis::Y, params.beta),
        rot(Axis::Z, params.gamma),
    ];
    let mut gauge = ComplexMatrix::zeros(2, 2);
    for (&p, u) in params.p.iter().zip(&singles) {
        gauge = &gauge + &u.conjugate(rho_a.matrix())?.scale(r(p));
    }
    let zero = DensityMatrix::basis(2, 0);
    let expected = gauge.kron(zero.matrix()).kron(rho_data.matrix());
    Ok(unencoded.matrix().distance(&expected))
}

/// Weights alternate between summing to 1 and 0.8; both bases are covered.
pub fn theorem1_suite(trials: u64, seed: u64) -> Result<VerificationReport> {
    let records = run_trials(trials, seed, |t, rng| {
        let total = if t % 2 == 0 { 1.0 } else { 0.8 };
        let variant = Basis3Variant::ALL[((t / 2) % 2) as usize];
        let params = RotationParams::random(total, rng);
        let rho_a = random_density(2, rng);
        let rho_d = if t % 3 == 0 { random_pure(2, rng) } else { random_density(2, rng) };
        let residual = check_theorem1_with(variant, &params, &rho_a, &rho_d)?;
        let mut map = object(json!({"variant": variant_name(variant), "total_p": total}));
        map.extend(object(params.to_value()));
        Ok((map, residual))
    })?;
    Ok(VerificationReport::from_records("theorem1", seed, TOL_IDENTITY, records))
}

/// Round trip through `W^{⊗3}` for Haar-random `W`; both bases alternate.
/// Residual is `max(1 − F(ρ̂_out, ρ̂), product_residual)`.
pub fn check_ns3(trials: u64, seed: u64) -> Result<VerificationReport> {
    let codes = Basis3Variant::ALL.map(build_ue3);
    let records = run_trials(trials, seed, |t, rng| {
        let code = &codes[(t % 2) as usize];
        let w = haar_su2(rng);
        let rho_a = random_density(2, rng);
        let rho_d = if t % 4 < 2 { random_pure(2, rng) } else { random_density(2, rng) };
        let (fid, product) = collective_round_trip(code, &w, Some(&rho_a), &rho_d)?;
        let map = object(json!({
            "variant": variant_name(code.variant),
            "w": matrix_json(&w),
            "fidelity": fid,
            "product_residual": product,
        }));
        Ok((map, (1.0 - fid).max(product)))
    })?;
    Ok(VerificationReport::from_records("ns3", seed, TOL_IDENTITY, records))
}

/// Encodes, applies `W^{⊗n}`, decodes. Returns `(fidelity, product_residual)`.
fn collective_round_trip(
    code: &CodeSpec,
    w: &ComplexMatrix,
    gauge: Option<&DensityMatrix>,
    data: &DensityMatrix,
) -> Result<(f64, f64)> {
    let encoded = encode(code, gauge, data)?;
    let noisy = encoded.evolve(&collective(w, code.n))?;
    let out = decode(code, &noisy)?;
    Ok((fidelity(&out.data, data)?, out.product_residual))
}

/// `‖W^{⊗4} enc(ρ̂) W^{⊗4}† − enc(ρ̂)‖_F`, no phase allowance.
pub fn check_dfs4(trials: u64, seed: u64) -> Result<VerificationReport> {
    let codes = Basis3Variant::ALL.map(build_ue4_with);
    let records = run_trials(trials, seed, |t, rng| {
        let code = &codes[(t % 2) as usize];
        let w = haar_su2(rng);
        let rho_d = if t % 4 < 2 { random_pure(2, rng) } else { random_density(2, rng) };
        let residual = dfs4_residual(code, &w, &rho_d)?;
        let map = object(json!({"variant": variant_name(code.variant), "w": matrix_json(&w)}));
        Ok((map, residual))
    })?;
    Ok(VerificationReport::from_records("dfs4", seed, TOL_IDENTITY, records))
}

pub fn dfs4_residual(code: &CodeSpec, w: &ComplexMatrix, data: &DensityMatrix) -> Result<f64> {
    let encoded = encode(code, None, data)?;
    let noisy = encoded.evolve(&collective(w, code.n))?;
    Ok(noisy.distance(&encoded))
}

/// Two-qubit recovery; every third trial uses the maximally mixed gauge.
/// Residual is `max(‖ρ̂_out − ρ̂‖_F, product_residual, 1 − F)`.
pub fn check_ns5(trials: u64, seed: u64) -> Result<VerificationReport> {
    let code = build_ue5();
    let records = run_trials(trials, seed, |t, rng| {
        let w = haar_su2(rng);
        let mixed_gauge = t % 3 == 0;
        let rho_a = if mixed_gauge { DensityMatrix::maximally_mixed(2) } else { random_density(2, rng) };
        let rho_d = if t % 2 == 0 { random_density(4, rng) } else { random_pure(4, rng) };
        let encoded = encode(&code, Some(&rho_a), &rho_d)?;
        let out = decode(&code, &encoded.evolve(&collective(&w, 5))?)?;
        let distance = out.data.distance(&rho_d);
        let fid = fidelity(&out.data, &rho_d)?;
        let map = object(json!({
            "w": matrix_json(&w),
            "maximally_mixed_gauge": mixed_gauge,
            "data_distance": distance,
            "fidelity": fid,
            "product_residual": out.product_residual,
        }));
        Ok((map, distance.max(out.product_residual).max(1.0 - fid)))
    })?;
    Ok(VerificationReport::from_records("ns5", seed, TOL_IDENTITY, records))
}

/// Block pattern of `U_E^(3)† W^{⊗3} U_E^(3)` for both bases.
pub fn check_blocks(trials: u64, seed: u64) -> Result<VerificationReport> {
    let codes = Basis3Variant::ALL.map(build_ue3);
    let layout = ns3_block_layout();
    let records = run_trials(trials, seed, |t, rng| {
        let code = &codes[(t % 2) as usize];
        let w = haar_su2(rng);
        let residual = block_structure_residual(&code.encoder, &w, &layout)?;
        Ok((object(json!({"variant": variant_name(code.variant), "w": matrix_json(&w)})), residual))
    })?;
    Ok(VerificationReport::from_records("blocks", seed, TOL_IDENTITY, records))
}

/// Entropy bookkeeping on the three-qubit code.
///
/// Per trial, with `ρ_a = I/2`: the change in total entropy under the
/// channel, and the distance of the decoded gauge from `I/2` (scaled by 10 so
/// its 1e-10 gate maps onto the 1e-9 suite tolerance). The contrast record
/// uses a pure `ρ_a` and counts any entropy decrease as a violation. The
/// repetition record applies the channel `1 + t mod 5` times and checks data
/// fidelity. Weights always sum to 1.
pub fn check_entropy_constancy(channel: Option<RotationParams>, trials: u64, seed: u64) -> Result<VerificationReport> {
    let code = build_ue3(Basis3Variant::Original);
    let records = run_trials(trials, seed, |t, rng| {
        let params = match channel {
            Some(p) => p,
            None => RotationParams::random(1.0, rng),
        };
        let ch = params.channel(3)?;
        let rho_d = random_density(2, rng);
        let mixed = DensityMatrix::maximally_mixed(2);

        let encoded = encode(&code, Some(&mixed), &rho_d)?;
        let after = ch.apply(&encoded)?;
        let delta = von_neumann_entropy(&after)? - von_neumann_entropy(&encoded)?;
        let gauge = decode(&code, &after)?.gauge.expect("ns3 has a gauge wire");
        let gauge_deviation = gauge.distance(&mixed);

        let pure_a = random_pure(2, rng);
        let encoded_pure = encode(&code, Some(&pure_a), &rho_d)?;
        let contrast =
            von_neumann_entropy(&ch.apply(&encoded_pure)?)? - von_neumann_entropy(&encoded_pure)?;
        let contrast_violation = (-contrast - TOL_STATE).max(0.0);

        let repeats = 1 + (t % 5) as usize;
        let repeated = ch.power(repeats)?.apply(&encoded_pure)?;
        let rep_fidelity = fidelity(&decode(&code, &repeated)?.data, &rho_d)?;

        let mut map = object(params.to_value());
        map.extend(object(json!({
            "entropy_change": delta,
            "gauge_deviation": gauge_deviation,
            "contrast_entropy_change": contrast,
            "repetitions": repeats,
            "repetition_fidelity": rep_fidelity,
        })));
        let residual = delta
            .abs()
            .max(10.0 * gauge_deviation)
            .max(contrast_violation)
            .max(1.0 - rep_fidelity);
        Ok((map, residual))
    })?;
    Ok(VerificationReport::from_records("entropy", seed, TOL_STATE, records))
}

/// Column-phase residuals of the synthesized circuits against the encoders.
pub fn check_gatelist() -> Result<VerificationReport> {
    let ue3 = build_ue3_gatelist()?;
    let reference = build_ue3(Basis3Variant::Redefined).encoder;
    let full = ue3.full.composite()?;
    let slice: Vec<usize> = (0..4).collect();
    let mut records = vec![
        (
            json!({"circuit": "ns3", "gates": ue3.full.len()}),
            column_phase_residual(&full, &reference, None)?,
        ),
        (
            json!({"circuit": "ns3-reduced", "gates": ue3.reduced.len(), "columns": slice}),
            column_phase_residual(&ue3.reduced.composite()?, &reference, Some(&slice))?,
        ),
    ];
    for family in [CodeFamily::Dfs4, CodeFamily::Ns5] {
        let list = build_gatelist(family)?;
        let code = build(family, Basis3Variant::Redefined);
        let columns: Option<Vec<usize>> = match family {
            CodeFamily::Ns5 => Some(code.logical_columns.iter().map(|c| c.input_index).collect()),
            _ => None,
        };
        let residual = column_phase_residual(&list.composite()?, &code.encoder, columns.as_deref())?;
        records.push((json!({"circuit": family.name(), "gates": list.len(), "columns": columns}), residual));
    }
    let details = records
        .into_iter()
        .enumerate()
        .map(|(i, (p, residual))| TrialRecord { trial: i as u64, params: object(p), residual })
        .collect();
    Ok(VerificationReport::from_records("gatelist", 0, TOL_IDENTITY, details))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RateRow {
    pub n: usize,
    pub m: usize,
    /// `C(n, m) − C(n, m − 1)`, the spin-1/2 multiplicity.
    pub dim_count: u64,
    /// `⌊log₂ dim_count⌋`.
    pub k: u32,
    pub exceeds_m: bool,
}

/// Rows for odd `n = 2m + 1` from 3 to `n_max`.
pub fn code_rate_table(n_max: usize) -> Result<Vec<RateRow>> {
    if n_max > MAX_RATE_QUBITS {
        return Err(Error::QubitCount { n: n_max, min: 3, max: MAX_RATE_QUBITS });
    }
    let mut rows = Vec::new();
    for n in (3..=n_max).step_by(2) {
        let m = (n - 1) / 2;
        let dim_count = binomial(n as u64, m as u64) - binomial(n as u64, m as u64 - 1);
        if n <= MAX_DECOMPOSE_QUBITS {
            let decomposition = multiplicities(n)?;
            let spin_half = decomposition
                .blocks
                .iter()
                .find(|b| b.dim == 2)
                .expect("odd n has a spin-1/2 irrep");
            assert_eq!(spin_half.multiplicity, dim_count, "multiplicity cross-check at n={n}");
        }
        let k = dim_count.ilog2();
        rows.push(RateRow { n, m, dim_count, k, exceeds_m: k as usize > m });
    }
    Ok(rows)
}

/// Checks each row: `2^k ≤ dim_count < 2^{k+1}` and that `k > m` holds
/// exactly from `n = 9` on. Residual is 0 or 1 per row.
pub fn check_rate(n_max: usize) -> Result<VerificationReport> {
    let rows = code_rate_table(n_max)?;
    let details = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let bracket = (1u64 << row.k) <= row.dim_count && row.dim_count < (1u64 << (row.k + 1));
            let flag = row.exceeds_m == (row.n >= 9);
            let residual = if bracket && flag { 0.0 } else { 1.0 };
            let map = object(serde_json::to_value(row).expect("row serializes"));
            TrialRecord { trial: i as u64, params: map, residual }
        })
        .collect();
    Ok(VerificationReport::from_records("rate", 0, TOL_IDENTITY, details))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem1,
    Ns3,
    Dfs4,
    Ns5,
    Blocks,
    Entropy,
    Gatelist,
    Rate,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Theorem1,
        Suite::Ns3,
        Suite::Dfs4,
        Suite::Ns5,
        Suite::Blocks,
        Suite::Entropy,
        Suite::Gatelist,
        Suite::Rate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Ns3 => "ns3",
            Suite::Dfs4 => "dfs4",
            Suite::Ns5 => "ns5",
            Suite::Blocks => "blocks",
            Suite::Entropy => "entropy",
            Suite::Gatelist => "gatelist",
            Suite::Rate => "rate",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite {s:?} (expected one of {})", names.join(", "))
            })
    }
}

/// `gatelist` ignores both arguments; `rate` ignores `seed` and covers odd
/// `n` up to 40.
pub fn run_suite(suite: Suite, trials: u64, seed: u64) -> Result<VerificationReport> {
    match suite {
        Suite::Theorem1 => theorem1_suite(trials, seed),
        Suite::Ns3 => check_ns3(trials, seed),
        Suite::Dfs4 => check_dfs4(trials, seed),
        Suite::Ns5 => check_ns5(trials, seed),
        Suite::Blocks => check_blocks(trials, seed),
        Suite::Entropy => check_entropy_constancy(None, trials, seed),
        Suite::Gatelist => check_gatelist(),
        Suite::Rate => check_rate(MAX_RATE_QUBITS),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::StateVector;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn identity_channel_residual() {
        let rho_a = DensityMatrix::pure(&StateVector::from_real(&[0.6, 0.8]));
        let rho_d = DensityMatrix::maximally_mixed(2);
        let res = check_theorem1([1.0, 0.0, 0.0, 0.0], 0.3, 0.2, 0.1, &rho_a, &rho_d).unwrap();
        assert!(res < 1e-12);
    }

    #[test]
    fn quarter_turn_flips_gauge() {
        // e^{iπ/2 σx} = iσx sends |0><0| to |1><1| on the gauge wire
        let zero = DensityMatrix::from_bits("0").unwrap();
        let rho_d = DensityMatrix::pure(&StateVector::from_real(&[1.0, 1.0]).normalized());
        let res = check_theorem1([0.0, 1.0, 0.0, 0.0], FRAC_PI_2, 0.0, 0.0, &zero, &rho_d).unwrap();
        assert!(res < 1e-10);
        let code = build_ue3(Basis3Variant::Original);
        let ch = rotation_channel([0.0, 1.0, 0.0, 0.0], FRAC_PI_2, 0.0, 0.0, 3).unwrap();
        let out = decode(&code, &ch.apply(&encode(&code, Some(&zero), &rho_d).unwrap()).unwrap()).unwrap();
        assert!(out.gauge.unwrap().distance(&DensityMatrix::from_bits("1").unwrap()) < 1e-12);
    }

    #[test]
    fn dfs4_quarter_turn_y() {
        let code = build_ue4_with(Basis3Variant::Redefined);
        let zero = DensityMatrix::from_bits("0").unwrap();
        let identity = dfs4_residual(&code, &ComplexMatrix::identity(2), &zero).unwrap();
        assert_eq!(identity, 0.0);
        assert!(dfs4_residual(&code, &rot(Axis::Y, FRAC_PI_2), &zero).unwrap() < 1e-10);
    }

    #[test]
    fn entropy_contrast_strictly_increases() {
        let code = build_ue3(Basis3Variant::Original);
        let zero = DensityMatrix::from_bits("0").unwrap();
        let rho_d = DensityMatrix::from_bits("1").unwrap();
        let ch = rotation_channel([0.5, 0.5, 0.0, 0.0], FRAC_PI_4, 0.0, 0.0, 3).unwrap();
        let enc = encode(&code, Some(&zero), &rho_d).unwrap();
        let delta = von_neumann_entropy(&ch.apply(&enc).unwrap()).unwrap() - von_neumann_entropy(&enc).unwrap();
        // gauge becomes (|0><0| + R|0><0|R†)/2 with R = e^{iπ/4 σx}; its eigenvalues are
        // (1 ± |⟨0|R|0⟩|)/2 = (1 ± cos(π/4))/2
        let c = FRAC_PI_4.cos();
        let h = |x: f64| -x * x.log2();
        let expected = h((1.0 + c) / 2.0) + h((1.0 - c) / 2.0);
        assert!((delta - expected).abs() < 1e-9, "{delta} vs {expected}");
        assert!(delta > 0.1);
    }

    #[test]
    fn rate_rows() {
        let rows = code_rate_table(11).unwrap();
        let find = |n| rows.iter().find(|r| r.n == n).copied().unwrap();
        assert_eq!((find(3).dim_count, find(3).k), (2, 1));
        assert_eq!((find(5).dim_count, find(5).k), (5, 2));
        assert_eq!((find(9).dim_count, find(9).k), (42, 5));
        let first = rows.iter().find(|r| r.exceeds_m).unwrap();
        assert_eq!(first.n, 9);
        assert!(code_rate_table(41).is_err());
        assert!(check_rate(MAX_RATE_QUBITS).unwrap().pass);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = theorem1_suite(6, 11).unwrap().to_json().unwrap();
        let b = theorem1_suite(6, 11).unwrap().to_json().unwrap();
        assert_eq!(a, b);
        let c = theorem1_suite(6, 12).unwrap().to_json().unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let report = run_suite(suite, 6, 3).unwrap();
            assert!(report.pass, "{}", report.summary());
        }
    }

    #[test]
    fn nan_fails() {
        let rec = TrialRecord { trial: 0, params: Map::new(), residual: f64::NAN };
        assert!(!VerificationReport::from_records("x", 0, 1.0, vec![rec]).pass);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
