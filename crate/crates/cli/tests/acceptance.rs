//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use collective_core::channels::{ChannelSpec, TermKind, TermSpec};
use collective_core::codes::{
    build_ue3, build_ue3_gatelist, build_ue4, build_ue4_with, build_ue5, column_phase_residual, decode,
    dfs4_logical, encode, logical_basis5, Basis3Variant,
};
use collective_core::linalg::{fidelity, ComplexMatrix, StateVector};
use collective_core::random::{random_pure, trial_rng};
use collective_core::su2::{multiplicities, pauli, Axis};
use collective_core::verify::{
    check_blocks, check_dfs4, check_entropy_constancy, check_ns3, check_ns5, code_rate_table, theorem1_suite,
    VerificationReport,
};

const SEED: u64 = 7;
const TRIALS: u64 = 100;
const TOL_IDENTITY: f64 = 1e-10;
const TOL_STRUCTURE: f64 = 1e-12;
const TOL_ENTROPY: f64 = 1e-9;
const RUNTIME_LIMIT: Duration = Duration::from_secs(1);
const NEGATIVE_FIDELITY: f64 = 0.99;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn param(report: &VerificationReport, trial: usize, key: &str) -> f64 {
    report.details[trial].params[key].as_f64().unwrap_or(f64::NAN)
}

fn param_str<'a>(report: &'a VerificationReport, trial: usize, key: &str) -> &'a str {
    report.details[trial].params[key].as_str().unwrap_or("")
}

/// Runs a suite under the runtime limit and checks its residual gate.
fn timed_suite(run: impl FnOnce() -> collective_core::Result<VerificationReport>) -> Result<VerificationReport, String> {
    let start = Instant::now();
    let report = run().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(report.trials == TRIALS, || format!("ran {} trials", report.trials))?;
    ensure(report.max_residual < TOL_IDENTITY, || report.summary())?;
    ensure(elapsed < RUNTIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(report)
}

fn both_variants(report: &VerificationReport) -> Result<(), String> {
    for v in ["original", "redefined"] {
        ensure((0..report.details.len()).any(|t| param_str(report, t, "variant") == v), || {
            format!("no {v} trials")
        })?;
    }
    Ok(())
}

fn c1_theorem1() -> Check {
    let start = Instant::now();
    let report = theorem1_suite(TRIALS, SEED).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(report.max_residual < TOL_IDENTITY, || report.summary())?;
    ensure(elapsed < RUNTIME_LIMIT, || format!("took {elapsed:?}"))?;
    for total in [1.0, 0.8] {
        let hits = (0..report.details.len()).filter(|&t| param(&report, t, "total_p") == total).count();
        ensure(hits > 0, || format!("no trials with Σp = {total}"))?;
    }
    both_variants(&report)?;
    Ok(format!("max_residual={:.2e} in {elapsed:.2?}", report.max_residual))
}

fn c2_ns3() -> Check {
    let report = timed_suite(|| check_ns3(TRIALS, SEED))?;
    both_variants(&report)?;
    let mut min_f = f64::INFINITY;
    for t in 0..report.details.len() {
        let f = param(&report, t, "fidelity");
        min_f = min_f.min(f);
        ensure(f >= 1.0 - TOL_IDENTITY, || format!("trial {t}: fidelity {f}"))?;
        let p = param(&report, t, "product_residual");
        ensure(p < TOL_IDENTITY, || format!("trial {t}: product residual {p:e}"))?;
    }
    Ok(format!("min_fidelity={min_f:.15} max_residual={:.2e}", report.max_residual))
}

fn c3_dfs4() -> Check {
    let report = timed_suite(|| check_dfs4(TRIALS, SEED))?;
    Ok(format!("max ‖W⊗4 ρ W⊗4† − ρ‖={:.2e}", report.max_residual))
}

fn c4_ns5() -> Check {
    let report = check_ns5(TRIALS, SEED).map_err(|e| e.to_string())?;
    ensure(report.max_residual < TOL_IDENTITY, || report.summary())?;
    let mixed = (0..report.details.len())
        .filter(|&t| report.details[t].params["maximally_mixed_gauge"] == serde_json::Value::Bool(true))
        .count();
    ensure(mixed > 0, || "no maximally mixed gauge trials".into())?;
    let min_f = (0..report.details.len()).map(|t| param(&report, t, "fidelity")).fold(f64::INFINITY, f64::min);
    ensure(min_f >= 1.0 - TOL_IDENTITY, || format!("min fidelity {min_f}"))?;
    Ok(format!("min_fidelity={min_f:.15} ({mixed} trials with gauge I/2)"))
}

fn c5_structure() -> Check {
    let mut worst: f64 = 0.0;
    for u in [
        build_ue3(Basis3Variant::Original).encoder,
        build_ue3(Basis3Variant::Redefined).encoder,
        build_ue4().encoder,
        build_ue4_with(Basis3Variant::Original).encoder,
        build_ue5().encoder,
    ] {
        let d = u.unitarity_deviation().map_err(|e| e.to_string())?;
        worst = worst.max(d);
    }
    ensure(worst < TOL_STRUCTURE, || format!("unitarity deviation {worst:e}"))?;

    let ue4 = build_ue4();
    let logical = dfs4_logical(Basis3Variant::Redefined);
    for (bits, target) in [("0000", &logical[0]), ("0001", &logical[1])] {
        let col = ue4.encoder.apply(&StateVector::from_bits(bits).unwrap()).unwrap();
        let d = col.distance(target);
        ensure(d < TOL_STRUCTURE, || format!("U4|{bits}> off by {d:e}"))?;
    }

    // |0>|00>|xy> is input index xy
    let ue5 = build_ue5();
    for (xy, v) in logical_basis5().iter().enumerate() {
        let d = ue5.encoder.column(xy).distance(v);
        ensure(d < TOL_STRUCTURE, || format!("U5 column {xy} off by {d:e}"))?;
    }
    Ok(format!("max unitarity deviation {worst:.2e}"))
}

fn c6_blocks() -> Check {
    let report = check_blocks(TRIALS, SEED).map_err(|e| e.to_string())?;
    ensure(report.max_residual < TOL_IDENTITY, || report.summary())?;
    both_variants(&report)?;
    Ok(format!("max off-pattern residual {:.2e}", report.max_residual))
}

fn c7_gatelist() -> Check {
    let circuit = build_ue3_gatelist().map_err(|e| e.to_string())?;
    let reference = build_ue3(Basis3Variant::Redefined).encoder;
    let full = column_phase_residual(&circuit.full.composite().unwrap(), &reference, None).unwrap();
    ensure(full < TOL_IDENTITY, || format!("full circuit residual {full:e}"))?;
    // inputs with qubit 1 in |0> are indices 0..4
    let slice: Vec<usize> = (0..4).collect();
    let reduced = column_phase_residual(&circuit.reduced.composite().unwrap(), &reference, Some(&slice)).unwrap();
    ensure(reduced < TOL_IDENTITY, || format!("reduced circuit residual {reduced:e}"))?;
    Ok(format!(
        "{} gates full ({full:.1e}), {} reduced ({reduced:.1e})",
        circuit.full.len(),
        circuit.reduced.len()
    ))
}

fn c8_multiplicities() -> Check {
    for n in 1..=20 {
        let dec = multiplicities(n).map_err(|e| e.to_string())?;
        let total: u64 = dec.blocks.iter().map(|b| b.multiplicity * b.dim as u64).sum();
        ensure(total == 1u64 << n, || format!("n={n}: Σ r_j n_j = {total}"))?;
    }
    let expected = [
        (3, "4 ⊕ (I2 ⊗ 2)"),
        (4, "5 ⊕ (I3 ⊗ 3) ⊕ (I2 ⊗ 1)"),
        (5, "6 ⊕ (I4 ⊗ 4) ⊕ (I5 ⊗ 2)"),
    ];
    for (n, text) in expected {
        let shown = multiplicities(n).unwrap().to_string();
        ensure(shown == text, || format!("n={n}: {shown}"))?;
    }
    Ok("n=1..20 sums exact; n=3,4,5 match".into())
}

fn c9_rate() -> Check {
    let rows = code_rate_table(40).map_err(|e| e.to_string())?;
    let row = |n: usize| rows.iter().find(|r| r.n == n).copied().ok_or(format!("no row n={n}"));
    let r5 = row(5)?;
    ensure((r5.m, r5.k) == (2, 2), || format!("n=5: {r5:?}"))?;
    let r9 = row(9)?;
    ensure((r9.m, r9.k, r9.dim_count) == (4, 5, 42), || format!("n=9: {r9:?}"))?;
    let first = rows.iter().find(|r| r.exceeds_m).map(|r| r.n);
    ensure(first == Some(9), || format!("first k>m at {first:?}"))?;
    ensure(rows.iter().all(|r| r.exceeds_m == (r.n >= 9)), || "flag not monotone".into())?;
    Ok(format!("n=5 k=2, n=9 k=5 (dim 42), {} rows", rows.len()))
}

fn c10_entropy() -> Check {
    let report = check_entropy_constancy(None, TRIALS, SEED).map_err(|e| e.to_string())?;
    ensure(report.max_residual < TOL_ENTROPY, || report.summary())?;
    let mut reps = [false; 5];
    for t in 0..report.details.len() {
        let ds = param(&report, t, "entropy_change").abs();
        ensure(ds < TOL_ENTROPY, || format!("trial {t}: ΔS = {ds:e}"))?;
        let g = param(&report, t, "gauge_deviation");
        ensure(g < TOL_IDENTITY, || format!("trial {t}: gauge deviation {g:e}"))?;
        let f = param(&report, t, "repetition_fidelity");
        ensure(f >= 1.0 - TOL_ENTROPY, || format!("trial {t}: repeated fidelity {f}"))?;
        reps[param(&report, t, "repetitions") as usize - 1] = true;
    }
    ensure(reps.iter().all(|&r| r), || "not every repetition count 1..5 covered".into())?;
    Ok(format!("max combined residual {:.2e}", report.max_residual))
}

fn flip_channel() -> ChannelSpec {
    let flip3 = ComplexMatrix::identity(4).kron(&pauli(Axis::X));
    ChannelSpec {
        n: 3,
        terms: vec![TermSpec { p: 1.0, kind: TermKind::Matrix, angle: None, angles: None, matrix: Some(flip3) }],
    }
}

fn c11_negative_control() -> Check {
    let spec = flip_channel();
    let channel = spec.build().map_err(|e| e.to_string())?;
    let code = build_ue3(Basis3Variant::Redefined);
    let mut min_f = f64::INFINITY;
    for t in 0..TRIALS {
        let mut rng = trial_rng(SEED, t);
        let data = random_pure(2, &mut rng);
        let gauge = random_pure(2, &mut rng);
        let out = decode(&code, &channel.apply(&encode(&code, Some(&gauge), &data).unwrap()).unwrap()).unwrap();
        min_f = min_f.min(fidelity(&out.data, &data).unwrap());
    }
    ensure(min_f < NEGATIVE_FIDELITY, || format!("flip channel kept fidelity {min_f}"))?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("flip.json");
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).map_err(|e| e.to_string())?;
    let status = Command::new(env!("CARGO_BIN_EXE_collective"))
        .args(["simulate", "--code", "ns3", "--channel"])
        .arg(&path)
        .args(["--trials", "20", "--seed", "7", "--format", "text"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(status.status.code() == Some(1), || format!("simulate exited with {:?}", status.status.code()))?;
    Ok(format!("min_fidelity={min_f:.3}, simulate exit 1"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("gauge-absorption identity", c1_theorem1),
        ("ns3 round trip", c2_ns3),
        ("dfs4 strict invariance", c3_dfs4),
        ("ns5 two-qubit recovery", c4_ns5),
        ("encoder structure", c5_structure),
        ("block structure", c6_blocks),
        ("gate-list certification", c7_gatelist),
        ("multiplicity formula", c8_multiplicities),
        ("code-rate table", c9_rate),
        ("entropy constancy", c10_entropy),
        ("negative control", c11_negative_control),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS  {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
