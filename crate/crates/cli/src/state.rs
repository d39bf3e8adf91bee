//! State arguments: inline product specs or JSON files.
//!
//! Inline specs are strings over `0 1 + -`, one character per qubit, or the
//! word `mixed` for the maximally mixed state. Anything else is read as a
//! path to a JSON file holding either a density matrix
//! (`{"rows", "cols", "data"}`) or a state vector (`{"dim", "amplitudes"}`).

use std::f64::consts::FRAC_1_SQRT_2;
use std::fs;

use collective_core::linalg::{DensityMatrix, StateVector};
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(untagged)]
enum StateFile {
    Vector(StateVector),
    Density(DensityMatrix),
}

fn qubit(symbol: char) -> Option<StateVector> {
    let s = FRAC_1_SQRT_2;
    Some(match symbol {
        '0' => StateVector::from_real(&[1.0, 0.0]),
        '1' => StateVector::from_real(&[0.0, 1.0]),
        '+' => StateVector::from_real(&[s, s]),
        '-' => StateVector::from_real(&[s, -s]),
        _ => return None,
    })
}

/// Parses `spec` as a state on `qubits` qubits; `role` names it in errors.
pub fn parse_state(spec: &str, qubits: usize, role: &str) -> Result<DensityMatrix, String> {
    let dim = 1usize << qubits;
    if spec == "mixed" {
        return Ok(DensityMatrix::maximally_mixed(dim));
    }
    if !spec.is_empty() && spec.chars().all(|ch| qubit(ch).is_some()) {
        if spec.len() != qubits {
            return Err(format!("{role} state {spec:?} has {} qubits, expected {qubits}", spec.len()));
        }
        let v = spec
            .chars()
            .filter_map(qubit)
            .reduce(|acc, q| acc.kron(&q))
            .expect("non-empty spec");
        return Ok(DensityMatrix::pure(&v));
    }
    let text = fs::read_to_string(spec)
        .map_err(|e| format!("{role} state {spec:?} is not an inline spec and cannot be read: {e}"))?;
    let rho = match serde_json::from_str::<StateFile>(&text) {
        Ok(StateFile::Vector(v)) => {
            if (v.norm() - 1.0).abs() > 1e-9 {
                return Err(format!("{role} state vector in {spec:?} has norm {}", v.norm()));
            }
            DensityMatrix::pure(&v)
        }
        Ok(StateFile::Density(rho)) => rho,
        Err(_) => {
            // re-parse as a density matrix to report the specific problem
            let err = serde_json::from_str::<DensityMatrix>(&text).err();
            let detail = err.map(|e| e.to_string()).unwrap_or_else(|| "unrecognized layout".into());
            return Err(format!("{role} state file {spec:?}: {detail}"));
        }
    };
    if rho.dim() != dim {
        return Err(format!("{role} state in {spec:?} has dimension {}, expected {dim}", rho.dim()));
    }
    Ok(rho)
}
