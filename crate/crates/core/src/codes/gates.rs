//! Gate lists over numbered wires (1-based, wire 1 is the top-most qubit).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{r, ComplexMatrix, StateVector, ONE, TOL_CONSTRUCTION, ZERO};
use crate::su2::{hadamard, pauli, Axis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateKind {
    H,
    X,
    G1,
    G2,
    #[serde(rename = "CNOT")]
    Cnot,
    #[serde(rename = "CNNN")]
    Cnnn,
    #[serde(rename = "CU")]
    ControlledU,
}

/// Filled controls fire on `|1>`, empty controls on `|0>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Filled,
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Control {
    pub wire: usize,
    pub polarity: Polarity,
}

impl Control {
    pub fn filled(wire: usize) -> Self {
        Control { wire, polarity: Polarity::Filled }
    }

    pub fn empty(wire: usize) -> Self {
        Control { wire, polarity: Polarity::Empty }
    }
}

/// A single-qubit operation applied to every target wire when all controls fire.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Gate {
    pub kind: GateKind,
    #[serde(default)]
    pub controls: Vec<Control>,
    pub targets: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payload: Option<ComplexMatrix>,
}

/// `(1/√3)[[1, √2], [−√2, 1]]`.
pub fn g1() -> ComplexMatrix {
    let s = 1.0 / 3f64.sqrt();
    let t = (2.0f64 / 3.0).sqrt();
    ComplexMatrix::from_rows(&[&[r(s), r(t)], &[r(-t), r(s)]])
}

/// `(1/√2)[[1, 1], [−1, 1]]`.
pub fn g2() -> ComplexMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_rows(&[&[r(s), r(s)], &[r(-s), r(s)]])
}

impl Gate {
    pub fn single(kind: GateKind, target: usize) -> Self {
        Gate {
            kind,
            controls: vec![],
            targets: vec![target],
            payload: None,
        }
    }

    pub fn controlled(kind: GateKind, controls: Vec<Control>, target: usize) -> Self {
        Gate {
            kind,
            controls,
            targets: vec![target],
            payload: None,
        }
    }

    pub fn cnot(control: Control, target: usize) -> Self {
        Gate::controlled(GateKind::Cnot, vec![control], target)
    }

    pub fn cnnn(control: Control, targets: [usize; 3]) -> Self {
        Gate {
            kind: GateKind::Cnnn,
            controls: vec![control],
            targets: targets.to_vec(),
            payload: None,
        }
    }

    pub fn controlled_u(controls: Vec<Control>, target: usize, payload: ComplexMatrix) -> Self {
        Gate {
            kind: GateKind::ControlledU,
            controls,
            targets: vec![target],
            payload: Some(payload),
        }
    }

    /// The 2×2 operation applied to each target.
    pub fn operation(&self) -> Result<ComplexMatrix> {
        match (self.kind, &self.payload) {
            (GateKind::ControlledU, Some(u)) => Ok(u.clone()),
            (GateKind::ControlledU, None) => Err(Error::Layout("CU gate without payload".into())),
            (_, Some(_)) => Err(Error::Layout(format!("{:?} gate carries a payload", self.kind))),
            (GateKind::H, None) => Ok(hadamard()),
            (GateKind::X | GateKind::Cnot | GateKind::Cnnn, None) => Ok(pauli(Axis::X)),
            (GateKind::G1, None) => Ok(g1()),
            (GateKind::G2, None) => Ok(g2()),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        let op = self.operation()?;
        if op.shape() != (2, 2) || op.unitarity_deviation()? > TOL_CONSTRUCTION {
            return Err(Error::Layout(format!("{:?} payload is not a 2x2 unitary", self.kind)));
        }
        let arity = match self.kind {
            GateKind::Cnot => Some((1, 1)),
            GateKind::Cnnn => Some((1, 3)),
            _ => None,
        };
        if let Some((nc, nt)) = arity {
            if self.controls.len() != nc || self.targets.len() != nt {
                return Err(Error::Layout(format!(
                    "{:?} needs {nc} control(s) and {nt} target(s)",
                    self.kind
                )));
            }
        }
        if self.targets.is_empty() {
            return Err(Error::Layout("gate without targets".into()));
        }
        let mut wires: Vec<usize> = self.controls.iter().map(|c| c.wire).collect();
        wires.extend(&self.targets);
        for &w in &wires {
            if w == 0 || w > n {
                return Err(Error::QubitIndex { index: w, n });
            }
        }
        let mut sorted = wires.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != wires.len() {
            return Err(Error::Layout(format!("gate reuses a wire: {wires:?}")));
        }
        Ok(())
    }

    /// Full `2^n × 2^n` matrix of this gate.
    pub fn matrix(&self, n: usize) -> Result<ComplexMatrix> {
        self.validate(n)?;
        let op = self.operation()?;
        let dim = 1usize << n;
        let bit = |wire: usize| 1usize << (n - wire);
        let mut out = ComplexMatrix::zeros(dim, dim);
        for col in 0..dim {
            let fires = self.controls.iter().all(|c| {
                let set = col & bit(c.wire) != 0;
                set == (c.polarity == Polarity::Filled)
            });
            if !fires {
                out.set(col, col, ONE);
                continue;
            }
            // distribute the op over all targets
            let mut amps = vec![(col, ONE)];
            for &t in &self.targets {
                let mut next = Vec::with_capacity(amps.len() * 2);
                for (idx, amp) in amps {
                    let old = usize::from(idx & bit(t) != 0);
                    for new in 0..2 {
                        let coef = op.get(new, old);
                        if coef != ZERO {
                            let idx2 = if new == 1 { idx | bit(t) } else { idx & !bit(t) };
                            next.push((idx2, amp * coef));
                        }
                    }
                }
                amps = next;
            }
            for (row, amp) in amps {
                out.set(row, col, out.get(row, col) + amp);
            }
        }
        Ok(out)
    }

    fn remapped(&self, wire_map: &[usize]) -> Gate {
        Gate {
            kind: self.kind,
            controls: self
                .controls
                .iter()
                .map(|c| Control { wire: wire_map[c.wire - 1], polarity: c.polarity })
                .collect(),
            targets: self.targets.iter().map(|&t| wire_map[t - 1]).collect(),
            payload: self.payload.clone(),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::G1 => "G1",
            GateKind::G2 => "G2",
            GateKind::Cnot => "CNOT",
            GateKind::Cnnn => "CNNN",
            GateKind::ControlledU => "CU",
        };
        write!(f, "{name}")?;
        if !self.controls.is_empty() {
            let ctrls: Vec<String> = self
                .controls
                .iter()
                .map(|c| match c.polarity {
                    Polarity::Filled => format!("q{}", c.wire),
                    Polarity::Empty => format!("!q{}", c.wire),
                })
                .collect();
            write!(f, " [{}] ->", ctrls.join(", "))?;
        }
        let targets: Vec<String> = self.targets.iter().map(|t| format!("q{t}")).collect();
        write!(f, " {}", targets.join(", "))?;
        if let Some(u) = &self.payload {
            let d = u.data();
            write!(
                f,
                " {{{:+.6}{:+.6}i, {:+.6}{:+.6}i; {:+.6}{:+.6}i, {:+.6}{:+.6}i}}",
                d[0].re, d[0].im, d[1].re, d[1].im, d[2].re, d[2].im, d[3].re, d[3].im
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateList {
    pub n: usize,
    pub gates: Vec<Gate>,
}

impl GateList {
    pub fn new(n: usize) -> Self {
        GateList { n, gates: vec![] }
    }

    pub fn push(&mut self, gate: Gate) -> &mut Self {
        self.gates.push(gate);
        self
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        self.gates.iter().try_for_each(|g| g.validate(self.n))
    }

    /// Product of all gates, first gate applied first.
    pub fn composite(&self) -> Result<ComplexMatrix> {
        let dim = 1usize << self.n;
        self.gates
            .iter()
            .try_fold(ComplexMatrix::identity(dim), |acc, g| g.matrix(self.n)?.matmul(&acc))
    }

    /// Appends `module`, sending its wire `k` to `wire_map[k - 1]` of this list.
    pub fn append_module(&mut self, module: &GateList, wire_map: &[usize]) -> Result<&mut Self> {
        if wire_map.len() != module.n {
            return Err(Error::Layout(format!(
                "module over {} wires mapped onto {} wires",
                module.n,
                wire_map.len()
            )));
        }
        for g in &module.gates {
            let g = g.remapped(wire_map);
            g.validate(self.n)?;
            self.gates.push(g);
        }
        Ok(self)
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        self.composite()?.apply(v)
    }
}

impl fmt::Display for GateList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "wires {}", self.n)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Largest column distance between `a` and `b` after aligning each column's
/// global phase (unit modulus). `columns` restricts the comparison.
pub fn column_phase_residual(a: &ComplexMatrix, b: &ComplexMatrix, columns: Option<&[usize]>) -> Result<f64> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            op: "column_phase_residual",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let all: Vec<usize> = (0..a.cols()).collect();
    let cols = columns.unwrap_or(&all);
    let mut worst: f64 = 0.0;
    for &j in cols {
        let (ca, cb) = (a.column(j), b.column(j));
        let overlap = ca.inner(&cb)?;
        let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { ONE };
        worst = worst.max(ca.scale(phase).distance(&cb));
    }
    Ok(worst)
}
