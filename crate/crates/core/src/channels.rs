//! Mixed-unitary collective noise channels `Φ(ρ) = Σ p_i U_i ρ U_i†`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{r, ComplexMatrix, DensityMatrix, TOL_CONSTRUCTION};
use crate::su2::{collective, euler_recompose, rot, Axis, EulerAngles};

const MAX_TERMS: usize = 10_000;
const SUBNORMAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ChannelTerm {
    pub p: f64,
    pub u: ComplexMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixedUnitaryChannel {
    n: usize,
    terms: Vec<ChannelTerm>,
    subnormalized: bool,
}

impl MixedUnitaryChannel {
    pub fn new(n: usize, terms: Vec<ChannelTerm>) -> Result<Self> {
        let dim = 1usize << n;
        let mut total = 0.0;
        for t in &terms {
            if !(t.p.is_finite() && t.p >= 0.0) {
                return Err(Error::Probabilities(format!("weight {} is negative or not finite", t.p)));
            }
            total += t.p;
            if t.u.shape() != (dim, dim) {
                return Err(Error::DimensionMismatch {
                    op: "channel term",
                    left: t.u.shape(),
                    right: (dim, dim),
                });
            }
            let deviation = t.u.unitarity_deviation()?;
            if deviation > TOL_CONSTRUCTION {
                return Err(Error::NotUnitary { deviation });
            }
        }
        if total > 1.0 + SUBNORMAL_TOL {
            return Err(Error::Probabilities(format!("weights sum to {total} > 1")));
        }
        Ok(MixedUnitaryChannel {
            n,
            terms,
            subnormalized: total < 1.0 - SUBNORMAL_TOL,
        })
    }

    pub fn identity(n: usize) -> Self {
        MixedUnitaryChannel {
            n,
            terms: vec![ChannelTerm {
                p: 1.0,
                u: ComplexMatrix::identity(1 << n),
            }],
            subnormalized: false,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[ChannelTerm] {
        &self.terms
    }

    pub fn total_probability(&self) -> f64 {
        self.terms.iter().map(|t| t.p).sum()
    }

    /// Set when the weights sum to less than one, i.e. the channel loses trace.
    pub fn is_subnormalized(&self) -> bool {
        self.subnormalized
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let dim = 1usize << self.n;
        if rho.dim() != dim {
            return Err(Error::DimensionMismatch {
                op: "apply channel",
                left: (dim, dim),
                right: (rho.dim(), rho.dim()),
            });
        }
        let mut out = ComplexMatrix::zeros(dim, dim);
        for t in &self.terms {
            let term = t.u.conjugate(rho.matrix())?.scale(r(t.p));
            out = &out + &term;
        }
        Ok(DensityMatrix::from_matrix_unchecked(out))
    }

    /// `k`-fold repetition.
    pub fn power(&self, k: usize) -> Result<MixedUnitaryChannel> {
        (0..k).try_fold(MixedUnitaryChannel::identity(self.n), |acc, _| compose(self, &acc))
    }
}

/// `a ∘ b`: terms `(p_i q_j, u_i v_j)`, so `b` acts first.
pub fn compose(a: &MixedUnitaryChannel, b: &MixedUnitaryChannel) -> Result<MixedUnitaryChannel> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            op: "compose",
            left: (a.n, a.n),
            right: (b.n, b.n),
        });
    }
    let count = a.terms.len() * b.terms.len();
    if count > MAX_TERMS {
        return Err(Error::TooManyTerms(count));
    }
    let mut terms = Vec::with_capacity(count);
    for ta in &a.terms {
        for tb in &b.terms {
            terms.push(ChannelTerm {
                p: ta.p * tb.p,
                u: ta.u.matmul(&tb.u)?,
            });
        }
    }
    MixedUnitaryChannel::new(a.n, terms)
}

pub fn apply(ch: &MixedUnitaryChannel, rho: &DensityMatrix) -> Result<DensityMatrix> {
    ch.apply(rho)
}

fn check_register(n: usize) -> Result<()> {
    if !(3..=5).contains(&n) {
        return Err(Error::QubitCount { n, min: 3, max: 5 });
    }
    Ok(())
}

/// `p₀ ρ + p₁ X_α ρ X_α† + p₂ Y_β ρ Y_β† + p₃ Z_γ ρ Z_γ†` with
/// `X_α = (e^{iασx})^{⊗n}` and likewise for `Y`, `Z`.
pub fn rotation_channel(p: [f64; 4], alpha: f64, beta: f64, gamma: f64, n: usize) -> Result<MixedUnitaryChannel> {
    check_register(n)?;
    let singles = [
        ComplexMatrix::identity(2),
        rot(Axis::X, alpha),
        rot(Axis::Y, beta),
        rot(Axis::Z, gamma),
    ];
    let terms = p
        .iter()
        .zip(&singles)
        .map(|(&p, w)| ChannelTerm { p, u: collective(w, n) })
        .collect();
    MixedUnitaryChannel::new(n, terms)
}

/// Terms `(p, W(angles)^{⊗n})` with `W` in x-y-x Euler form.
pub fn collective_channel(entries: &[(f64, EulerAngles)], n: usize) -> Result<MixedUnitaryChannel> {
    check_register(n)?;
    let terms = entries
        .iter()
        .map(|(p, angles)| ChannelTerm {
            p: *p,
            u: collective(&euler_recompose(angles), n),
        })
        .collect();
    MixedUnitaryChannel::new(n, terms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermKind {
    Identity,
    X,
    Y,
    Z,
    Euler,
    /// Raw `2^n × 2^n` unitary, not necessarily collective.
    Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub p: f64,
    pub kind: TermKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angles: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<ComplexMatrix>,
}

/// Channel file contents: `{"n": 3, "terms": [{"p": 0.25, "kind": "x", "angle": 0.3}, ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelSpec {
    pub n: usize,
    pub terms: Vec<TermSpec>,
}

impl TermSpec {
    fn unitary(&self, n: usize) -> Result<ComplexMatrix> {
        let bad = |msg: &str| Err(Error::Probabilities(format!("{:?} term: {msg}", self.kind)));
        let (needs_angle, needs_angles, needs_matrix) = match self.kind {
            TermKind::Identity => (false, false, false),
            TermKind::X | TermKind::Y | TermKind::Z => (true, false, false),
            TermKind::Euler => (false, true, false),
            TermKind::Matrix => (false, false, true),
        };
        if self.angle.is_some() != needs_angle {
            return bad(if needs_angle { "missing \"angle\"" } else { "unexpected \"angle\"" });
        }
        if self.angles.is_some() != needs_angles {
            return bad(if needs_angles { "missing \"angles\"" } else { "unexpected \"angles\"" });
        }
        if self.matrix.is_some() != needs_matrix {
            return bad(if needs_matrix { "missing \"matrix\"" } else { "unexpected \"matrix\"" });
        }
        let single = |axis| collective(&rot(axis, self.angle.unwrap_or_default()), n);
        Ok(match self.kind {
            TermKind::Identity => ComplexMatrix::identity(1 << n),
            TermKind::X => single(Axis::X),
            TermKind::Y => single(Axis::Y),
            TermKind::Z => single(Axis::Z),
            TermKind::Euler => {
                let [t1, t2, t3] = self.angles.unwrap_or_default();
                collective(&euler_recompose(&EulerAngles::new(t1, t2, t3)), n)
            }
            TermKind::Matrix => self.matrix.clone().unwrap_or_else(|| ComplexMatrix::identity(1)),
        })
    }
}

impl ChannelSpec {
    pub fn build(&self) -> Result<MixedUnitaryChannel> {
        check_register(self.n)?;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(ChannelTerm { p: t.p, u: t.unitary(self.n)? }))
            .collect::<Result<Vec<_>>>()?;
        MixedUnitaryChannel::new(self.n, terms)
    }

    pub fn from_json(text: &str) -> Result<MixedUnitaryChannel> {
        let spec: ChannelSpec = serde_json::from_str(text)?;
        spec.build()
    }
}
