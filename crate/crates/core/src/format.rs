//! JSON file shapes for basis sets and entangled families.
//!
//! Amplitudes are stored as [re, im] pairs. A basis with `a: null` is the
//! computational basis; quadratic bases carry their label. Emission is
//! deterministic, so regenerating the same object reproduces the same bytes.

use serde::{Deserialize, Serialize};

use crate::entanglement::{BellFamily, BellKind, BellLabel, BellState};
use crate::error::{Error, Result};
use crate::finite_field::FieldContext;
use crate::galois_ring::RingContext;
use crate::mub::{Basis, BasisLabel, MubProvenance, MubSet, StateVector};
use crate::Complex;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ContextFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub m: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BasisFile {
    pub a: Option<u64>,
    pub vectors: Vec<Vec<[f64; 2]>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MubSetFile {
    pub dim: u64,
    pub kind: String,
    pub context: ContextFile,
    pub k: u64,
    pub bases: Vec<BasisFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BellStateFile {
    pub h: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub amps: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BellFile {
    pub q: u64,
    pub kind: String,
    pub states: Vec<BellStateFile>,
}

fn pack(amps: &[Complex<f64>]) -> Vec<[f64; 2]> {
    amps.iter().map(|z| [z.re, z.im]).collect()
}

fn unpack(pairs: &[[f64; 2]]) -> Vec<Complex<f64>> {
    pairs.iter().map(|&[re, im]| Complex::new(re, im)).collect()
}

impl MubSetFile {
    pub fn from_set(set: &MubSet<f64>) -> Result<Self> {
        let context = match set.provenance() {
            MubProvenance::Field(ctx) => ContextFile {
                p: Some(ctx.p()),
                m: ctx.m() as u64,
                modulus: Some(ctx.modulus().to_vec()),
                h: None,
            },
            MubProvenance::Ring(ctx) => ContextFile {
                p: None,
                m: ctx.m() as u64,
                modulus: None,
                h: Some(ctx.h().to_vec()),
            },
        };
        let bases = set
            .bases()
            .iter()
            .map(|b| {
                let a = match b.label() {
                    BasisLabel::Computational => None,
                    BasisLabel::Index(a) => Some(a),
                    BasisLabel::Fourier => {
                        return Err(Error::Malformed(
                            "a Fourier-labeled basis has no file representation".into(),
                        ))
                    }
                };
                let vectors = b.vectors().iter().map(|v| pack(v.amps())).collect();
                Ok(BasisFile { a, vectors })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MubSetFile {
            dim: set.dim() as u64,
            kind: set.kind_tag().to_string(),
            context,
            k: set.k(),
            bases,
        })
    }

    /// Rebuild the in-memory set. The stored context must reproduce
    /// exactly; a modulus that is not the canonical one for (p, m) is
    /// accepted as long as it is valid.
    pub fn into_set(&self) -> Result<MubSet<f64>> {
        let provenance = match self.kind.as_str() {
            "field" => {
                let p = self.p_or_err("a field context requires p")?;
                let ctx = match &self.context.modulus {
                    Some(modulus) => FieldContext::with_modulus(p, modulus)?,
                    None => FieldContext::new(p, self.context.m as usize)?,
                };
                if ctx.m() as u64 != self.context.m {
                    return Err(Error::DegreeMismatch(ctx.m(), self.context.m as usize));
                }
                MubProvenance::Field(ctx)
            }
            "ring" => {
                let ctx = RingContext::new(self.context.m as usize)?;
                if let Some(h) = &self.context.h {
                    if h != ctx.h() {
                        return Err(Error::Malformed(format!(
                            "ring modulus {h:?} is not the canonical lift {:?}",
                            ctx.h()
                        )));
                    }
                }
                MubProvenance::Ring(ctx)
            }
            other => return Err(Error::Malformed(format!("unknown set kind {other:?}"))),
        };
        let dim = match &provenance {
            MubProvenance::Field(ctx) => ctx.q(),
            MubProvenance::Ring(ctx) => ctx.dim(),
        };
        if dim != self.dim {
            return Err(Error::DimensionMismatch(self.dim as usize, dim as usize));
        }
        let bases = self
            .bases
            .iter()
            .map(|b| {
                let label = match b.a {
                    None => BasisLabel::Computational,
                    Some(a) => BasisLabel::Index(a),
                };
                let vectors = b
                    .vectors
                    .iter()
                    .map(|v| StateVector::from_amps(unpack(v)))
                    .collect::<Result<Vec<_>>>()?;
                Basis::from_parts(label, self.k, vectors)
            })
            .collect::<Result<Vec<_>>>()?;
        MubSet::from_parts(provenance, self.k, bases)
    }

    fn p_or_err(&self, msg: &str) -> Result<u64> {
        self.context.p.ok_or_else(|| Error::Malformed(msg.into()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("shape is always serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }
}

impl BellFile {
    pub fn from_family(family: &BellFamily<f64>) -> Self {
        let states = family
            .states()
            .iter()
            .map(|s| {
                let label = s.label();
                BellStateFile {
                    h: label.h,
                    a: label.a,
                    b: label.b,
                    k: label.k,
                    amps: pack(s.state().amps()),
                }
            })
            .collect();
        BellFile {
            q: family.q(),
            kind: family.kind().tag().to_string(),
            states,
        }
    }

    pub fn into_family(&self) -> Result<BellFamily<f64>> {
        let kind = match self.kind.as_str() {
            "fourier" => BellKind::Fourier,
            "galois" => BellKind::Galois,
            "ring" => BellKind::Ring,
            other => return Err(Error::Malformed(format!("unknown family kind {other:?}"))),
        };
        let states = self
            .states
            .iter()
            .map(|s| {
                let label = BellLabel {
                    h: s.h,
                    a: s.a,
                    b: s.b,
                    k: s.k,
                };
                BellState::from_amps(self.q, label, unpack(&s.amps))
            })
            .collect::<Result<Vec<_>>>()?;
        BellFamily::from_parts(self.q, kind, states)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("shape is always serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }
}
