use num_complex::Complex64;
use serde_json::{json, Value};

use crate::multipoly::VarId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    HalfPlaneZero,
    RayleighNegative,
}

/// A certificate of non-stability.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityWitness {
    pub kind: WitnessKind,
    pub point: Vec<(VarId, Complex64)>,
    /// `p(point)` for a half-plane zero; the Rayleigh difference for a negative one.
    pub value: Complex64,
    /// The variable pair of a Rayleigh witness.
    pub pair: Option<(VarId, VarId)>,
    /// Which parallel chunk found it, or `None` for a preloaded point.
    pub chunk: Option<usize>,
}

impl StabilityWitness {
    pub fn to_json(&self) -> Value {
        let point: serde_json::Map<String, Value> = self
            .point
            .iter()
            .map(|(v, z)| (v.to_string(), json!([z.re, z.im])))
            .collect();
        json!({
            "kind": match self.kind {
                WitnessKind::HalfPlaneZero => "half-plane-zero",
                WitnessKind::RayleighNegative => "rayleigh-negative",
            },
            "point": point,
            "value": [self.value.re, self.value.im],
            "pair": self.pair.map(|(i, j)| [i.to_string(), j.to_string()]),
            "chunk": self.chunk,
        })
    }
}
