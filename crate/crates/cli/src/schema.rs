//! On-disk JSON formats for instances and certificates, and their
//! conversions to and from the solver's validated types.

use serde::{Deserialize, Serialize};
use zerosum_core::solver::{Certificate, Instance, WeightSpec};

use crate::json::{JsonBig, JsonInt};

/// Instance document: `{"n": .., "values": [..], "weights": {..}}`.
/// A missing `weights` field means natural weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub n: usize,
    pub values: Vec<JsonInt>,
    #[serde(default)]
    pub weights: WeightsField,
}

/// Weight selector: `{"kind": "natural"}` or
/// `{"kind": "ap", "first": .., "diff": ..}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WeightsField {
    #[default]
    Natural,
    Ap { first: JsonInt, diff: JsonInt },
}

impl WeightsField {
    pub fn to_spec(&self) -> WeightSpec {
        match *self {
            WeightsField::Natural => WeightSpec::Natural,
            WeightsField::Ap { first, diff } => WeightSpec::ArithmeticProgression {
                first: first.0,
                common_difference: diff.0,
            },
        }
    }

    pub fn from_spec(spec: &WeightSpec) -> Self {
        match *spec {
            WeightSpec::Natural => WeightsField::Natural,
            WeightSpec::ArithmeticProgression { first, common_difference } => {
                WeightsField::Ap { first: JsonInt(first), diff: JsonInt(common_difference) }
            }
        }
    }
}

impl InstanceFile {
    pub fn new(n: usize, values: &[i64], weights: &WeightSpec) -> Self {
        InstanceFile {
            n,
            values: values.iter().map(|&v| JsonInt(v)).collect(),
            weights: WeightsField::from_spec(weights),
        }
    }

    /// Validates into solver types. Both instance invariants and the
    /// even-difference weight requirement are enforced here, at parse
    /// time, so later stages cannot fail on input problems.
    pub fn into_core(self) -> Result<(Instance, WeightSpec), String> {
        let values: Vec<i64> = self.values.iter().map(|v| v.0).collect();
        let instance = Instance::new(self.n, values).map_err(|e| e.to_string())?;
        let spec = self.weights.to_spec();
        if let WeightSpec::ArithmeticProgression { common_difference, .. } = spec {
            if common_difference % 2 != 0 {
                return Err(format!(
                    "weight common difference must be even (got {common_difference})"
                ));
            }
        }
        Ok((instance, spec))
    }
}

/// Certificate document: the instance plus `sigma` (1-based images), the
/// exact achieved sum, and the modulus it vanishes under.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    pub n: usize,
    pub values: Vec<JsonInt>,
    pub weights: WeightsField,
    pub sigma: Vec<usize>,
    pub achieved_sum: JsonBig,
    pub modulus: u64,
}

impl CertificateFile {
    pub fn from_core(certificate: &Certificate) -> Self {
        CertificateFile {
            n: certificate.instance.n(),
            values: certificate.instance.values().iter().map(|&v| JsonInt(v)).collect(),
            weights: WeightsField::from_spec(&certificate.weights),
            sigma: certificate.sigma.clone(),
            achieved_sum: JsonBig(certificate.achieved_sum.clone()),
            modulus: certificate.modulus,
        }
    }

    /// Rebuilds the solver-side certificate. Only instance-shape problems
    /// error here; a bad `sigma`, sum, or modulus is left for
    /// verification to diagnose.
    pub fn into_core(self) -> Result<Certificate, String> {
        let values: Vec<i64> = self.values.iter().map(|v| v.0).collect();
        let instance = Instance::new(self.n, values).map_err(|e| e.to_string())?;
        Ok(Certificate {
            instance,
            weights: self.weights.to_spec(),
            sigma: self.sigma,
            achieved_sum: self.achieved_sum.0,
            modulus: self.modulus,
        })
    }
}
