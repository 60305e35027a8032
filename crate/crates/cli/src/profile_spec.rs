//! Branching-profile JSON records: {kind, p0, a, K, q, weights}.
//!
//! Weights are emitted as exact decimal strings (or "p/q" when the decimal
//! does not terminate) so rational profiles survive a round trip unchanged.

use crate::args::{decimal_string, parse_rational};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use supertree::BranchingProfile;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProfileSpec {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(rename = "K")]
    pub levels: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
}

impl ProfileSpec {
    /// Record for a profile built from --p0/--a flags; `kind` reflects the
    /// weight rule the automatic selection actually used.
    pub fn describe(profile: &BranchingProfile, p0: &BigRational, a: &BigRational) -> Self {
        let kind = if profile.label().starts_with("growing") { "growing" } else { "linear" };
        ProfileSpec {
            kind: kind.to_string(),
            p0: Some(decimal_string(p0)),
            a: Some(decimal_string(a)),
            levels: profile.levels(),
            q: None,
            weights: Some(profile.weights().iter().map(decimal_string).collect()),
        }
    }

    pub fn build(&self) -> Result<BranchingProfile, String> {
        let rat = |field: &Option<String>, name: &str| -> Result<BigRational, String> {
            let s = field.as_ref().ok_or_else(|| format!("profile record needs {name:?}"))?;
            parse_rational(s)
        };
        match self.kind.as_str() {
            "growing" => {
                BranchingProfile::growing_rational(rat(&self.p0, "p0")?, rat(&self.a, "a")?, self.levels)
            }
            "linear" => {
                BranchingProfile::linear_rational(rat(&self.p0, "p0")?, rat(&self.a, "a")?, self.levels)
            }
            "descending" => BranchingProfile::descending(self.levels),
            "dyck" => BranchingProfile::dyck_q(rat(&self.q, "q")?, self.levels),
            "custom" => {
                let raw = self
                    .weights
                    .as_ref()
                    .ok_or_else(|| "custom profile record needs \"weights\"".to_string())?;
                let weights = raw
                    .iter()
                    .map(|w| parse_rational(w))
                    .collect::<Result<Vec<_>, _>>()?;
                BranchingProfile::custom(weights, "custom")
            }
            other => return Err(format!("unknown profile kind {other:?}")),
        }
        .map_err(|e| e.to_string())
    }

    pub fn load(path: &str) -> Result<(Self, BranchingProfile), String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let spec: ProfileSpec =
            serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
        let profile = spec.build()?;
        Ok((spec, profile))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("profile record serializes")
    }
}
