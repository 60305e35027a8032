//! Branching profiles: the level-dependent up-step weights of a layered tree.
//!
//! A profile over K levels stores the K-1 weights w_1..w_{K-1}, where w_k is
//! carried by the step from level k-1 up to level k; every down-step has
//! weight 1. Degrees p_k translate to weights as w_1 = p_0 (all root edges
//! go up) and w_k = p_{k-1} - 1 for k >= 2 (one edge per interior vertex
//! points back toward the root).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

#[derive(Clone, Debug)]
pub struct BranchingProfile {
    weights: Vec<BigRational>,
    label: String,
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl BranchingProfile {
    /// Growing tree: degree 2 + a*k at depth k >= 1, p0 edges at the root.
    /// Weights: w_1 = p0, w_k = 1 + a*(k-1).
    pub fn growing(p0: i64, a: i64, levels: usize) -> Result<Self> {
        Self::growing_rational(int(p0), int(a), levels)
    }

    /// Growing rule with a real (rational) slope, e.g. a = ±1/400.
    pub fn growing_rational(p0: BigRational, a: BigRational, levels: usize) -> Result<Self> {
        let label = format!("growing(p0={p0}, a={a})");
        let mut w = Vec::new();
        for k in 1..levels {
            let wk = if k == 1 { p0.clone() } else { int(1) + a.clone() * int(k as i64 - 1) };
            w.push(wk);
        }
        Self::validated(w, label)
    }

    /// General linear degree rule p_k = p0 + a*k; covers descending trees
    /// with non-unit slope (for a < 0 the usable depth is capped by
    /// positivity of the weights).
    pub fn linear(p0: i64, a: i64, levels: usize) -> Result<Self> {
        Self::linear_rational(int(p0), int(a), levels)
    }

    pub fn linear_rational(p0: BigRational, a: BigRational, levels: usize) -> Result<Self> {
        let mut w = Vec::new();
        for k in 1..levels {
            let wk = if k == 1 {
                p0.clone()
            } else {
                // p_{k-1} - 1 with p_j = p0 + a*j
                p0.clone() + a.clone() * int(k as i64 - 1) - int(1)
            };
            w.push(wk);
        }
        Self::validated(w, "linear".to_string())
    }

    /// Descending tree on P levels: weights P-1, P-2, ..., 1.
    pub fn descending(p: usize) -> Result<Self> {
        let w = (1..p).map(|k| int(p as i64 - k as i64)).collect();
        Self::validated(w, format!("descending(P={p})"))
    }

    /// Dyck paths with area fugacity q: w_k = q^(k-1).
    pub fn dyck_q(q: BigRational, levels: usize) -> Result<Self> {
        let mut w = Vec::new();
        let mut cur = BigRational::from_integer(BigInt::from(1));
        for _ in 1..levels {
            w.push(cur.clone());
            cur *= q.clone();
        }
        Self::validated(w, "dyck_q".to_string())
    }

    pub fn custom(weights: Vec<BigRational>, label: impl Into<String>) -> Result<Self> {
        Self::validated(weights, label.into())
    }

    fn validated(weights: Vec<BigRational>, label: String) -> Result<Self> {
        for (i, w) in weights.iter().enumerate() {
            if !w.is_positive() {
                return Err(Error::NonPositiveWeight { level: i + 1, value: w.to_string() });
            }
        }
        Ok(BranchingProfile { weights, label })
    }

    pub fn levels(&self) -> usize {
        self.weights.len() + 1
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Exact integer weights, if the profile has them.
    pub fn weights_int(&self) -> Option<Vec<BigInt>> {
        self.weights
            .iter()
            .map(|w| w.denom().eq(&BigInt::from(1)).then(|| w.numer().clone()))
            .collect()
    }

    pub fn weights_f64(&self) -> Vec<f64> {
        self.weights
            .iter()
            .map(|w| w.to_f64().unwrap_or_else(|| crate::numeric::ratio_to_f64(w)))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(|w| w.denom().eq(&BigInt::from(1)))
    }
}

/// Weight rule selection used by the command-line front end: try the growing
/// convention first; a negative slope that drives it non-positive falls back
/// to the general linear-degree rule.
pub fn auto_profile(p0: i64, a: i64, levels: usize) -> Result<BranchingProfile> {
    auto_profile_rational(int(p0), int(a), levels)
}

pub fn auto_profile_rational(
    p0: BigRational,
    a: BigRational,
    levels: usize,
) -> Result<BranchingProfile> {
    match BranchingProfile::growing_rational(p0.clone(), a.clone(), levels) {
        Err(Error::NonPositiveWeight { .. }) if a.is_negative() => {
            BranchingProfile::linear_rational(p0, a, levels)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn growing_unit_slope_weights_are_consecutive_integers() {
        let p = BranchingProfile::growing(1, 1, 6).unwrap();
        let w: Vec<i64> = p.weights().iter().map(|x| x.to_integer().to_i64().unwrap()).collect();
        assert_eq!(w, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn growing_p0_sets_only_the_root_weight() {
        let p = BranchingProfile::growing(3, 2, 5).unwrap();
        let w: Vec<i64> = p.weights().iter().map(|x| x.to_integer().to_i64().unwrap()).collect();
        assert_eq!(w, vec![3, 3, 5, 7]);
    }

    #[test]
    fn descending_counts_down_to_one() {
        let p = BranchingProfile::descending(5).unwrap();
        let w: Vec<i64> = p.weights().iter().map(|x| x.to_integer().to_i64().unwrap()).collect();
        assert_eq!(w, vec![4, 3, 2, 1]);
        assert_eq!(p.levels(), 5);
    }

    #[test]
    fn linear_rule_handles_steep_negative_slope() {
        // p_k = 800 - 2k keeps weights positive through level 399
        let p = BranchingProfile::linear(800, -2, 400).unwrap();
        let w = p.weights();
        assert_eq!(w[0], int(800));
        assert_eq!(w[1], int(797));
        assert_eq!(w[398], int(800 - 2 * 398 - 1));
    }

    #[test]
    fn nonpositive_weight_is_rejected_with_level() {
        let err = BranchingProfile::growing(1, -1, 5).unwrap_err();
        match err {
            Error::NonPositiveWeight { level, .. } => assert_eq!(level, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn auto_rule_falls_back_for_negative_slope() {
        let p = auto_profile(800, -2, 400).unwrap();
        assert_eq!(p.weights()[1], int(797));
        // positive slope still uses the growing convention
        let g = auto_profile(1, 1, 4).unwrap();
        assert_eq!(g.weights()[0], int(1));
    }

    #[test]
    fn rational_slope_stays_positive_at_depth() {
        // a = -1/400 keeps w_k = 1 - (k-1)/400 positive through 400 levels
        let a = BigRational::new(BigInt::from(-1), BigInt::from(400));
        let p = auto_profile_rational(int(1), a, 400).unwrap();
        assert!(p.label().starts_with("growing"));
        assert_eq!(p.weights()[399 - 1], BigRational::new(BigInt::from(2), BigInt::from(400)));
    }

    #[test]
    fn dyck_profile_powers() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(2));
        let p = BranchingProfile::dyck_q(q.clone(), 4).unwrap();
        assert_eq!(p.weights()[0], int(1));
        assert_eq!(p.weights()[1], q);
        assert_eq!(p.weights()[2], q.clone() * q);
        assert!(!p.is_integral());
    }
}
