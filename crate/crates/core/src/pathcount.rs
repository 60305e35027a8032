//! Exact path counting on layered trees.
//!
//! Z_N(k) counts N-step nearest-level paths from the root, each weighted by
//! the product of its up-step weights. The recursion is one tridiagonal
//! matrix-vector product per step, run in exact arithmetic. Truncation at K
//! levels is exact for observables at level k whenever K > (N + k) / 2.

use crate::error::{Error, Result};
use crate::numeric::{ln_biguint, ln_ratio_abs, ratio_to_f64};
use crate::profile::BranchingProfile;
use crate::spectral;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::{Add, Mul};

#[derive(Clone, Debug)]
pub struct PathCountVector {
    pub n: usize,
    pub counts: Vec<BigRational>,
}

#[derive(Clone, Debug)]
pub struct WatermelonEstimate {
    pub n: usize,
    pub log_zw: f64,
    pub linear_coeff: f64,
    pub correction: f64,
}

/// One recursion step: z'[k] = w_k z[k-1] + z[k+1].
/// `weights[i]` is the up-step weight into level i+1.
pub fn step<T>(weights: &[T], z: &[T]) -> Vec<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    let k = z.len();
    let mut out = vec![T::zero(); k];
    for i in 0..k {
        let mut acc = T::zero();
        if i > 0 {
            acc = acc + weights[i - 1].clone() * z[i - 1].clone();
        }
        if i + 1 < k {
            acc = acc + z[i + 1].clone();
        }
        out[i] = acc;
    }
    out
}

/// Z_N from the root indicator, in any coefficient ring with the two ops.
pub fn propagate<T>(weights: &[T], n: usize) -> Vec<T>
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
{
    let k = weights.len() + 1;
    let mut z = vec![T::zero(); k];
    z[0] = T::one();
    for _ in 0..n {
        z = step(weights, &z);
    }
    z
}

pub fn count_paths(profile: &BranchingProfile, n: usize) -> PathCountVector {
    PathCountVector { n, counts: propagate(profile.weights(), n) }
}

/// Exact integer counts; the profile must have integer weights.
pub fn count_paths_int(profile: &BranchingProfile, n: usize) -> Result<Vec<BigInt>> {
    let w = profile
        .weights_int()
        .ok_or_else(|| Error::InvalidParameter("profile has non-integer weights".into()))?;
    Ok(propagate(&w, n))
}

const BRUTE_FORCE_MAX: usize = 20;

/// Independent oracle: depth-first enumeration of every nearest-level path,
/// multiplying up-step weights along the way. Exponential in N.
pub fn enumerate_paths_bruteforce(profile: &BranchingProfile, n: usize) -> Result<Vec<BigInt>> {
    if n > BRUTE_FORCE_MAX {
        return Err(Error::OracleTooLarge { n, max: BRUTE_FORCE_MAX });
    }
    let w = profile
        .weights_int()
        .ok_or_else(|| Error::InvalidParameter("brute force needs integer weights".into()))?;
    let k = w.len() + 1;
    let mut totals = vec![BigInt::zero(); k];
    let mut weight_stack = BigInt::one();
    dfs(&w, 0, n, &mut weight_stack, &mut totals);
    Ok(totals)
}

fn dfs(w: &[BigInt], level: usize, steps_left: usize, weight: &mut BigInt, totals: &mut [BigInt]) {
    if steps_left == 0 {
        totals[level] += &*weight;
        return;
    }
    if level + 1 < totals.len() {
        let saved = weight.clone();
        *weight *= &w[level];
        dfs(w, level + 1, steps_left - 1, weight, totals);
        *weight = saved;
    }
    if level > 0 {
        dfs(w, level - 1, steps_left - 1, weight, totals);
    }
}

/// Mean level after N steps, an exact rational reported as f64.
pub fn mean_displacement(profile: &BranchingProfile, n: usize) -> Result<f64> {
    let z = count_paths(profile, n).counts;
    let mut total = BigRational::zero();
    let mut weighted = BigRational::zero();
    for (k, c) in z.iter().enumerate() {
        total += c;
        weighted += c * BigRational::from_integer(BigInt::from(k));
    }
    if total.is_zero() {
        return Err(Error::EmptyEnsemble);
    }
    Ok(ratio_to_f64(&(weighted / total)))
}

fn growing_unit_counts(n: usize) -> Vec<BigUint> {
    // growing(1, 1, N) weights are 1..N-1; counts stay nonnegative
    let w: Vec<BigUint> = (1..n as u64).map(BigUint::from).collect();
    propagate(&w, n)
}

/// ln of the total path count over all levels on the K = N tree (exact).
pub fn ln_total_paths(n: usize) -> f64 {
    let total: BigUint = growing_unit_counts(n).into_iter().sum();
    if total.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_biguint(&total)
}

/// ln of the root-return count Z_N(0) on the K = N tree (exact).
pub fn ln_root_return(n: usize) -> f64 {
    let z = growing_unit_counts(n);
    if z[0].is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_biguint(&z[0])
}

/// Combinatorial entropy of the N-step ensemble on the growing unit-slope
/// tree truncated at K = N levels, via the spectral radius: S_N = N ln λ_max.
/// The naive total ln Σ_k Z_N(k) overshoots the (N/2) ln 4N growth law by a
/// separate exponential factor (the count mass concentrates at high levels),
/// so the growth-rate definition is the one the asymptotics refer to.
pub fn entropy(n: usize) -> f64 {
    assert!(n >= 1);
    if n == 1 {
        return 0.0;
    }
    let lam = spectral::lambda_max_growing_unit(n);
    n as f64 * lam.ln()
}

/// Watermelon bundle of N-step paths: log Z^(W) = 2 S_N - ln N!.
pub fn watermelon(n: usize) -> WatermelonEstimate {
    assert!(n >= 2);
    let s = entropy(n);
    let log_zw = 2.0 * s - crate::numeric::ln_factorial(n as u64);
    let c = 2.0 * std::f64::consts::LN_2 + 1.0;
    WatermelonEstimate {
        n,
        log_zw,
        linear_coeff: log_zw / n as f64,
        correction: log_zw - c * n as f64,
    }
}

/// Z_N(k) for N = 0..=nmax at a fixed level k, one propagation pass.
pub fn level_series(profile: &BranchingProfile, k: usize, nmax: usize) -> Vec<BigRational> {
    let weights = profile.weights();
    let levels = weights.len() + 1;
    assert!(k < levels, "level out of range");
    let mut z = vec![BigRational::zero(); levels];
    z[0] = BigRational::one();
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(z[k].clone());
    for _ in 0..nmax {
        z = step(weights, &z);
        out.push(z[k].clone());
    }
    out
}

/// Exact integer variant of `level_series`.
pub fn level_series_int(profile: &BranchingProfile, k: usize, nmax: usize) -> Result<Vec<BigInt>> {
    let weights = profile
        .weights_int()
        .ok_or_else(|| Error::InvalidParameter("profile has non-integer weights".into()))?;
    let levels = weights.len() + 1;
    if k >= levels {
        return Err(Error::InvalidParameter(format!("level {k} out of range for K={levels}")));
    }
    let mut z = vec![BigInt::zero(); levels];
    z[0] = BigInt::one();
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(z[k].clone());
    for _ in 0..nmax {
        z = step(&weights, &z);
        out.push(z[k].clone());
    }
    Ok(out)
}

pub fn ln_count_abs(c: &BigRational) -> Option<f64> {
    if c.is_zero() {
        None
    } else {
        Some(ln_ratio_abs(c))
    }
}
