//! Spectra of transfer operators: characteristic polynomials, Hermite
//! specialization, semicircle comparison, and the Airy edge form.
//!
//! The growing profile with unit slope symmetrizes to offdiagonals
//! sqrt(1), sqrt(2), ..., so its characteristic polynomial is the monic
//! Hermite polynomial and its eigenvalues are the Hermite zeros. Everything
//! downstream (semicircle bulk, Airy edge shift) is measured against that
//! family.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::profile::BranchingProfile;
use crate::tridiag;

/// Monic Hermite polynomial H_k: H_0 = 1, H_1 = x, H_k = x H_{k-1} - (k-1) H_{k-2}.
pub fn monic_hermite(k: usize) -> Poly<BigInt> {
    let mut prev = Poly::one();
    if k == 0 {
        return prev;
    }
    let mut cur = Poly::x();
    for j in 2..=k {
        let next = cur
            .mul_x_pow(1)
            .sub(&prev.scale(&BigInt::from(j as i64 - 1)));
        prev = cur;
        cur = next;
    }
    cur
}

/// Characteristic polynomial of the K-level transfer operator in the
/// spectral variable: D_0 = 1, D_1 = x, D_k = x D_{k-1} - w_{k-1} D_{k-2}.
/// Only the products across each pair of levels enter, so the asymmetric
/// operator and its symmetrized form share this polynomial.
pub fn charpoly(profile: &BranchingProfile) -> Poly<BigRational> {
    let w = profile.weights();
    let mut prev: Poly<BigRational> = Poly::one();
    let mut cur: Poly<BigRational> = Poly::x();
    if w.is_empty() {
        return cur; // single level: det(xI - 0) = x
    }
    for wk in w {
        let next = cur.mul_x_pow(1).sub(&prev.scale(wk));
        prev = cur;
        cur = next;
    }
    cur
}

/// Integer-coefficient characteristic polynomial, available when every
/// weight is integral.
pub fn charpoly_int(profile: &BranchingProfile) -> Option<Poly<BigInt>> {
    if !profile.is_integral() {
        return None;
    }
    let p = charpoly(profile);
    Some(p.map(|c| c.to_integer()))
}

/// Eigenvalues of the symmetrized transfer operator, ascending.
pub fn transfer_eigenvalues(profile: &BranchingProfile) -> Result<Vec<f64>> {
    let k = profile.levels();
    let diag = vec![0.0; k];
    let off: Vec<f64> = profile.weights_f64().iter().map(|w| w.sqrt()).collect();
    tridiag::eigenvalues_sym(&diag, &off)
}

pub fn lambda_max(profile: &BranchingProfile) -> Result<f64> {
    let eigs = transfer_eigenvalues(profile)?;
    Ok(*eigs.last().expect("profile has at least one level"))
}

/// Largest eigenvalue for the unit-slope growing profile on k levels,
/// i.e. the largest zero of the monic Hermite polynomial H_k.
pub fn lambda_max_growing_unit(k: usize) -> f64 {
    assert!(k >= 1);
    if k == 1 {
        return 0.0;
    }
    let diag = vec![0.0; k];
    let off: Vec<f64> = (1..k).map(|j| (j as f64).sqrt()).collect();
    let eigs = tridiag::eigenvalues_sym(&diag, &off).expect("QL converges for Hermite data");
    *eigs.last().unwrap()
}

/// Distance of the top eigenvalue from the semicircle endpoint 2 sqrt(k);
/// negative, shrinking like k^{-1/6} with the first Airy zero as amplitude.
pub fn edge_shift(k: usize) -> f64 {
    lambda_max_growing_unit(k) - 2.0 * (k as f64).sqrt()
}

/// ln |H_k(lambda)| and the sign of H_k(lambda), by the three-term
/// recursion with periodic rescaling so huge k stays inside f64 range.
pub fn hermite_eval_ln(k: usize, lambda: f64) -> (f64, i8) {
    const RESCALE: f64 = 1e150;
    let mut ln_scale = 0.0f64;
    let mut prev = 1.0f64;
    let mut cur = lambda;
    if k == 0 {
        return (0.0, 1);
    }
    for j in 2..=k {
        let next = lambda * cur - (j as f64 - 1.0) * prev;
        prev = cur;
        cur = next;
        let m = cur.abs().max(prev.abs());
        if m > RESCALE {
            prev /= RESCALE;
            cur /= RESCALE;
            ln_scale += RESCALE.ln();
        }
    }
    if cur == 0.0 {
        return (f64::NEG_INFINITY, 0);
    }
    (cur.abs().ln() + ln_scale, if cur > 0.0 { 1 } else { -1 })
}

/// Half-width of the spectral window around 2 sqrt(k) where the Airy edge
/// form is meaningful.
pub fn edge_window_halfwidth(k: usize) -> f64 {
    4.0 * (k as f64).powf(-1.0 / 6.0)
}

/// Airy edge approximation to ln |H_k(lambda)| for lambda near 2 sqrt(k):
///
///   ln sqrt(2 pi) + (k/2) ln k - 3k/2 + lambda sqrt(k)
///     + (1/6) ln k + ln |Ai(z)|,   z = (lambda - 2 sqrt(k)) k^{1/6}.
///
/// Rejects lambda outside |z| <= 4, where the expansion has degraded.
pub fn hermite_edge_ln(k: usize, lambda: f64) -> Result<f64> {
    let kf = k as f64;
    let z = (lambda - 2.0 * kf.sqrt()) * kf.powf(1.0 / 6.0);
    if (lambda - 2.0 * kf.sqrt()).abs() > edge_window_halfwidth(k) {
        return Err(Error::OutOfWindow { k, lambda });
    }
    let ai = crate::airy::ai(z);
    Ok((2.0 * std::f64::consts::PI).sqrt().ln() + 0.5 * kf * kf.ln() - 1.5 * kf
        + lambda * kf.sqrt()
        + kf.ln() / 6.0
        + ai.abs().ln())
}

/// Semicircle density on [-2 sqrt(k), 2 sqrt(k)].
pub fn semicircle_pdf(lambda: f64, k: usize) -> f64 {
    let r2 = 4.0 * k as f64;
    let d = r2 - lambda * lambda;
    if d <= 0.0 {
        0.0
    } else {
        d.sqrt() / (2.0 * std::f64::consts::PI * k as f64)
    }
}

/// Semicircle distribution function, clamped to [0, 1] outside the support.
pub fn semicircle_cdf(lambda: f64, k: usize) -> f64 {
    let r = 2.0 * (k as f64).sqrt();
    if lambda <= -r {
        return 0.0;
    }
    if lambda >= r {
        return 1.0;
    }
    let kf = k as f64;
    0.5 + (lambda * (4.0 * kf - lambda * lambda).sqrt() + 4.0 * kf * (lambda / r).asin())
        / (4.0 * std::f64::consts::PI * kf)
}

/// Kolmogorov-Smirnov distance between a sample and the semicircle law
/// with the same level count.
pub fn ks_vs_semicircle(values: &[f64], k: usize) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyEnsemble);
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("no NaN eigenvalues"));
    let n = sorted.len() as f64;
    let mut d = 0.0f64;
    for (i, x) in sorted.iter().enumerate() {
        let f = semicircle_cdf(*x, k);
        d = d.max(f - i as f64 / n).max((i as f64 + 1.0) / n - f);
    }
    Ok(d)
}

/// Support radius estimated from the second moment: a semicircle of radius
/// R has mean square R^2/4, so R = 2 sqrt(mean lambda^2).
pub fn moment_radius(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyEnsemble);
    }
    let ms = values.iter().map(|x| x * x).sum::<f64>() / values.len() as f64;
    Ok(2.0 * ms.sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bin {
    pub left: f64,
    pub right: f64,
    pub density: f64,
}

/// Equal-width histogram normalized to unit area over [lo, hi].
/// Values outside the range are dropped; the normalization uses the
/// total count, so mass outside shows up as area deficit.
pub fn histogram(values: &[f64], lo: f64, hi: f64, bins: usize) -> Result<Vec<Bin>> {
    if values.is_empty() {
        return Err(Error::EmptyEnsemble);
    }
    if !(hi > lo) || bins == 0 {
        return Err(Error::DegenerateInput(format!(
            "histogram range [{lo}, {hi}] with {bins} bins"
        )));
    }
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0usize; bins];
    for v in values {
        if *v >= lo && *v <= hi {
            let idx = (((v - lo) / width) as usize).min(bins - 1);
            counts[idx] += 1;
        }
    }
    let norm = values.len() as f64 * width;
    Ok(counts
        .iter()
        .enumerate()
        .map(|(i, c)| Bin {
            left: lo + i as f64 * width,
            right: lo + (i + 1) as f64 * width,
            density: *c as f64 / norm,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric;
    use num_traits::{Signed, Zero};

    fn int_poly(coeffs: &[i64]) -> Poly<BigInt> {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn small_hermite_polynomials() {
        assert_eq!(monic_hermite(0), int_poly(&[1]));
        assert_eq!(monic_hermite(1), int_poly(&[0, 1]));
        assert_eq!(monic_hermite(2), int_poly(&[-1, 0, 1]));
        assert_eq!(monic_hermite(3), int_poly(&[0, -3, 0, 1]));
        assert_eq!(monic_hermite(4), int_poly(&[3, 0, -6, 0, 1]));
        assert_eq!(monic_hermite(6), int_poly(&[-15, 0, 45, 0, -15, 0, 1]));
    }

    #[test]
    fn hermite_parity() {
        for k in 0..20 {
            let h = monic_hermite(k);
            for (i, c) in h.coeffs().iter().enumerate() {
                if (k - i) % 2 == 1 {
                    assert!(c.is_zero(), "H_{k} coefficient {i} should vanish");
                }
            }
        }
    }

    #[test]
    fn growing_unit_charpoly_is_hermite() {
        for k in 1..=16 {
            let p = BranchingProfile::growing(1, 1, k).unwrap();
            assert_eq!(charpoly_int(&p).unwrap(), monic_hermite(k), "K = {k}");
        }
    }

    #[test]
    fn descending_charpoly_matches_reversed_growing() {
        // reversing the off-diagonal sequence conjugates by the flip matrix,
        // so the characteristic polynomial is unchanged
        for p in 2..=8 {
            let desc = BranchingProfile::descending(p).unwrap();
            let grow = BranchingProfile::growing(1, 1, p).unwrap();
            assert_eq!(charpoly(&desc), charpoly(&grow), "P = {p}");
            assert_eq!(charpoly_int(&desc).unwrap(), monic_hermite(p));
        }
    }

    #[test]
    fn eigenvalues_of_tiny_operators() {
        let p2 = BranchingProfile::growing(1, 1, 2).unwrap();
        let e2 = transfer_eigenvalues(&p2).unwrap();
        assert!((e2[0] + 1.0).abs() < 1e-12 && (e2[1] - 1.0).abs() < 1e-12);

        let p3 = BranchingProfile::growing(1, 1, 3).unwrap();
        let e3 = transfer_eigenvalues(&p3).unwrap();
        let s3 = 3.0f64.sqrt();
        assert!((e3[0] + s3).abs() < 1e-12);
        assert!(e3[1].abs() < 1e-12);
        assert!((e3[2] - s3).abs() < 1e-12);
    }

    #[test]
    fn top_eigenvalue_at_four_hundred_levels() {
        let l = lambda_max_growing_unit(400);
        assert!((l - 39.161_941_821).abs() < 1e-6, "got {l}");
    }

    #[test]
    fn edge_shift_sits_below_the_semicircle_endpoint() {
        for k in [50usize, 100, 200] {
            let s = edge_shift(k);
            let scale = (k as f64).powf(-1.0 / 6.0);
            // shift tracks a_1 k^{-1/6} with a slowly decaying correction
            assert!(s < 0.0, "K = {k}");
            assert!(s > -3.2 * scale && s < -1.8 * scale, "K = {k}: {s}");
        }
    }

    #[test]
    fn scaled_recursion_matches_exact_evaluation() {
        // lambda = 29/4 at K = 30 keeps the exact value rational
        let lam = BigRational::new(BigInt::from(29), BigInt::from(4));
        let h = monic_hermite(30).map(|c| BigRational::from_integer(c.clone()));
        let exact = h.eval(&lam);
        let exact_ln = numeric::ln_ratio_abs(&exact);
        let (ln_abs, sign) = hermite_eval_ln(30, 7.25);
        assert_eq!(sign as i32, if exact.is_negative() { -1 } else { 1 });
        assert!((ln_abs - exact_ln).abs() < 1e-9, "{ln_abs} vs {exact_ln}");
    }

    #[test]
    fn edge_form_error_decays_in_k() {
        // |ln exact - ln Airy form| at z = 0.5, frozen from direct evaluation
        let frozen = [(100usize, 0.1138), (400, 0.0727), (1600, 0.0462)];
        let mut last = f64::INFINITY;
        for (k, expect) in frozen {
            let kf = k as f64;
            let lam = 2.0 * kf.sqrt() + 0.5 * kf.powf(-1.0 / 6.0);
            let (exact_ln, sign) = hermite_eval_ln(k, lam);
            assert_eq!(sign, 1);
            let asym = hermite_edge_ln(k, lam).unwrap();
            let err = (exact_ln - asym).abs();
            assert!((err - expect).abs() < 2e-3, "K = {k}: error {err}");
            assert!(err < last);
            last = err;
        }
    }

    #[test]
    fn edge_form_rejects_points_outside_the_window() {
        let k = 100usize;
        let lam = 2.0 * 10.0 + 5.0 * (100f64).powf(-1.0 / 6.0);
        match hermite_edge_ln(k, lam) {
            Err(Error::OutOfWindow { k: 100, .. }) => {}
            other => panic!("expected window rejection, got {other:?}"),
        }
    }

    #[test]
    fn semicircle_cdf_endpoints_and_symmetry() {
        let k = 25;
        let r = 10.0;
        assert_eq!(semicircle_cdf(-r - 1.0, k), 0.0);
        assert_eq!(semicircle_cdf(r + 1.0, k), 1.0);
        assert!((semicircle_cdf(0.0, k) - 0.5).abs() < 1e-15);
        for x in [1.0, 3.0, 7.0] {
            let s = semicircle_cdf(x, k) + semicircle_cdf(-x, k);
            assert!((s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn semicircle_pdf_integrates_to_one() {
        let k = 9;
        let r = 6.0;
        let n = 4000;
        let h = 2.0 * r / n as f64;
        let mut s = semicircle_pdf(-r, k) + semicircle_pdf(r, k);
        for i in 1..n {
            let x = -r + i as f64 * h;
            s += semicircle_pdf(x, k) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        let integral = s * h / 3.0;
        // sqrt singularity in the derivative at the endpoints slows Simpson down
        assert!((integral - 1.0).abs() < 1e-4, "integral {integral}");
    }

    #[test]
    fn ks_of_quantile_sample_is_tiny() {
        // invert the CDF at midpoint ranks; KS of that sample is 1/(2n)
        let k = 4;
        let n = 500;
        let mut sample = Vec::with_capacity(n);
        for i in 0..n {
            let target = (i as f64 + 0.5) / n as f64;
            let (mut lo, mut hi) = (-4.0f64, 4.0f64);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if semicircle_cdf(mid, k) < target {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            sample.push(0.5 * (lo + hi));
        }
        let d = ks_vs_semicircle(&sample, k).unwrap();
        assert!((d - 0.001).abs() < 1e-4, "KS {d}");
    }

    #[test]
    fn hermite_zero_sample_ks_frozen_value() {
        let p = BranchingProfile::growing(1, 1, 100).unwrap();
        let eigs = transfer_eigenvalues(&p).unwrap();
        let d = ks_vs_semicircle(&eigs, 100).unwrap();
        assert!((d - 0.00707).abs() < 5e-4, "KS {d}");
    }

    #[test]
    fn moment_radius_from_trace_identity() {
        // tr T^2 = 2 sum w_k = K(K-1) for the unit-slope growing profile
        let k = 50;
        let p = BranchingProfile::growing(1, 1, k).unwrap();
        let eigs = transfer_eigenvalues(&p).unwrap();
        let r = moment_radius(&eigs).unwrap();
        let expect = 2.0 * (k as f64 - 1.0).sqrt();
        assert!((r - expect).abs() < 1e-9, "{r} vs {expect}");
    }

    #[test]
    fn histogram_normalization() {
        let vals: Vec<f64> = (0..1000).map(|i| i as f64 / 1000.0).collect();
        let bins = histogram(&vals, 0.0, 1.0, 20).unwrap();
        let area: f64 = bins.iter().map(|b| b.density * (b.right - b.left)).sum();
        assert!((area - 1.0).abs() < 1e-12);
        assert_eq!(bins.len(), 20);
        assert!(bins.iter().all(|b| (b.density - 1.0).abs() < 0.05));
    }

    #[test]
    fn histogram_rejects_bad_ranges() {
        assert!(matches!(
            histogram(&[1.0], 2.0, 1.0, 4),
            Err(Error::DegenerateInput(_))
        ));
        assert!(matches!(histogram(&[], 0.0, 1.0, 4), Err(Error::EmptyEnsemble)));
    }
}
