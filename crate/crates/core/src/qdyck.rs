//! Area-weighted Dyck paths and the q-deformed return series.
//!
//! An up-step leaving height h carries q^h, so a closed path of 2n steps
//! accumulates q^area and the height-0 count is the Carlitz-Riordan
//! q-Catalan polynomial C_n(q). The return series F(s, q) = sum C_n(q) s^n
//! is evaluated three independent ways: the defining product recursion,
//! a bottom-up continued fraction, and a ratio of q-Airy series. Near
//! q = 1 the continued fraction is the only numerically usable route and
//! feeds the double-scaling collapse onto the Airy profile.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::airy;
use crate::error::{Error, Result};
use crate::pathcount;
use crate::poly::Poly;
use crate::profile::BranchingProfile;

/// Up-step weights q^0, q^1, ... as q-polynomials, for a tree truncated to
/// the given number of levels.
fn q_weights(levels: usize) -> Vec<Poly<BigInt>> {
    (0..levels.saturating_sub(1))
        .map(|h| Poly::<BigInt>::one().mul_x_pow(h))
        .collect()
}

/// Z_N by level, each entry a polynomial in q grading paths by area.
pub fn dyck_polynomials(n: usize, levels: usize) -> Vec<Poly<BigInt>> {
    pathcount::propagate(&q_weights(levels), n)
}

/// Area polynomial W_N(q) of closed 2m-step paths. Truncation is exact
/// when levels > n/2, so that is the default cutoff.
pub fn area_polynomial(n: usize) -> Poly<BigInt> {
    dyck_polynomials(n, n / 2 + 2).swap_remove(0)
}

/// Carlitz-Riordan q-Catalan polynomials C_0 .. C_nmax from
/// C_{n+1}(q) = sum_k q^k C_k(q) C_{n-k}(q).
pub fn carlitz_riordan(nmax: usize) -> Vec<Poly<BigInt>> {
    let mut c: Vec<Poly<BigInt>> = Vec::with_capacity(nmax + 1);
    c.push(Poly::one());
    for n in 0..nmax {
        let mut next = Poly::zero();
        for k in 0..=n {
            let term = c[k].mul(&c[n - k]).mul_x_pow(k);
            next = next.add(&term);
        }
        c.push(next);
    }
    c
}

/// Direct enumeration of closed paths with the area read off the vertex
/// sums, area = (sum of visited heights - n/2) / 2; a geometric route
/// independent of the step-weight bookkeeping.
pub fn area_polynomial_bruteforce(n: usize, levels: usize) -> Result<Poly<BigInt>> {
    const MAX: usize = 20;
    if n > MAX {
        return Err(Error::OracleTooLarge { n, max: MAX });
    }
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n * n / 4 + 1];
    let mut heights = Vec::with_capacity(n + 1);
    heights.push(0i64);
    walk(&mut heights, n, levels as i64, &mut acc);
    Ok(Poly::from_coeffs(acc))
}

fn walk(heights: &mut Vec<i64>, n: usize, levels: i64, acc: &mut [BigInt]) {
    let steps = heights.len() - 1;
    let h = *heights.last().unwrap();
    if steps == n {
        if h == 0 {
            let visited: i64 = heights.iter().skip(1).sum();
            let area = (visited - n as i64 / 2) / 2;
            acc[area as usize] += 1;
        }
        return;
    }
    // prune: must be able to come back down in the remaining steps
    if h > (n - steps) as i64 {
        return;
    }
    if h + 1 < levels {
        heights.push(h + 1);
        walk(heights, n, levels, acc);
        heights.pop();
    }
    if h > 0 {
        heights.push(h - 1);
        walk(heights, n, levels, acc);
        heights.pop();
    }
}

fn check_q(q: f64) -> Result<()> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::InvalidParameter(format!("q = {q} outside (0, 1)")));
    }
    Ok(())
}

/// q-Airy series A_q(s) = sum_n q^{n^2} (-s)^n / (q; q)_n.
pub fn q_airy(s: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut qn = 1.0f64; // q^n
    for n in 1..=10_000 {
        qn *= q;
        // ratio t_n / t_{n-1} = q^{2n-1} (-s) / (1 - q^n)
        term *= q.powi(2 * n - 1) * (-s) / (1.0 - qn);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            return Ok(sum);
        }
    }
    Err(Error::NotConverged { what: "q-Airy series", limit: 10_000 })
}

/// F(s, q) as the q-Airy ratio A_q(s) / A_q(s/q).
pub fn q_airy_ratio(s: f64, q: f64) -> Result<f64> {
    let den = q_airy(s / q, q)?;
    if den == 0.0 {
        return Err(Error::PoleHit);
    }
    Ok(q_airy(s, q)? / den)
}

/// Bottom-up continued fraction for F at fixed depth: the tail is set to 1
/// and G <- 1 / (1 - s q^j G) is applied for j = depth-1 down to 0.
pub fn cf_value_at_depth(s: f64, q: f64, depth: usize) -> f64 {
    let mut g = 1.0f64;
    for j in (0..depth).rev() {
        g = 1.0 / (1.0 - s * q.powi(j as i32) * g);
    }
    g
}

/// F(s, q) by depth doubling until two evaluations agree to 1e-11.
/// The starting depth scales like 1/(1-q) so the geometric tail q^j has
/// already died out at the truncation point.
pub fn cf_value(s: f64, q: f64) -> Result<f64> {
    check_q(q)?;
    const CAP: usize = 1 << 21;
    let mut depth = (8.0 / (1.0 - q)).ceil().max(4096.0) as usize;
    let mut prev = cf_value_at_depth(s, q, depth);
    while depth <= CAP {
        depth *= 2;
        let cur = cf_value_at_depth(s, q, depth);
        if (cur - prev).abs() <= 1e-11 * cur.abs().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::NotConverged { what: "continued fraction depth", limit: CAP })
}

/// Residual of the defining functional equation
/// F(s, q) - 1 - s F(s, q) F(qs, q), evaluated through the continued fraction.
pub fn functional_residual(s: f64, q: f64) -> Result<f64> {
    let f = cf_value(s, q)?;
    let fq = cf_value(q * s, q)?;
    Ok(f - 1.0 - s * f * fq)
}

/// Maclaurin coefficients of F(s, q) at exact rational q, by running the
/// continued fraction in truncated power series; levels beyond the order
/// cannot reach the kept coefficients.
pub fn f_series(q: &BigRational, order: usize) -> Vec<BigRational> {
    let mut f: Poly<BigRational> = Poly::one();
    let mut qj = num_traits::pow::pow(q.clone(), order); // q^order down to q^0
    for _ in (0..=order).rev() {
        let shifted = f.scale(&qj).mul_x_pow(1);
        let den = Poly::<BigRational>::one().sub(&shifted);
        f = Poly::from_coeffs(den.series_inv(order + 1));
        if !qj.is_one() {
            qj /= q.clone();
        }
    }
    (0..=order).map(|i| f.coeff(i)).collect()
}

/// Classical Catalan generating function (1 - sqrt(1 - 4s)) / (2s), the
/// q -> 1 limit of F on s <= 1/4.
pub fn catalan_gf(s: f64) -> f64 {
    if s == 0.0 {
        return 1.0;
    }
    (1.0 - (1.0 - 4.0 * s).sqrt()) / (2.0 * s)
}

/// Evaluation point tied to the edge coordinate z: s = 1/4 - z (1-q)^{2/3}.
pub fn collapse_s(q: f64, z: f64) -> f64 {
    0.25 - z * (1.0 - q).powf(2.0 / 3.0)
}

/// Collapse observable g(q, z) = (F(s, q) - F(s, 1)) / (1-q)^{1/3} at
/// s = collapse_s(q, z). Curves at different q near 1 fall onto the
/// limiting profile `collapse_limit`.
pub fn collapse_observable(q: f64, z: f64) -> Result<f64> {
    let s = collapse_s(q, z);
    let f = cf_value(s, q)?;
    Ok((f - catalan_gf(s)) / (1.0 - q).powf(1.0 / 3.0))
}

/// Limiting collapse profile 2 Ai'(4z)/Ai(4z) + 4 sqrt(z), increasing from
/// 2 Ai'(0)/Ai(0) at z = 0 toward 0.
pub fn collapse_limit(z: f64) -> f64 {
    2.0 * airy::ai_log_deriv(4.0 * z) + 4.0 * z.sqrt()
}

/// Level-linear weights 1 - eps(k-1): the first-order expansion of the
/// q-geometric weights q^{k-1} at q = 1 - eps, kept exact in eps.
pub fn linearized_profile(eps: &BigRational, levels: usize) -> Result<BranchingProfile> {
    let one = BigRational::one();
    let weights = (0..levels.saturating_sub(1))
        .map(|h| &one - &(eps * BigRational::from_integer(BigInt::from(h))))
        .collect();
    BranchingProfile::custom(weights, format!("linearized eps {eps}"))
}

/// Exact count difference between the q-geometric tree at q = 1 - eps and
/// its linearization, at the root after n steps. Vanishes to second order:
/// halving eps divides the defect by about four.
pub fn correspondence_defect(eps: &BigRational, n: usize) -> Result<BigRational> {
    let one = BigRational::one();
    let q = &one - eps;
    if !q.is_positive() {
        return Err(Error::InvalidParameter(format!("eps = {eps} leaves no positive q")));
    }
    let levels = n / 2 + 2;
    let geo = BranchingProfile::dyck_q(q, levels)?;
    let lin = linearized_profile(eps, levels)?;
    let zg = pathcount::count_paths(&geo, n);
    let zl = pathcount::count_paths(&lin, n);
    Ok(&zg.counts[0] - &zl.counts[0])
}

/// Ratio defect(eps) / defect(eps/2), close to 4 when the defect is
/// quadratic in eps.
pub fn correspondence_halving_ratio(eps: &BigRational, n: usize) -> Result<f64> {
    let two = BigRational::from_integer(BigInt::from(2));
    let d1 = correspondence_defect(eps, n)?;
    let d2 = correspondence_defect(&(eps / &two), n)?;
    if d2.is_zero() {
        return Err(Error::DegenerateInput("zero defect at half eps".into()));
    }
    Ok(crate::numeric::ratio_to_f64(&(d1 / d2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(coeffs: &[i64]) -> Poly<BigInt> {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn small_q_catalan_polynomials() {
        let c = carlitz_riordan(4);
        assert_eq!(c[0], Poly::one());
        assert_eq!(c[1], Poly::one());
        assert_eq!(c[2], q_poly(&[1, 1]));
        assert_eq!(c[3], q_poly(&[1, 2, 1, 1]));
        assert_eq!(c[4], q_poly(&[1, 3, 3, 3, 2, 1, 1]));
    }

    #[test]
    fn transfer_counts_equal_q_catalan() {
        let c = carlitz_riordan(8);
        for m in 0..=8 {
            assert_eq!(area_polynomial(2 * m), c[m], "2m = {}", 2 * m);
        }
    }

    #[test]
    fn odd_lengths_have_no_closed_paths() {
        assert!(area_polynomial(5).is_zero());
        assert!(area_polynomial(9).is_zero());
    }

    #[test]
    fn brute_force_geometry_agrees() {
        for n in [4usize, 6, 8, 10, 12] {
            let levels = n / 2 + 2;
            let brute = area_polynomial_bruteforce(n, levels).unwrap();
            assert_eq!(brute, area_polynomial(n), "n = {n}");
        }
    }

    #[test]
    fn q_at_one_recovers_catalan_numbers() {
        let c = carlitz_riordan(7);
        let catalan = [1i64, 1, 2, 5, 14, 42, 132, 429];
        for (p, e) in c.iter().zip(catalan) {
            assert_eq!(p.eval(&BigInt::one()), BigInt::from(e));
        }
    }

    #[test]
    fn extreme_coefficients() {
        // unique minimal-area sawtooth and maximal-area pyramid
        let c = carlitz_riordan(9);
        for (n, p) in c.iter().enumerate() {
            assert_eq!(p.coeff(0), BigInt::one(), "n = {n}");
            if n > 0 {
                assert_eq!(p.degree(), Some(n * (n - 1) / 2), "n = {n}");
                assert_eq!(p.coeff(n * (n - 1) / 2), BigInt::one(), "n = {n}");
            }
        }
    }

    #[test]
    fn series_route_matches_recursion() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(2));
        let series = f_series(&q, 12);
        let c = carlitz_riordan(12);
        for (n, coeff) in series.iter().enumerate() {
            let expect = c[n].map(|x| BigRational::from_integer(x.clone())).eval(&q);
            assert_eq!(coeff, &expect, "n = {n}");
        }
    }

    #[test]
    fn continued_fraction_matches_series_sum() {
        // at q = 1/2, s = 1/10 the series converges fast enough to sum in f64
        let q = BigRational::new(BigInt::from(1), BigInt::from(2));
        let series = f_series(&q, 60);
        let s = 0.1f64;
        let direct: f64 = series
            .iter()
            .enumerate()
            .map(|(n, c)| crate::numeric::ratio_to_f64(c) * s.powi(n as i32))
            .sum();
        let cf = cf_value(s, 0.5).unwrap();
        assert!((cf - direct).abs() < 1e-12, "{cf} vs {direct}");
    }

    #[test]
    fn q_airy_ratio_matches_continued_fraction() {
        for &q in &[0.3f64, 0.6, 0.9] {
            for &s in &[0.05f64, 0.2] {
                let a = q_airy_ratio(s, q).unwrap();
                let b = cf_value(s, q).unwrap();
                assert!((a - b).abs() < 1e-10, "q = {q}, s = {s}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn functional_equation_residual_is_tiny() {
        for &q in &[0.3f64, 0.7, 0.9] {
            for &s in &[0.05f64, 0.1, 0.2] {
                let r = functional_residual(s, q).unwrap();
                assert!(r.abs() < 1e-9, "q = {q}, s = {s}: {r}");
            }
        }
    }

    #[test]
    fn q_outside_unit_interval_is_rejected() {
        assert!(matches!(cf_value(0.1, 1.0), Err(Error::InvalidParameter(_))));
        assert!(matches!(q_airy(0.1, 0.0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn catalan_gf_limits() {
        assert_eq!(catalan_gf(0.0), 1.0);
        assert!((catalan_gf(0.25) - 2.0).abs() < 1e-12);
        // coefficient check: expand numerically at small s
        let s = 1e-4;
        let v = catalan_gf(s);
        assert!((v - (1.0 + s + 2.0 * s * s)).abs() < 1e-10);
    }

    #[test]
    fn collapse_limit_shape() {
        // the pure Airy log-derivative falls, the full profile rises
        let mut prev_phi = f64::INFINITY;
        let mut prev_g = f64::NEG_INFINITY;
        for i in 0..=15 {
            let z = 0.1 * i as f64;
            let phi = airy::ai_log_deriv(4.0 * z);
            assert!(phi < prev_phi, "log-derivative not decreasing at z = {z}");
            prev_phi = phi;
            let g = collapse_limit(z);
            assert!(g > prev_g, "profile not increasing at z = {z}");
            prev_g = g;
        }
        // independent value at the origin: Ai'(0)/Ai(0) = -3^{1/3} G(2/3)/G(1/3)
        let gamma_ratio = (crate::numeric::ln_gamma(2.0 / 3.0) - crate::numeric::ln_gamma(1.0 / 3.0)).exp();
        let origin = -2.0 * 3.0f64.powf(1.0 / 3.0) * gamma_ratio;
        assert!((collapse_limit(0.0) - origin).abs() < 1e-12, "{} vs {origin}", collapse_limit(0.0));
    }

    #[test]
    fn collapse_observable_tracks_the_limit() {
        // coarse spot check at finite 1 - q, where O((1-q)^{1/3}) corrections
        // are still visible; the three-q collapse lives in the acceptance suite
        let g = collapse_observable(0.99, 0.5).unwrap();
        let psi = collapse_limit(0.5);
        assert!((g - psi).abs() < 0.25, "g = {g}, psi = {psi}");
    }

    #[test]
    fn linearization_is_exact_at_first_order() {
        // weights agree with the geometric ones to O(eps^2) level by level
        let eps = BigRational::new(BigInt::from(1), BigInt::from(100));
        let lin = linearized_profile(&eps, 6).unwrap();
        let q = BigRational::one() - eps.clone();
        let geo = BranchingProfile::dyck_q(q.clone(), 6).unwrap();
        for (h, (wl, wg)) in lin.weights().iter().zip(geo.weights()).enumerate() {
            let diff = wg - wl;
            let bound = BigRational::new(BigInt::from(h as i64 * h as i64 + 1), BigInt::from(10_000));
            assert!(diff.abs() <= bound, "height {h}: diff {diff}");
        }
    }

    #[test]
    fn halving_ratio_near_four() {
        let eps = BigRational::new(BigInt::from(1), BigInt::from(1000));
        let r = correspondence_halving_ratio(&eps, 10).unwrap();
        assert!((r - 3.9909).abs() < 2e-3, "ratio {r}");
    }
}
