//! Airy function Ai, its derivative, and its negative real zeros.
//!
//! Three regimes on the positive axis: Maclaurin series up to 3.5 (beyond
//! which the sum cancels catastrophically against the decaying Ai), a Taylor
//! integration of y'' = x y marched down from a converged asymptotic seed at
//! x = 9, and the Poincare expansion from 9 up. The negative axis uses the
//! Maclaurin series to -6 and the oscillatory expansion beyond. Relative
//! accuracy is ~1e-12 everywhere except |x| > 6 on the negative side, where
//! the divergent tail bottoms out near 3e-10.

use crate::error::{Error, Result};

// Ai(0) = 3^(-2/3) / Gamma(2/3) and -Ai'(0) = 3^(-1/3) / Gamma(1/3)
const AI0: f64 = 0.355_028_053_887_817_239_26;
const AIP0: f64 = -0.258_819_403_792_806_798_41;

const SERIES_CUT_NEG: f64 = 6.0;
const SERIES_CUT_POS: f64 = 3.5;
const TAYLOR_SEED: f64 = 9.0;

/// Ai(x).
pub fn ai(x: f64) -> f64 {
    ai_and_prime(x).0
}

/// Ai'(x).
pub fn ai_prime(x: f64) -> f64 {
    ai_and_prime(x).1
}

/// Logarithmic derivative Ai'(x)/Ai(x).
pub fn ai_log_deriv(x: f64) -> f64 {
    let (a, ap) = ai_and_prime(x);
    ap / a
}

pub fn ai_and_prime(x: f64) -> (f64, f64) {
    if x >= TAYLOR_SEED {
        asymptotic_positive(x)
    } else if x > SERIES_CUT_POS {
        marched_positive(x)
    } else if x >= -SERIES_CUT_NEG {
        maclaurin(x)
    } else {
        asymptotic_negative(-x)
    }
}

/// Ai = c1 f - c2 g with f = sum a_k x^{3k}, g = sum b_k x^{3k+1}.
fn maclaurin(x: f64) -> (f64, f64) {
    let x3 = x * x * x;
    let mut f = 1.0;
    let mut fp = 0.0; // f'
    let mut g = x;
    let mut gp = 1.0; // g'
    let mut a = 1.0;
    let mut b = x;
    for k in 1..80 {
        let kf = k as f64;
        a *= x3 / (3.0 * kf * (3.0 * kf - 1.0));
        b *= x3 / ((3.0 * kf + 1.0) * 3.0 * kf);
        f += a;
        g += b;
        // term-by-term derivatives: a_k x^{3k} -> 3k a_k x^{3k-1}
        if x != 0.0 {
            fp += 3.0 * kf * a / x;
            gp += (3.0 * kf + 1.0) * b / x;
        }
        if a.abs() < 1e-18 * f.abs() && b.abs() < 1e-18 * g.abs().max(1e-30) {
            break;
        }
    }
    let c1 = AI0;
    let c2 = -AIP0;
    (c1 * f - c2 * g, c1 * fp - c2 * gp)
}

/// u_{k+1} from u_k in the Poincare tail.
fn next_u(u: f64, k: usize) -> f64 {
    let kf = k as f64;
    u * (6.0 * kf + 5.0) * (6.0 * kf + 3.0) * (6.0 * kf + 1.0) / (216.0 * (kf + 1.0) * (2.0 * kf + 1.0))
}

fn v_from_u(u: f64, k: usize) -> f64 {
    if k == 0 {
        1.0
    } else {
        let kf = k as f64;
        -u * (6.0 * kf + 1.0) / (6.0 * kf - 1.0)
    }
}

fn asymptotic_positive(x: f64) -> (f64, f64) {
    let xi = 2.0 / 3.0 * x.powf(1.5);
    let mut sum_a = 0.0;
    let mut sum_ap = 0.0;
    let mut u = 1.0;
    let mut term_prev = f64::INFINITY;
    for k in 0..30 {
        let t = u / xi.powi(k as i32);
        if t.abs() > term_prev {
            break; // divergent tail reached its best truncation
        }
        let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum_a += sgn * t;
        sum_ap += sgn * v_from_u(u, k) / xi.powi(k as i32);
        term_prev = t.abs();
        u = next_u(u, k);
    }
    let pref = (-xi).exp() / (2.0 * std::f64::consts::PI.sqrt() * x.powf(0.25));
    let prefp = -x.powf(0.25) * (-xi).exp() / (2.0 * std::f64::consts::PI.sqrt());
    (pref * sum_a, prefp * sum_ap)
}

/// One Taylor step for y'' = x y: from (y, y') at a to a + h.
fn taylor_step(a: f64, y: f64, yp: f64, h: f64) -> (f64, f64) {
    // c_{k+2} = (a c_k + c_{k-1}) / ((k+1)(k+2)); at |h| = 1/2 the order-25
    // remainder is ~1e-21 relative
    let mut c = [0.0f64; 26];
    c[0] = y;
    c[1] = yp;
    for k in 0..24 {
        let lower = if k == 0 { 0.0 } else { c[k - 1] };
        c[k + 2] = (a * c[k] + lower) / (((k + 1) * (k + 2)) as f64);
    }
    let mut v = 0.0;
    let mut vp = 0.0;
    for k in (0..c.len()).rev() {
        v = v * h + c[k];
        if k >= 1 {
            vp = vp * h + k as f64 * c[k];
        }
    }
    (v, vp)
}

/// Positive midrange, where the Maclaurin sum cancels and the Poincare tail
/// has not converged yet. Integrating downward from the seed is stable: the
/// error component along the growing companion solution shrinks with x.
fn marched_positive(x: f64) -> (f64, f64) {
    let (mut y, mut yp) = asymptotic_positive(TAYLOR_SEED);
    let mut a = TAYLOR_SEED;
    let steps = ((a - x) / 0.5).ceil() as usize;
    let h = (x - a) / steps as f64;
    for _ in 0..steps {
        let (ny, nyp) = taylor_step(a, y, yp, h);
        y = ny;
        yp = nyp;
        a += h;
    }
    (y, yp)
}

fn asymptotic_negative(t: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * t.powf(1.5);
    let phase = zeta - std::f64::consts::FRAC_PI_4;
    // split the u and v tails into even and odd parts
    let mut us = [0.0f64; 30];
    let mut u = 1.0;
    for (k, slot) in us.iter_mut().enumerate() {
        *slot = u;
        u = next_u(u, k);
    }
    let (mut ce, mut se) = (0.0, 0.0); // cos/sin companions for Ai
    let (mut cde, mut sde) = (0.0, 0.0); // for Ai'
    let mut best = f64::INFINITY;
    for k in 0..15 {
        let sgn = if k % 2 == 0 { 1.0 } else { -1.0 };
        let even = us[2 * k] / zeta.powi(2 * k as i32);
        if even.abs() > best {
            break;
        }
        best = even.abs();
        let odd = us[2 * k + 1] / zeta.powi(2 * k as i32 + 1);
        ce += sgn * even;
        se += sgn * odd;
        cde += sgn * v_from_u(us[2 * k], 2 * k) / zeta.powi(2 * k as i32);
        sde += sgn * v_from_u(us[2 * k + 1], 2 * k + 1) / zeta.powi(2 * k as i32 + 1);
    }
    let sp = std::f64::consts::PI.sqrt();
    let ai = (phase.cos() * ce + phase.sin() * se) / (sp * t.powf(0.25));
    let aip = t.powf(0.25) / sp * (phase.sin() * cde - phase.cos() * sde);
    (ai, aip)
}

/// i-th zero of Ai on the negative axis (i >= 1), by bisection from the
/// asymptotic bracket.
pub fn zero(i: usize) -> Result<f64> {
    assert!(i >= 1, "zeros are indexed from 1");
    let t = 3.0 * std::f64::consts::PI * (4.0 * i as f64 - 1.0) / 8.0;
    let guess = -t.powf(2.0 / 3.0) * (1.0 + 5.0 / (48.0 * t * t));
    let mut lo = guess - 0.3;
    let mut hi = (guess + 0.3).min(-1e-6);
    let mut flo = ai(lo);
    let fhi = ai(hi);
    if flo * fhi > 0.0 {
        // widen once; the asymptotic bracket is tight for every i >= 1
        lo = guess - 1.0;
        hi = (guess + 1.0).min(-1e-6);
        flo = ai(lo);
        if flo * ai(hi) > 0.0 {
            return Err(Error::NotConverged { what: "airy zero bracket", limit: 2 });
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = ai(mid);
        if fm == 0.0 || hi - lo < 1e-15 * mid.abs().max(1.0) {
            return Ok(mid);
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    // reference values computed with 30-digit arbitrary-precision arithmetic
    const REFS: &[(f64, f64, f64)] = &[
        (-5.0, 0.350_761_009_024_114_319_79, 0.327_192_818_554_443_136_79),
        (-2.0, 0.227_407_428_201_685_575_99, 0.618_259_020_741_691_041_41),
        (-1.0, 0.535_560_883_292_352_118_8, -0.010_160_567_116_645_209_395),
        (0.0, 0.355_028_053_887_817_239_26, -0.258_819_403_792_806_798_41),
        (0.5, 0.231_693_606_480_833_489_77, -0.224_910_532_664_683_893_14),
        (1.0, 0.135_292_416_312_881_415_52, -0.159_147_441_296_793_212_79),
        (2.0, 0.034_924_130_423_274_379_135, -0.053_090_384_433_653_631_704),
        (5.0, 1.083_444_281_360_744_173_5e-4, -2.474_138_908_684_624_76e-4),
        (8.0, 4.692_207_616_099_231_625_6e-8, -1.341_439_297_906_786_574_3e-7),
    ];

    #[test]
    fn values_match_high_precision_references() {
        for &(x, ai_ref, aip_ref) in REFS {
            let (a, ap) = ai_and_prime(x);
            assert!(
                (a - ai_ref).abs() < 1e-11 * ai_ref.abs().max(1e-4),
                "Ai({x}): {a} vs {ai_ref}"
            );
            assert!(
                (ap - aip_ref).abs() < 1e-11 * aip_ref.abs().max(1e-4),
                "Ai'({x}): {ap} vs {aip_ref}"
            );
        }
    }

    #[test]
    fn branches_agree_at_the_cuts() {
        // positive side: the ODE march overlaps both neighbouring branches
        let (m, mp) = marched_positive(SERIES_CUT_POS);
        let (s, sp) = maclaurin(SERIES_CUT_POS);
        assert!((m - s).abs() < 1e-11 * s.abs(), "Ai at the series cut: {m} vs {s}");
        assert!((mp - sp).abs() < 1e-11 * sp.abs(), "Ai' at the series cut");
        let (m8, mp8) = marched_positive(8.0);
        let (a8, ap8) = asymptotic_positive(8.0);
        assert!((m8 - a8).abs() < 1e-11 * a8.abs(), "Ai at 8: {m8} vs {a8}");
        assert!((mp8 - ap8).abs() < 1e-11 * ap8.abs(), "Ai' at 8");
        // negative side: the divergent tail bottoms out near 3e-10 at -6
        let series = maclaurin(-6.0);
        let asym = asymptotic_negative(6.0);
        assert!((series.0 - asym.0).abs() < 2e-9 * series.0.abs().max(1e-8), "Ai at -6");
        assert!((series.1 - asym.1).abs() < 2e-9 * series.1.abs().max(1e-8), "Ai' at -6");
    }

    #[test]
    fn airy_equation_residual_is_small() {
        // Ai'' = x Ai, checked with a five-point stencil
        let h = 1e-3;
        for &x in &[-4.0, -1.5, 0.3, 2.5, 7.0] {
            let second = (-ai(x + 2.0 * h) + 16.0 * ai(x + h) - 30.0 * ai(x)
                + 16.0 * ai(x - h)
                - ai(x - 2.0 * h))
                / (12.0 * h * h);
            assert!(
                (second - x * ai(x)).abs() < 1e-6 * ai(x).abs().max(1e-3),
                "residual at {x}"
            );
        }
    }

    #[test]
    fn known_zeros() {
        let expect = [
            -2.338_107_410_459_767_038_5,
            -4.087_949_444_130_970_616_6,
            -5.520_559_828_095_551_059_1,
            -6.786_708_090_071_758_998_8,
            -7.944_133_587_120_853_123_1,
        ];
        for (i, e) in expect.iter().enumerate() {
            let z = zero(i + 1).unwrap();
            assert!((z - e).abs() < 1e-10, "zero {}: {z} vs {e}", i + 1);
        }
    }

    #[test]
    fn positive_axis_monotone_decay() {
        let mut prev = ai(0.0);
        for i in 1..=80 {
            let x = i as f64 * 0.1;
            let cur = ai(x);
            assert!(cur > 0.0 && cur < prev, "monotone decay fails at {x}");
            prev = cur;
        }
    }
}
