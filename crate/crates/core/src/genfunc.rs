//! Generating functions of level-resolved path counts as explicit rational
//! functions of the step variable s, with continued-fraction and
//! reversed-charpoly routes kept separate so they can arbitrate each other,
//! plus the Airy form of the root-return value near its convergence radius.
//!
//! Throughout, `rev` means the reversal x^d p(1/x) of a degree-d polynomial,
//! which turns the monic characteristic polynomial into a series denominator
//! with constant term 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::airy;
use crate::error::{Error, Result};
use crate::numeric::ratio_to_f64;
use crate::poly::Poly;
use crate::profile::BranchingProfile;
use crate::spectral::{charpoly, hermite_eval_ln, monic_hermite};

/// Ratio of polynomials in s with den(0) = 1, exact in the rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalGf {
    pub num: Poly<BigRational>,
    pub den: Poly<BigRational>,
}

impl RationalGf {
    /// First `order` Maclaurin coefficients.
    pub fn series(&self, order: usize) -> Vec<BigRational> {
        self.num.series_div(&self.den, order)
    }

    /// Exact value at a rational point inside the convergence disc (or
    /// anywhere off the poles).
    pub fn eval(&self, s: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return Err(Error::PoleHit);
        }
        Ok(self.num.eval(s) / d)
    }

    pub fn eval_f64(&self, s: f64) -> Result<f64> {
        let sr = BigRational::from_float(s)
            .ok_or_else(|| Error::InvalidParameter(format!("non-finite point {s}")))?;
        Ok(ratio_to_f64(&self.eval(&sr)?))
    }
}

fn reversed_charpoly(profile: &BranchingProfile) -> Poly<BigRational> {
    charpoly(profile).reversed(profile.levels())
}

/// Root-return generating function sum_N Z_N(0) s^N for any finite profile:
/// the (0,0) resolvent entry, i.e. rev of the charpoly with the first level
/// deleted over rev of the full charpoly.
pub fn root_return_gf(profile: &BranchingProfile) -> RationalGf {
    let w = profile.weights();
    let den = reversed_charpoly(profile);
    let num = if w.len() <= 1 {
        Poly::one()
    } else {
        let sub = BranchingProfile::custom(w[1..].to_vec(), "interior").expect("weights already validated");
        reversed_charpoly(&sub)
    };
    RationalGf { num, den }
}

/// Generating function sum_N Z_N(K-1) s^N of counts at the deepest level:
/// the (K-1,0) resolvent entry. Its cofactor is triangular, so the numerator
/// collapses to (prod_k w_k) s^{K-1}.
pub fn to_end_gf(profile: &BranchingProfile) -> RationalGf {
    let den = reversed_charpoly(profile);
    let prod = profile
        .weights()
        .iter()
        .fold(BigRational::one(), |acc, w| acc * w);
    let num = Poly::constant(prod).mul_x_pow(profile.levels() - 1);
    RationalGf { num, den }
}

/// R_j recursion for the unit-slope growing tree: R_0 = R_1 = 1,
/// R_{j+1} = R_j - (j+1) s^2 R_{j-1}. R_{K-1} is the root-return numerator,
/// built without reference to any determinant.
pub fn growing_unit_numerator(k: usize) -> Poly<BigInt> {
    assert!(k >= 1);
    let mut prev: Poly<BigInt> = Poly::one(); // R_0
    let mut cur: Poly<BigInt> = Poly::one(); // R_1
    if k <= 2 {
        return cur;
    }
    for j in 1..=k - 2 {
        let next = cur.sub(&prev.scale(&BigInt::from(j as i64 + 1)).mul_x_pow(2));
        prev = cur;
        cur = next;
    }
    cur
}

/// Reversed monic Hermite polynomial, the universal denominator of the
/// unit-slope family.
pub fn reversed_hermite(k: usize) -> Poly<BigInt> {
    monic_hermite(k).reversed(k)
}

/// Descending-tree generating function built as a bottom-up continued
/// fraction: G_0 = 1, G_m = 1 / (1 - m s^2 G_{m-1}), value G_{P-1}.
pub fn descending_cf_gf(p: usize) -> RationalGf {
    assert!(p >= 1);
    let mut num: Poly<BigRational> = Poly::one();
    let mut den: Poly<BigRational> = Poly::one();
    for m in 1..p {
        let m_s2 = Poly::constant(BigRational::from_integer(BigInt::from(m))).mul_x_pow(2);
        let new_den = den.sub(&m_s2.mul(&num));
        num = den;
        den = new_den;
    }
    RationalGf { num, den }
}

/// The same descending generating function as a ratio of reversed Hermite
/// polynomials, rev H_{P-1} / rev H_P.
pub fn descending_ratio_gf(p: usize) -> RationalGf {
    assert!(p >= 1);
    let to_rat = |c: &BigInt| BigRational::from_integer(c.clone());
    RationalGf {
        num: reversed_hermite(p - 1).map(to_rat),
        den: reversed_hermite(p).map(to_rat),
    }
}

/// Descending generating function evaluated in floating point through the
/// Hermite three-term recursion: Z^-(s) = lambda H_{P-1}(lambda)/H_P(lambda)
/// with lambda = 1/s. Stays finite-precision-safe for P in the thousands.
pub fn descending_value(p: usize, s: f64) -> Result<f64> {
    assert!(p >= 1);
    if s == 0.0 {
        return Ok(1.0);
    }
    let lambda = 1.0 / s;
    let (ln_num, sign_num) = hermite_eval_ln(p - 1, lambda);
    let (ln_den, sign_den) = hermite_eval_ln(p, lambda);
    if sign_den == 0 {
        return Err(Error::PoleHit);
    }
    let sign = (sign_num * sign_den) as f64;
    Ok(lambda * sign * (ln_num - ln_den).exp())
}

/// Edge coordinate map: the evaluation point whose distance from the
/// convergence radius is z in units of P^{-1/6}, i.e. 1/s = 2 sqrt(P) + z P^{-1/6}.
pub fn descending_edge_s(p: usize, z: f64) -> f64 {
    let pf = p as f64;
    1.0 / (2.0 * pf.sqrt() + z * pf.powf(-1.0 / 6.0))
}

/// Airy limit of the descending generating function at edge coordinate z:
/// 2 + 2 P^{-1/3} Ai'(z)/Ai(z).
pub fn descending_edge_value(p: usize, z: f64) -> f64 {
    2.0 + 2.0 * (p as f64).powf(-1.0 / 3.0) * airy::ai_log_deriv(z)
}

/// Convergence radius of the counting series: 1/lambda_max, infinite when
/// the spectrum is non-positive (single level).
pub fn convergence_radius(profile: &BranchingProfile) -> Result<f64> {
    let lam = crate::spectral::lambda_max(profile)?;
    if lam <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(1.0 / lam)
}
