//! Scalar helpers shared across modules: log-Gamma, big-integer logarithms,
//! and exact-to-float conversions that stay finite for huge operands.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of Gamma(x) for x > 0, Lanczos approximation, ~1e-13 relative.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma domain is x > 0");
    if x < 0.5 {
        // reflection keeps the small-argument branch accurate
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

pub fn ln_factorial(n: u64) -> f64 {
    ln_gamma(n as f64 + 1.0)
}

/// (2m-1)!! as an exact integer; m = 0 gives 1.
pub fn double_factorial_odd(m: u64) -> BigUint {
    let mut acc = BigUint::from(1u32);
    let mut j = 1u64;
    while j + 1 <= 2 * m {
        acc *= BigUint::from(j);
        j += 2;
    }
    acc
}

/// ln of a positive big integer, accurate to ~1e-15 relative at any size.
pub fn ln_biguint(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "ln of zero");
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_f64().expect("53-bit mantissa");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn ln_bigint_abs(x: &BigInt) -> f64 {
    ln_biguint(x.magnitude())
}

/// Exact rational to f64 via log-difference; never overflows to inf/NaN.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let sign = if r.numer().sign() == Sign::Minus { -1.0 } else { 1.0 };
    sign * (ln_bigint_abs(r.numer()) - ln_bigint_abs(r.denom())).exp()
}

/// Signed ln|r| for a nonzero rational.
pub fn ln_ratio_abs(r: &BigRational) -> f64 {
    assert!(!r.is_zero());
    ln_bigint_abs(r.numer()) - ln_bigint_abs(r.denom())
}

pub fn bigint_abs(x: &BigInt) -> BigUint {
    x.abs().to_biguint().expect("abs is nonnegative")
}
