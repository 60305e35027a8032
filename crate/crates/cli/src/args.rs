//! Flag-value parsing and exact formatting shared by the subcommands.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational flag value; accepts "3", "-0.0025", or "p/q".
#[derive(Clone, Debug)]
pub struct Rational(pub BigRational);

impl std::str::FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s).map(Rational)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: BigInt = den.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !frac.chars().all(|c| c.is_ascii_digit()) || frac.is_empty() {
            return Err(format!("bad decimal {s:?}"));
        }
        let w: BigInt = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            whole_digits.parse().map_err(|_| format!("bad decimal {s:?}"))?
        };
        let f: BigInt = frac.parse().map_err(|_| format!("bad decimal {s:?}"))?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let mut value = BigRational::new(w * &scale + f, scale);
        if neg {
            value = -value;
        }
        return Ok(value);
    }
    s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| format!("bad rational {s:?}"))
}

/// Exact decimal rendering when the denominator is 2^a 5^b, "p/q" otherwise.
pub fn decimal_string(r: &BigRational) -> String {
    let mut den = r.denom().clone();
    let (mut twos, mut fives) = (0u32, 0u32);
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() && !(-&den).is_one() {
        return r.to_string();
    }
    let places = twos.max(fives);
    if places == 0 {
        return r.numer().to_string();
    }
    let scaled = (r * BigRational::from_integer(BigInt::from(10u32).pow(places))).to_integer();
    let digits = scaled.abs().to_string();
    let sign = if r.is_negative() { "-" } else { "" };
    let places = places as usize;
    let (int_part, frac_part) = if digits.len() > places {
        let (i, f) = digits.split_at(digits.len() - places);
        (i.to_string(), f.to_string())
    } else {
        ("0".to_string(), format!("{digits:0>places$}"))
    };
    let frac_part = frac_part.trim_end_matches('0');
    if frac_part.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Parses a float restricted to the open unit interval (fugacities).
pub fn parse_unit_open(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("bad number {s:?}"))?;
    if v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err(format!("{v} is outside (0, 1)"))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_forms() {
        assert_eq!(parse_rational("3").unwrap(), BigRational::from_integer(3.into()));
        assert_eq!(parse_rational("-0.0025").unwrap(), BigRational::new((-1).into(), 400.into()));
        assert_eq!(parse_rational("7/4").unwrap(), BigRational::new(7.into(), 4.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&parse_rational("7/4").unwrap()), "1.75");
        assert_eq!(decimal_string(&parse_rational("-1/400").unwrap()), "-0.0025");
        assert_eq!(decimal_string(&parse_rational("5").unwrap()), "5");
        // non-decimal denominator stays exact as a fraction
        assert_eq!(decimal_string(&parse_rational("1/3").unwrap()), "1/3");
        assert_eq!(decimal_string(&parse_rational("0.5").unwrap()), "0.5");
    }
}
