//! Symmetric tridiagonal eigensolver (implicit-shift QL) and an exact
//! rational Sturm count used to cross-check the floating-point spectrum.

use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

const MAX_SWEEPS: usize = 60;

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal
/// and offdiagonal, sorted ascending.
pub fn eigenvalues_sym(diag: &[f64], offdiag: &[f64]) -> Result<Vec<f64>> {
    assert_eq!(offdiag.len() + 1, diag.len(), "offdiagonal length mismatch");
    let mut d = diag.to_vec();
    let mut e = offdiag.to_vec();
    e.push(0.0);
    ql_implicit(&mut d, &mut e, None)?;
    d.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(d)
}

/// Eigenvalues plus the first component of each orthonormal eigenvector,
/// returned in matching order (ascending eigenvalue). The first components
/// are all that spectral decompositions of root-return quantities need.
pub fn eigen_sym_first_components(diag: &[f64], offdiag: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    assert_eq!(offdiag.len() + 1, diag.len(), "offdiagonal length mismatch");
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = offdiag.to_vec();
    e.push(0.0);
    let mut row = vec![0.0; n];
    row[0] = 1.0;
    ql_implicit(&mut d, &mut e, Some(&mut row))?;
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let vals = idx.iter().map(|&i| d[i]).collect();
    let firsts = idx.iter().map(|&i| row[i]).collect();
    Ok((vals, firsts))
}

/// Implicit-shift QL sweeps. `row` accumulates the first row of the
/// eigenvector matrix when present.
fn ql_implicit(d: &mut [f64], e: &mut [f64], mut row: Option<&mut [f64]>) -> Result<()> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    for l in 0..n {
        let mut iter = 0;
        loop {
            // find the first negligible offdiagonal at or after l
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS {
                return Err(Error::NotConverged { what: "tridiagonal QL", limit: MAX_SWEEPS });
            }
            // Wilkinson shift from the 2x2 block at l
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // annihilation collapsed early; restart the sweep
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = row.as_deref_mut() {
                    let zi1 = z[i + 1];
                    z[i + 1] = s * z[i] + c * zi1;
                    z[i] = c * z[i] - s * zi1;
                }
            }
            if r == 0.0 && i > l {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Symmetrizing offdiagonal b_k = sqrt(sub_k * sup_k); fails on negative
/// products, which have no symmetric equivalent.
pub fn symmetrize(sub: &[f64], sup: &[f64]) -> Result<Vec<f64>> {
    assert_eq!(sub.len(), sup.len());
    sub.iter()
        .zip(sup)
        .enumerate()
        .map(|(i, (a, b))| {
            let p = a * b;
            if p < 0.0 {
                Err(Error::NegativeProduct { index: i })
            } else {
                Ok(p.sqrt())
            }
        })
        .collect()
}

/// Number of eigenvalues strictly below x, counted exactly.
///
/// Sign changes of the leading-minor determinants of (T - xI), evaluated in
/// rational arithmetic; `products[i]` is sub_i * sup_i. A vanishing minor is
/// assigned the sign opposite to its predecessor.
pub fn sturm_count_below(diag: &[BigRational], products: &[BigRational], x: &BigRational) -> usize {
    let n = diag.len();
    let mut changes = 0usize;
    let mut prev = BigRational::from_integer(1.into()); // d_0 = 1
    let mut prev_sign = 1i8;
    let mut cur = diag[0].clone() - x.clone(); // d_1 = a_1 - x
    for k in 1..=n {
        let sign = if cur.is_zero() {
            -prev_sign
        } else if cur.is_positive() {
            1
        } else {
            -1
        };
        if sign != prev_sign {
            changes += 1;
        }
        if k < n {
            let next = (diag[k].clone() - x.clone()) * cur.clone()
                - products[k - 1].clone() * prev.clone();
            prev = cur;
            cur = next;
            prev_sign = sign;
        }
    }
    changes
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn two_by_two_exact() {
        let vals = eigenvalues_sym(&[0.0, 0.0], &[1.0]).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn three_level_unit_slope_spectrum() {
        // offdiag (1, sqrt 2): eigenvalues -sqrt3, 0, sqrt3
        let vals = eigenvalues_sym(&[0.0; 3], &[1.0, 2f64.sqrt()]).unwrap();
        let s3 = 3f64.sqrt();
        assert!((vals[0] + s3).abs() < 1e-12);
        assert!(vals[1].abs() < 1e-12);
        assert!((vals[2] - s3).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_match_diagonal_when_decoupled() {
        let vals = eigenvalues_sym(&[3.0, -1.0, 2.0], &[0.0, 0.0]).unwrap();
        assert_eq!(vals.len(), 3);
        assert!((vals[0] + 1.0).abs() < 1e-13);
        assert!((vals[1] - 2.0).abs() < 1e-13);
        assert!((vals[2] - 3.0).abs() < 1e-13);
    }

    #[test]
    fn first_components_are_normalized_and_reconstruct_powers() {
        // (T^2)_00 = sum v_i^2 l_i^2 for any symmetric tridiagonal
        let d = [0.5, -0.25, 0.0, 1.0];
        let b = [1.0, 0.7, 0.3];
        let (vals, first) = eigen_sym_first_components(&d, &b).unwrap();
        let norm: f64 = first.iter().map(|v| v * v).sum();
        assert!((norm - 1.0).abs() < 1e-12, "first components norm {norm}");
        let t2_00: f64 = d[0] * d[0] + b[0] * b[0];
        let rec: f64 = vals.iter().zip(&first).map(|(l, v)| v * v * l * l).sum();
        assert!((rec - t2_00).abs() < 1e-12);
    }

    #[test]
    fn sturm_counts_bracket_the_float_spectrum() {
        // growing unit slope, K = 12
        let k = 12usize;
        let b: Vec<f64> = (1..k).map(|i| (i as f64).sqrt()).collect();
        let vals = eigenvalues_sym(&vec![0.0; k], &b).unwrap();
        let diag = vec![BigRational::zero(); k];
        let prods: Vec<BigRational> = (1..k as i64).map(|i| rat(i, 1)).collect();
        for (i, v) in vals.iter().enumerate() {
            // dyadic points just left and just right of the float eigenvalue
            let left = BigRational::from_float(v - 1e-8).unwrap();
            let right = BigRational::from_float(v + 1e-8).unwrap();
            assert_eq!(sturm_count_below(&diag, &prods, &left), i, "left of eigenvalue {i}");
            assert_eq!(sturm_count_below(&diag, &prods, &right), i + 1, "right of eigenvalue {i}");
        }
    }

    #[test]
    fn symmetrize_rejects_negative_products() {
        assert!(matches!(
            symmetrize(&[1.0, -2.0], &[1.0, 1.0]),
            Err(Error::NegativeProduct { index: 1 })
        ));
    }
}
