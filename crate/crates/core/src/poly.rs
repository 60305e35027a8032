//! Dense univariate polynomials over an exact coefficient ring.
//!
//! One generic type serves three uses: characteristic polynomials in lambda
//! (BigInt / BigRational coefficients), generating-function numerators and
//! denominators in s, and q-polynomials counting Dyck paths by area.
//! Coefficients are stored ascending; the zero polynomial is the empty vector.

use num_traits::{One, Zero};

pub trait Coeff: Clone + Zero + One + std::ops::Sub<Output = Self> + PartialEq {}
impl<T: Clone + Zero + One + std::ops::Sub<Output = T> + PartialEq> Coeff for T {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly { coeffs: vec![T::zero(), T::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by x^k.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Poly { coeffs: out }
    }

    /// Reverse against degree d: returns x^d * p(1/x). Requires deg(p) <= d.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(self.degree().map_or(true, |g| g <= d), "degree exceeds reversal bound");
        let mut out = vec![T::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[d - i] = c.clone();
        }
        Self::from_coeffs(out)
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// First `order` Maclaurin coefficients of self / den.
    /// Requires den(0) == 1 so the division stays in the coefficient ring.
    pub fn series_div(&self, den: &Self, order: usize) -> Vec<T> {
        assert!(den.coeff(0).is_one(), "series division needs unit constant term");
        let mut out: Vec<T> = Vec::with_capacity(order);
        for n in 0..order {
            let mut c = self.coeff(n);
            for j in 1..=n {
                let d = den.coeff(j);
                if !d.is_zero() {
                    c = c - d * out[n - j].clone();
                }
            }
            out.push(c);
        }
        out
    }

    /// First `order` coefficients of 1 / self; self(0) must be 1.
    pub fn series_inv(&self, order: usize) -> Vec<T> {
        Self::one().series_div(self, order)
    }
}

// operator impls so Poly itself can serve as a coefficient ring, e.g. for
// path counts carrying a q-polynomial per level
impl<T: Coeff> std::ops::Add for Poly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Poly::add(&self, &rhs)
    }
}

impl<T: Coeff> std::ops::Sub for Poly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Poly::sub(&self, &rhs)
    }
}

impl<T: Coeff> std::ops::Mul for Poly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Poly::mul(&self, &rhs)
    }
}

impl<T: Coeff> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coeff> One for Poly<T> {
    fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }
}
