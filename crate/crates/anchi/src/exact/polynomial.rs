use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat_int, Rational};

/// Dense univariate polynomial with rational coefficients.
///
/// Index `k` of the coefficient vector is the coefficient of the k-th power.
/// The highest stored coefficient is nonzero; the zero polynomial stores an
/// empty vector. Dense storage is fine here: everything this crate builds has
/// degree at most a few hundred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// Build from coefficients in ascending order of exponent, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Build from sparse `(exponent, coefficient)` terms.
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let mut coeffs = Vec::new();
        for &(exp, c) in terms {
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, Rational::zero());
            }
            coeffs[exp] += rat_int(c);
        }
        Polynomial::from_coeffs(coeffs)
    }

    pub fn monomial(coeff: Rational, exp: usize) -> Self {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = coeff;
        Polynomial { coeffs }
    }

    /// `1 + t + ... + t^n`.
    pub fn geometric(n: usize) -> Self {
        Polynomial {
            coeffs: vec![Rational::one(); n + 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of the k-th power (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] -= c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c < &Rational::zero() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_coeff = mag.is_one();
            match (k, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn arithmetic_basics() {
        let p = Polynomial::from_int_coeffs(&[1, 2, 1]); // (1+t)^2
        let q = Polynomial::from_int_coeffs(&[1, 1]);
        assert_eq!(&q * &q, p);
        assert_eq!(&p - &p, Polynomial::zero());
        assert_eq!(p.degree(), Some(2));
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(p.eval(&rat_int(3)), rat_int(16));
        assert_eq!(q.pow(4).coeff(2), rat_int(6));
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Polynomial::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        let d = &Polynomial::from_int_coeffs(&[1, 1]) - &Polynomial::from_int_coeffs(&[0, 1]);
        assert_eq!(d, Polynomial::one());
    }

    #[test]
    fn sparse_terms_accumulate() {
        let p = Polynomial::from_terms(&[(3, 2), (0, 1), (3, -1)]);
        assert_eq!(p, Polynomial::from_int_coeffs(&[1, 0, 0, 1]));
    }

    #[test]
    fn display_form() {
        let p = Polynomial::from_int_coeffs(&[-1, 0, 3]);
        assert_eq!(p.to_string(), "3*t^2 - 1");
        assert_eq!(Polynomial::from_coeffs(vec![rat(1, 2), rat_int(1)]).to_string(), "t + 1/2");
    }

    #[test]
    fn geometric_series_square() {
        // (1 + t + t^2)^2 = 1 + 2t + 3t^2 + 2t^3 + t^4
        let g = Polynomial::geometric(2);
        assert_eq!(&g * &g, Polynomial::from_int_coeffs(&[1, 2, 3, 2, 1]));
    }
}
