use std::fmt;

use num_traits::Zero;

use super::{ExactError, Polynomial, Rational};

/// Ratio of two polynomials. The denominator is never identically zero; no
/// common-factor cancellation is performed (equality tests cross-multiply, so
/// none is needed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_polynomial(num: Polynomial) -> Self {
        RationalFunction {
            num,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// The first `count` coefficients of the power-series expansion at the
    /// origin. Requires `den(0) != 0`.
    ///
    /// Long division: with numerator coefficients `a` and denominator
    /// coefficients `b`, the series `c` satisfies
    /// `c_k = (a_k - sum_{j>=1} b_j c_{k-j}) / b_0`. Only the nonzero `b_j`
    /// are visited, so sparse denominators like `(1 - t^p)^4` stay cheap.
    pub fn series_coefficients(&self, count: usize) -> Result<Vec<Rational>, ExactError> {
        let b0 = self.den.coeff(0);
        if b0.is_zero() {
            return Err(ExactError::PoleAtOrigin);
        }
        let den_terms: Vec<(usize, Rational)> = self
            .den
            .coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();
        let mut series: Vec<Rational> = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = self.num.coeff(k);
            for (j, b) in &den_terms {
                if *j > k {
                    break;
                }
                acc -= b * &series[k - j];
            }
            series.push(acc / &b0);
        }
        Ok(series)
    }

    /// True iff the two fractions represent the same rational function,
    /// i.e. `self.num * other.den == other.num * self.den` as polynomials.
    pub fn equivalent(&self, other: &RationalFunction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
