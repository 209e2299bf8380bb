use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{rat_int, ExactError, Polynomial, Rational, RationalFunction};

/// Quasi-polynomial of period `p`: one coefficient row per residue class,
/// row `r` (constant term first) governing arguments congruent to `r` mod `p`.
///
/// The stored period is the natural structural one (for instance the vertex
/// denominator lcm for lattice-point counters); it is not minimized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: usize,
    rows: Vec<Vec<Rational>>,
}

impl QuasiPolynomial {
    /// Build from per-residue coefficient rows. All rows are padded to a
    /// common length; the period must match the number of rows.
    pub fn new(period: usize, mut rows: Vec<Vec<Rational>>) -> Self {
        assert!(period >= 1, "period must be positive");
        assert_eq!(rows.len(), period, "need one coefficient row per residue");
        let width = rows.iter().map(Vec::len).max().unwrap_or(1).max(1);
        for row in &mut rows {
            row.resize(width, Rational::zero());
        }
        QuasiPolynomial { period, rows }
    }

    pub fn constant(c: Rational) -> Self {
        QuasiPolynomial {
            period: 1,
            rows: vec![vec![c]],
        }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Common row length minus one (coefficients above the true degree may be
    /// zero; this is an upper bound used for sizing).
    pub fn degree(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Evaluate at a non-negative integer via the row for `t mod period`.
    pub fn eval(&self, t: u64) -> Rational {
        let row = &self.rows[(t % self.period as u64) as usize];
        let x = rat_int(t as i64);
        let mut acc = Rational::zero();
        for c in row.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Fit a quasi-polynomial of the given period and degree through samples.
    ///
    /// For each residue class `r` the unique degree-`degree` polynomial
    /// through the samples at `r, r+p, ..., r+degree*p` is computed by
    /// Lagrange interpolation, then checked against two further samples of
    /// the class; a mismatch reports the offending class and argument.
    pub fn interpolate(
        period: usize,
        degree: usize,
        sampler: impl Fn(u64) -> Rational,
    ) -> Result<Self, ExactError> {
        assert!(period >= 1, "period must be positive");
        let p = period as u64;
        let mut rows = Vec::with_capacity(period);
        for r in 0..period {
            let args: Vec<u64> = (0..=degree as u64).map(|k| r as u64 + k * p).collect();
            let values: Vec<Rational> = args.iter().map(|&t| sampler(t)).collect();
            let row = lagrange_fit(&args, &values);
            for extra in 1..=2u64 {
                let t = r as u64 + (degree as u64 + extra) * p;
                let fit = eval_row(&row, t);
                if fit != sampler(t) {
                    return Err(ExactError::InterpolationMismatch {
                        residue: r,
                        argument: t,
                    });
                }
            }
            rows.push(row);
        }
        Ok(QuasiPolynomial::new(period, rows))
    }

    /// The rational function `sum_{m>=0} Q(m + shift) t^m`, with denominator
    /// `(1 - t^p)^(d+1)`.
    ///
    /// The numerator is recovered from the first `(d+1)p` values of the
    /// quasi-polynomial; the result is then verified against `3(d+1)p` extra
    /// series coefficients.
    pub fn to_genfun(&self, shift: u64) -> Result<RationalFunction, ExactError> {
        if shift > 1 {
            return Err(ExactError::InvalidShift { shift });
        }
        let p = self.period;
        let d = self.degree();
        let base = (d + 1) * p;

        // (1 - t^p)^(d+1)
        let den = Polynomial::from_terms(&[(0, 1), (p, -1)]).pow(d as u32 + 1);

        // Numerator = (series of Q) * den, which terminates before degree base.
        let series: Vec<Rational> = (0..base).map(|m| self.eval(m as u64 + shift)).collect();
        let den_coeffs = den.coeffs();
        let mut num = vec![Rational::zero(); base];
        for (j, b) in den_coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in series.iter().enumerate() {
                if j + k >= base {
                    break;
                }
                num[j + k] += b * c;
            }
        }
        let f = RationalFunction::new(Polynomial::from_coeffs(num), den)?;

        let total = base + 3 * base;
        let check = f.series_coefficients(total)?;
        for (m, got) in check.iter().enumerate() {
            if *got != self.eval(m as u64 + shift) {
                return Err(ExactError::GenfunMismatch { argument: m as u64 });
            }
        }
        Ok(f)
    }

    /// JSON form: `{"period": p, "degree": d, "rows": [["c0", ...], ...]}`
    /// with rational coefficients as strings.
    pub fn to_json(&self) -> Value {
        json!({
            "period": self.period,
            "degree": self.degree(),
            "rows": self
                .rows
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

fn eval_row(row: &[Rational], t: u64) -> Rational {
    let x = rat_int(t as i64);
    let mut acc = Rational::zero();
    for c in row.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

/// Coefficients (constant first) of the unique polynomial of degree
/// `< args.len()` through the given points.
fn lagrange_fit(args: &[u64], values: &[Rational]) -> Vec<Rational> {
    let mut acc = Polynomial::zero();
    for (j, vj) in values.iter().enumerate() {
        let mut basis = Polynomial::one();
        let mut denom = Rational::one();
        let tj = rat_int(args[j] as i64);
        for (k, &tk) in args.iter().enumerate() {
            if k == j {
                continue;
            }
            let tk = rat_int(tk as i64);
            basis = &basis * &Polynomial::from_coeffs(vec![-&tk, Rational::one()]);
            denom *= &tj - &tk;
        }
        acc = &acc + &basis.scale(&(vj / denom));
    }
    let mut coeffs = acc.coeffs().to_vec();
    coeffs.resize(args.len(), Rational::zero());
    coeffs
}
