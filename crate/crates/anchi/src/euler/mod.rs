//! The headline quantities: the local Euler characteristic `chi_loc(n, m)`
//! by four independent methods, its component `chi0(n, m)` by three, the
//! difference `chi1`, and the cross-validation harness that plays the
//! methods against each other.

pub mod tables;

use std::error::Error;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::exact::{
    rat, rat_int, ExactError, Int, Polynomial, QuasiPolynomial, Rational, RationalFunction,
};
use crate::klyachko::{self, KlyachkoError, ShiftedWeight};
use crate::polytopes::{an_pieces, weighted_count_delta};

/// Local Euler characteristic data at one `(n, m)` cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiReport {
    pub n: u32,
    pub m: u32,
    pub chi_loc: Int,
    pub chi0: Int,
    pub chi1: Int,
    pub methods_agreed: bool,
}

impl ChiReport {
    /// JSON form `{"n", "m", "chi_loc", "chi0", "chi1"}`.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "m": self.m,
            "chi_loc": json_int(&self.chi_loc),
            "chi0": json_int(&self.chi0),
            "chi1": json_int(&self.chi1),
        })
    }
}

/// An arbitrary-precision integer as a JSON number (no precision loss).
pub fn json_int(v: &Int) -> Value {
    serde_json::Number::from_string_unchecked(v.to_string()).into()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EulerError {
    /// `chi1` came out negative, which signals an implementation bug: it is
    /// the dimension of a cohomology space.
    NegativeChi1 { n: u32, m: u32 },
}

impl fmt::Display for EulerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EulerError::NegativeChi1 { n, m } => {
                write!(f, "chi1({n}, {m}) is negative; chi_loc and chi0 disagree")
            }
        }
    }
}

impl Error for EulerError {}

/// Branch value `b_n(m)`: 0 for even n; for odd n it alternates with the
/// parity of `q = m mod (n+1)`.
fn branch_b(n: u32, q: u64) -> i64 {
    if n.is_multiple_of(2) {
        0
    } else if q.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Branch value `c_n(m)`, a cubic in `q = m mod (n+1)` with coefficients
/// split by the parities of n and q.
fn branch_c(n: u32, q: u64) -> Int {
    let n = Int::from(n);
    let q = Int::from(q);
    let q2 = &q * &q;
    let q3 = &q2 * &q;
    let n2 = &n * &n;
    let base = Int::from(2) * &q3 - Int::from(3) * (&n - 1) * &q2;
    let n_even = n.is_even();
    let q_even = q.is_even();
    let linear = match (n_even, q_even) {
        (true, _) => (&n2 - Int::from(4) * &n - 2) * &q,
        (false, true) => (&n2 - Int::from(4) * &n - 5) * &q,
        (false, false) => (&n2 - Int::from(4) * &n + 1) * &q,
    };
    let tail = if q_even {
        Int::zero()
    } else {
        Int::from(-3) * (&n + 1)
    };
    base + linear + tail
}

/// Closed form for the local Euler characteristic:
///
/// `((n+1)^2 - 1)/(n+1) * (m^3/6 + m^2/2 + m/4)
///   + b_n(m) * m / (4(n+1)) + c_n(m) / (12(n+1))`
///
/// with the branch tables selected by the parities of n and of
/// `q = m mod (n+1)`. `n = 0` is a smooth point and contributes 0.
pub fn chi_loc_closed(n: u32, m: u64) -> Int {
    if n == 0 {
        return Int::zero();
    }
    let p = n as u64 + 1;
    let q = m % p;
    let ni = n as i64;
    let mr = Rational::from_integer(Int::from(m));
    let lead = rat(ni * (ni + 2), ni + 1)
        * (&mr * &mr * &mr / rat_int(6) + &mr * &mr / rat_int(2) + &mr / rat_int(4));
    let b_term = rat_int(branch_b(n, q)) * &mr / rat_int(4 * (ni + 1));
    let c_term = Rational::from_integer(branch_c(n, q)) / rat_int(12 * (ni + 1));
    let total = lead + b_term + c_term;
    assert!(total.is_integer(), "closed form must evaluate to an integer");
    total.to_integer()
}

/// Rational generating function `sum_m chi_loc(n, m) z^m`:
///
/// `z ((n+1)(1 + z + ... + z^n)^2 - (1 + z^2 + ... + z^(2n)))
///   / ((1-z)^2 (1-z^(n+1))^2)`.
pub fn chi_loc_genfun(n: u32) -> RationalFunction {
    assert!(n >= 1, "singularity index must be positive");
    let ones_sq = Polynomial::geometric(n as usize).pow(2);
    let even_terms = Polynomial::from_terms(
        &(0..=n as usize).map(|k| (2 * k, 1i64)).collect::<Vec<_>>(),
    );
    let num = &(&ones_sq.scale(&rat_int(n as i64 + 1)) - &even_terms)
        * &Polynomial::from_terms(&[(1, 1)]);
    let den = &Polynomial::from_int_coeffs(&[1, -2, 1])
        * &Polynomial::from_terms(&[(0, 1), (n as usize + 1, -1)]).pow(2);
    RationalFunction::new(num, den).expect("denominator is nonzero")
}

/// The closed form assembled as a quasi-polynomial of period `n+1`: row q
/// holds the cubic governing `m = q mod (n+1)`.
pub fn chi_loc_qpoly(n: u32) -> QuasiPolynomial {
    assert!(n >= 1, "singularity index must be positive");
    let ni = n as i64;
    let lead = rat(ni * (ni + 2), ni + 1);
    let rows = (0..=n as u64)
        .map(|q| {
            vec![
                Rational::from_integer(branch_c(n, q)) / rat_int(12 * (ni + 1)),
                &lead / rat_int(4) + rat_int(branch_b(n, q)) / rat_int(4 * (ni + 1)),
                &lead / rat_int(2),
                &lead / rat_int(6),
            ]
        })
        .collect();
    QuasiPolynomial::new(n as usize + 1, rows)
}

/// The local Euler characteristic as a telescoping sum of recursion
/// increments over the singularity indices `1..=n`.
pub fn chi_loc_delta(n: u32, m: u32) -> Result<i64, KlyachkoError> {
    assert!(n >= 1, "singularity index must be positive");
    let mut total = 0i64;
    for k in 1..=n {
        total += klyachko::delta_total(k, m)?;
    }
    Ok(total)
}

/// The local Euler characteristic as a weighted planar lattice count
/// (valid for m >= 1; m = 0 gives 0 by the same convention as the count).
pub fn chi_loc_weighted(n: u32, m: u32) -> i64 {
    weighted_count_delta(n, m)
}

/// Direct enumeration of `chi0(n, m)` as the sum of the pointwise defect
/// counts `z_m(a, b)`.
///
/// The enumeration box is `a in [-(m+1), m+1]`, `b in [-(n+1)(m+1), 0]`:
/// the mirrored wedges reach down to `b = -(n+1)` before dilation, so the
/// b-range scales with n as well as m.
pub fn chi0_direct(n: u32, m: u32) -> u64 {
    assert!(n >= 1, "singularity index must be positive");
    let m1 = m as i64 + 1;
    let mut total = 0i64;
    for a in -m1..=m1 {
        for b in -((n as i64 + 1) * m1)..=0 {
            total += klyachko::z_value(n, m, ShiftedWeight::new(a, b));
        }
    }
    total as u64
}

/// `chi0(n, m)` assembled from lattice-point counts of the dilated pieces:
/// central count plus twice the wedge counts, all at dilation `m + 1`.
pub fn chi0_polytopes(n: u32, m: u32) -> u64 {
    let pieces = an_pieces(n);
    let t = m as u64 + 1;
    let mut total = pieces.c_piece.count_lattice(t);
    for p in &pieces.p_pieces {
        total += 2 * p.count_lattice(t);
    }
    total
}

/// `chi0(n, -)` as a quasi-polynomial in m, assembled from the Ehrhart
/// quasi-polynomials of the pieces evaluated at `t = m + 1`.
pub fn chi0_qpoly(n: u32) -> Result<QuasiPolynomial, ExactError> {
    let pieces = an_pieces(n);
    let ehr_c = pieces.c_piece.ehrhart()?;
    let ehr_p = pieces
        .p_pieces
        .iter()
        .map(|p| p.ehrhart())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(assemble_chi0_qpoly(&ehr_c, &ehr_p))
}

/// Combine piece Ehrhart quasi-polynomials `L(piece, t)` into the function
/// `m -> L(central, m+1) + 2 sum L(wedge_i, m+1)`. The period is the lcm of
/// the piece periods, without minimization.
pub(crate) fn assemble_chi0_qpoly(
    central: &QuasiPolynomial,
    wedges: &[QuasiPolynomial],
) -> QuasiPolynomial {
    let mut period = central.period();
    for w in wedges {
        period = period.lcm(&w.period());
    }
    let mut rows = Vec::with_capacity(period);
    for r in 0..period {
        let mut row = vec![Rational::zero(); 4];
        {
            let mut add = |q: &QuasiPolynomial, factor: i64| {
                let piece_row = &q.rows()[(r + 1) % q.period()];
                let shifted = compose_at_m_plus_1(piece_row);
                for (slot, c) in row.iter_mut().zip(&shifted) {
                    *slot += c * rat_int(factor);
                }
            };
            add(central, 1);
            for w in wedges {
                add(w, 2);
            }
        }
        rows.push(row);
    }
    QuasiPolynomial::new(period, rows)
}

/// Coefficients of `p(m + 1)` given coefficients of `p(t)`, by binomial
/// expansion. The leading coefficient is untouched.
fn compose_at_m_plus_1(row: &[Rational]) -> Vec<Rational> {
    let d = row.len();
    let mut out = vec![Rational::zero(); d];
    for (k, c) in row.iter().enumerate() {
        let mut binom = 1i64;
        for j in 0..=k {
            if j > 0 {
                binom = binom * (k - j + 1) as i64 / j as i64;
            }
            out[j] += c * rat_int(binom);
        }
    }
    out
}

/// `chi1 = chi_loc - chi0`, erroring on a negative result.
pub fn chi1(n: u32, m: u32) -> Result<Int, EulerError> {
    let loc = chi_loc_closed(n, m as u64);
    let zero_part = Int::from(chi0_direct(n, m));
    let diff = loc - zero_part;
    if diff.is_negative() {
        return Err(EulerError::NegativeChi1 { n, m });
    }
    Ok(diff)
}

/// Volume of the full section-defect region: central volume plus twice the
/// wedge volumes.
pub fn chi0_region_volume(n: u32) -> Rational {
    let pieces = an_pieces(n);
    let mut total = pieces.c_piece.volume();
    for p in &pieces.p_pieces {
        total += rat_int(2) * p.volume();
    }
    total
}

/// Leading (cubic) coefficient of `chi1(n, -)`:
/// `n(n+2)/(6(n+1))` minus the region volume.
pub fn chi1_cubic_coefficient(n: u32) -> Rational {
    let ni = n as i64;
    rat(ni * (ni + 2), 6 * (ni + 1)) - chi0_region_volume(n)
}

/// Every method for one cell, with agreement of the enumeration paths
/// against the closed forms.
pub fn chi_report(n: u32, m: u32) -> Result<ChiReport, EulerError> {
    let chi_loc = chi_loc_closed(n, m as u64);
    let chi0 = Int::from(chi0_direct(n, m));
    let chi1 = chi1(n, m)?;
    let delta_ok = chi_loc_delta(n, m)
        .map(|v| Int::from(v) == chi_loc)
        .unwrap_or(false);
    let weighted_ok = m == 0 || Int::from(chi_loc_weighted(n, m)) == chi_loc;
    let polytopes_ok = Int::from(chi0_polytopes(n, m)) == chi0;
    Ok(ChiReport {
        n,
        m,
        chi_loc,
        chi0,
        chi1,
        methods_agreed: delta_ok && weighted_ok && polytopes_ok,
    })
}

/// Successful cross-validation summary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub n_max: u32,
    pub m_max: u32,
    pub cells: u64,
    /// Tabulated generating-function rows compared (wedge and central).
    pub reference_rows: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationError {
    /// Two methods disagree on a cell.
    Mismatch {
        quantity: &'static str,
        left_method: &'static str,
        right_method: &'static str,
        n: u32,
        m: u32,
        left: String,
        right: String,
    },
    /// A tabulated generating function differs from the interpolated one.
    ReferenceGenfun { piece: &'static str, n: u32 },
    Exact(ExactError),
    Klyachko(KlyachkoError),
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationError::Mismatch {
                quantity,
                left_method,
                right_method,
                n,
                m,
                left,
                right,
            } => write!(
                f,
                "{quantity}({n}, {m}): {left_method} gives {left} but {right_method} gives {right}"
            ),
            ValidationError::ReferenceGenfun { piece, n } => write!(
                f,
                "interpolated {piece} generating function at n = {n} differs from the tabulated one"
            ),
            ValidationError::Exact(e) => write!(f, "{e}"),
            ValidationError::Klyachko(e) => write!(f, "{e}"),
        }
    }
}

impl Error for ValidationError {}

impl From<ExactError> for ValidationError {
    fn from(e: ExactError) -> Self {
        ValidationError::Exact(e)
    }
}

impl From<KlyachkoError> for ValidationError {
    fn from(e: KlyachkoError) -> Self {
        ValidationError::Klyachko(e)
    }
}

/// Cross-validate every method on the grid `1 <= n <= n_max`,
/// `0 <= m <= m_max`:
///
/// closed form = generating-function coefficient = recursion sum = weighted
/// count (the weighted path skips m = 0), and direct enumeration = piece
/// counts = quasi-polynomial evaluation for `chi0`. For n up to 5 the
/// interpolated piece generating functions are also compared against the
/// tabulated ones. Returns the first discrepancy.
pub fn validate(n_max: u32, m_max: u32) -> Result<ValidationReport, ValidationError> {
    assert!(n_max >= 1, "need at least one singularity index");
    let mut cells = 0u64;
    let mut reference_rows = 0u32;
    // Running sum over k of the recursion increments, per m.
    let mut delta_cum = vec![0i64; m_max as usize + 1];
    // Wedge Ehrhart data does not depend on n; cache pieces as n grows.
    let mut wedge_ehrhart: Vec<QuasiPolynomial> = Vec::new();

    for n in 1..=n_max {
        let series = chi_loc_genfun(n).series_coefficients(m_max as usize + 1)?;
        let pieces = an_pieces(n);
        wedge_ehrhart.push(pieces.p_pieces[n as usize - 1].ehrhart()?);
        let central = pieces.c_piece.ehrhart()?;
        let chi0_q = assemble_chi0_qpoly(&central, &wedge_ehrhart);

        if let Some(reference) = tables::wedge_genfun(n) {
            let ours = wedge_ehrhart[n as usize - 1].to_genfun(1)?;
            if !ours.equivalent(&reference) {
                return Err(ValidationError::ReferenceGenfun { piece: "wedge", n });
            }
            reference_rows += 1;
        }
        if let Some(reference) = tables::central_genfun(n) {
            let ours = central.to_genfun(1)?;
            if !ours.equivalent(&reference) {
                return Err(ValidationError::ReferenceGenfun { piece: "central", n });
            }
            reference_rows += 1;
        }

        for m in 0..=m_max {
            let closed = chi_loc_closed(n, m as u64);
            let from_series = &series[m as usize];
            if &Rational::from_integer(closed.clone()) != from_series {
                return Err(ValidationError::Mismatch {
                    quantity: "chi_loc",
                    left_method: "closed form",
                    right_method: "generating function",
                    n,
                    m,
                    left: closed.to_string(),
                    right: from_series.to_string(),
                });
            }
            delta_cum[m as usize] += klyachko::delta_total(n, m)?;
            if Int::from(delta_cum[m as usize]) != closed {
                return Err(ValidationError::Mismatch {
                    quantity: "chi_loc",
                    left_method: "closed form",
                    right_method: "recursion sum",
                    n,
                    m,
                    left: closed.to_string(),
                    right: delta_cum[m as usize].to_string(),
                });
            }
            if m >= 1 {
                let weighted = chi_loc_weighted(n, m);
                if Int::from(weighted) != closed {
                    return Err(ValidationError::Mismatch {
                        quantity: "chi_loc",
                        left_method: "closed form",
                        right_method: "weighted count",
                        n,
                        m,
                        left: closed.to_string(),
                        right: weighted.to_string(),
                    });
                }
            }

            let direct = chi0_direct(n, m);
            let from_pieces = chi0_polytopes(n, m);
            if direct != from_pieces {
                return Err(ValidationError::Mismatch {
                    quantity: "chi0",
                    left_method: "direct enumeration",
                    right_method: "piece counts",
                    n,
                    m,
                    left: direct.to_string(),
                    right: from_pieces.to_string(),
                });
            }
            let from_qpoly = chi0_q.eval(m as u64);
            if Rational::from_integer(direct.into()) != from_qpoly {
                return Err(ValidationError::Mismatch {
                    quantity: "chi0",
                    left_method: "direct enumeration",
                    right_method: "quasi-polynomial",
                    n,
                    m,
                    left: direct.to_string(),
                    right: from_qpoly.to_string(),
                });
            }
            cells += 1;
        }
    }
    Ok(ValidationReport {
        n_max,
        m_max,
        cells,
        reference_rows,
    })
}
