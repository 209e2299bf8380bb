//! Application layer: symmetric cotangent powers on nodal hypersurfaces in
//! projective 3-space.
//!
//! For a smooth degree-d surface the Euler characteristic of `S^m Omega`
//! follows from Riemann-Roch applied to the Chern roots of the symmetric
//! power; combining it with the local `chi1` contributions at `A_n`
//! singularities yields a lower bound on global symmetric differentials and
//! a threshold count `r_min(d, n)` beyond which the resolution has big
//! cotangent bundle.

use std::error::Error;
use std::fmt;

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::euler::{chi1, chi1_cubic_coefficient, json_int, EulerError};
use crate::exact::{rat, rat_int, Int, Rational};

/// A nodal surface in projective 3-space: degree, singularity type, and the
/// number of singular points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceProfile {
    degree: u32,
    singularity_index: u32,
    count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HyperbolicityError {
    /// The general-type hypothesis needs degree at least 5.
    DegreeTooSmall { degree: u32 },
    /// The section bound is only valid from m = 3 on.
    SymmetricPowerTooSmall { m: u32 },
    Euler(EulerError),
}

impl fmt::Display for HyperbolicityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperbolicityError::DegreeTooSmall { degree } => {
                write!(f, "surface degree must be at least 5, got {degree}")
            }
            HyperbolicityError::SymmetricPowerTooSmall { m } => {
                write!(f, "the section lower bound requires m >= 3, got {m}")
            }
            HyperbolicityError::Euler(e) => write!(f, "{e}"),
        }
    }
}

impl Error for HyperbolicityError {}

impl From<EulerError> for HyperbolicityError {
    fn from(e: EulerError) -> Self {
        HyperbolicityError::Euler(e)
    }
}

impl SurfaceProfile {
    pub fn new(
        degree: u32,
        singularity_index: u32,
        count: u64,
    ) -> Result<Self, HyperbolicityError> {
        if degree < 5 {
            return Err(HyperbolicityError::DegreeTooSmall { degree });
        }
        assert!(singularity_index >= 1, "singularity index must be positive");
        Ok(SurfaceProfile {
            degree,
            singularity_index,
            count,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn singularity_index(&self) -> u32 {
        self.singularity_index
    }

    pub fn count(&self) -> u64 {
        self.count
    }
}

/// `chi(Z, S^m Omega_Z)` for a smooth degree-d surface Z in projective
/// 3-space.
///
/// The symmetric power of a rank-2 bundle with Chern roots a, b has roots
/// `i*a + (m-i)*b` for `i = 0..m`; Riemann-Roch per root and summing the
/// power sums gives, with `K^2 = d(d-4)^2`, `c2 = d^3 - 4d^2 + 6d`, and
/// `chi(O) = (K^2 + c2)/12`:
///
/// `chi(S^m Omega) = [ (K^2 - 2 c2) m(m+1)(2m+1)/6 + c2 m(m+1)(m-1)/3
///                     - K^2 m(m+1)/2 ] / 2 + (m+1) chi(O)`.
pub fn chi_smooth(d: u32, m: u64) -> Int {
    let d = Int::from(d);
    let k2 = Rational::from_integer(&d * (&d - 4) * (&d - 4));
    let c2 = Rational::from_integer(&d * &d * &d - Int::from(4) * &d * &d + Int::from(6) * &d);
    let chi_o = (&k2 + &c2) / rat_int(12);
    let m = Rational::from_integer(Int::from(m));
    let sum_sq = &m * (&m + rat_int(1)) * (rat_int(2) * &m + rat_int(1)) / rat_int(6);
    let sum_mixed = &m * (&m + rat_int(1)) * (&m - rat_int(1)) / rat_int(3);
    let sum_lin = &m * (&m + rat_int(1)) / rat_int(2);
    let total = ((&k2 - rat_int(2) * &c2) * sum_sq + &c2 * sum_mixed - &k2 * sum_lin)
        / rat_int(2)
        + (&m + rat_int(1)) * chi_o;
    assert!(total.is_integer(), "Riemann-Roch value must be an integer");
    total.to_integer()
}

/// Lower bound for `h^0(Y, S^m Omega_Y)` on a resolution of a surface with
/// the given profile: `chi_smooth(d, m) + r * chi1(n, m)`, valid for
/// `m >= 3`.
pub fn h0_lower_bound(profile: &SurfaceProfile, m: u32) -> Result<Int, HyperbolicityError> {
    if m < 3 {
        return Err(HyperbolicityError::SymmetricPowerTooSmall { m });
    }
    let local = chi1(profile.singularity_index, m)?;
    Ok(chi_smooth(profile.degree, m as u64) + Int::from(profile.count) * local)
}

/// Smallest r such that the cubic coefficient of the section bound is
/// strictly positive: `r * L_n > (2d^2 - 5d)/3` with `L_n` the cubic
/// coefficient of `chi1(n, -)`. Strict positivity means an exact quotient
/// still rounds up.
pub fn r_min(d: u32, n: u32) -> u64 {
    assert!(d >= 5, "surface degree must be at least 5");
    let di = d as i64;
    let needed = rat(2 * di * di - 5 * di, 3);
    let per_singularity = chi1_cubic_coefficient(n);
    let quotient = needed / per_singularity;
    let floor = quotient.floor().to_integer();
    (floor + Int::from(1)).to_u64().expect("threshold fits u64")
}

/// Largest number of `A_n` singularities a degree-d surface can carry:
/// `floor( (2/3) (d-1)^2 d (n+1) / (2n+1) )`.
pub fn miyaoka_max(d: u32, n: u32) -> u64 {
    let di = d as i64;
    let ni = n as i64;
    let bound = rat(2 * (di - 1) * (di - 1) * di * (ni + 1), 3 * (2 * ni + 1));
    bound.floor().to_integer().to_u64().expect("bound fits u64")
}

/// Verdict for the degree-2k pull-back surfaces carrying `4k^2`
/// singularities of type `A_(k-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabsReport {
    pub k: u32,
    pub degree: u32,
    pub singularity_index: u32,
    pub available: u64,
    pub required: u64,
    pub verdict: bool,
}

impl LabsReport {
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "d": self.degree,
            "n": self.singularity_index,
            "available": self.available,
            "required": self.required,
            "verdict": self.verdict,
        })
    }
}

/// Check whether the degree-2k surface family has enough singularities for
/// a big cotangent bundle. `k = 2` gives a quartic, below the general-type
/// range, and is rejected.
pub fn labs_check(k: u32) -> Result<LabsReport, HyperbolicityError> {
    assert!(k >= 2, "the surface family starts at k = 2");
    let degree = 2 * k;
    if degree < 5 {
        return Err(HyperbolicityError::DegreeTooSmall { degree });
    }
    let n = k - 1;
    let available = 4 * (k as u64) * (k as u64);
    let required = r_min(degree, n);
    Ok(LabsReport {
        k,
        degree,
        singularity_index: n,
        available,
        required,
        verdict: available >= required,
    })
}

/// Threshold grid `r_min(d, n)` for `d = 5..=d_max`, `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RdnTable {
    n_max: u32,
    rows: Vec<(u32, Vec<u64>)>,
}

/// The (5, 6) cell has no cross-checked reference value; it is emitted with
/// a marker rather than suppressed.
pub fn is_uncorroborated(d: u32, n: u32) -> bool {
    d == 5 && n == 6
}

impl RdnTable {
    pub fn entry(&self, d: u32, n: u32) -> Option<u64> {
        self.rows
            .iter()
            .find(|(dd, _)| *dd == d)
            .and_then(|(_, row)| row.get((n - 1) as usize).copied())
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn rows(&self) -> impl Iterator<Item = (u32, &[u64])> {
        self.rows.iter().map(|(d, row)| (*d, row.as_slice()))
    }

    /// CSV with header `d,n,r`, one line per cell in row-major order.
    /// Marker notes are not part of the CSV body; callers that care about
    /// the uncorroborated cell should consult [`is_uncorroborated`].
    pub fn to_csv(&self) -> String {
        let mut out = String::from("d,n,r\n");
        for (d, row) in self.rows() {
            for (i, r) in row.iter().enumerate() {
                out.push_str(&format!("{},{},{}\n", d, i as u32 + 1, r));
            }
        }
        out
    }

    /// Aligned markdown table, rows by degree and columns by singularity
    /// index.
    pub fn to_markdown(&self) -> String {
        let width = 6usize;
        let mut out = String::new();
        out.push_str(&format!("| {:<width$} |", "d\\n"));
        for n in 1..=self.n_max {
            out.push_str(&format!(" {:>width$} |", format!("n={n}")));
        }
        out.push('\n');
        out.push_str(&format!("|{}|", "-".repeat(width + 2)));
        for _ in 1..=self.n_max {
            out.push_str(&format!("{}|", "-".repeat(width + 2)));
        }
        out.push('\n');
        let mut any_marked = false;
        for (d, row) in self.rows() {
            out.push_str(&format!("| {:<width$} |", format!("d={d}")));
            for (i, r) in row.iter().enumerate() {
                let n = i as u32 + 1;
                if is_uncorroborated(d, n) {
                    any_marked = true;
                    out.push_str(&format!(" {:>width$} |", format!("{r}*")));
                } else {
                    out.push_str(&format!(" {r:>width$} |"));
                }
            }
            out.push('\n');
        }
        if any_marked {
            out.push_str("\n\\* no cross-checked reference value for this cell\n");
        }
        out
    }

    /// TeX tabular in the same orientation (rows d, columns n).
    pub fn to_tex(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "\\begin{{tabular}}{{c|{}}}\n",
            "c".repeat(self.n_max as usize)
        ));
        let header: Vec<String> = (1..=self.n_max).map(|n| format!("$n={n}$")).collect();
        out.push_str(&format!(" & {} \\\\\n\\hline\n", header.join(" & ")));
        for (d, row) in self.rows() {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    if is_uncorroborated(d, i as u32 + 1) {
                        format!("{r}^*")
                    } else {
                        r.to_string()
                    }
                })
                .collect();
            out.push_str(&format!("$d={d}$ & {} \\\\\n", cells.join(" & ")));
        }
        out.push_str("\\end{tabular}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .rows()
            .flat_map(|(d, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(i, r)| {
                        let n = i as u32 + 1;
                        let mut entry = json!({"d": d, "n": n, "r": r});
                        if is_uncorroborated(d, n) {
                            entry["flagged"] = json!(true);
                        }
                        entry
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        json!({ "entries": entries })
    }
}

/// Compute the threshold grid.
pub fn rdn_table(d_max: u32, n_max: u32) -> RdnTable {
    assert!(d_max >= 5, "grid starts at degree 5");
    assert!(n_max >= 1, "grid starts at singularity index 1");
    let rows = (5..=d_max)
        .map(|d| (d, (1..=n_max).map(|n| r_min(d, n)).collect()))
        .collect();
    RdnTable { n_max, rows }
}

/// Full record for one surface: thresholds, the Miyaoka cap, and whether
/// the given count settles bigness of the cotangent bundle.
pub fn surface_report(
    profile: &SurfaceProfile,
    m: Option<u32>,
) -> Result<Value, HyperbolicityError> {
    let d = profile.degree();
    let n = profile.singularity_index();
    let r = profile.count();
    let threshold = r_min(d, n);
    let cap = miyaoka_max(d, n);
    let mut report = json!({
        "d": d,
        "n": n,
        "r": r,
        "r_min": threshold,
        "miyaoka_max": cap,
        "big_cotangent": r >= threshold,
        "exceeds_miyaoka": r > cap,
    });
    if let Some(m) = m {
        report["m"] = json!(m);
        report["h0_lower_bound"] = json_int(&h0_lower_bound(profile, m)?);
    }
    Ok(report)
}
