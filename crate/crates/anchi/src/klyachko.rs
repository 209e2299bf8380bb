//! Filtration dimensions for symmetric powers of the cotangent sheaf on the
//! toric resolution of an `A_n` singularity.
//!
//! A ray of slope `i` (through the lattice point `(i, 1)`) pairs with a
//! character `u = (u1, u2)` as `rho_i(u) = i*u1 + u2`. The filtration level
//! profile `lambda` drives everything else: closed-form intersection
//! dimensions, the pointwise recursion increment `delta_n(m, u)`, and the
//! pointwise section-defect count `z_m(a, b)`.
//!
//! [`filtration_dim_oracle`] realizes the filtration subspaces concretely
//! inside the space of degree-m binary forms and measures intersections by
//! exact Gaussian elimination; it is deliberately independent of the closed
//! form so the two can be played against each other.

use std::error::Error;
use std::fmt;

use num_traits::Zero;

use crate::exact::{rat_int, Rational};
use crate::linalg;

/// Character-lattice point `u = (u1, u2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub u1: i64,
    pub u2: i64,
}

impl Weight {
    pub fn new(u1: i64, u2: i64) -> Self {
        Weight { u1, u2 }
    }

    /// Pairing with the ray of slope `i`.
    pub fn ray_pairing(&self, i: i64) -> i64 {
        i * self.u1 + self.u2
    }
}

/// Lattice point in the shifted coordinates `(u1, u2) = (a, b + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ShiftedWeight {
    pub a: i64,
    pub b: i64,
}

impl ShiftedWeight {
    pub fn new(a: i64, b: i64) -> Self {
        ShiftedWeight { a, b }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KlyachkoError {
    /// Filtration intersections are only defined for pairwise distinct rays.
    DuplicateRay { slope: i64 },
    /// A summation bounding box had a nonzero value on its boundary,
    /// indicating the box failed to contain the support.
    SentinelViolation { n: u32, m: u32, u1: i64, u2: i64 },
}

impl fmt::Display for KlyachkoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KlyachkoError::DuplicateRay { slope } => {
                write!(f, "duplicate ray slope {slope} in filtration level list")
            }
            KlyachkoError::SentinelViolation { n, m, u1, u2 } => write!(
                f,
                "delta_{n}({m}, u) is nonzero at boundary point ({u1}, {u2}) of the summation box"
            ),
        }
    }
}

impl Error for KlyachkoError {}

/// Filtration level profile: 0 for `i <= -m`, `i + m` on `[-m, 1]`, and
/// `m + 1` from `i = 1` on.
pub fn lambda(m: u32, i: i64) -> i64 {
    let m = m as i64;
    if i <= -m {
        0
    } else if i >= 1 {
        m + 1
    } else {
        i + m
    }
}

/// Shifted profile `lambda'_{m1}(i) = lambda_{m1-1}(i + 1)`: 0 for
/// `i <= -m1`, `i + m1` on `[-m1, 0]`, and `m1` from `i = 0` on.
pub fn lambda_shifted(m1: u32, i: i64) -> i64 {
    debug_assert!(m1 >= 1);
    let m1 = m1 as i64;
    if i <= -m1 {
        0
    } else if i >= 0 {
        m1
    } else {
        i + m1
    }
}

fn check_distinct(levels: &[(i64, i64)]) -> Result<(), KlyachkoError> {
    for (k, &(slope, _)) in levels.iter().enumerate() {
        if levels[..k].iter().any(|&(s, _)| s == slope) {
            return Err(KlyachkoError::DuplicateRay { slope });
        }
    }
    Ok(())
}

/// Dimension of the intersection of filtration subspaces, one per ray:
/// `max(0, m + 1 - sum lambda_m(level))`. The subspaces attached to
/// distinct rays are maximally independent, so the codimensions add until
/// the intersection dies.
pub fn filtration_dim(m: u32, levels: &[(i64, i64)]) -> Result<i64, KlyachkoError> {
    check_distinct(levels)?;
    let total: i64 = levels.iter().map(|&(_, j)| lambda(m, j)).sum();
    Ok((m as i64 + 1 - total).max(0))
}

/// Brute-force counterpart of [`filtration_dim`].
///
/// The filtration subspace for the ray of slope `i` at level `j` is realized
/// inside degree-m binary forms as the span of
/// `l_i^e * x^s * y^(m - e - s)` with `l_i = x - i*y` and `e = j + m`
/// (levels are clipped to `[-m, 1]`, where the subspace saturates to the
/// full space resp. zero). The intersection dimension is measured by exact
/// Gaussian elimination over the rationals.
pub fn filtration_dim_oracle(m: u32, levels: &[(i64, i64)]) -> Result<i64, KlyachkoError> {
    check_distinct(levels)?;
    let dim = m as usize + 1;

    // Current intersection basis, initially the whole space.
    let mut basis: Vec<Vec<Rational>> = (0..dim)
        .map(|k| {
            let mut v = vec![Rational::zero(); dim];
            v[k] = rat_int(1);
            v
        })
        .collect();

    for &(slope, level) in levels {
        let level = level.clamp(-(m as i64), 1);
        if level <= -(m as i64) {
            continue; // full space, nothing to cut
        }
        if level >= 1 {
            return Ok(0);
        }
        let span = level_span(m, slope, level);
        basis = intersect_spans(&basis, &span);
        if basis.is_empty() {
            return Ok(0);
        }
    }
    Ok(basis.len() as i64)
}

/// Basis of `l_i^e * S^(m-e)` as coefficient vectors indexed by the power
/// of `x`, for `e = level + m` in `[1, m]`.
fn level_span(m: u32, slope: i64, level: i64) -> Vec<Vec<Rational>> {
    let m = m as usize;
    let e = (level + m as i64) as usize;

    // (x - i*y)^e: coefficient of x^a y^(e-a) is C(e, a) * (-i)^(e-a).
    let mut line_power = vec![Rational::zero(); e + 1];
    for a in 0..=e {
        let mut c = rat_int(1);
        for k in 0..a {
            c = c * rat_int((e - k) as i64) / rat_int((k + 1) as i64);
        }
        let mut sign = rat_int(1);
        for _ in 0..(e - a) {
            sign *= rat_int(-slope);
        }
        line_power[a] = c * sign;
    }

    (0..=(m - e))
        .map(|s| {
            let mut v = vec![Rational::zero(); m + 1];
            for (a, c) in line_power.iter().enumerate() {
                v[a + s] = c.clone();
            }
            v
        })
        .collect()
}

/// Basis of the intersection of two row spans, both with independent rows.
///
/// Solutions of `alpha^T A = beta^T B` are the kernel of the matrix whose
/// columns are the rows of `A` and the negated rows of `B`; the alpha parts
/// of a kernel basis map to an independent basis of the intersection.
fn intersect_spans(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.first().map_or(0, Vec::len);
    let mut stacked: linalg::Matrix = Vec::with_capacity(n);
    for col in 0..n {
        let mut row = Vec::with_capacity(a.len() + b.len());
        for va in a {
            row.push(va[col].clone());
        }
        for vb in b {
            row.push(-&vb[col]);
        }
        stacked.push(row);
    }
    linalg::kernel_basis(&stacked)
        .into_iter()
        .map(|k| {
            let mut v = vec![Rational::zero(); n];
            for (coef, va) in k[..a.len()].iter().zip(a) {
                if coef.is_zero() {
                    continue;
                }
                for (slot, entry) in v.iter_mut().zip(va) {
                    *slot += coef * entry;
                }
            }
            v
        })
        .collect()
}

/// Pointwise increment of the toric recursion in the weight `u`, from the
/// rays of slope 0, 1 and n+1:
///
/// `(m+1) - lambda(rho_1) - max(m+1 - lambda(rho_0) - lambda(rho_1), 0)
///        - max(m+1 - lambda(rho_1) - lambda(rho_{n+1}), 0)
///        + max(m+1 - lambda(rho_0) - lambda(rho_{n+1}), 0)`.
pub fn delta_pointwise(n: u32, m: u32, u: Weight) -> i64 {
    let m1 = m as i64 + 1;
    let l0 = lambda(m, u.ray_pairing(0));
    let l1 = lambda(m, u.ray_pairing(1));
    let ln1 = lambda(m, u.ray_pairing(n as i64 + 1));
    m1 - l1 - (m1 - l0 - l1).max(0) - (m1 - l1 - ln1).max(0) + (m1 - l0 - ln1).max(0)
}

/// Summation box for `delta_total`: `u1` in `[-(m+1), m+1]`, `u2` in
/// `[-2(m+1), m+2]`. This strictly contains the six support triangles for
/// every n >= 1; the boundary is checked to carry only zeros so a truncation
/// bug turns into a hard error instead of a silently wrong sum.
pub fn delta_box(m: u32) -> (std::ops::RangeInclusive<i64>, std::ops::RangeInclusive<i64>) {
    let m = m as i64;
    (-(m + 1)..=(m + 1), -2 * (m + 1)..=(m + 2))
}

/// Total recursion increment `delta_n(m) = sum_u delta_n(m, u)`.
pub fn delta_total(n: u32, m: u32) -> Result<i64, KlyachkoError> {
    assert!(n >= 1, "singularity index must be positive");
    let (u1_range, u2_range) = delta_box(m);
    let mut total = 0i64;
    for u1 in u1_range.clone() {
        for u2 in u2_range.clone() {
            let v = delta_pointwise(n, m, Weight::new(u1, u2));
            let on_boundary = u1 == *u1_range.start()
                || u1 == *u1_range.end()
                || u2 == *u2_range.start()
                || u2 == *u2_range.end();
            if on_boundary && v != 0 {
                return Err(KlyachkoError::SentinelViolation { n, m, u1, u2 });
            }
            total += v;
        }
    }
    Ok(total)
}

/// Pointwise count `z_m(a, b)` of sections failing to extend, in shifted
/// coordinates:
///
/// `min( max(0, m+1 - lambda'(b) - lambda'((n+1)a + b)),
///       sum_{i=1}^n lambda'(i*a + b) )` with `lambda' = lambda'_{m+1}`.
pub fn z_value(n: u32, m: u32, p: ShiftedWeight) -> i64 {
    let m1 = m + 1;
    let outer = (m as i64 + 1
        - lambda_shifted(m1, p.b)
        - lambda_shifted(m1, (n as i64 + 1) * p.a + p.b))
    .max(0);
    let inner: i64 = (1..=n as i64)
        .map(|i| lambda_shifted(m1, i * p.a + p.b))
        .sum();
    outer.min(inner)
}
