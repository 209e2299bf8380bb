//! Weighted planar lattice counts over multisets of half-open triangles.
//!
//! The bracket `[a:b]` stands for the triangle with base corners `(a, 0)`,
//! `(b, 0)` and apex `gamma = (0, 1/2)`, minus the apex point itself. `[a]`
//! is the degenerate bracket `[a:a]`: the closed segment from `(a, 0)` to
//! the apex, again minus the apex. Half-open variants subtract `[a]` and/or
//! `[b]` from `[a:b]`. A dilate of a disjoint union is the disjoint union
//! of the dilates, so multiplicities simply scale the counts.

use crate::exact::{rat, rat_int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AtomKind {
    TriangleClosed,
    TriangleLeftOpen,
    TriangleRightOpen,
    TriangleOpen,
    /// The degenerate bracket `[a]` (parameter `b` is ignored).
    SegmentEndpoint,
    /// The apex point alone (parameters ignored).
    GammaPoint,
}

/// One atom of a weighted multiset: a bracket shape with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedAtom {
    pub kind: AtomKind,
    pub a: Rational,
    pub b: Rational,
    pub multiplicity: i64,
}

impl WeightedAtom {
    pub fn new(kind: AtomKind, a: Rational, b: Rational, multiplicity: i64) -> Self {
        assert!(multiplicity != 0, "atoms carry nonzero multiplicity");
        match kind {
            AtomKind::SegmentEndpoint | AtomKind::GammaPoint => {}
            _ => assert!(a <= b, "triangle brackets need a <= b"),
        }
        WeightedAtom {
            kind,
            a,
            b,
            multiplicity,
        }
    }

    fn triangle(kind: AtomKind, a: Rational, b: Rational, multiplicity: i64) -> Self {
        WeightedAtom::new(kind, a, b, multiplicity)
    }

    fn endpoint(a: Rational, multiplicity: i64) -> Self {
        let b = a.clone();
        WeightedAtom::new(AtomKind::SegmentEndpoint, a, b, multiplicity)
    }

    fn gamma(multiplicity: i64) -> Self {
        WeightedAtom::new(AtomKind::GammaPoint, rat_int(0), rat_int(0), multiplicity)
    }

    /// `sum of y over lattice points of the t-dilate`, times multiplicity.
    ///
    /// At height y < t/2 the dilated triangle's cross-section runs from
    /// `a(t - 2y)` to `b(t - 2y)`; the apex row `2y = t` belongs to no
    /// bracket and only to the standalone gamma atom (integral exactly for
    /// even t, where it contributes t/2 per copy).
    pub fn weighted_sum(&self, t: u64) -> i64 {
        let t = t as i64;
        let mut acc: i64 = 0;
        match self.kind {
            AtomKind::GammaPoint => {
                if t % 2 == 0 {
                    acc = t / 2;
                }
            }
            AtomKind::SegmentEndpoint => {
                for y in 0..=((t - 1) / 2).max(0) {
                    if 2 * y >= t {
                        break;
                    }
                    if (&self.a * rat_int(t - 2 * y)).is_integer() {
                        acc += y;
                    }
                }
            }
            _ => {
                let (left_open, right_open) = match self.kind {
                    AtomKind::TriangleClosed => (false, false),
                    AtomKind::TriangleLeftOpen => (true, false),
                    AtomKind::TriangleRightOpen => (false, true),
                    AtomKind::TriangleOpen => (true, true),
                    _ => unreachable!(),
                };
                for y in 0.. {
                    if 2 * y >= t {
                        break;
                    }
                    let scale = rat_int(t - 2 * y);
                    let xl = &self.a * &scale;
                    let xr = &self.b * &scale;
                    let mut lo = ceil_i64(&xl);
                    let mut hi = floor_i64(&xr);
                    if left_open && xl.is_integer() {
                        lo += 1;
                    }
                    if right_open && xr.is_integer() {
                        hi -= 1;
                    }
                    if hi >= lo {
                        acc += y * (hi - lo + 1);
                    }
                }
            }
        }
        acc * self.multiplicity
    }
}

fn floor_i64(r: &Rational) -> i64 {
    let f = r.floor();
    let n = f.numer().clone();
    i64::try_from(n).expect("bracket coordinates fit in i64")
}

fn ceil_i64(r: &Rational) -> i64 {
    let c = r.ceil();
    let n = c.numer().clone();
    i64::try_from(n).expect("bracket coordinates fit in i64")
}

/// The multiset whose weighted count reproduces the recursion increment:
/// two copies each of the open brackets `(-1/n : -1/(n+1))`, `(-1 : 1/n)`
/// and `(1/(n+1) : 1)`, two copies each of the degenerate brackets
/// `[1/(n+1)]`, `[1/n]` and `[1]`, plus one apex point.
pub fn box_atoms(n: u32) -> Vec<WeightedAtom> {
    let n = n as i64;
    vec![
        WeightedAtom::triangle(AtomKind::TriangleOpen, rat(-1, n), rat(-1, n + 1), 2),
        WeightedAtom::triangle(AtomKind::TriangleOpen, rat_int(-1), rat(1, n), 2),
        WeightedAtom::triangle(AtomKind::TriangleOpen, rat(1, n + 1), rat_int(1), 2),
        WeightedAtom::endpoint(rat(1, n + 1), 2),
        WeightedAtom::endpoint(rat(1, n), 2),
        WeightedAtom::endpoint(rat_int(1), 2),
        WeightedAtom::gamma(1),
    ]
}

/// The multiset whose weighted count gives the local Euler characteristic
/// directly: two copies of the left-open bracket
/// `(1/(n+1) : 2(n+1) - 1/(n+1)]` plus n apex points.
pub fn delta_atoms(n: u32) -> Vec<WeightedAtom> {
    let n = n as i64;
    vec![
        WeightedAtom::triangle(
            AtomKind::TriangleLeftOpen,
            rat(1, n + 1),
            rat_int(2 * (n + 1)) - rat(1, n + 1),
            2,
        ),
        WeightedAtom::gamma(n),
    ]
}

/// Weighted lattice sum of the recursion multiset at dilation `m + 1`.
pub fn weighted_count_box(n: u32, m: u32) -> i64 {
    assert!(n >= 1, "singularity index must be positive");
    box_atoms(n)
        .iter()
        .map(|atom| atom.weighted_sum(m as u64 + 1))
        .sum()
}

/// Weighted lattice sum of the direct multiset at dilation `m + 1`.
/// `m = 0` returns 0 (the dilate-1 brackets hold no positive-height points
/// and the apex is non-integral).
pub fn weighted_count_delta(n: u32, m: u32) -> i64 {
    assert!(n >= 1, "singularity index must be positive");
    delta_atoms(n)
        .iter()
        .map(|atom| atom.weighted_sum(m as u64 + 1))
        .sum()
}
