//! Cross-module consistency checks: the independent computation routes are
//! played against each other on grids, the fast lattice counter is compared
//! with a brute-force membership oracle, and seeded bugs are shown to be
//! caught by the validation grid.

use std::collections::HashSet;

use anchi::euler::{self, tables};
use anchi::exact::{rat, rat_int, Polynomial, Rational};
use anchi::klyachko::{delta_total, lambda, ShiftedWeight, Weight};
use anchi::polytopes::{
    an_pieces, tau_apply, weighted_count_box, weighted_count_delta, AtomKind, HalfOpenPolytope,
    Point3, WeightedAtom,
};
use num_traits::{Signed, ToPrimitive, Zero};

/// Brute-force count over the exact bounding box of the dilated vertex set,
/// using only `contains`. Independent of the row-interval fast path.
fn count_by_membership(p: &HalfOpenPolytope, t: u64) -> u64 {
    let (lo, hi) = dilated_box(p, t);
    let mut count = 0;
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                if p.contains(&Point3::from_ints(x, y, z), t) {
                    count += 1;
                }
            }
        }
    }
    count
}

fn dilated_box(p: &HalfOpenPolytope, t: u64) -> ([i64; 3], [i64; 3]) {
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    for v in p.vertices() {
        for (c, coord) in [&v.x, &v.y, &v.z].into_iter().enumerate() {
            let scaled = coord * rat_int(t as i64);
            lo[c] = lo[c].min(scaled.ceil().to_integer().to_i64().unwrap() - 1);
            hi[c] = hi[c].max(scaled.floor().to_integer().to_i64().unwrap() + 1);
        }
    }
    (lo, hi)
}

fn lattice_points(p: &HalfOpenPolytope, t: u64) -> HashSet<(i64, i64, i64)> {
    let (lo, hi) = dilated_box(p, t);
    let mut points = HashSet::new();
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                if p.contains(&Point3::from_ints(x, y, z), t) {
                    points.insert((x, y, z));
                }
            }
        }
    }
    points
}

#[test]
fn fast_count_matches_membership_oracle() {
    for n in 1..=3u32 {
        let pieces = an_pieces(n);
        let mut bodies: Vec<HalfOpenPolytope> = vec![pieces.c_piece.clone()];
        for p in &pieces.p_pieces {
            bodies.push(p.clone());
            bodies.push(p.map_vertices(|v| tau_apply(n, v)).unwrap());
        }
        for body in &bodies {
            for t in 0..=8u64 {
                assert_eq!(
                    body.count_lattice(t),
                    count_by_membership(body, t),
                    "n = {n}, t = {t}"
                );
            }
        }
    }
}

mod random_bodies {
    use super::*;
    use proptest::prelude::*;

    prop_compose! {
        fn point()(n in proptest::collection::vec(-3i64..=3, 3), d in 1i64..=2) -> Point3 {
            Point3::new(rat(n[0], d), rat(n[1], d), rat(n[2], d))
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        // On arbitrary rational tetrahedra with arbitrary removed facets the
        // row-interval counter and the membership predicate see the same
        // lattice points.
        #[test]
        fn half_open_count_on_random_tetrahedra(
            points in proptest::collection::vec(point(), 4),
            faces_mask in 0u8..8,
        ) {
            // Every 3-subset of a non-degenerate tetrahedron is a facet.
            let faces: Vec<Vec<usize>> = (0..3)
                .filter(|i| faces_mask & (1 << i) != 0)
                .map(|i| (0..4usize).filter(|&v| v != i).collect())
                .collect();
            let Ok(body) = HalfOpenPolytope::new(points, faces) else {
                return Ok(()); // degenerate or duplicated sample
            };
            for t in 0..=3u64 {
                prop_assert_eq!(body.count_lattice(t), count_by_membership(&body, t));
            }
        }
    }
}

#[test]
fn decomposition_counts_match_direct_enumeration() {
    for n in 1..=6u32 {
        for m in 1..=15u32 {
            assert_eq!(
                euler::chi0_polytopes(n, m),
                euler::chi0_direct(n, m),
                "n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn pieces_are_pairwise_disjoint_and_exhaustive() {
    for n in 1..=4u32 {
        let pieces = an_pieces(n);
        for m in 0..=10u32 {
            let t = m as u64 + 1;
            let mut all: Vec<HashSet<(i64, i64, i64)>> = Vec::new();
            let central = lattice_points(&pieces.c_piece, t);
            all.push(central);
            for p in &pieces.p_pieces {
                let own = lattice_points(p, t);
                let mirrored = p.map_vertices(|v| tau_apply(n, v)).unwrap();
                let mirror_points = lattice_points(&mirrored, t);
                // The mirror is unimodular: it maps the wedge's lattice
                // points onto the mirrored piece's lattice points.
                let mapped: HashSet<_> = own
                    .iter()
                    .map(|&(x, y, z)| {
                        let img = tau_apply(n, &Point3::from_ints(x, y, z));
                        (
                            img.x.to_integer().to_i64().unwrap(),
                            img.y.to_integer().to_i64().unwrap(),
                            img.z.to_integer().to_i64().unwrap(),
                        )
                    })
                    .collect();
                assert_eq!(mapped, mirror_points, "mirror of wedge, n = {n}, m = {m}");
                all.push(own);
                all.push(mirror_points);
            }
            for i in 0..all.len() {
                for j in (i + 1)..all.len() {
                    assert!(
                        all[i].is_disjoint(&all[j]),
                        "pieces {i} and {j} overlap at n = {n}, m = {m}"
                    );
                }
            }
            let union: usize = all.iter().map(HashSet::len).sum();
            assert_eq!(union as u64, euler::chi0_direct(n, m), "n = {n}, m = {m}");
        }
    }
}

#[test]
fn ehrhart_predicts_extra_dilations() {
    let pieces = an_pieces(2);
    for body in [&pieces.p_pieces[0], &pieces.p_pieces[1], &pieces.c_piece] {
        let q = body.ehrhart().unwrap();
        let p = q.period() as u64;
        // Interpolation consumed dilations up to 5p + verification margin;
        // compare six values beyond that.
        for t in (6 * p)..(6 * p + 6) {
            assert_eq!(
                q.eval(t),
                Rational::from_integer(body.count_lattice(t).into()),
                "t = {t}"
            );
        }
    }
}

#[test]
fn quasi_polynomials_take_integer_values() {
    for n in 1..=4u32 {
        let q = euler::chi_loc_qpoly(n);
        for t in 0..=(6 * q.period() as u64) {
            assert!(q.eval(t).is_integer(), "chi_loc qpoly at n = {n}, t = {t}");
        }
    }
    for n in 1..=2u32 {
        let q = euler::chi0_qpoly(n).unwrap();
        for t in 0..=(6 * q.period() as u64) {
            assert!(q.eval(t).is_integer(), "chi0 qpoly at n = {n}, t = {t}");
        }
    }
}

#[test]
fn weighted_counts_telescope() {
    // The direct multiset splits into the per-index recursion multisets.
    for n in 1..=5u32 {
        for m in 0..=15u32 {
            let split: i64 = (1..=n).map(|k| weighted_count_box(k, m)).sum();
            assert_eq!(weighted_count_delta(n, m), split, "n = {n}, m = {m}");
        }
    }
}

#[test]
fn recursion_increment_equals_weighted_box_count() {
    for n in 1..=6u32 {
        for m in 0..=20u32 {
            assert_eq!(
                delta_total(n, m).unwrap(),
                weighted_count_box(n, m),
                "n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn z_box_sum_is_mirror_invariant() {
    for n in 1..=4u32 {
        for m in 0..=8u32 {
            let m1 = m as i64 + 1;
            let mut direct = 0i64;
            let mut mirrored = 0i64;
            for a in -m1..=m1 {
                for b in -((n as i64 + 1) * m1)..=0 {
                    direct += anchi::klyachko::z_value(n, m, ShiftedWeight::new(a, b));
                    mirrored += anchi::klyachko::z_value(
                        n,
                        m,
                        ShiftedWeight::new(-a, (n as i64 + 1) * a + b),
                    );
                }
            }
            assert_eq!(direct, mirrored, "n = {n}, m = {m}");
        }
    }
}

#[test]
fn full_validation_grid() {
    // Three-way chi0 agreement for n <= 6, m <= 25, four-way chi_loc on the
    // same grid, and the tabulated generating functions for n <= 5.
    let report = euler::validate(6, 25).unwrap();
    assert_eq!(report.cells, 6 * 26);
    assert_eq!(report.reference_rows, 10);
}

#[test]
fn symmetric_expansion_identity() {
    // Both sides of the palindromic numerator identity, built literally:
    // 2 S(z) - 2(1 - z^(n+1)) + n (1 - z^(n+1))^2
    //   = (1+z)^2 ((n+1)(1 + ... + z^n)^2 - (1 + z^2 + ... + z^(2n)))
    // where S(z) counts fundamental-domain lattice points per height:
    // 2(n+1)k - 1 of them at heights k and 2(n+1) - k for k = 1..n, and
    // 2(n+1)^2 - 3 at height n+1 (first coordinates 2 .. 2(n+1)^2 - 2).
    for n in 1..=50usize {
        let p = n + 1;
        let mut s_terms: Vec<(usize, i64)> = vec![(0, 1)];
        for k in 1..=n {
            let coeff = 2 * (p as i64) * (k as i64) - 1;
            s_terms.push((k, coeff));
            s_terms.push((2 * p - k, coeff));
        }
        s_terms.push((p, 2 * (p as i64) * (p as i64) - 3));
        let s = Polynomial::from_terms(&s_terms);
        let one_minus = Polynomial::from_terms(&[(0, 1), (p, -1)]);
        let lhs = &(&s.scale(&rat_int(2)) - &one_minus.scale(&rat_int(2)))
            + &one_minus.pow(2).scale(&rat_int(n as i64));

        let geometric_sq = Polynomial::geometric(n).pow(2);
        let evens =
            Polynomial::from_terms(&(0..=n).map(|k| (2 * k, 1i64)).collect::<Vec<_>>());
        let rhs = &Polynomial::from_int_coeffs(&[1, 2, 1])
            * &(&geometric_sq.scale(&rat_int(p as i64)) - &evens);
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

// Seeded-bug checks: each known failure mode must be caught by the grid
// comparisons the validation suite performs.

#[test]
fn seeded_bug_flipped_half_open_face_is_caught() {
    // Remove the mirror-side face {P_0, Q_1, Z} instead of {P_1, Q_1, Z}.
    let pieces = an_pieces(1);
    let good = &pieces.p_pieces[0];
    let verts = good.vertices().to_vec();
    let find = |x: &Rational, y: &Rational| {
        verts
            .iter()
            .position(|v| &v.x == x && &v.y == y)
            .expect("vertex present")
    };
    let p0 = find(&rat_int(-1), &rat_int(0));
    let p1 = find(&rat(-1, 2), &rat_int(0));
    let q1 = find(&rat(-1, 3), &rat(-1, 3));
    let z = find(&rat_int(0), &rat_int(-1));
    let mutant = HalfOpenPolytope::new(verts, vec![vec![p0, q1, z], vec![p0, p1, z]]).unwrap();

    let mut caught = false;
    for m in 0..=10u32 {
        let t = m as u64 + 1;
        let with_mutant =
            pieces.c_piece.count_lattice(t) + 2 * mutant.count_lattice(t);
        if with_mutant != euler::chi0_direct(1, m) {
            caught = true;
            break;
        }
    }
    assert!(caught, "flipped removed face slipped through the grid");
}

#[test]
fn seeded_bug_lambda_off_by_one_is_caught() {
    // An off-by-one in the level profile's linear region.
    fn lambda_bad(m: u32, i: i64) -> i64 {
        let m = m as i64;
        if i <= -m {
            0
        } else if i >= 1 {
            m + 1
        } else {
            (i + m + 1).min(m + 1)
        }
    }
    fn delta_bad(n: u32, m: u32, u: Weight) -> i64 {
        let m1 = m as i64 + 1;
        let l0 = lambda_bad(m, u.ray_pairing(0));
        let l1 = lambda_bad(m, u.ray_pairing(1));
        let ln1 = lambda_bad(m, u.ray_pairing(n as i64 + 1));
        m1 - l1 - (m1 - l0 - l1).max(0) - (m1 - l1 - ln1).max(0) + (m1 - l0 - ln1).max(0)
    }
    // Sanity: the mutant matches the real profile outside the shifted zone.
    assert_eq!(lambda_bad(3, -3), lambda(3, -3));
    assert_ne!(lambda_bad(3, 0), lambda(3, 0));

    let mut caught = false;
    'outer: for n in 1..=4u32 {
        for m in 0..=20u32 {
            let mut total = 0i64;
            for k in 1..=n {
                let m1 = m as i64 + 1;
                for u1 in -(m1 + 1)..=(m1 + 1) {
                    for u2 in (-2 * (m1 + 1))..=(m1 + 2) {
                        total += delta_bad(k, m, Weight::new(u1, u2));
                    }
                }
            }
            if num_bigint::BigInt::from(total) != euler::chi_loc_closed(n, m as u64) {
                caught = true;
                break 'outer;
            }
        }
    }
    assert!(caught, "level-profile off-by-one slipped through the grid");
}

#[test]
fn seeded_bug_dropped_apex_atom_is_caught() {
    // Forget the standalone apex points in the direct multiset.
    fn weighted_delta_bad(n: u32, m: u32) -> i64 {
        let ni = n as i64;
        let atom = WeightedAtom::new(
            AtomKind::TriangleLeftOpen,
            rat(1, ni + 1),
            rat_int(2 * (ni + 1)) - rat(1, ni + 1),
            2,
        );
        atom.weighted_sum(m as u64 + 1)
    }
    let mut caught = false;
    for n in 1..=4u32 {
        for m in 1..=20u32 {
            if num_bigint::BigInt::from(weighted_delta_bad(n, m))
                != euler::chi_loc_closed(n, m as u64)
            {
                caught = true;
            }
        }
    }
    assert!(caught, "dropped apex atom slipped through the grid");
    // The apex contributes only for odd m, so even-m cells alone would not
    // expose it; check that an odd cell is among the witnesses.
    assert_ne!(
        num_bigint::BigInt::from(weighted_delta_bad(1, 1)),
        euler::chi_loc_closed(1, 1)
    );
}

#[test]
fn reference_tables_double_checked_against_series() {
    // The tabulated generating functions agree with direct counts well past
    // the coefficients used anywhere else.
    for n in 1..=3u32 {
        let pieces = an_pieces(n);
        let wedge = tables::wedge_genfun(n).unwrap();
        let series = wedge.series_coefficients(12).unwrap();
        for (m, c) in series.iter().enumerate() {
            let count = pieces.p_pieces[n as usize - 1].count_lattice(m as u64 + 1);
            assert_eq!(c, &Rational::from_integer(count.into()), "n = {n}, m = {m}");
        }
        let central = tables::central_genfun(n).unwrap();
        let series = central.series_coefficients(12).unwrap();
        for (m, c) in series.iter().enumerate() {
            let count = pieces.c_piece.count_lattice(m as u64 + 1);
            assert_eq!(c, &Rational::from_integer(count.into()), "n = {n}, m = {m}");
        }
    }
}

#[test]
fn interpolation_recovers_the_closed_form() {
    // Fitting the closed form for n = 1 with period 2 and degree 3 gives
    // back its quasi-polynomial, hitting 1, 6, 14 at m = 1, 2, 3.
    let q = anchi::exact::QuasiPolynomial::interpolate(2, 3, |m| {
        Rational::from_integer(euler::chi_loc_closed(1, m))
    })
    .unwrap();
    assert_eq!(q.eval(1), rat_int(1));
    assert_eq!(q.eval(2), rat_int(6));
    assert_eq!(q.eval(3), rat_int(14));
    assert_eq!(q, euler::chi_loc_qpoly(1));
}

#[test]
fn threshold_grid_monotonicity_and_sharpness() {
    use anchi::hyperbolicity::r_min;
    // Strictly increasing in d, non-increasing in n, over the reference
    // grid; and the threshold is sharp for the cubic coefficient of the
    // section bound.
    for n in 1..=6u32 {
        for d in 5..=10u32 {
            if d > 5 {
                assert!(r_min(d, n) > r_min(d - 1, n), "d-monotonicity at ({d}, {n})");
            }
            if n > 1 {
                assert!(r_min(d, n) <= r_min(d, n - 1), "n-monotonicity at ({d}, {n})");
            }
            let needed = rat(2 * (d as i64) * (d as i64) - 5 * (d as i64), 3);
            let gain = euler::chi1_cubic_coefficient(n);
            let at = |r: u64| -> Rational { rat_int(r as i64) * &gain - &needed };
            assert!(at(r_min(d, n)).is_positive(), "cubic sign at ({d}, {n})");
            assert!(
                !at(r_min(d, n) - 1).is_positive(),
                "cubic sign below threshold at ({d}, {n})"
            );
        }
    }
}

#[test]
fn chi1_cubic_coefficient_approaches_its_cap() {
    // The per-singularity gain grows toward n(n+2)/(6(n+1)) minus the
    // limiting region volume; it must stay strictly below the cap and be
    // increasing in n.
    let mut previous = Rational::zero();
    for n in 1..=30u32 {
        let ni = n as i64;
        let value = euler::chi1_cubic_coefficient(n);
        let cap = rat(ni * (ni + 2), 6 * (ni + 1));
        assert!(value.is_positive(), "n = {n}");
        assert!(value < cap, "n = {n}");
        assert!(value > previous, "n = {n}");
        previous = value;
    }
}
