//! Independently tabulated generating functions for the dilated
//! lattice-point counts of the wedge and central pieces, n = 1..5.
//!
//! Each entry is `sum_{m>=0} L(piece, m+1) t^m` in factored form. They serve
//! as fixed cross-checks for the Ehrhart interpolation path; nothing in the
//! library derives values from them.

use crate::exact::{Polynomial, RationalFunction};

fn poly(coeffs: &[i64]) -> Polynomial {
    Polynomial::from_int_coeffs(coeffs)
}

fn sparse(terms: &[(usize, i64)]) -> Polynomial {
    Polynomial::from_terms(terms)
}

fn product(factors: &[(Polynomial, u32)]) -> Polynomial {
    let mut acc = Polynomial::one();
    for (f, e) in factors {
        acc = &acc * &f.pow(*e);
    }
    acc
}

// Irreducible factors that recur in the tables.
fn tp1() -> Polynomial {
    poly(&[1, 1]) // t + 1
}
fn tm1() -> Polynomial {
    poly(&[-1, 1]) // t - 1
}
fn c3() -> Polynomial {
    poly(&[1, 1, 1])
}
fn c4() -> Polynomial {
    poly(&[1, 0, 1])
}
fn c5() -> Polynomial {
    poly(&[1, 1, 1, 1, 1])
}
fn c6() -> Polynomial {
    poly(&[1, -1, 1])
}
fn c7() -> Polynomial {
    poly(&[1, 1, 1, 1, 1, 1, 1])
}
fn c10() -> Polynomial {
    poly(&[1, -1, 1, -1, 1])
}
fn c30() -> Polynomial {
    poly(&[1, -1, 0, 1, -1, 1, 0, -1, 1])
}
fn c42() -> Polynomial {
    poly(&[1, -1, 0, 1, -1, 0, 1, 0, -1, 1, 0, -1, 1])
}

/// Reference generating function for the n-th wedge piece, if tabulated.
pub fn wedge_genfun(n: u32) -> Option<RationalFunction> {
    let (num, den) = match n {
        1 => (
            sparse(&[(3, 1)]),
            product(&[(c3(), 1), (tp1(), 1), (tm1(), 4)]),
        ),
        2 => (
            sparse(&[(2, 1), (3, -1), (4, 1), (6, 1)]),
            product(&[(c3(), 2), (c6(), 1), (tp1(), 1), (tm1(), 4)]),
        ),
        3 => (
            sparse(&[
                (3, 1),
                (5, 1),
                (7, 1),
                (9, 1),
                (10, 1),
                (11, 1),
                (12, 1),
                (14, 1),
            ]),
            product(&[
                (c5(), 1),
                (c10(), 1),
                (c3(), 1),
                (c6(), 1),
                (c4(), 1),
                (tp1(), 2),
                (tm1(), 4),
            ]),
        ),
        4 => (
            sparse(&[
                (4, 1),
                (6, 1),
                (8, 1),
                (9, 1),
                (11, 1),
                (13, 1),
                (14, 1),
                (15, 1),
                (16, 1),
                (17, 1),
                (18, 1),
                (20, 1),
                (22, 1),
            ]),
            product(&[
                (c30(), 1),
                (c5(), 2),
                (c10(), 1),
                (c3(), 1),
                (c4(), 1),
                (tp1(), 1),
                (tm1(), 4),
            ]),
        ),
        5 => (
            sparse(&[
                (5, 1),
                (8, 1),
                (10, 1),
                (11, 1),
                (13, 1),
                (14, 1),
                (16, 1),
                (17, 1),
                (19, 1),
                (20, 1),
                (21, 1),
                (22, 1),
                (23, 1),
                (24, 1),
                (25, 1),
                (27, 1),
                (28, 1),
                (30, 1),
                (33, 1),
            ]),
            product(&[
                (c42(), 1),
                (c30(), 1),
                (c7(), 1),
                (c5(), 1),
                (c3(), 2),
                (c6(), 1),
                (tp1(), 1),
                (tm1(), 4),
            ]),
        ),
        _ => return None,
    };
    Some(RationalFunction::new(num, den).expect("tabulated denominator is nonzero"))
}

/// Reference generating function for the central piece, if tabulated.
pub fn central_genfun(n: u32) -> Option<RationalFunction> {
    let (num, den) = match n {
        1 => (
            sparse(&[(2, 3), (3, 3), (4, 2), (5, 1), (6, 1)]),
            product(&[(c3(), 2), (tp1(), 2), (tm1(), 4)]),
        ),
        2 => (
            sparse(&[(2, 1), (3, 2), (4, -1), (6, 1)]),
            product(&[(c3(), 1), (c6(), 1), (tp1(), 2), (tm1(), 4)]),
        ),
        3 => (
            &sparse(&[
                (2, 1),
                (4, 3),
                (6, 2),
                (7, 2),
                (8, 2),
                (10, 2),
                (12, 1),
                (14, 1),
            ]) * &c3(),
            product(&[(c5(), 2), (c10(), 1), (c4(), 1), (tp1(), 2), (tm1(), 4)]),
        ),
        4 => (
            &(&sparse(&[(2, 1), (4, 1), (5, 1), (8, -1), (9, 1), (11, 1)]) * &c10()) * &tp1(),
            product(&[(c30(), 1), (c5(), 1), (c3(), 2), (tm1(), 4)]),
        ),
        5 => (
            &sparse(&[
                (2, 1),
                (5, 1),
                (6, 2),
                (9, 2),
                (11, 2),
                (12, 2),
                (13, -2),
                (14, 2),
                (15, 2),
                (17, 2),
                (20, 2),
                (23, 1),
                (26, 1),
            ]) * &c5(),
            product(&[
                (c42(), 1),
                (c7(), 2),
                (c3(), 1),
                (c6(), 1),
                (tp1(), 2),
                (tm1(), 4),
            ]),
        ),
        _ => return None,
    };
    Some(RationalFunction::new(num, den).expect("tabulated denominator is nonzero"))
}
