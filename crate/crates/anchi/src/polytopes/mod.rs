//! Exact geometry of the half-open rational polytopes whose dilated
//! lattice-point counts assemble the section-defect count `chi0`.
//!
//! A body is given by its rational vertex set together with a list of
//! removed faces (set differences "hull minus closed faces"). At
//! construction every removed face is checked to span a facet of the hull
//! with all remaining vertices strictly on one side; lattice counting then
//! tightens the corresponding facet inequality to a strict one, which
//! evaluates the same set difference on integer points.

mod atoms;

pub use atoms::{
    box_atoms, delta_atoms, weighted_count_box, weighted_count_delta, AtomKind, WeightedAtom,
};

use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::exact::{rat_int, ExactError, QuasiPolynomial, Rational};
use crate::linalg;

/// Point of 3-space with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Point3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Point3::new(rat_int(x), rat_int(y), rat_int(z))
    }

    fn coords(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

fn sub(p: &Point3, q: &Point3) -> [Rational; 3] {
    [&p.x - &q.x, &p.y - &q.y, &p.z - &q.z]
}

fn cross(u: &[Rational; 3], v: &[Rational; 3]) -> [Rational; 3] {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

fn dot(u: &[Rational; 3], v: &[Rational; 3]) -> Rational {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

fn dot_point(normal: &[i64; 3], p: &Point3) -> Rational {
    rat_int(normal[0]) * &p.x + rat_int(normal[1]) * &p.y + rat_int(normal[2]) * &p.z
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    DuplicateVertex { index: usize },
    /// Fewer than four affinely independent vertices.
    DegenerateHull,
    /// A removed face does not span a facet of the hull with all other
    /// vertices strictly on one side.
    InvalidRemovedFace { face: usize },
    BadFaceIndex { face: usize, index: usize },
}

impl fmt::Display for PolytopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeError::DuplicateVertex { index } => {
                write!(f, "vertex {index} repeats an earlier vertex")
            }
            PolytopeError::DegenerateHull => {
                write!(f, "vertex set does not span a three-dimensional hull")
            }
            PolytopeError::InvalidRemovedFace { face } => {
                write!(f, "removed face {face} is not a face of the hull")
            }
            PolytopeError::BadFaceIndex { face, index } => {
                write!(f, "removed face {face} refers to missing vertex {index}")
            }
        }
    }
}

impl Error for PolytopeError {}

/// Facet inequality `normal . x <= offset * t` for points of the t-dilate,
/// in primitive integer form. `strict` marks facets spanned by a removed
/// face; on lattice points strictness means `normal . x <= offset * t - 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Facet {
    normal: [i64; 3],
    offset: i64,
    strict: bool,
}

/// Half-open convex polytope: the convex hull of rational vertices minus a
/// list of closed faces.
#[derive(Clone, Debug)]
pub struct HalfOpenPolytope {
    vertices: Vec<Point3>,
    removed_faces: Vec<Vec<usize>>,
    facets: Vec<Facet>,
}

impl HalfOpenPolytope {
    pub fn new(
        vertices: Vec<Point3>,
        removed_faces: Vec<Vec<usize>>,
    ) -> Result<Self, PolytopeError> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(PolytopeError::DuplicateVertex { index: i });
            }
        }
        for (fi, face) in removed_faces.iter().enumerate() {
            for &ix in face {
                if ix >= vertices.len() {
                    return Err(PolytopeError::BadFaceIndex {
                        face: fi,
                        index: ix,
                    });
                }
            }
        }

        let mut facets = hull_facets(&vertices)?;

        // Mark each removed face on the facet it spans. The face must use
        // every hull vertex of that facet: any vertex outside the face has
        // to sit strictly inside the inequality.
        for (fi, face) in removed_faces.iter().enumerate() {
            let mut matched = false;
            for facet in facets.iter_mut() {
                let on_plane =
                    |ix: usize| dot_point(&facet.normal, &vertices[ix]) == rat_int(facet.offset);
                if !face.iter().all(|&ix| on_plane(ix)) {
                    continue;
                }
                if (0..vertices.len())
                    .filter(|ix| !face.contains(ix))
                    .any(on_plane)
                {
                    continue;
                }
                facet.strict = true;
                matched = true;
                break;
            }
            if !matched {
                return Err(PolytopeError::InvalidRemovedFace { face: fi });
            }
        }

        Ok(HalfOpenPolytope {
            vertices,
            removed_faces,
            facets,
        })
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn removed_faces(&self) -> &[Vec<usize>] {
        &self.removed_faces
    }

    /// Image under a vertex-wise affine map, keeping the same removed-face
    /// index sets. The face structure is revalidated on the new hull.
    pub fn map_vertices(&self, f: impl Fn(&Point3) -> Point3) -> Result<Self, PolytopeError> {
        HalfOpenPolytope::new(
            self.vertices.iter().map(f).collect(),
            self.removed_faces.clone(),
        )
    }

    /// Membership of `pt` in the t-dilate: inside the dilated closed hull
    /// (facet inequalities) and on none of the dilated removed faces
    /// (convex-hull membership per face).
    pub fn contains(&self, pt: &Point3, t: u64) -> bool {
        for facet in &self.facets {
            if dot_point(&facet.normal, pt) > rat_int(facet.offset) * rat_int(t as i64) {
                return false;
            }
        }
        for face in &self.removed_faces {
            let points: Vec<&Point3> = face.iter().map(|&ix| &self.vertices[ix]).collect();
            if in_dilated_conv(&points, pt, t) {
                return false;
            }
        }
        true
    }

    /// Number of lattice points of the t-dilate.
    ///
    /// Row-interval enumeration over the exact bounding box of the dilated
    /// vertex set: for each integer (y, z) the facet inequalities cut out an
    /// integer x-interval, with removed facets tightened to strict. This is
    /// the point set `contains` describes, evaluated without rational
    /// arithmetic in the inner loop.
    pub fn count_lattice(&self, t: u64) -> u64 {
        let t_i = i64::try_from(t).expect("dilation fits in i64");
        let (zmin, zmax) = self.coord_bounds(2, t);
        let (ymin, ymax) = self.coord_bounds(1, t);
        let (xmin, xmax) = self.coord_bounds(0, t);

        // The row arithmetic below runs in i64; make sure it cannot wrap.
        let extent = [xmin, xmax, ymin, ymax, zmin, zmax]
            .into_iter()
            .map(|v| v.unsigned_abs())
            .max()
            .unwrap() as i128;
        let worst = self
            .facets
            .iter()
            .map(|f| {
                f.normal.iter().map(|n| n.unsigned_abs() as i128).sum::<i128>() * extent
                    + (f.offset.unsigned_abs() as i128) * (t as i128)
            })
            .max()
            .unwrap_or(0);
        assert!(worst < i64::MAX as i128, "dilation too large for exact row counting");

        // Facets split by which coordinates the normal touches.
        let mut x_facets = Vec::new(); // normal.x != 0
        let mut y_facets = Vec::new(); // normal.x == 0, normal.y != 0
        let mut z_facets = Vec::new(); // normal = (0, 0, *)
        for f in &self.facets {
            let bound = f.offset * t_i - i64::from(f.strict);
            match (f.normal[0], f.normal[1]) {
                (0, 0) => z_facets.push((f.normal[2], bound)),
                (0, _) => y_facets.push((f.normal[1], f.normal[2], bound)),
                _ => x_facets.push((f.normal[0], f.normal[1], f.normal[2], bound)),
            }
        }

        let mut count = 0u64;
        'z: for z in zmin..=zmax {
            for &(nz, bound) in &z_facets {
                if nz * z > bound {
                    continue 'z;
                }
            }
            let mut ylo = ymin;
            let mut yhi = ymax;
            for &(ny, nz, bound) in &y_facets {
                let rhs = bound - nz * z;
                if ny > 0 {
                    yhi = yhi.min(Integer::div_floor(&rhs, &ny));
                } else {
                    ylo = ylo.max(Integer::div_ceil(&rhs, &ny));
                }
            }
            for y in ylo..=yhi {
                let mut xlo = xmin;
                let mut xhi = xmax;
                for &(nx, ny, nz, bound) in &x_facets {
                    let rhs = bound - ny * y - nz * z;
                    if nx > 0 {
                        xhi = xhi.min(Integer::div_floor(&rhs, &nx));
                    } else {
                        xlo = xlo.max(Integer::div_ceil(&rhs, &nx));
                    }
                }
                if xhi >= xlo {
                    count += (xhi - xlo + 1) as u64;
                }
            }
        }
        count
    }

    /// Integer bounds of one coordinate over the dilated vertex set.
    fn coord_bounds(&self, coord: usize, t: u64) -> (i64, i64) {
        let t = rat_int(t as i64);
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for v in &self.vertices {
            let c = v.coords()[coord] * &t;
            if lo.as_ref().is_none_or(|l| &c < l) {
                lo = Some(c.clone());
            }
            if hi.as_ref().is_none_or(|h| &c > h) {
                hi = Some(c);
            }
        }
        (
            rational_ceil(&lo.expect("nonempty vertex set")),
            rational_floor(&hi.expect("nonempty vertex set")),
        )
    }

    /// Ehrhart quasi-polynomial of the half-open body: degree 3, period the
    /// least common multiple of the vertex coordinate denominators. The
    /// leading coefficient of every row must come out as the volume.
    pub fn ehrhart(&self) -> Result<QuasiPolynomial, ExactError> {
        let period = self.denominator_lcm();
        let q = QuasiPolynomial::interpolate(period, 3, |t| {
            Rational::from_integer(self.count_lattice(t).into())
        })?;
        let vol = self.volume();
        for row in q.rows() {
            assert_eq!(
                row[3], vol,
                "Ehrhart leading coefficient must equal the volume"
            );
        }
        Ok(q)
    }

    /// Smallest positive integer dilation with integral vertices.
    pub fn denominator_lcm(&self) -> usize {
        let mut l = num_bigint::BigInt::from(1);
        for v in &self.vertices {
            for c in v.coords() {
                l = l.lcm(c.denom());
            }
        }
        l.to_usize().expect("vertex denominators fit in usize")
    }

    /// Exact volume of the closed hull (removed faces have measure zero),
    /// by fanning tetrahedra from the first vertex over the facets that do
    /// not contain it.
    pub fn volume(&self) -> Rational {
        let apex = &self.vertices[0];
        let mut total = Rational::zero();
        for facet in &self.facets {
            if dot_point(&facet.normal, apex) == rat_int(facet.offset) {
                continue;
            }
            let ring = self.facet_polygon(facet);
            for i in 1..ring.len() - 1 {
                let d = det3(
                    &sub(ring[0], apex),
                    &sub(ring[i], apex),
                    &sub(ring[i + 1], apex),
                );
                total += d.abs();
            }
        }
        total / rat_int(6)
    }

    /// Vertices of a facet in convex cyclic order.
    fn facet_polygon(&self, facet: &Facet) -> Vec<&Point3> {
        let on: Vec<&Point3> = self
            .vertices
            .iter()
            .filter(|v| dot_point(&facet.normal, v) == rat_int(facet.offset))
            .collect();
        debug_assert!(on.len() >= 3);
        let inv = rat_int(on.len() as i64);
        let centroid = Point3::new(
            on.iter().map(|p| &p.x).sum::<Rational>() / &inv,
            on.iter().map(|p| &p.y).sum::<Rational>() / &inv,
            on.iter().map(|p| &p.z).sum::<Rational>() / &inv,
        );
        let normal = [
            rat_int(facet.normal[0]),
            rat_int(facet.normal[1]),
            rat_int(facet.normal[2]),
        ];
        let r = sub(on[0], &centroid);
        let s = cross(&normal, &r);
        // In-plane coordinates (u.r, u.s); the axes are orthogonal up to
        // positive scale, which preserves the cyclic order of rays.
        let mut keyed: Vec<(Rational, Rational, &Point3)> = on
            .iter()
            .map(|p| {
                let u = sub(p, &centroid);
                (dot(&u, &r), dot(&u, &s), *p)
            })
            .collect();
        keyed.sort_by(|a, b| angular_order(&a.0, &a.1, &b.0, &b.1));
        keyed.into_iter().map(|(_, _, p)| p).collect()
    }

    /// JSON form: vertices as coordinate triples of rational strings plus
    /// the removed-face index lists.
    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self
                .vertices
                .iter()
                .map(|v| vec![v.x.to_string(), v.y.to_string(), v.z.to_string()])
                .collect::<Vec<_>>(),
            "removed_faces": self.removed_faces,
        })
    }
}

fn rational_floor(r: &Rational) -> i64 {
    r.floor().to_integer().to_i64().expect("bound fits in i64")
}

fn rational_ceil(r: &Rational) -> i64 {
    r.ceil().to_integer().to_i64().expect("bound fits in i64")
}

fn det3(a: &[Rational; 3], b: &[Rational; 3], c: &[Rational; 3]) -> Rational {
    dot(a, &cross(b, c))
}

/// Angular comparator for rays (x, y) around the origin, starting at the
/// positive x-axis and sweeping counterclockwise.
fn angular_order(
    x1: &Rational,
    y1: &Rational,
    x2: &Rational,
    y2: &Rational,
) -> std::cmp::Ordering {
    let zero = Rational::zero();
    let half = |x: &Rational, y: &Rational| -> u8 {
        if y > &zero || (y == &zero && x > &zero) {
            0
        } else {
            1
        }
    };
    let h1 = half(x1, y1);
    let h2 = half(x2, y2);
    if h1 != h2 {
        return h1.cmp(&h2);
    }
    let cr = x2 * y1 - x1 * y2;
    cr.cmp(&zero)
}

/// All facet inequalities of the hull, by exhaustive 3-subset plane
/// enumeration with same-side tests. The bodies here have at most five
/// vertices, so the cubic enumeration costs nothing.
fn hull_facets(vertices: &[Point3]) -> Result<Vec<Facet>, PolytopeError> {
    let n = vertices.len();
    if n < 4 {
        return Err(PolytopeError::DegenerateHull);
    }
    let mut set = BTreeSet::new();
    let mut found_nondegenerate = false;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let normal = cross(
                    &sub(&vertices[j], &vertices[i]),
                    &sub(&vertices[k], &vertices[i]),
                );
                if normal.iter().all(Zero::is_zero) {
                    continue;
                }
                let base = [
                    vertices[i].x.clone(),
                    vertices[i].y.clone(),
                    vertices[i].z.clone(),
                ];
                let offset = dot(&normal, &base);
                let mut has_below = false;
                let mut has_above = false;
                for v in vertices {
                    let side =
                        dot(&normal, &[v.x.clone(), v.y.clone(), v.z.clone()]) - &offset;
                    if side > Rational::zero() {
                        has_above = true;
                    } else if side < Rational::zero() {
                        has_below = true;
                    }
                }
                if has_below || has_above {
                    found_nondegenerate = true;
                }
                match (has_below, has_above) {
                    (_, false) => {
                        set.insert(canonical_facet(&normal, &offset));
                    }
                    (false, true) => {
                        let neg = [-&normal[0], -&normal[1], -&normal[2]];
                        set.insert(canonical_facet(&neg, &(-&offset)));
                    }
                    (true, true) => {}
                }
            }
        }
    }
    if !found_nondegenerate || set.len() < 4 {
        return Err(PolytopeError::DegenerateHull);
    }
    Ok(set.into_iter().collect())
}

/// Scale a rational inequality `normal . x <= offset` to primitive integers.
fn canonical_facet(normal: &[Rational; 3], offset: &Rational) -> Facet {
    let mut l = num_bigint::BigInt::from(1);
    for c in normal.iter().chain([offset]) {
        l = l.lcm(c.denom());
    }
    let ints: Vec<num_bigint::BigInt> = normal
        .iter()
        .chain([offset])
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let mut g = num_bigint::BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    let as_i64 =
        |v: &num_bigint::BigInt| -> i64 { (v / &g).to_i64().expect("facet data fits in i64") };
    Facet {
        normal: [as_i64(&ints[0]), as_i64(&ints[1]), as_i64(&ints[2])],
        offset: as_i64(&ints[3]),
        strict: false,
    }
}

/// Membership of `pt` in `t * Conv(points)`: existence of a non-negative
/// combination of the points with coefficient sum `t` hitting `pt`. By
/// Caratheodory it suffices to scan affinely independent subsets of size at
/// most four.
fn in_dilated_conv(points: &[&Point3], pt: &Point3, t: u64) -> bool {
    let n = points.len();
    for mask in 1u32..(1 << n) {
        let subset: Vec<&Point3> = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| points[i])
            .collect();
        if subset.len() > 4 {
            continue;
        }
        let dirs: linalg::Matrix = subset[1..]
            .iter()
            .map(|p| sub(p, subset[0]).to_vec())
            .collect();
        if !dirs.is_empty() && linalg::rank(dirs) != subset.len() - 1 {
            continue;
        }
        // Rows: three coordinates plus the coefficient-sum constraint.
        let mut system: linalg::Matrix = Vec::with_capacity(4);
        for c in 0..3 {
            system.push(subset.iter().map(|p| p.coords()[c].clone()).collect());
        }
        system.push(vec![Rational::from_integer(1.into()); subset.len()]);
        let rhs = [pt.x.clone(), pt.y.clone(), pt.z.clone(), rat_int(t as i64)];
        if let Some(sol) = linalg::solve(&system, &rhs) {
            if sol.iter().all(|l| l >= &Rational::zero()) {
                return true;
            }
        }
    }
    false
}

/// Unimodular mirror `(a, b, z) -> (-a, (n+1)a + b, z)`.
pub fn tau_apply(n: u32, pt: &Point3) -> Point3 {
    Point3::new(-&pt.x, rat_int(n as i64 + 1) * &pt.x + &pt.y, pt.z.clone())
}

/// The half-open pieces of the section-defect region for an `A_n`
/// singularity: a central piece straddling the mirror axis plus n wedges.
pub struct AnDecomposition {
    pub c_piece: HalfOpenPolytope,
    /// Wedges in order; `p_pieces[i-1]` is the piece attached to slope i.
    pub p_pieces: Vec<HalfOpenPolytope>,
}

fn p_vertex(i: u32) -> Point3 {
    let i = i as i64;
    Point3::new(crate::exact::rat(-1, i + 1), rat_int(0), rat_int(0))
}

fn q_vertex(i: u32) -> Point3 {
    let i = i as i64;
    Point3::new(
        crate::exact::rat(-2, (i + 1) * (i + 2)),
        crate::exact::rat(-i, i + 2),
        crate::exact::rat(i, i + 2),
    )
}

fn z_vertex() -> Point3 {
    Point3::from_ints(0, -1, 0)
}

/// Construct the pieces for `n >= 1`, with vertices
///
/// `P_i = (-1/(i+1), 0, 0)`,
/// `Q_i = (-2/((i+1)(i+2)), -i/(i+2), i/(i+2))`,
/// `Z = (0, -1, 0)`, and the mirrored `P'_n = tau(P_n)`, `Q'_n = tau(Q_n)`.
///
/// Wedge i is `Conv{P_(i-1), Q_(i-1), P_i, Q_i, Z}` minus the faces
/// `Conv{P_i, Q_i, Z}` and `Conv{P_(i-1), P_i, Z}`; the central piece is
/// `Conv{P_n, P'_n, Q_n, Q'_n, Z}` minus `Conv{P_n, P'_n, Z}`.
pub fn an_pieces(n: u32) -> AnDecomposition {
    assert!(n >= 1, "singularity index must be positive");
    let mut p_pieces = Vec::with_capacity(n as usize);
    for i in 1..=n {
        // Q_0 coincides with P_0; deduplicate before hull construction.
        let mut verts = vec![p_vertex(i - 1), q_vertex(i - 1), p_vertex(i), q_vertex(i)];
        verts.dedup();
        verts.push(z_vertex());
        let find = |target: &Point3, verts: &[Point3]| -> usize {
            verts
                .iter()
                .position(|v| v == target)
                .expect("vertex present")
        };
        let fp_i = find(&p_vertex(i), &verts);
        let fq_i = find(&q_vertex(i), &verts);
        let fp_prev = find(&p_vertex(i - 1), &verts);
        let fz = find(&z_vertex(), &verts);
        let removed = vec![vec![fp_i, fq_i, fz], vec![fp_prev, fp_i, fz]];
        p_pieces
            .push(HalfOpenPolytope::new(verts, removed).expect("wedge piece is well formed"));
    }

    let pn = p_vertex(n);
    let qn = q_vertex(n);
    let pn_mirror = tau_apply(n, &pn);
    let qn_mirror = tau_apply(n, &qn);
    let verts = vec![pn, pn_mirror, qn, qn_mirror, z_vertex()];
    let removed = vec![vec![0, 1, 4]];
    let c_piece = HalfOpenPolytope::new(verts, removed).expect("central piece is well formed");

    AnDecomposition { c_piece, p_pieces }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn unit_cube_counting() {
        let verts = vec![
            Point3::from_ints(0, 0, 0),
            Point3::from_ints(1, 0, 0),
            Point3::from_ints(0, 1, 0),
            Point3::from_ints(1, 1, 0),
            Point3::from_ints(0, 0, 1),
            Point3::from_ints(1, 0, 1),
            Point3::from_ints(0, 1, 1),
            Point3::from_ints(1, 1, 1),
        ];
        let cube = HalfOpenPolytope::new(verts.clone(), vec![]).unwrap();
        assert_eq!(cube.count_lattice(1), 8);
        assert_eq!(cube.count_lattice(2), 27);
        assert_eq!(cube.volume(), rat_int(1));

        // Remove the bottom facet: one layer of lattice points disappears.
        let half = HalfOpenPolytope::new(verts, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(half.count_lattice(1), 4);
        assert_eq!(half.count_lattice(2), 18);
        assert!(!half.contains(&Point3::from_ints(1, 1, 0), 2));
        assert!(half.contains(&Point3::from_ints(1, 1, 1), 2));
    }

    #[test]
    fn removed_face_must_be_a_face() {
        let verts = vec![
            Point3::from_ints(0, 0, 0),
            Point3::from_ints(1, 0, 0),
            Point3::from_ints(0, 1, 0),
            Point3::from_ints(0, 0, 1),
        ];
        // An edge is not a facet: the third vertex of the bottom face lies
        // on the same plane but outside the claimed face.
        let err = HalfOpenPolytope::new(verts.clone(), vec![vec![0, 1]]).unwrap_err();
        assert_eq!(err, PolytopeError::InvalidRemovedFace { face: 0 });
        assert!(HalfOpenPolytope::new(verts, vec![vec![0, 1, 2]]).is_ok());
    }

    #[test]
    fn degenerate_hull_rejected() {
        let verts = vec![
            Point3::from_ints(0, 0, 0),
            Point3::from_ints(1, 0, 0),
            Point3::from_ints(0, 1, 0),
            Point3::from_ints(1, 1, 0),
        ];
        assert_eq!(
            HalfOpenPolytope::new(verts, vec![]).unwrap_err(),
            PolytopeError::DegenerateHull
        );
    }

    #[test]
    fn an_piece_shapes() {
        let d = an_pieces(1);
        // Q_0 = P_0, so the first wedge has four distinct vertices.
        assert_eq!(d.p_pieces[0].vertices().len(), 4);
        assert_eq!(d.c_piece.vertices().len(), 5);
        assert!(d
            .c_piece
            .vertices()
            .contains(&Point3::new(rat(1, 2), rat_int(-1), rat_int(0))));
        assert!(d
            .c_piece
            .vertices()
            .contains(&Point3::new(rat(1, 3), rat_int(-1), rat(1, 3))));
        // Every removed face really is a face: construction would have
        // errored otherwise. Spot-check piece counts.
        for n in 1..=4 {
            assert_eq!(an_pieces(n).p_pieces.len(), n as usize);
        }
    }

    #[test]
    fn wedge_one_first_lattice_point() {
        let d = an_pieces(1);
        let p1 = &d.p_pieces[0];
        for t in 1..=3 {
            assert_eq!(p1.count_lattice(t), 0, "dilate {t}");
        }
        assert_eq!(p1.count_lattice(4), 1);
        assert!(p1.contains(&Point3::from_ints(-2, -1, 1), 4));
        // The z = 0 facet is removed entirely: no point with z = 0 belongs.
        assert!(!p1.contains(&Point3::from_ints(-1, 0, 0), 4));
        assert!(!p1.contains(&Point3::from_ints(-2, 0, 0), 4));
    }

    #[test]
    fn central_piece_examples() {
        // Series of the known n = 2 generating function: counts at dilations
        // 1..4 are 0, 0, 1, 4.
        let d = an_pieces(2);
        assert_eq!(d.c_piece.count_lattice(1), 0);
        assert_eq!(d.c_piece.count_lattice(2), 0);
        assert_eq!(d.c_piece.count_lattice(3), 1);
        assert_eq!(d.c_piece.count_lattice(4), 4);
        // Z itself always lies on the removed bottom facet.
        for n in 1..4 {
            let d = an_pieces(n);
            for t in 1..6u64 {
                assert!(!d
                    .c_piece
                    .contains(&Point3::from_ints(0, -(t as i64), 0), t));
            }
        }
    }

    #[test]
    fn volumes_match_closed_forms() {
        // vol P_n = (n^2 + 3n - 2) / (6n(n+1)^2(n+2)),
        // vol C_n = n(n+4) / (6(n+1)(n+2)^2).
        for n in 1..=6u32 {
            let d = an_pieces(n);
            let ni = n as i64;
            let pn = &d.p_pieces[n as usize - 1];
            assert_eq!(
                pn.volume(),
                rat(ni * ni + 3 * ni - 2, 6 * ni * (ni + 1) * (ni + 1) * (ni + 2)),
                "wedge volume at n = {n}"
            );
            assert_eq!(
                d.c_piece.volume(),
                rat(ni * (ni + 4), 6 * (ni + 1) * (ni + 2) * (ni + 2)),
                "central volume at n = {n}"
            );
        }
        let d1 = an_pieces(1);
        assert_eq!(d1.p_pieces[0].volume(), rat(1, 36));
        assert_eq!(d1.c_piece.volume(), rat(5, 108));
    }

    #[test]
    fn tau_is_an_involution_and_maps_vertices() {
        for n in 1..5u32 {
            let pn = p_vertex(n);
            let qn = q_vertex(n);
            let ni = n as i64;
            assert_eq!(
                tau_apply(n, &pn),
                Point3::new(rat(1, ni + 1), rat_int(-1), rat_int(0))
            );
            assert_eq!(
                tau_apply(n, &qn),
                Point3::new(rat(2, (ni + 1) * (ni + 2)), rat_int(-1), rat(ni, ni + 2))
            );
            assert_eq!(tau_apply(n, &z_vertex()), z_vertex());
            for (a, b, z) in [(3i64, -7i64, 2i64), (-4, 1, 0), (0, 5, -3)] {
                let pt = Point3::from_ints(a, b, z);
                assert_eq!(tau_apply(n, &tau_apply(n, &pt)), pt);
            }
        }
    }

    #[test]
    fn ehrhart_of_simplex() {
        // Standard simplex: L(t) = C(t+3, 3).
        let simplex = HalfOpenPolytope::new(
            vec![
                Point3::from_ints(0, 0, 0),
                Point3::from_ints(1, 0, 0),
                Point3::from_ints(0, 1, 0),
                Point3::from_ints(0, 0, 1),
            ],
            vec![],
        )
        .unwrap();
        let q = simplex.ehrhart().unwrap();
        assert_eq!(q.period(), 1);
        assert_eq!(q.eval(5), rat_int(56));
    }

    #[test]
    fn piece_periods() {
        let d = an_pieces(5);
        assert_eq!(d.p_pieces[0].denominator_lcm(), 6);
        assert_eq!(d.p_pieces[4].denominator_lcm(), 210);
        assert_eq!(d.c_piece.denominator_lcm(), 42);
    }

    #[test]
    fn json_shape() {
        let d = an_pieces(1);
        let v = d.c_piece.to_json();
        assert_eq!(v["vertices"][0][0], "-1/2");
        assert!(v["removed_faces"].is_array());
    }
}
