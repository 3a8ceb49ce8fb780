//! Reference triangles, homogeneous barycentric coordinates, and the cevian
//! and anticevian constructions.

use std::fmt;

use bitflags::bitflags;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{GeometryError, Result};
use crate::projective::{join, meet, midpoint, squared_distance, HLine, HPoint};
use crate::scalar::{canonical_triple, inverse3, mat_vec3, to_scalars, Scalar};

/// Homogeneous barycentric coordinates `(u : v : w)` relative to some
/// triangle, in the same canonical integer form as [`HPoint`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bary {
    c: [BigInt; 3],
}

impl Bary {
    pub fn new(u: Scalar, v: Scalar, w: Scalar) -> Result<Self> {
        Self::from_coords(&[u, v, w])
    }

    pub fn from_coords(v: &[Scalar; 3]) -> Result<Self> {
        canonical_triple(v)
            .map(|c| Self { c })
            .ok_or(GeometryError::ZeroTriple)
    }

    pub fn from_ints(u: i64, v: i64, w: i64) -> Self {
        Self::from_coords(&[
            Scalar::from_integer(u.into()),
            Scalar::from_integer(v.into()),
            Scalar::from_integer(w.into()),
        ])
        .expect("nonzero triple")
    }

    pub fn centroid() -> Self {
        Self::from_ints(1, 1, 1)
    }

    pub fn ints(&self) -> &[BigInt; 3] {
        &self.c
    }

    pub fn coords(&self) -> [Scalar; 3] {
        to_scalars(&self.c)
    }

    pub fn is_ordinary(&self) -> bool {
        !(&self.c[0] + &self.c[1] + &self.c[2]).is_zero()
    }

    pub fn on_sideline(&self) -> bool {
        self.c.iter().any(Zero::is_zero)
    }

    pub fn is_vertex(&self) -> bool {
        self.c.iter().filter(|x| x.is_zero()).count() == 2
    }
}

impl fmt::Debug for Bary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.c[0], self.c[1], self.c[2])
    }
}

impl fmt::Display for Bary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An ordinary, non-degenerate triangle `ABC` with its squared side lengths
/// `a2 = |BC|^2`, `b2 = |CA|^2`, `c2 = |AB|^2`.
#[derive(Clone, PartialEq, Eq)]
pub struct Triangle {
    vertices: [HPoint; 3],
    sq_sides: [Scalar; 3],
    /// Columns are the vertices with `z = 1`; maps barycentrics to points.
    frame: [[Scalar; 3]; 3],
    frame_inv: [[Scalar; 3]; 3],
}

impl fmt::Debug for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Triangle").field(&self.vertices).finish()
    }
}

impl Triangle {
    pub fn new(a: HPoint, b: HPoint, c: HPoint) -> Result<Self> {
        let cart = [
            a.require_ordinary()?,
            b.require_ordinary()?,
            c.require_ordinary()?,
        ];
        let one = Scalar::from_integer(1.into());
        let frame: [[Scalar; 3]; 3] = [
            [cart[0].0.clone(), cart[1].0.clone(), cart[2].0.clone()],
            [cart[0].1.clone(), cart[1].1.clone(), cart[2].1.clone()],
            [one.clone(), one.clone(), one],
        ];
        let frame_inv = inverse3(&frame).ok_or(GeometryError::DegenerateTriangle)?;
        let sq_sides = [
            squared_distance(&b, &c)?,
            squared_distance(&c, &a)?,
            squared_distance(&a, &b)?,
        ];
        Ok(Self {
            vertices: [a, b, c],
            sq_sides,
            frame,
            frame_inv,
        })
    }

    pub fn from_cartesian(pts: [(Scalar, Scalar); 3]) -> Result<Self> {
        let [a, b, c] = pts.map(|(x, y)| HPoint::ordinary(x, y));
        Self::new(a, b, c)
    }

    pub fn from_int_vertices(pts: [(i64, i64); 3]) -> Result<Self> {
        let [a, b, c] = pts.map(|(x, y)| HPoint::from_ints(x, y, 1));
        Self::new(a, b, c)
    }

    pub fn a(&self) -> &HPoint {
        &self.vertices[0]
    }

    pub fn b(&self) -> &HPoint {
        &self.vertices[1]
    }

    pub fn c(&self) -> &HPoint {
        &self.vertices[2]
    }

    pub fn vertices(&self) -> &[HPoint; 3] {
        &self.vertices
    }

    /// `[a2, b2, c2]`.
    pub fn squared_sides(&self) -> &[Scalar; 3] {
        &self.sq_sides
    }

    /// The side line opposite vertex `i` (`0 -> BC`, `1 -> CA`, `2 -> AB`).
    pub fn side_line(&self, i: usize) -> HLine {
        let v = &self.vertices;
        join(&v[(i + 1) % 3], &v[(i + 2) % 3]).expect("triangle vertices are distinct")
    }

    pub fn centroid(&self) -> HPoint {
        self.bary_to_point(&Bary::centroid())
    }

    pub fn bary_to_point(&self, b: &Bary) -> HPoint {
        HPoint::from_coords(&mat_vec3(&self.frame, &b.coords())).expect("frame is invertible")
    }

    pub fn point_to_bary(&self, p: &HPoint) -> Bary {
        Bary::from_coords(&mat_vec3(&self.frame_inv, &p.coords())).expect("frame is invertible")
    }

    /// Converts a line in barycentric coefficients to Cartesian coefficients.
    pub fn bary_line_to_line(&self, coeffs: &[Scalar; 3]) -> Result<HLine> {
        // l_bary . (F^-1 p) = (F^-T l_bary) . p
        let lt: [Scalar; 3] =
            std::array::from_fn(|j| (0..3).map(|i| &self.frame_inv[i][j] * &coeffs[i]).sum());
        HLine::from_coords(&lt)
    }

    pub(crate) fn frame_inv(&self) -> &[[Scalar; 3]; 3] {
        &self.frame_inv
    }

    pub fn classify_point(&self, p: &HPoint) -> DegeneracyClass {
        classify_bary(&self.point_to_bary(p))
    }

    /// Same triangle with vertices relabeled by `perm` (new vertex `i` is old `perm[i]`).
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let [a, b, c] = perm.map(|i| self.vertices[i].clone());
        Self::new(a, b, c).expect("permutation keeps the triangle proper")
    }
}

bitflags! {
    /// Degeneracy loci a point can lie on, relative to a reference triangle.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
    pub struct DegeneracyClass: u16 {
        const ON_SIDELINE = 1 << 0;
        const ON_ANTICOMPLEMENTARY_SIDE = 1 << 1;
        const ON_MEDIAN = 1 << 2;
        const ON_STEINER = 1 << 3;
        const AT_INFINITY = 1 << 4;
        const IS_VERTEX = 1 << 5;
        const IS_CENTROID = 1 << 6;
    }
}

impl DegeneracyClass {
    /// Flags that violate the standing hypothesis of the configuration builder.
    pub const FORBIDDEN: Self = Self::ON_SIDELINE
        .union(Self::ON_ANTICOMPLEMENTARY_SIDE)
        .union(Self::IS_VERTEX);
}

impl fmt::Display for DegeneracyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let names: Vec<&str> = self.iter_names().map(|(name, _)| name).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

pub fn classify_bary(b: &Bary) -> DegeneracyClass {
    let [u, v, w] = b.ints();
    let mut flags = DegeneracyClass::empty();
    if b.on_sideline() {
        flags |= DegeneracyClass::ON_SIDELINE;
    }
    if b.is_vertex() {
        flags |= DegeneracyClass::IS_VERTEX;
    }
    if (u + v).is_zero() || (v + w).is_zero() || (w + u).is_zero() {
        flags |= DegeneracyClass::ON_ANTICOMPLEMENTARY_SIDE;
    }
    if u == v || v == w || w == u {
        flags |= DegeneracyClass::ON_MEDIAN;
    }
    if (u * v + v * w + w * u).is_zero() {
        flags |= DegeneracyClass::ON_STEINER;
    }
    if !b.is_ordinary() {
        flags |= DegeneracyClass::AT_INFINITY;
    }
    if u == v && v == w {
        flags |= DegeneracyClass::IS_CENTROID;
    }
    flags
}

/// Traces `D = AP·BC`, `E = BP·CA`, `F = CP·AB` of `p`.
pub fn cevian_triangle(t: &Triangle, p: &HPoint) -> Result<[HPoint; 3]> {
    if t.point_to_bary(p).on_sideline() {
        return Err(GeometryError::PointOnSideline);
    }
    let v = t.vertices();
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        out.push(meet(&join(&v[i], p)?, &t.side_line(i))?);
    }
    Ok(out.try_into().expect("three traces"))
}

/// The triangle for which `ABC` is the cevian triangle of `q`:
/// `(-x:y:z), (x:-y:z), (x:y:-z)` in barycentrics.
pub fn anticevian_triangle(t: &Triangle, q: &HPoint) -> Result<[HPoint; 3]> {
    let b = t.point_to_bary(q);
    if b.on_sideline() {
        return Err(GeometryError::DegeneratePerspector);
    }
    let [x, y, z] = b.coords();
    let verts = [
        [-x.clone(), y.clone(), z.clone()],
        [x.clone(), -y.clone(), z.clone()],
        [x, y, -z],
    ];
    let mut out = Vec::with_capacity(3);
    for v in verts {
        let vb = Bary::from_coords(&v)?;
        if !vb.is_ordinary() {
            return Err(GeometryError::DegeneratePerspector);
        }
        out.push(t.bary_to_point(&vb));
    }
    Ok(out.try_into().expect("three vertices"))
}

/// `(medial, anticomplementary)` triangles of `t`.
pub fn medial_and_anticomplementary(t: &Triangle) -> (Triangle, Triangle) {
    let [a, b, c] = t.vertices();
    let medial = Triangle::new(
        midpoint(b, c).expect("ordinary"),
        midpoint(c, a).expect("ordinary"),
        midpoint(a, b).expect("ordinary"),
    )
    .expect("medial triangle is proper");
    let [pa, pb, pc] = [(-1, 1, 1), (1, -1, 1), (1, 1, -1)]
        .map(|(u, v, w)| t.bary_to_point(&Bary::from_ints(u, v, w)));
    let anti = Triangle::new(pa, pb, pc).expect("anticomplementary triangle is proper");
    (medial, anti)
}

/// Line through the intersections of corresponding sides of `t` and the
/// cevian triangle of `p`.
pub fn trilinear_polar(t: &Triangle, p: &HPoint) -> Result<HLine> {
    let [d, e, f] = cevian_triangle(t, p)?;
    let x = meet(&t.side_line(0), &join(&e, &f)?)?;
    let y = meet(&t.side_line(1), &join(&f, &d)?)?;
    join(&x, &y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{collinear, signed_ratio};
    use crate::scalar::{int, ratio};

    fn t0() -> Triangle {
        Triangle::from_int_vertices([(0, 0), (1, 0), (0, 1)]).unwrap()
    }

    #[test]
    fn bary_point_conversion() {
        let t = t0();
        assert_eq!(
            t.bary_to_point(&Bary::centroid()),
            HPoint::ordinary(ratio(1, 3), ratio(1, 3))
        );
        assert_eq!(t.bary_to_point(&Bary::from_ints(1, 0, 0)), *t.a());
        // (0:1:-1) is the direction C - B = (-1, 1)
        let inf = t.bary_to_point(&Bary::from_ints(0, 1, -1));
        assert_eq!(inf, HPoint::from_ints(-1, 1, 0));
        for b in [
            Bary::from_ints(1, 2, 3),
            Bary::from_ints(-4, 1, 7),
            Bary::from_ints(0, 1, -1),
        ] {
            assert_eq!(t.point_to_bary(&t.bary_to_point(&b)), b);
        }
    }

    #[test]
    fn squared_sides_of_reference() {
        assert_eq!(t0().squared_sides(), &[int(2), int(1), int(1)]);
        assert!(matches!(
            Triangle::from_int_vertices([(0, 0), (1, 1), (2, 2)]),
            Err(GeometryError::DegenerateTriangle)
        ));
    }

    #[test]
    fn cevian_examples() {
        let t = t0();
        let g = t.centroid();
        let (medial, _) = medial_and_anticomplementary(&t);
        assert_eq!(&cevian_triangle(&t, &g).unwrap(), medial.vertices());
        let p = t.bary_to_point(&Bary::from_ints(1, 2, 3));
        let [d, _, _] = cevian_triangle(&t, &p).unwrap();
        assert_eq!(d, HPoint::ordinary(ratio(2, 5), ratio(3, 5)));
        let on_ab = HPoint::ordinary(ratio(1, 2), int(0));
        assert_eq!(
            cevian_triangle(&t, &on_ab),
            Err(GeometryError::PointOnSideline)
        );
        assert_eq!(
            cevian_triangle(&t, t.b()),
            Err(GeometryError::PointOnSideline)
        );
    }

    #[test]
    fn cevian_of_infinite_point() {
        let t = t0();
        let p = t.bary_to_point(&Bary::from_ints(1, 2, -3));
        let traces = cevian_triangle(&t, &p).unwrap();
        assert!(traces.iter().all(|x| !x.is_infinite()));
    }

    #[test]
    fn ceva_relation_holds() {
        let t = Triangle::from_int_vertices([(-3, 1), (7, -2), (2, 6)]).unwrap();
        let [a, b, c] = t.vertices().clone();
        for bary in [
            Bary::from_ints(1, 2, 3),
            Bary::from_ints(-2, 5, 4),
            Bary::from_ints(3, -1, 7),
        ] {
            let [d, e, f] = cevian_triangle(&t, &t.bary_to_point(&bary)).unwrap();
            let prod = signed_ratio(&b, &c, &d).unwrap()
                * signed_ratio(&c, &a, &e).unwrap()
                * signed_ratio(&a, &b, &f).unwrap();
            assert_eq!(prod, int(1));
        }
    }

    #[test]
    fn anticevian_examples() {
        let t = t0();
        let (_, anti) = medial_and_anticomplementary(&t);
        assert_eq!(
            &anticevian_triangle(&t, &t.centroid()).unwrap(),
            anti.vertices()
        );

        let q = t.bary_to_point(&Bary::from_ints(5, 8, 9));
        let [pa, pb, pc] = anticevian_triangle(&t, &q).unwrap();
        let outer = Triangle::new(pa, pb, pc).unwrap();
        let traces = cevian_triangle(&outer, &q).unwrap();
        assert_eq!(&traces, t.vertices());
        assert_eq!(
            anticevian_triangle(&t, t.a()),
            Err(GeometryError::DegeneratePerspector)
        );
    }

    #[test]
    fn medial_and_anticomplementary_scale() {
        let t = t0();
        let (medial, anti) = medial_and_anticomplementary(&t);
        assert_eq!(
            medial.vertices(),
            &[
                HPoint::ordinary(ratio(1, 2), ratio(1, 2)),
                HPoint::ordinary(int(0), ratio(1, 2)),
                HPoint::ordinary(ratio(1, 2), int(0)),
            ]
        );
        for i in 0..3 {
            assert_eq!(&medial.squared_sides()[i] * int(4), t.squared_sides()[i]);
            assert_eq!(&t.squared_sides()[i] * int(4), anti.squared_sides()[i]);
        }
        let (_, anti_of_medial) = medial_and_anticomplementary(&medial);
        assert_eq!(anti_of_medial.vertices(), t.vertices());
    }

    #[test]
    fn classification_examples() {
        use DegeneracyClass as F;
        assert_eq!(
            classify_bary(&Bary::centroid()),
            F::ON_MEDIAN | F::IS_CENTROID
        );
        assert_eq!(
            classify_bary(&Bary::from_ints(2, 2, -1)),
            F::ON_STEINER | F::ON_MEDIAN
        );
        assert_eq!(classify_bary(&Bary::from_ints(0, 1, 2)), F::ON_SIDELINE);
        assert!(classify_bary(&Bary::from_ints(0, 0, 1)).contains(F::IS_VERTEX));
        assert!(classify_bary(&Bary::from_ints(1, -1, 5)).contains(F::ON_ANTICOMPLEMENTARY_SIDE));
        assert_eq!(classify_bary(&Bary::from_ints(1, 2, -3)), F::AT_INFINITY);
        assert!(classify_bary(&Bary::from_ints(1, 2, 3)).is_empty());
        let t = t0();
        assert!(t.classify_point(&t.centroid()).contains(F::IS_CENTROID));
    }

    #[test]
    fn trilinear_polar_matches_barycentric_equation() {
        let t = Triangle::from_int_vertices([(0, 0), (5, 1), (2, 4)]).unwrap();
        let p = t.bary_to_point(&Bary::from_ints(2, 3, 5));
        let polar = trilinear_polar(&t, &p).unwrap();
        let expected = t
            .bary_line_to_line(&[ratio(1, 2), ratio(1, 3), ratio(1, 5)])
            .unwrap();
        assert_eq!(polar, expected);
        let z = meet(&polar, &t.side_line(2)).unwrap();
        assert!(collinear(&[t.a().clone(), t.b().clone(), z]));
    }
}
