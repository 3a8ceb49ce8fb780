//! Conjugation maps of triangle geometry on barycentric coordinates:
//! isotomic, isogonal, complement and anticomplement, the isotomcomplement,
//! the cyclocevian conjugate and the ceva conjugate.

use crate::conic::circle_through_three;
use crate::error::{GeometryError, Result};
use crate::projective::{common_point, join, HPoint};
use crate::scalar::Scalar;
use crate::triangle::{
    anticevian_triangle, cevian_triangle, medial_and_anticomplementary, Bary, Triangle,
};

/// A reference triangle together with its medial and anticomplementary
/// triangles. Every map here is relative to `reference` unless the name
/// says otherwise.
#[derive(Debug, Clone)]
pub struct ConjugacyContext {
    reference: Triangle,
    medial: Triangle,
    anticomplementary: Triangle,
}

impl ConjugacyContext {
    pub fn new(reference: Triangle) -> Self {
        let (medial, anticomplementary) = medial_and_anticomplementary(&reference);
        Self {
            reference,
            medial,
            anticomplementary,
        }
    }

    pub fn reference(&self) -> &Triangle {
        &self.reference
    }

    pub fn medial(&self) -> &Triangle {
        &self.medial
    }

    pub fn anticomplementary(&self) -> &Triangle {
        &self.anticomplementary
    }

    pub fn point(&self, b: &Bary) -> HPoint {
        self.reference.bary_to_point(b)
    }

    pub fn bary(&self, p: &HPoint) -> Bary {
        self.reference.point_to_bary(p)
    }

    pub fn isotomic(&self, p: &Bary) -> Result<Bary> {
        isotomic(p)
    }

    pub fn isogonal(&self, p: &Bary) -> Result<Bary> {
        isogonal_in(&self.reference, p)
    }

    pub fn complement(&self, p: &Bary) -> Bary {
        complement(p)
    }

    pub fn anticomplement(&self, p: &Bary) -> Bary {
        anticomplement(p)
    }

    /// `Q = K(ι(p)) = (u(v+w) : v(w+u) : w(u+v))`.
    pub fn isotomcomplement(&self, p: &Bary) -> Result<Bary> {
        if p.is_vertex() {
            return Err(GeometryError::IsVertex);
        }
        Ok(complement(&isotomic(p)?))
    }

    /// Cyclocevian conjugate by construction: the circle through the traces
    /// of `p` meets each side a second time, and the cevians through those
    /// second points concur at the result.
    pub fn cyclocevian(&self, p: &Bary) -> Result<Bary> {
        let t = &self.reference;
        let traces = cevian_triangle(t, &self.point(p))?;
        if traces.iter().any(HPoint::is_infinite) {
            return Err(GeometryError::DegenerateInput(
                "cyclocevian needs ordinary traces",
            ));
        }
        let circle = circle_through_three(&traces[0], &traces[1], &traces[2])
            .map_err(|_| GeometryError::DegenerateCircle)?;
        let v = t.vertices();
        let mut cevians = Vec::with_capacity(3);
        for (i, trace) in traces.iter().enumerate() {
            let second = circle.second_intersection(trace, &t.side_line(i))?;
            cevians.push(join(&v[i], &second).map_err(|_| GeometryError::NonConcurrent)?);
        }
        let x = common_point(&cevians).ok_or(GeometryError::NonConcurrent)?;
        Ok(self.bary(&x))
    }

    /// `ι ∘ K⁻¹ ∘ γ ∘ K ∘ ι`, evaluated stage by stage.
    pub fn formula_two(&self, p: &Bary) -> Result<Bary> {
        let s = isotomic(p).map_err(|_| GeometryError::ChainDegenerate { stage: "isotomic" })?;
        let s = complement(&s);
        let s = self
            .isogonal(&s)
            .map_err(|_| GeometryError::ChainDegenerate { stage: "isogonal" })?;
        let s = anticomplement(&s);
        isotomic(&s).map_err(|_| GeometryError::ChainDegenerate {
            stage: "outer isotomic",
        })
    }

    /// `ι ∘ γ′ ∘ ι` where `γ′` is the isogonal map of the anticomplementary
    /// triangle. The middle step changes reference triangle through
    /// Cartesian coordinates.
    pub fn formula_one(&self, p: &Bary) -> Result<Bary> {
        let anti = &self.anticomplementary;
        let s = isotomic(p).map_err(|_| GeometryError::ChainDegenerate { stage: "isotomic" })?;
        let in_anti = anti.point_to_bary(&self.point(&s));
        let s = isogonal_in(anti, &in_anti).map_err(|_| GeometryError::ChainDegenerate {
            stage: "anticomplementary isogonal",
        })?;
        let back = self.bary(&anti.bary_to_point(&s));
        isotomic(&back).map_err(|_| GeometryError::ChainDegenerate {
            stage: "outer isotomic",
        })
    }

    /// Perspector of the cevian triangle of `p` and the anticevian triangle
    /// of `q`.
    pub fn ceva_conjugate(&self, p: &Bary, q: &Bary) -> Result<Bary> {
        let t = &self.reference;
        let cevian = cevian_triangle(t, &self.point(p))?;
        let anti = anticevian_triangle(t, &self.point(q))?;
        let lines = cevian
            .iter()
            .zip(anti.iter())
            .map(|(d, a)| join(d, a).map_err(|_| GeometryError::NotPerspective))
            .collect::<Result<Vec<_>>>()?;
        let x = common_point(&lines).ok_or(GeometryError::NotPerspective)?;
        Ok(self.bary(&x))
    }
}

/// `(u:v:w) -> (vw : uw : uv)`.
pub fn isotomic(p: &Bary) -> Result<Bary> {
    if p.on_sideline() {
        return Err(GeometryError::PointOnSideline);
    }
    let [u, v, w] = p.coords();
    Bary::new(&v * &w, &u * &w, &u * &v)
}

/// `(u:v:w) -> (a²vw : b²uw : c²uv)` for the triangle `t`.
pub fn isogonal_in(t: &Triangle, p: &Bary) -> Result<Bary> {
    if p.on_sideline() {
        return Err(GeometryError::PointOnSideline);
    }
    let [u, v, w] = p.coords();
    let [a2, b2, c2] = t.squared_sides();
    Bary::new(a2 * &v * &w, b2 * &u * &w, c2 * &u * &v)
}

/// `(u:v:w) -> (v+w : w+u : u+v)`.
pub fn complement(p: &Bary) -> Bary {
    let [u, v, w] = p.coords();
    Bary::new(&v + &w, &w + &u, &u + &v).expect("complement is a bijection")
}

/// `(u:v:w) -> (v+w-u : w+u-v : u+v-w)`.
pub fn anticomplement(p: &Bary) -> Bary {
    let [u, v, w] = p.coords();
    let s: Scalar = &u + &v + &w;
    let two = Scalar::from_integer(2.into());
    Bary::new(&s - &two * u, &s - &two * v, &s - two * w).expect("anticomplement is a bijection")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{meet, midpoint, signed_ratio};
    use crate::scalar::{int, ratio};

    fn t0() -> ConjugacyContext {
        ConjugacyContext::new(Triangle::from_int_vertices([(0, 0), (1, 0), (0, 1)]).unwrap())
    }

    fn b(u: i64, v: i64, w: i64) -> Bary {
        Bary::from_ints(u, v, w)
    }

    #[test]
    fn isotomic_examples() {
        let ctx = t0();
        assert_eq!(ctx.isotomic(&Bary::centroid()).unwrap(), Bary::centroid());
        assert_eq!(ctx.isotomic(&b(1, 2, 3)).unwrap(), b(6, 3, 2));
        assert_eq!(
            ctx.isotomic(&ctx.isotomic(&b(-4, 5, 7)).unwrap()).unwrap(),
            b(-4, 5, 7)
        );
        assert_eq!(
            ctx.isotomic(&b(0, 1, 2)),
            Err(GeometryError::PointOnSideline)
        );
    }

    #[test]
    fn isotomic_traces_reflect_through_side_midpoints() {
        let t = Triangle::from_int_vertices([(-2, 0), (6, 1), (1, 5)]).unwrap();
        let ctx = ConjugacyContext::new(t.clone());
        let p = b(1, 2, 3);
        let d = cevian_triangle(&t, &ctx.point(&p)).unwrap();
        let d_iso = cevian_triangle(&t, &ctx.point(&ctx.isotomic(&p).unwrap())).unwrap();
        let v = t.vertices();
        for i in 0..3 {
            let (s, e) = (&v[(i + 1) % 3], &v[(i + 2) % 3]);
            // BD/DC for the conjugate trace is the reciprocal
            let r = signed_ratio(s, e, &d[i]).unwrap();
            let r_iso = signed_ratio(s, e, &d_iso[i]).unwrap();
            assert_eq!(r * r_iso, int(1));
            assert_eq!(midpoint(&d[i], &d_iso[i]).unwrap(), midpoint(s, e).unwrap());
        }
    }

    #[test]
    fn isogonal_examples() {
        let ctx = t0();
        assert_eq!(ctx.isogonal(&Bary::centroid()).unwrap(), b(2, 1, 1));
        let p = b(3, -1, 4);
        assert_eq!(ctx.isogonal(&ctx.isogonal(&p).unwrap()).unwrap(), p);
        let t = Triangle::from_int_vertices([(0, 0), (4, 0), (1, 3)]).unwrap();
        let [a2, b2, c2] = t.squared_sides().clone();
        let k = Bary::new(a2, b2, c2).unwrap();
        assert_eq!(isogonal_in(&t, &Bary::centroid()).unwrap(), k);
    }

    #[test]
    fn complement_examples() {
        let ctx = t0();
        assert_eq!(ctx.complement(&Bary::centroid()), Bary::centroid());
        assert_eq!(ctx.complement(&b(1, 2, 3)), b(5, 4, 3));
        assert_eq!(ctx.complement(&b(1, 0, 0)), b(0, 1, 1));
        for p in [b(1, 2, 3), b(-5, 2, 9), b(1, -1, 0)] {
            assert_eq!(ctx.complement(&ctx.anticomplement(&p)), p);
            assert_eq!(ctx.anticomplement(&ctx.complement(&p)), p);
        }
    }

    #[test]
    fn complement_matches_signed_length_definition() {
        // K(P) lies on PG with K(P)G = GP / 2, so G divides P K(P) as 2 : 1
        let t = Triangle::from_int_vertices([(1, -2), (9, 3), (-4, 6)]).unwrap();
        let ctx = ConjugacyContext::new(t.clone());
        let p = ctx.point(&b(1, 2, 3));
        let k = ctx.point(&ctx.complement(&b(1, 2, 3)));
        assert_eq!(signed_ratio(&p, &k, &t.centroid()).unwrap(), int(2));
    }

    #[test]
    fn isotomcomplement_examples() {
        let ctx = t0();
        assert_eq!(
            ctx.isotomcomplement(&Bary::centroid()).unwrap(),
            Bary::centroid()
        );
        assert_eq!(ctx.isotomcomplement(&b(1, 2, 3)).unwrap(), b(5, 8, 9));
        let q = ctx.isotomcomplement(&b(2, 2, -1)).unwrap();
        assert!(!q.is_ordinary());
        assert_eq!(
            ctx.isotomcomplement(&b(0, 0, 1)),
            Err(GeometryError::IsVertex)
        );
        assert_eq!(
            ctx.isotomcomplement(&b(0, 1, 1)),
            Err(GeometryError::PointOnSideline)
        );
    }

    #[test]
    fn isotomcomplement_matches_midline_construction() {
        let t = Triangle::from_int_vertices([(0, 0), (1, 0), (0, 1)]).unwrap();
        let ctx = ConjugacyContext::new(t.clone());
        let p = ctx.point(&b(1, 2, 3));
        let traces = cevian_triangle(&t, &p).unwrap();
        let mids = ctx.medial().vertices().clone();
        let v = t.vertices();
        let l0 = join(&mids[0], &midpoint(&v[0], &traces[0]).unwrap()).unwrap();
        let l1 = join(&mids[1], &midpoint(&v[1], &traces[1]).unwrap()).unwrap();
        assert_eq!(ctx.bary(&meet(&l0, &l1).unwrap()), b(5, 8, 9));
    }

    #[test]
    fn cyclocevian_of_centroid_is_orthocenter() {
        let t = Triangle::from_int_vertices([(0, 0), (4, 0), (1, 3)]).unwrap();
        let ctx = ConjugacyContext::new(t.clone());
        let h = ctx.point(&ctx.cyclocevian(&Bary::centroid()).unwrap());
        // altitude from C is x = 1, altitude from A is y = x
        assert_eq!(h, HPoint::from_ints(1, 1, 1));
        assert_eq!(ctx.point(&ctx.formula_two(&Bary::centroid()).unwrap()), h);
        assert_eq!(ctx.point(&ctx.formula_one(&Bary::centroid()).unwrap()), h);
    }

    #[test]
    fn cyclocevian_is_an_involution_and_matches_formulas() {
        let t = Triangle::from_int_vertices([(-3, 1), (7, -2), (2, 6)]).unwrap();
        let ctx = ConjugacyContext::new(t);
        for p in [b(1, 2, 3), b(4, -1, 6), b(-2, 7, 5), b(3, 3, -1)] {
            let phi = ctx.cyclocevian(&p).unwrap();
            assert_eq!(ctx.cyclocevian(&phi).unwrap(), p);
            assert_eq!(ctx.formula_two(&p).unwrap(), phi);
            assert_eq!(ctx.formula_one(&p).unwrap(), phi);
        }
    }

    #[test]
    fn formula_chain_reports_failing_stage() {
        let ctx = t0();
        assert_eq!(
            ctx.formula_two(&b(0, 1, 2)),
            Err(GeometryError::ChainDegenerate { stage: "isotomic" })
        );
        // K(ι(p)) on a side line when p is on the anticomplementary triangle
        assert_eq!(
            ctx.formula_two(&b(1, -1, 3)),
            Err(GeometryError::ChainDegenerate { stage: "isogonal" })
        );
    }

    #[test]
    fn ceva_conjugate_examples() {
        let ctx = t0();
        assert_eq!(
            ctx.ceva_conjugate(&Bary::centroid(), &Bary::centroid())
                .unwrap(),
            Bary::centroid()
        );
    }

    /// `(x(-x/u + y/v + z/w) : y(x/u - y/v + z/w) : z(x/u + y/v - z/w))`.
    fn ceva_closed_form(p: &Bary, q: &Bary) -> Bary {
        let [u, v, w] = p.coords();
        let [x, y, z] = q.coords();
        let (a, bb, c) = (&x / &u, &y / &v, &z / &w);
        Bary::new(
            &x * (-&a + &bb + &c),
            &y * (&a - &bb + &c),
            &z * (&a + &bb - &c),
        )
        .unwrap()
    }

    #[test]
    fn ceva_conjugate_matches_closed_form() {
        let t = Triangle::from_int_vertices([(0, 0), (5, 1), (2, 4)]).unwrap();
        let ctx = ConjugacyContext::new(t);
        for (p, q) in [
            (b(1, 2, 3), b(5, 8, 9)),
            (b(2, -1, 4), b(3, 1, 7)),
            (b(-3, 5, 2), b(1, 1, -4)),
        ] {
            assert_eq!(
                ctx.ceva_conjugate(&p, &q).unwrap(),
                ceva_closed_form(&p, &q)
            );
        }
    }

    #[test]
    fn cyclocevian_tangent_side_keeps_trace() {
        // isosceles triangle with p on the symmetry axis where the trace circle
        // touches the base: the second intersection on BC is D itself.
        let t = Triangle::from_int_vertices([(0, 4), (-3, 0), (3, 0)]).unwrap();
        let ctx = ConjugacyContext::new(t.clone());
        let p = b(1, 1, 1);
        let phi = ctx.cyclocevian(&p).unwrap();
        // orthocenter of this triangle lies on the axis x = 0: (0, 9/4)
        assert_eq!(ctx.point(&phi), HPoint::ordinary(int(0), ratio(9, 4)));
    }
}
