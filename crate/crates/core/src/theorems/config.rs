//! The full set of named points and maps derived from a triangle and `P`.

use crate::affine::{compose, AffineMap};
use crate::conjugacy::ConjugacyContext;
use crate::error::{GeometryError, Result};
use crate::projective::{join, meet, midpoint, HPoint};
use crate::triangle::{Bary, DegeneracyClass, Triangle};

/// Index of each cevian family in [`Configuration::traces`].
pub mod family {
    pub const CENTROID: usize = 0;
    pub const P: usize = 1;
    pub const Q: usize = 2;
    pub const P_PRIME: usize = 3;
    pub const Q_PRIME: usize = 4;
    pub const X: usize = 5;
}

/// Everything named in the cevian framework for one `(triangle, P)` pair.
///
/// Arrays indexed by vertex follow `A, B, C`. Fields that are undefined for
/// the given input (midpoints involving an infinite point, the traces of a
/// perspector that is a vertex, ...) are `None`.
#[derive(Debug, Clone)]
pub struct Configuration {
    pub ctx: ConjugacyContext,
    pub flags: DegeneracyClass,
    pub p: HPoint,
    /// `P' = ι(P)`.
    pub p_prime: HPoint,
    /// `Q = K(P')`, the isotomcomplement of `P`.
    pub q: HPoint,
    /// `Q' = K(P)`.
    pub q_prime: HPoint,
    pub g: HPoint,
    /// `X`, the `P`-ceva conjugate of `Q` (fixed point of `T_P ∘ T_P'`).
    pub x: Option<HPoint>,
    /// `X'`, the `P'`-ceva conjugate of `Q'`.
    pub x_prime: Option<HPoint>,
    /// `traces[i] = [D_i, E_i, F_i]`, see [`family`].
    pub traces: [Option<[HPoint; 3]>; 6],
    /// `images[i] = [A_i, B_i, C_i] = T_P(traces[i])`.
    pub images: [Option<[HPoint; 3]>; 6],
    /// `A_0, B_0, C_0`: midpoints of the sides `EF, FD, DE`.
    pub side_midpoints: [HPoint; 3],
    /// `A_0', B_0', C_0'` for the cevian triangle of `P'`.
    pub side_midpoints_prime: [HPoint; 3],
    /// `M_d, M_e, M_f`: midpoints of `AD, BE, CF`.
    pub cevian_midpoints: [HPoint; 3],
    /// `M_d', M_e', M_f'`: midpoints of `AD_3, BE_3, CF_3`.
    pub cevian_midpoints_prime: [HPoint; 3],
    /// Midpoints of `AD_0, BE_0, CF_0`; the first is `N_1`.
    pub half_turn_centers: [HPoint; 3],
    /// Midpoints of `AP, BP, CP` (`R` is the first).
    pub r: Option<[HPoint; 3]>,
    /// Midpoints of `AP', BP', CP'`.
    pub r_prime: Option<[HPoint; 3]>,
    /// Midpoint of `PQ'`.
    pub m: Option<HPoint>,
    /// `O_a, O_b, O_c`.
    pub o: [Option<HPoint>; 3],
    pub t_p: AffineMap,
    pub t_p_prime: AffineMap,
    /// `T_P ∘ T_P'`.
    pub s: AffineMap,
    /// `(seed, index)` when produced by the sampler.
    pub fingerprint: Option<(u64, usize)>,
}

/// Traces of `p`, or `None` when `p` is a vertex (some cevian undefined).
fn traces_of(t: &Triangle, p: &HPoint) -> Option<[HPoint; 3]> {
    let v = t.vertices();
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        out.push(meet(&join(&v[i], p).ok()?, &t.side_line(i)).ok()?);
    }
    out.try_into().ok()
}

fn side_midpoints_of(tr: &[HPoint; 3]) -> Result<[HPoint; 3]> {
    Ok([
        midpoint(&tr[1], &tr[2])?,
        midpoint(&tr[2], &tr[0])?,
        midpoint(&tr[0], &tr[1])?,
    ])
}

fn midpoints_with(v: &[HPoint; 3], p: &HPoint) -> Option<[HPoint; 3]> {
    Some([
        midpoint(&v[0], p).ok()?,
        midpoint(&v[1], p).ok()?,
        midpoint(&v[2], p).ok()?,
    ])
}

fn pairwise_midpoints(a: &[HPoint; 3], b: &[HPoint; 3]) -> Result<[HPoint; 3]> {
    Ok([
        midpoint(&a[0], &b[0])?,
        midpoint(&a[1], &b[1])?,
        midpoint(&a[2], &b[2])?,
    ])
}

/// Builds the configuration; fails when `P` is on a side line of the
/// triangle or of its anticomplementary triangle.
pub fn build_configuration(t: &Triangle, p: &HPoint) -> Result<Configuration> {
    let ctx = ConjugacyContext::new(t.clone());
    let pb = ctx.bary(p);
    let flags = crate::triangle::classify_bary(&pb);
    let violated = flags & DegeneracyClass::FORBIDDEN;
    if !violated.is_empty() {
        return Err(GeometryError::HypothesisViolated(violated));
    }
    let p_prime_b = ctx.isotomic(&pb)?;
    let q_b = ctx.complement(&p_prime_b);
    let q_prime_b = ctx.complement(&pb);
    let p_prime = ctx.point(&p_prime_b);
    let q = ctx.point(&q_b);
    let q_prime = ctx.point(&q_prime_b);
    let g = t.centroid();

    let x = ctx.ceva_conjugate(&pb, &q_b).ok().map(|b| ctx.point(&b));
    let x_prime = ctx
        .ceva_conjugate(&p_prime_b, &q_prime_b)
        .ok()
        .map(|b| ctx.point(&b));

    let family_points = [
        Some(&g),
        Some(p),
        Some(&q),
        Some(&p_prime),
        Some(&q_prime),
        x.as_ref(),
    ];
    let traces: [Option<[HPoint; 3]>; 6] =
        std::array::from_fn(|i| family_points[i].and_then(|pt| traces_of(t, pt)));
    let def = traces[family::P]
        .clone()
        .ok_or(GeometryError::PointOnSideline)?;
    let def_prime = traces[family::P_PRIME]
        .clone()
        .ok_or(GeometryError::PointOnSideline)?;

    let t_p = AffineMap::from_correspondence(t.vertices(), &def)?;
    let t_p_prime = AffineMap::from_correspondence(t.vertices(), &def_prime)?;
    let s = compose(&t_p, &t_p_prime);
    let images = std::array::from_fn(|i| traces[i].as_ref().map(|tr| t_p.apply_all(tr)));

    let v = t.vertices();
    let medial = ctx.medial().vertices().clone();
    let side_midpoints = side_midpoints_of(&def)?;
    let side_midpoints_prime = side_midpoints_of(&def_prime)?;
    let cevian_midpoints = pairwise_midpoints(v, &def)?;
    let cevian_midpoints_prime = pairwise_midpoints(v, &def_prime)?;
    let half_turn_centers = pairwise_midpoints(v, &medial)?;
    let r = midpoints_with(v, p);
    let r_prime = midpoints_with(v, &p_prime);
    let m = midpoint(p, &q_prime).ok();

    let o = std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let mid_line = join(&cevian_midpoints[j], &cevian_midpoints[k]).ok()?;
        let medial_line = join(&medial[j], &medial[k]).ok()?;
        meet(&mid_line, &medial_line).ok()
    });

    Ok(Configuration {
        ctx,
        flags,
        p: p.clone(),
        p_prime,
        q,
        q_prime,
        g,
        x,
        x_prime,
        traces,
        images,
        side_midpoints,
        side_midpoints_prime,
        cevian_midpoints,
        cevian_midpoints_prime,
        half_turn_centers,
        r,
        r_prime,
        m,
        o,
        t_p,
        t_p_prime,
        s,
        fingerprint: None,
    })
}

impl Configuration {
    pub fn triangle(&self) -> &Triangle {
        self.ctx.reference()
    }

    pub fn p_bary(&self) -> Bary {
        self.ctx.bary(&self.p)
    }

    /// `P'` is infinite exactly when `P` is on the Steiner circumellipse.
    pub fn on_steiner(&self) -> bool {
        self.flags.contains(DegeneracyClass::ON_STEINER)
    }

    pub fn p_infinite(&self) -> bool {
        self.p.is_infinite()
    }

    /// `[D, E, F]`.
    pub fn def(&self) -> &[HPoint; 3] {
        self.traces[family::P]
            .as_ref()
            .expect("built with cevian triangle of P")
    }

    /// `[D_3, E_3, F_3]`.
    pub fn def_prime(&self) -> &[HPoint; 3] {
        self.traces[family::P_PRIME]
            .as_ref()
            .expect("built with cevian triangle of P'")
    }

    /// Complement map of the reference triangle applied to any point.
    pub fn complement_point(&self, p: &HPoint) -> HPoint {
        self.ctx.point(&self.ctx.complement(&self.ctx.bary(p)))
    }

    /// The involution `Y -> V T_P(Y) · (side opposite V)` on side `i`.
    pub fn side_involution(&self, i: usize, y: &HPoint) -> Result<HPoint> {
        let t = self.triangle();
        meet(
            &join(&t.vertices()[i], &self.t_p.apply(y))?,
            &t.side_line(i),
        )
    }

    pub fn with_fingerprint(mut self, seed: u64, index: usize) -> Self {
        self.fingerprint = Some((seed, index));
        self
    }
}
