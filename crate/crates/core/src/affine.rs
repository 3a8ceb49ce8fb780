//! Invertible affine maps of the plane with exact entries, acting on
//! homogeneous points and lines, plus fixed-point analysis.

use num_traits::{One, Zero};

use crate::error::{GeometryError, Result};
use crate::projective::{collinear, HLine, HPoint};
use crate::scalar::{mat_vec3, rational_sqrt, Scalar};

/// `x -> M x + t` on Cartesian coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    linear: [[Scalar; 2]; 2],
    translation: [Scalar; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedPointKind {
    UniquePoint,
    LineOfFixedPoints,
    NoOrdinaryFixedPoint,
    Identity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointStructure {
    pub kind: FixedPointKind,
    /// The fixed point when `kind` is `UniquePoint`.
    pub point: Option<HPoint>,
    /// The line of fixed points when `kind` is `LineOfFixedPoints`.
    pub line: Option<HLine>,
    /// For a map without ordinary fixed points that is not a translation,
    /// the unique invariant line (when one exists).
    pub invariant_line: Option<HLine>,
    /// Fixed points at infinity with their eigenvalue, for rational eigenvalues.
    pub infinite_fixed_directions: Vec<(HPoint, Scalar)>,
    /// Linear part is a scalar matrix, so every point at infinity is fixed.
    pub every_direction_fixed: bool,
    /// The linear part has eigenvalues outside the rationals.
    pub irrational_directions: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomothetyClass {
    Homothety { center: HPoint, ratio: Scalar },
    Translation { direction: HPoint },
    Other,
}

fn det2(m: &[[Scalar; 2]; 2]) -> Scalar {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

/// Solves `m x = b` for nonsingular `m`.
fn solve2(m: &[[Scalar; 2]; 2], b: &[Scalar; 2]) -> Option<[Scalar; 2]> {
    let d = det2(m);
    if d.is_zero() {
        return None;
    }
    Some([
        (&b[0] * &m[1][1] - &m[0][1] * &b[1]) / &d,
        (&m[0][0] * &b[1] - &b[0] * &m[1][0]) / &d,
    ])
}

fn direction(v: &[Scalar; 2]) -> Result<HPoint> {
    HPoint::new(v[0].clone(), v[1].clone(), Scalar::zero())
}

impl AffineMap {
    pub fn new(linear: [[Scalar; 2]; 2], translation: [Scalar; 2]) -> Result<Self> {
        if det2(&linear).is_zero() {
            return Err(GeometryError::DegenerateInput(
                "affine map must be invertible",
            ));
        }
        Ok(Self {
            linear,
            translation,
        })
    }

    pub fn identity() -> Self {
        let (o, z) = (Scalar::one(), Scalar::zero());
        Self {
            linear: [[o.clone(), z.clone()], [z.clone(), o]],
            translation: [z.clone(), z],
        }
    }

    /// `x -> center + ratio (x - center)`; `ratio` must be nonzero.
    pub fn homothety(center: &HPoint, ratio: &Scalar) -> Result<Self> {
        let (cx, cy) = center.require_ordinary()?;
        let k = Scalar::one() - ratio;
        Self::new(
            [
                [ratio.clone(), Scalar::zero()],
                [Scalar::zero(), ratio.clone()],
            ],
            [&k * cx, k * cy],
        )
    }

    pub fn translation_by(dx: Scalar, dy: Scalar) -> Self {
        Self {
            translation: [dx, dy],
            ..Self::identity()
        }
    }

    /// The unique affine map with `f(src[i]) = dst[i]`.
    pub fn from_correspondence(src: &[HPoint; 3], dst: &[HPoint; 3]) -> Result<Self> {
        let s = src
            .iter()
            .map(HPoint::require_ordinary)
            .collect::<Result<Vec<_>>>()?;
        let d = dst
            .iter()
            .map(HPoint::require_ordinary)
            .collect::<Result<Vec<_>>>()?;
        if collinear(src) {
            return Err(GeometryError::CollinearSource);
        }
        if collinear(dst) {
            return Err(GeometryError::CollinearTarget);
        }
        // M [s1 - s0, s2 - s0] = [d1 - d0, d2 - d0]
        let su = [&s[1].0 - &s[0].0, &s[1].1 - &s[0].1];
        let sv = [&s[2].0 - &s[0].0, &s[2].1 - &s[0].1];
        let du = [&d[1].0 - &d[0].0, &d[1].1 - &d[0].1];
        let dv = [&d[2].0 - &d[0].0, &d[2].1 - &d[0].1];
        let sdet = &su[0] * &sv[1] - &sv[0] * &su[1];
        // inverse of [su sv] = 1/sdet [[sv1, -sv0], [-su1, su0]]
        let inv = [
            [&sv[1] / &sdet, -(&sv[0] / &sdet)],
            [-(&su[1] / &sdet), &su[0] / &sdet],
        ];
        let linear: [[Scalar; 2]; 2] = std::array::from_fn(|r| {
            let (a, b) = (&du[r], &dv[r]);
            [
                a * &inv[0][0] + b * &inv[1][0],
                a * &inv[0][1] + b * &inv[1][1],
            ]
        });
        let translation = [
            &d[0].0 - (&linear[0][0] * &s[0].0 + &linear[0][1] * &s[0].1),
            &d[0].1 - (&linear[1][0] * &s[0].0 + &linear[1][1] * &s[0].1),
        ];
        Self::new(linear, translation).map_err(|_| GeometryError::CollinearTarget)
    }

    pub fn linear(&self) -> &[[Scalar; 2]; 2] {
        &self.linear
    }

    pub fn translation(&self) -> &[Scalar; 2] {
        &self.translation
    }

    pub fn matrix3(&self) -> [[Scalar; 3]; 3] {
        let m = &self.linear;
        let t = &self.translation;
        [
            [m[0][0].clone(), m[0][1].clone(), t[0].clone()],
            [m[1][0].clone(), m[1][1].clone(), t[1].clone()],
            [Scalar::zero(), Scalar::zero(), Scalar::one()],
        ]
    }

    pub fn apply(&self, p: &HPoint) -> HPoint {
        HPoint::from_coords(&mat_vec3(&self.matrix3(), &p.coords())).expect("invertible map")
    }

    pub fn apply_all<const N: usize>(&self, pts: &[HPoint; N]) -> [HPoint; N] {
        std::array::from_fn(|i| self.apply(&pts[i]))
    }

    /// Image of a line: `l' = F^-T l`.
    pub fn apply_line(&self, l: &HLine) -> HLine {
        let inv = self.invert().matrix3();
        let c = l.coords();
        let v: [Scalar; 3] = std::array::from_fn(|j| (0..3).map(|i| &inv[i][j] * &c[i]).sum());
        HLine::from_coords(&v).expect("invertible map")
    }

    pub fn determinant(&self) -> Scalar {
        det2(&self.linear)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn fixed_points(&self) -> FixedPointStructure {
        fixed_points(self)
    }
}

/// `f ∘ g`: apply `g` first.
pub fn compose(f: &AffineMap, g: &AffineMap) -> AffineMap {
    let (a, b) = (&f.linear, &g.linear);
    let linear =
        std::array::from_fn(|i| std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j]));
    let t = &g.translation;
    let translation =
        std::array::from_fn(|i| &a[i][0] * &t[0] + &a[i][1] * &t[1] + &f.translation[i]);
    AffineMap {
        linear,
        translation,
    }
}

pub fn invert(f: &AffineMap) -> AffineMap {
    let m = &f.linear;
    let d = det2(m);
    let inv = [
        [&m[1][1] / &d, -(&m[0][1] / &d)],
        [-(&m[1][0] / &d), &m[0][0] / &d],
    ];
    let t = &f.translation;
    let translation = std::array::from_fn(|i| -(&inv[i][0] * &t[0] + &inv[i][1] * &t[1]));
    AffineMap {
        linear: inv,
        translation,
    }
}

impl AffineMap {
    pub fn invert(&self) -> AffineMap {
        invert(self)
    }

    pub fn then(&self, next: &AffineMap) -> AffineMap {
        compose(next, self)
    }
}

/// A nonzero vector `v` with `(m - lambda I) v = 0`, assuming it exists.
fn eigenvector(m: &[[Scalar; 2]; 2], lambda: &Scalar) -> [Scalar; 2] {
    let a = &m[0][0] - lambda;
    let d = &m[1][1] - lambda;
    let first = [m[0][1].clone(), -a.clone()];
    if !(first[0].is_zero() && first[1].is_zero()) {
        return first;
    }
    let second = [-d, m[1][0].clone()];
    if !(second[0].is_zero() && second[1].is_zero()) {
        return second;
    }
    // m - lambda I is zero
    [Scalar::one(), Scalar::zero()]
}

pub fn fixed_points(f: &AffineMap) -> FixedPointStructure {
    let m = &f.linear;
    let t = &f.translation;
    let one = Scalar::one();
    let scalar_linear = m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1];

    let mut out = FixedPointStructure {
        kind: FixedPointKind::NoOrdinaryFixedPoint,
        point: None,
        line: None,
        invariant_line: None,
        infinite_fixed_directions: Vec::new(),
        every_direction_fixed: scalar_linear,
        irrational_directions: false,
    };

    if !scalar_linear {
        let tr = &m[0][0] + &m[1][1];
        let det = det2(m);
        let disc = &tr * &tr - Scalar::from_integer(4.into()) * &det;
        match rational_sqrt(&disc) {
            Some(s) => {
                let two = Scalar::from_integer(2.into());
                let mut lambdas = vec![(&tr + &s) / &two];
                if !s.is_zero() {
                    lambdas.push((&tr - &s) / &two);
                }
                for l in lambdas {
                    let v = eigenvector(m, &l);
                    out.infinite_fixed_directions
                        .push((direction(&v).expect("nonzero eigenvector"), l));
                }
            }
            None => out.irrational_directions = true,
        }
    }

    let shifted = [
        [&m[0][0] - &one, m[0][1].clone()],
        [m[1][0].clone(), &m[1][1] - &one],
    ];
    let neg_t = [-t[0].clone(), -t[1].clone()];

    if let Some(x) = solve2(&shifted, &neg_t) {
        out.kind = FixedPointKind::UniquePoint;
        out.point = Some(HPoint::ordinary(x[0].clone(), x[1].clone()));
        return out;
    }
    let shifted_zero = shifted.iter().flatten().all(Zero::is_zero);
    if shifted_zero {
        out.kind = if t.iter().all(Zero::is_zero) {
            FixedPointKind::Identity
        } else {
            FixedPointKind::NoOrdinaryFixedPoint
        };
        return out;
    }

    // rank(M - I) = 1
    let row = if !(shifted[0][0].is_zero() && shifted[0][1].is_zero()) {
        0
    } else {
        1
    };
    let col = if !(shifted[0][0].is_zero() && shifted[1][0].is_zero()) {
        0
    } else {
        1
    };
    let c = [shifted[0][col].clone(), shifted[1][col].clone()];
    let consistent = (&c[0] * &t[1] - &c[1] * &t[0]).is_zero();
    if consistent {
        out.kind = FixedPointKind::LineOfFixedPoints;
        out.line = HLine::new(
            shifted[row][0].clone(),
            shifted[row][1].clone(),
            t[row].clone(),
        )
        .ok();
        return out;
    }

    // No ordinary fixed point. The eigenvalue-1 direction v carries one
    // invariant line when the other eigenvalue mu = det M differs from 1:
    // with w normal to v, the line is  w.x = w.t / (1 - mu).
    let mu = det2(m);
    if mu != one {
        let v = eigenvector(m, &one);
        let w = [-v[1].clone(), v[0].clone()];
        let wt = &w[0] * &t[0] + &w[1] * &t[1];
        let k = wt / (&one - &mu);
        out.invariant_line = HLine::new(w[0].clone(), w[1].clone(), -k).ok();
    }
    out
}

pub fn classify_homothety(f: &AffineMap) -> HomothetyClass {
    let m = &f.linear;
    let scalar_linear = m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1];
    if !scalar_linear {
        return HomothetyClass::Other;
    }
    let lambda = m[0][0].clone();
    if lambda.is_one() {
        return match direction(&f.translation) {
            Ok(direction) => HomothetyClass::Translation { direction },
            Err(_) => HomothetyClass::Other,
        };
    }
    let k = Scalar::one() - &lambda;
    let center = HPoint::ordinary(&f.translation[0] / &k, &f.translation[1] / &k);
    HomothetyClass::Homothety {
        center,
        ratio: lambda,
    }
}

/// Point reflection through `center`.
pub fn half_turn(center: &HPoint) -> Result<AffineMap> {
    if center.is_infinite() {
        return Err(GeometryError::InfiniteCenter);
    }
    AffineMap::homothety(center, &-Scalar::one())
}
