//! Point-conics `x^T M x = 0` with exact symmetric matrices: construction
//! through points, inscribed conics, pole/polar and the Steiner circumellipse.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{GeometryError, Result};
use crate::projective::{collinear, meet, HLine, HPoint};
use crate::scalar::{inverse3, mat_mul3, mat_vec3, normalize_ints, transpose3, Scalar};
use crate::triangle::{Bary, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConicKind {
    Circle,
    Ellipse,
    Parabola,
    Hyperbola,
    Degenerate,
}

/// A conic defined up to scale; stored as a coprime integer symmetric matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Conic {
    m: [[BigInt; 3]; 3],
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Conic").field(&self.m).finish()
    }
}

impl Conic {
    /// Symmetrizes `m` and normalizes the scale.
    pub fn from_matrix(m: &[[Scalar; 3]; 3]) -> Result<Self> {
        let two = Scalar::from_integer(2.into());
        let sym: [[Scalar; 3]; 3] =
            std::array::from_fn(|i| std::array::from_fn(|j| (&m[i][j] + &m[j][i]) / &two));
        let lcm = sym.iter().flatten().fold(BigInt::one(), |acc, x| {
            num_integer::Integer::lcm(&acc, x.denom())
        });
        let mut flat: Vec<BigInt> = sym
            .iter()
            .flatten()
            .map(|x| (x * &lcm).to_integer())
            .collect();
        if flat.iter().all(Zero::is_zero) {
            return Err(GeometryError::DegenerateConic);
        }
        normalize_ints(&mut flat);
        let m = std::array::from_fn(|i| std::array::from_fn(|j| flat[3 * i + j].clone()));
        Ok(Self { m })
    }

    /// Conic from its equation `A x^2 + B xy + C y^2 + D xz + E yz + F z^2 = 0`.
    pub fn from_coefficients(c: &[Scalar; 6]) -> Result<Self> {
        let two = Scalar::from_integer(2.into());
        let [a, b, cc, d, e, f] = c.clone();
        Self::from_matrix(&[
            [a, &b / &two, &d / &two],
            [&b / &two, cc, &e / &two],
            [&d / &two, &e / &two, f],
        ])
    }

    /// Converts a conic given by a barycentric matrix relative to `t` into
    /// Cartesian homogeneous coordinates.
    pub fn from_barycentric(t: &Triangle, n: &[[Scalar; 3]; 3]) -> Result<Self> {
        let inv = t.frame_inv();
        Self::from_matrix(&mat_mul3(&transpose3(inv), &mat_mul3(n, inv)))
    }

    pub fn matrix(&self) -> [[Scalar; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| Scalar::from_integer(self.m[i][j].clone())))
    }

    fn bilinear(&self, p: &HPoint, q: &HPoint) -> BigInt {
        let (p, q) = (p.ints(), q.ints());
        let mut acc = BigInt::zero();
        for i in 0..3 {
            for j in 0..3 {
                acc += &p[i] * &self.m[i][j] * &q[j];
            }
        }
        acc
    }

    /// `p^T M p` for the canonical representative of `p`.
    pub fn residue(&self, p: &HPoint) -> BigInt {
        self.bilinear(p, p)
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        self.residue(p).is_zero()
    }

    pub fn determinant(&self) -> Scalar {
        crate::scalar::det3(&self.matrix())
    }

    pub fn is_degenerate(&self) -> bool {
        self.determinant().is_zero()
    }

    pub fn kind(&self) -> ConicKind {
        if self.is_degenerate() {
            return ConicKind::Degenerate;
        }
        let m = &self.m;
        let delta = &m[0][0] * &m[1][1] - &m[0][1] * &m[0][1];
        if delta.is_positive() {
            if m[0][0] == m[1][1] && m[0][1].is_zero() {
                ConicKind::Circle
            } else {
                ConicKind::Ellipse
            }
        } else if delta.is_zero() {
            ConicKind::Parabola
        } else {
            ConicKind::Hyperbola
        }
    }

    pub fn polar(&self, p: &HPoint) -> Result<HLine> {
        HLine::from_coords(&mat_vec3(&self.matrix(), &p.coords()))
            .map_err(|_| GeometryError::DegenerateConic)
    }

    pub fn pole(&self, l: &HLine) -> Result<HPoint> {
        let inv = inverse3(&self.matrix()).ok_or(GeometryError::DegenerateConic)?;
        HPoint::from_coords(&mat_vec3(&inv, &l.coords()))
    }

    /// Pole of the line at infinity.
    pub fn center(&self) -> Result<HPoint> {
        self.pole(&HLine::infinity())
    }

    /// True when `l` touches the conic at `p`: `p` is on the conic and its
    /// polar is `l`.
    pub fn tangent_at(&self, p: &HPoint, l: &HLine) -> bool {
        self.contains(p) && self.polar(p).as_ref() == Ok(l)
    }

    /// The other intersection of `line` with the conic, given one point
    /// `known` of the intersection. Returns `known` itself when the line is
    /// tangent there.
    pub fn second_intersection(&self, known: &HPoint, line: &HLine) -> Result<HPoint> {
        if !self.contains(known) || !line.contains(known) {
            return Err(GeometryError::DegenerateInput(
                "known point is not on both curves",
            ));
        }
        let other = [
            HLine::infinity(),
            HLine::from_ints(1, 0, 0),
            HLine::from_ints(0, 1, 0),
        ]
        .iter()
        .filter_map(|l| meet(line, l).ok())
        .find(|w| w != known)
        .expect("a line has more than one point");
        // X = lambda K + mu W with Q(X) = 0 and mu != 0
        let lambda = self.residue(&other);
        let mu = -BigInt::from(2) * self.bilinear(known, &other);
        let v: [Scalar; 3] = std::array::from_fn(|i| {
            Scalar::from_integer(&lambda * &known.ints()[i] + &mu * &other.ints()[i])
        });
        HPoint::from_coords(&v).map_err(|_| GeometryError::DegenerateConic)
    }
}

/// Null space of a homogeneous system over the rationals.
fn null_space(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Scalar::one() / &rows[r][col];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for j in 0..ncols {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

pub fn conic_through_five(points: &[HPoint; 5]) -> Result<Conic> {
    let rows = points
        .iter()
        .map(|p| {
            let [x, y, z] = p.coords();
            vec![&x * &x, &x * &y, &y * &y, &x * &z, &y * &z, &z * &z]
        })
        .collect();
    let ns = null_space(rows, 6);
    if ns.len() != 1 {
        return Err(GeometryError::UnderDetermined);
    }
    let c: [Scalar; 6] = ns[0].clone().try_into().expect("six coefficients");
    Conic::from_coefficients(&c)
}

/// Circle `x^2 + y^2 + D x + E y + F = 0` through three ordinary points.
pub fn circle_through_three(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<Conic> {
    let pts = [
        a.require_ordinary()?,
        b.require_ordinary()?,
        c.require_ordinary()?,
    ];
    if collinear(&[a.clone(), b.clone(), c.clone()]) {
        return Err(GeometryError::CollinearPoints);
    }
    let one = Scalar::one();
    let m: [[Scalar; 3]; 3] =
        std::array::from_fn(|i| [pts[i].0.clone(), pts[i].1.clone(), one.clone()]);
    let rhs: [Scalar; 3] =
        std::array::from_fn(|i| -(&pts[i].0 * &pts[i].0 + &pts[i].1 * &pts[i].1));
    let inv = inverse3(&m).ok_or(GeometryError::CollinearPoints)?;
    let [d, e, f] = mat_vec3(&inv, &rhs);
    Conic::from_coefficients(&[one.clone(), Scalar::zero(), one, d, e, f])
}

/// The conic inscribed in `t` touching the sides at the traces of `p`.
pub fn inscribed_conic(t: &Triangle, p: &HPoint) -> Result<Conic> {
    let b = t.point_to_bary(p);
    if b.on_sideline() {
        return Err(GeometryError::DegeneratePerspector);
    }
    let r = b.coords().map(|x| Scalar::one() / x);
    // sum (x/u)^2 - 2 sum yz/(vw)
    let n: [[Scalar; 3]; 3] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            if i == j {
                &r[i] * &r[i]
            } else {
                -(&r[i] * &r[j])
            }
        })
    });
    Conic::from_barycentric(t, &n)
}

/// The Steiner circumellipse `uv + vw + wu = 0`.
pub fn steiner_circumellipse(t: &Triangle) -> Conic {
    let (z, o) = (Scalar::zero(), Scalar::one());
    let n = [
        [z.clone(), o.clone(), o.clone()],
        [o.clone(), z.clone(), o.clone()],
        [o.clone(), o, z],
    ];
    Conic::from_barycentric(t, &n).expect("nonzero matrix")
}

/// The point with barycentrics `(1 : t : -t/(1+t))` on the Steiner
/// circumellipse; `t = 0` and `t = -1` would give vertices and are rejected.
pub fn steiner_point_sample(tri: &Triangle, t: &Scalar) -> Result<HPoint> {
    if t.is_zero() || (t + Scalar::one()).is_zero() {
        return Err(GeometryError::BadParameter(
            "steiner sample parameter must avoid 0 and -1",
        ));
    }
    let w = -(t / (t + Scalar::one()));
    let b = Bary::new(Scalar::one(), t.clone(), w)?;
    Ok(tri.bary_to_point(&b))
}
