//! Homogeneous points and lines of the real projective plane over the
//! rationals, with the incidence constructions everything else is built on.
//!
//! Points and lines are stored as coprime integer triples whose first
//! nonzero entry is positive, so projective equality is structural equality.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{GeometryError, Result};
use crate::scalar::{canonical_triple, normalize_ints, to_scalars, Scalar};

/// A point `(x : y : z)`; ordinary when `z != 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPoint {
    c: [BigInt; 3],
}

/// A line `l x + m y + n z = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HLine {
    c: [BigInt; 3],
}

macro_rules! triple_common {
    ($ty:ident) => {
        impl $ty {
            pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
                Self::from_coords(&[a, b, c])
            }

            pub fn from_coords(v: &[Scalar; 3]) -> Result<Self> {
                canonical_triple(v)
                    .map(|c| Self { c })
                    .ok_or(GeometryError::ZeroTriple)
            }

            /// Integer constructor for literals; panics on the zero triple.
            pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
                Self::from_coords(&[
                    Scalar::from_integer(a.into()),
                    Scalar::from_integer(b.into()),
                    Scalar::from_integer(c.into()),
                ])
                .expect("nonzero triple")
            }

            pub fn ints(&self) -> &[BigInt; 3] {
                &self.c
            }

            pub fn coords(&self) -> [Scalar; 3] {
                to_scalars(&self.c)
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({}:{}:{})", self.c[0], self.c[1], self.c[2])
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Debug::fmt(self, f)
            }
        }
    };
}

triple_common!(HPoint);
triple_common!(HLine);

impl HPoint {
    pub fn ordinary(x: Scalar, y: Scalar) -> Self {
        Self::from_coords(&[x, y, Scalar::from_integer(1.into())]).expect("z = 1")
    }

    pub fn is_infinite(&self) -> bool {
        self.c[2].is_zero()
    }

    /// Cartesian coordinates, `None` for points at infinity.
    pub fn cartesian(&self) -> Option<(Scalar, Scalar)> {
        if self.is_infinite() {
            return None;
        }
        let z = Scalar::from_integer(self.c[2].clone());
        Some((
            Scalar::from_integer(self.c[0].clone()) / &z,
            Scalar::from_integer(self.c[1].clone()) / &z,
        ))
    }

    pub(crate) fn require_ordinary(&self) -> Result<(Scalar, Scalar)> {
        self.cartesian().ok_or(GeometryError::InfiniteInput)
    }
}

impl HLine {
    pub fn infinity() -> Self {
        Self::from_ints(0, 0, 1)
    }

    pub fn contains(&self, p: &HPoint) -> bool {
        dot(&self.c, &p.c).is_zero()
    }

    pub fn is_infinity(&self) -> bool {
        self.c[0].is_zero() && self.c[1].is_zero()
    }

    /// The point at infinity of this line (its direction).
    pub fn point_at_infinity(&self) -> Result<HPoint> {
        meet(self, &HLine::infinity())
    }
}

fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn from_int_triple(mut v: [BigInt; 3]) -> Option<[BigInt; 3]> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    normalize_ints(&mut v);
    Some(v)
}

pub fn join(p: &HPoint, q: &HPoint) -> Result<HLine> {
    from_int_triple(cross(&p.c, &q.c))
        .map(|c| HLine { c })
        .ok_or(GeometryError::IdenticalPoints)
}

pub fn meet(k: &HLine, l: &HLine) -> Result<HPoint> {
    from_int_triple(cross(&k.c, &l.c))
        .map(|c| HPoint { c })
        .ok_or(GeometryError::IdenticalLines)
}

/// True when two lines share their point at infinity (or coincide).
pub fn parallel(k: &HLine, l: &HLine) -> bool {
    (&k.c[0] * &l.c[1] - &k.c[1] * &l.c[0]).is_zero()
}

/// Line through `p` parallel to `l`.
pub fn parallel_through(p: &HPoint, l: &HLine) -> Result<HLine> {
    join(p, &l.point_at_infinity()?)
}

pub fn collinear(points: &[HPoint]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let Some(second) = points.iter().find(|p| *p != first) else {
        return true;
    };
    let line = join(first, second).expect("distinct points");
    points.iter().all(|p| line.contains(p))
}

pub fn concurrent(lines: &[HLine]) -> bool {
    let Some(first) = lines.first() else {
        return true;
    };
    let Some(second) = lines.iter().find(|l| *l != first) else {
        return true;
    };
    let point = meet(first, second).expect("distinct lines");
    lines.iter().all(|l| l.contains(&point))
}

/// The common point of a pencil of lines, if they are concurrent and not
/// all identical.
pub fn common_point(lines: &[HLine]) -> Option<HPoint> {
    let first = lines.first()?;
    let second = lines.iter().find(|l| *l != first)?;
    let point = meet(first, second).ok()?;
    lines.iter().all(|l| l.contains(&point)).then_some(point)
}

/// Coordinates of `points` on their common line, as homogeneous pairs on
/// the projective line. The dropped coordinate is the one where the line's
/// coefficient is largest in absolute value, so the projection is injective.
fn line_parameters(points: &[&HPoint]) -> Result<Vec<[BigInt; 2]>> {
    let first = points[0];
    let line = match points.iter().find(|p| **p != first) {
        Some(second) => join(first, second)?,
        None => return Err(GeometryError::UndefinedRatio),
    };
    if !points.iter().all(|p| line.contains(p)) {
        return Err(GeometryError::NotCollinear);
    }
    let drop = (0..3)
        .max_by(|&i, &j| line.c[i].abs().cmp(&line.c[j].abs()))
        .expect("three coordinates");
    let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
    Ok(points
        .iter()
        .map(|p| [p.c[keep[0]].clone(), p.c[keep[1]].clone()])
        .collect())
}

fn bracket(p: &[BigInt; 2], q: &[BigInt; 2]) -> BigInt {
    &p[0] * &q[1] - &p[1] * &q[0]
}

/// Cross-ratio `(a, b; c, d) = ((a-c)(b-d)) / ((b-c)(a-d))` on a line
/// parameter. The four points must be collinear and pairwise distinct.
pub fn cross_ratio(a: &HPoint, b: &HPoint, c: &HPoint, d: &HPoint) -> Result<Scalar> {
    let t = line_parameters(&[a, b, c, d])?;
    let num = bracket(&t[0], &t[2]) * bracket(&t[1], &t[3]);
    let den = bracket(&t[1], &t[2]) * bracket(&t[0], &t[3]);
    if num.is_zero()
        || den.is_zero()
        || bracket(&t[0], &t[1]).is_zero()
        || bracket(&t[2], &t[3]).is_zero()
    {
        return Err(GeometryError::UndefinedRatio);
    }
    Ok(Scalar::new(num, den))
}

/// The fourth harmonic point `d` with `(a, b; c, d) = -1`.
pub fn harmonic_conjugate(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<HPoint> {
    if a == b || c == a || c == b {
        return Err(GeometryError::DegenerateInput(
            "harmonic conjugate needs a, b, c distinct",
        ));
    }
    let t = line_parameters(&[a, b, c])?;
    // c = alpha a + beta b  ==>  d = alpha a - beta b
    let alpha = bracket(&t[2], &t[1]);
    let beta = bracket(&t[0], &t[2]);
    let v: [BigInt; 3] = std::array::from_fn(|i| &alpha * &a.c[i] - &beta * &b.c[i]);
    from_int_triple(v)
        .map(|c| HPoint { c })
        .ok_or(GeometryError::ZeroTriple)
}

/// Signed ratio `AC / CB` for collinear ordinary points, i.e. the `r` with
/// `c = (a + r b) / (1 + r)`.
pub fn signed_ratio(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<Scalar> {
    let (ax, ay) = a.require_ordinary()?;
    let (bx, by) = b.require_ordinary()?;
    let (cx, cy) = c.require_ordinary()?;
    if a == b || c == b {
        return Err(GeometryError::DegenerateInput(
            "signed ratio needs a != b and c != b",
        ));
    }
    if !collinear(&[a.clone(), b.clone(), c.clone()]) {
        return Err(GeometryError::NotCollinear);
    }
    let (num, den) = if bx != ax {
        (&cx - &ax, &bx - &cx)
    } else {
        (&cy - &ay, &by - &cy)
    };
    Ok(num / den)
}

pub fn midpoint(a: &HPoint, b: &HPoint) -> Result<HPoint> {
    let (ax, ay) = a.require_ordinary()?;
    let (bx, by) = b.require_ordinary()?;
    let two = Scalar::from_integer(2.into());
    Ok(HPoint::ordinary((ax + bx) / &two, (ay + by) / &two))
}

/// Twice the signed area of the ordinary triangle `abc`.
pub fn orientation(a: &HPoint, b: &HPoint, c: &HPoint) -> Result<Scalar> {
    let (ax, ay) = a.require_ordinary()?;
    let (bx, by) = b.require_ordinary()?;
    let (cx, cy) = c.require_ordinary()?;
    Ok((&bx - &ax) * (&cy - &ay) - (&by - &ay) * (&cx - &ax))
}

pub fn squared_distance(a: &HPoint, b: &HPoint) -> Result<Scalar> {
    let (ax, ay) = a.require_ordinary()?;
    let (bx, by) = b.require_ordinary()?;
    let dx = ax - bx;
    let dy = ay - by;
    Ok(&dx * &dx + &dy * &dy)
}
