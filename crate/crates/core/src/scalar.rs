//! Exact rational scalars.
//!
//! Every coordinate in the engine is a [`Scalar`]: an arbitrary precision
//! rational kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

/// Shorthand for an integer-valued scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Exact square root of a rational when it is a perfect square.
pub fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Scalar::new(n, d))
    } else {
        None
    }
}

/// Scale a rational triple to a coprime integer triple whose first nonzero
/// entry is positive. Returns `None` for the zero triple.
pub(crate) fn canonical_triple(v: &[Scalar; 3]) -> Option<[BigInt; 3]> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: [BigInt; 3] = std::array::from_fn(|i| (&v[i] * &lcm).to_integer());
    normalize_ints(&mut ints);
    Some(ints)
}

pub(crate) fn normalize_ints(ints: &mut [BigInt]) {
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return;
    }
    let negate = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x = &*x / &g;
        if negate {
            *x = -&*x;
        }
    }
}

pub(crate) fn to_scalars(ints: &[BigInt; 3]) -> [Scalar; 3] {
    std::array::from_fn(|i| Scalar::from_integer(ints[i].clone()))
}

pub(crate) fn det3(m: &[[Scalar; 3]; 3]) -> Scalar {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Inverse of a 3x3 matrix via the adjugate; `None` if singular.
pub(crate) fn inverse3(m: &[[Scalar; 3]; 3]) -> Option<[[Scalar; 3]; 3]> {
    let det = det3(m);
    if det.is_zero() {
        return None;
    }
    let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    // adj[i][j] = cofactor of m[j][i]
    let adj = [
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ];
    Some(adj.map(|row| row.map(|x| x / &det)))
}

pub(crate) fn mat_vec3(m: &[[Scalar; 3]; 3], v: &[Scalar; 3]) -> [Scalar; 3] {
    std::array::from_fn(|i| &m[i][0] * &v[0] + &m[i][1] * &v[1] + &m[i][2] * &v[2])
}

pub(crate) fn transpose3(m: &[[Scalar; 3]; 3]) -> [[Scalar; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

pub(crate) fn mat_mul3(a: &[[Scalar; 3]; 3], b: &[[Scalar; 3]; 3]) -> [[Scalar; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j] + &a[i][2] * &b[2][j])
    })
}

/// Render a scalar as `num/den`, omitting the denominator when it is one.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// Parse `num`, `num/den` or a terminating decimal such as `-0.25`.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Scalar::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !whole_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("{whole_digits}{frac}").parse().ok()?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let value = Scalar::new(digits, den);
        return Some(if negative { -value } else { value });
    }
    s.parse::<BigInt>().ok().map(Scalar::from_integer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_coprime_and_sign_fixed() {
        let t = canonical_triple(&[ratio(-1, 2), int(0), ratio(3, 4)]).unwrap();
        assert_eq!(t, [BigInt::from(2), BigInt::from(0), BigInt::from(-3)]);
        assert!(canonical_triple(&[int(0), int(0), int(0)]).is_none());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse_scalar("-0.25"), Some(ratio(-1, 4)));
        assert_eq!(parse_scalar("7"), Some(int(7)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
        assert_eq!(format_scalar(&ratio(-4, 6)), "-2/3");
        assert_eq!(format_scalar(&int(5)), "5");
    }

    #[test]
    fn sqrt_of_perfect_squares_only() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }

    #[test]
    fn inverse_round_trip() {
        let m = [
            [int(2), int(1), int(0)],
            [int(0), int(1), int(3)],
            [int(1), int(0), int(1)],
        ];
        let inv = inverse3(&m).unwrap();
        let id = mat_mul3(&m, &inv);
        for (i, row) in id.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(*x, if i == j { int(1) } else { int(0) });
            }
        }
    }
}
