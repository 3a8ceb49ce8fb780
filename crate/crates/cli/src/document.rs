//! Input document: a triangle and a point, all coordinates exact rationals.

use cevian_core::scalar::{format_scalar, parse_scalar};
use cevian_core::{Bary, HPoint, Scalar, Triangle};
use serde::{Deserialize, Serialize};

/// A rational written as `"p/q"`, an integer string, a terminating decimal
/// string or a bare JSON integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Text(String),
    Integer(i64),
}

impl Number {
    pub fn parse(&self) -> Result<Scalar, String> {
        match self {
            Number::Text(s) => {
                parse_scalar(s).ok_or_else(|| format!("not a rational number: {s:?}"))
            }
            Number::Integer(n) => Ok(Scalar::from_integer((*n).into())),
        }
    }

    pub fn canonical(x: &Scalar) -> Self {
        Number::Text(format_scalar(x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointSpec {
    Bary([Number; 3]),
    Cart([Number; 2]),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigDocument {
    pub triangle: [[Number; 2]; 3],
    pub point: PointSpec,
}

fn parse_all<const N: usize>(nums: &[Number; N]) -> Result<[Scalar; N], String> {
    let v = nums
        .iter()
        .map(Number::parse)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(v.try_into().expect("length preserved"))
}

impl ConfigDocument {
    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid document: {e}"))
    }

    pub fn triangle(&self) -> Result<Triangle, String> {
        let mut pts = Vec::with_capacity(3);
        for v in &self.triangle {
            let [x, y] = parse_all(v)?;
            pts.push((x, y));
        }
        let pts: [(Scalar, Scalar); 3] = pts.try_into().expect("three vertices");
        Triangle::from_cartesian(pts).map_err(|e| format!("triangle: {e}"))
    }

    pub fn point(&self, t: &Triangle) -> Result<HPoint, String> {
        match &self.point {
            PointSpec::Bary(c) => {
                let b = Bary::from_coords(&parse_all(c)?).map_err(|e| format!("point: {e}"))?;
                Ok(t.bary_to_point(&b))
            }
            PointSpec::Cart(c) => {
                let [x, y] = parse_all(c)?;
                Ok(HPoint::ordinary(x, y))
            }
        }
    }

    /// Rewrites every number in canonical `num/den` form and the point as
    /// normalized barycentrics.
    pub fn canonical(&self) -> Result<Self, String> {
        let t = self.triangle()?;
        let p = self.point(&t)?;
        let triangle = t.vertices().clone().map(|v| {
            let (x, y) = v.cartesian().expect("ordinary vertex");
            [Number::canonical(&x), Number::canonical(&y)]
        });
        let point = PointSpec::Bary(t.point_to_bary(&p).coords().map(|c| Number::canonical(&c)));
        Ok(Self { triangle, point })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const T0: &str =
        r#"{"triangle": [["0","0"],["1","0"],["0","1"]], "point": {"bary": ["1","2","3"]}}"#;

    #[test]
    fn parses_mixed_numbers() {
        let doc = ConfigDocument::from_json(
            r#"{"triangle": [[0, "0"], ["1/1", 0], ["0", "1.0"]], "point": {"cart": ["1/3", "0.5"]}}"#,
        )
        .unwrap();
        let t = doc.triangle().unwrap();
        let p = doc.point(&t).unwrap();
        assert_eq!(t.point_to_bary(&p), Bary::from_ints(1, 2, 3));
    }

    #[test]
    fn canonical_round_trip() {
        let doc = ConfigDocument::from_json(T0).unwrap();
        let canon = doc.canonical().unwrap();
        let again = ConfigDocument::from_json(&serde_json::to_string(&canon).unwrap()).unwrap();
        assert_eq!(again, canon);
        assert_eq!(again.canonical().unwrap(), canon);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ConfigDocument::from_json(r#"{"triangle": []}"#).is_err());
        let doc = ConfigDocument::from_json(
            r#"{"triangle": [["0","0"],["1","0"],["2","0"]], "point": {"bary": ["1","1","1"]}}"#,
        )
        .unwrap();
        assert!(doc.triangle().is_err());
        let doc = ConfigDocument::from_json(
            r#"{"triangle": [["0","0"],["1","0"],["0","x"]], "point": {"bary": ["1","1","1"]}}"#,
        )
        .unwrap();
        assert!(doc.triangle().unwrap_err().contains("not a rational"));
    }
}
