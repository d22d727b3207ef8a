use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};
use thiserror::Error;

/// A point of `ℚⁿ` with exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    coords: Vec<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse coordinate {index} ({text:?}) as a rational number")]
pub struct PointParseError {
    pub index: usize,
    pub text: String,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalPoint { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_big_integers(coords: Vec<BigInt>) -> Self {
        Self::new(coords.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Coordinate of vertex `i` (1-based).
    pub fn at(&self, i: usize) -> &BigRational {
        &self.coords[i - 1]
    }

    /// Exact squared Euclidean distance.
    pub fn sq_dist(&self, other: &RationalPoint) -> BigRational {
        assert_eq!(self.len(), other.len(), "points live in different dimensions");
        self.coords.iter().zip(&other.coords).fold(BigRational::zero(), |acc, (a, b)| {
            let d = a - b;
            acc + &d * &d
        })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.coords.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

/// Coordinates as `p/q` in lowest terms, e.g. `(3193/3, 3193/3, 3193/3)`.
impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coords.iter().join(", "))
    }
}

/// Comma-separated rationals such as `16,4,1` or `1/2, -3`.
impl FromStr for RationalPoint {
    type Err = PointParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .enumerate()
            .map(|(index, text)| {
                let text = text.trim();
                text.parse::<BigRational>().map_err(|_| PointParseError { index, text: text.to_string() })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(RationalPoint::new)
    }
}

/// `vᵢ = (n+1)^{n−i}`, an integer multiple of the point `vᵢ = (n+1)^{−i}`.
pub fn braid_generic_point(n: usize) -> RationalPoint {
    geometric_point(n, BigInt::from(n + 1))
}

/// `vᵢ = (6n²+2)^{n−i}`.
pub fn graphical_generic_point(n: usize) -> RationalPoint {
    geometric_point(n, BigInt::from(6 * n * n + 2))
}

fn geometric_point(n: usize, base: BigInt) -> RationalPoint {
    assert!(n >= 1, "dimension must be positive");
    RationalPoint::from_big_integers((1..=n).map(|i| Pow::pow(&base, (n - i) as u32)).collect())
}

/// `vᵢ = 1 − (n+2)^{i−1}`: strictly decreasing with gaps growing fast
/// enough that `vᵢ − vᵢ₊₁ > n(v₁ − vᵢ)`.
pub fn lrmax_generic_point(n: usize) -> RationalPoint {
    assert!(n >= 1, "dimension must be positive");
    let base = BigInt::from(n + 2);
    RationalPoint::from_big_integers((1..=n).map(|i| BigInt::from(1) - Pow::pow(&base, (i - 1) as u32)).collect())
}

fn strictly_decreasing(v: &RationalPoint) -> bool {
    v.coords.windows(2).all(|w| w[0] > w[1])
}

/// `v₁ > … > vₙ` and `vᵢ − vᵢ₊₁ > n(vᵢ₊₁ − vₙ)` for all `i < n`.
pub fn validate_point_braid(v: &RationalPoint) -> bool {
    let n = v.len();
    if n == 0 || !strictly_decreasing(v) {
        return false;
    }
    let scale = BigRational::from_integer(n.into());
    let last = &v.coords[n - 1];
    v.coords.windows(2).all(|w| &w[0] - &w[1] > &scale * (&w[1] - last))
}

/// `vᵢ > (6n²+1) vᵢ₊₁` for all `i < n`, and `vₙ > 0`.
pub fn validate_point_graphical(v: &RationalPoint) -> bool {
    let n = v.len();
    if n == 0 || v.coords[n - 1] <= BigRational::zero() {
        return false;
    }
    let factor = BigRational::from_integer((6 * n * n + 1).into());
    v.coords.windows(2).all(|w| w[0] > &factor * &w[1])
}

/// `v₁ > … > vₙ` and `vᵢ − vᵢ₊₁ > n(v₁ − vᵢ)` for all `i < n`.
pub fn validate_point_lrmax(v: &RationalPoint) -> bool {
    let n = v.len();
    if n == 0 || !strictly_decreasing(v) {
        return false;
    }
    let scale = BigRational::from_integer(n.into());
    let first = &v.coords[0];
    v.coords.windows(2).all(|w| &w[0] - &w[1] > &scale * (first - &w[0]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> RationalPoint {
        RationalPoint::from_integers(c)
    }

    #[test]
    fn braid_points() {
        assert_eq!(braid_generic_point(3), pt(&[16, 4, 1]));
        assert_eq!(braid_generic_point(1), pt(&[1]));
        assert_eq!(braid_generic_point(2), pt(&[3, 1]));
    }

    #[test]
    fn graphical_points() {
        assert_eq!(graphical_generic_point(3), pt(&[3136, 56, 1]));
        assert_eq!(graphical_generic_point(1), pt(&[1]));
        assert_eq!(graphical_generic_point(2), pt(&[26, 1]));
    }

    #[test]
    fn lrmax_points() {
        assert_eq!(lrmax_generic_point(3), pt(&[0, -4, -24]));
        assert_eq!(lrmax_generic_point(1), pt(&[0]));
        assert_eq!(lrmax_generic_point(2), pt(&[0, -3]));
    }

    #[test]
    fn validators() {
        assert!(validate_point_braid(&pt(&[16, 4, 1])));
        assert!(!validate_point_braid(&pt(&[1, 1, 1])));
        // 16 − 10 = 6 is not > 3·(10 − 1)
        assert!(!validate_point_braid(&pt(&[16, 10, 1])));
        assert!(validate_point_graphical(&pt(&[3136, 56, 1])));
        assert!(!validate_point_graphical(&pt(&[3080, 56, 1])));
        assert!(!validate_point_graphical(&pt(&[3136, 56, 0])));
        assert!(validate_point_lrmax(&pt(&[0, -4, -24])));
        assert!(!validate_point_lrmax(&pt(&[0, -4, -15])));
    }

    #[test]
    fn parse_and_display() {
        let v: RationalPoint = "16, 4/2, -1/3".parse().unwrap();
        assert_eq!(v.to_string(), "(16, 2, -1/3)");
        assert_eq!("1,x".parse::<RationalPoint>(), Err(PointParseError { index: 1, text: "x".into() }));
    }

    #[test]
    fn squared_distance() {
        assert_eq!(pt(&[16, 4, 1]).sq_dist(&pt(&[7, 7, 7])), BigRational::from_integer(126.into()));
    }
}
