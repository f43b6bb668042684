//! Dense univariate polynomials in `q` with integer coefficients.
//!
//! Every quantity in this crate (character values, quasisymmetric
//! coefficients, f-polynomials) is a polynomial in `q`; no division ever
//! occurs, so exact `i64` arithmetic suffices. The coefficient vector is
//! kept normalized: no trailing zeros, the zero polynomial is the empty
//! vector.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        QPoly { coeffs: vec![0, 1] }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^degree`.
    pub fn monomial(c: i64, degree: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        QPoly { coeffs }
    }

    /// Ascending coefficients; trailing zeros are stripped.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    /// Substitute `q -> -q`: flip the sign of every odd-degree coefficient.
    pub fn substitute_neg_q(&self) -> QPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 1 { -c } else { c })
            .collect();
        QPoly { coeffs }
    }

    pub fn scale(&self, c: i64) -> QPoly {
        if c == 0 {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(QPoly::from_coeffs(Vec::deserialize(deserializer)?))
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![0; self.coeffs.len().max(rhs.coeffs.len())];
        for (d, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(d) + rhs.coeff(d);
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match d {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if d == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert_eq!(
            QPoly::from_coeffs(vec![1, 2, 0, 0]),
            QPoly::from_coeffs(vec![1, 2])
        );
        assert!(QPoly::from_coeffs(vec![0, 0]).is_zero());
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(QPoly::q().degree(), Some(1));
    }

    #[test]
    fn ring_arithmetic() {
        let p = QPoly::from_coeffs(vec![2, 1]); // 2 + q
        let sq = &p * &p;
        assert_eq!(sq, QPoly::from_coeffs(vec![4, 4, 1]));
        assert_eq!(&sq - &sq, QPoly::zero());
        assert_eq!(p.pow(4), QPoly::from_coeffs(vec![16, 32, 24, 8, 1]));
        assert_eq!(&p + &QPoly::zero(), p);
        assert_eq!(&p * &QPoly::one(), p);
    }

    #[test]
    fn eval_and_substitution() {
        let p = QPoly::from_coeffs(vec![1, -3, 2]); // 1 - 3q + 2q^2
        assert_eq!(p.eval(2), 1 - 6 + 8);
        assert_eq!(p.substitute_neg_q(), QPoly::from_coeffs(vec![1, 3, 2]));
        assert_eq!(p.substitute_neg_q().substitute_neg_q(), p);
    }

    #[test]
    fn display_format() {
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(
            QPoly::from_coeffs(vec![6, 6, 1]).to_string(),
            "6 + 6q + q^2"
        );
        assert_eq!(QPoly::from_coeffs(vec![2, -1]).to_string(), "2 - q");
        assert_eq!(QPoly::monomial(-1, 2).to_string(), "-q^2");
    }

    #[test]
    fn serde_round_trip() {
        let p = QPoly::from_coeffs(vec![0, 1, 5]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[0,1,5]");
        let back: QPoly = serde_json::from_str("[0,1,5,0]").unwrap();
        assert_eq!(back, p);
    }
}
