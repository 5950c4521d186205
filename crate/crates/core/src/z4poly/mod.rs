//! Dense polynomial arithmetic over Z4, with the mod-2 projection and Hensel
//! lifting of coprime factorizations and Bezout identities.

mod f2;
mod hensel;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

pub use f2::F2Poly;
pub use hensel::{hensel_lift_factor, lift_bezout};

use crate::error::{Error, Result};

/// Polynomial over Z4 with coefficients in ascending degree.
///
/// Every coefficient lies in `0..4` and there are no trailing zeros; the zero
/// polynomial is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z4Poly {
    coeffs: Vec<u8>,
}

impl Z4Poly {
    pub fn new(coeffs: Vec<u8>) -> Self {
        let mut p = Z4Poly { coeffs: coeffs.into_iter().map(|c| c & 3).collect() };
        p.trim();
        p
    }

    /// Builds a polynomial from signed integer coefficients, reducing mod 4.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Z4Poly::new(coeffs.iter().map(|c| c.rem_euclid(4) as u8).collect())
    }

    pub fn zero() -> Self {
        Z4Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Z4Poly::constant(1)
    }

    pub fn x() -> Self {
        Z4Poly::monomial(1, 1)
    }

    pub fn constant(c: u8) -> Self {
        Z4Poly::new(vec![c])
    }

    pub fn monomial(c: u8, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Z4Poly::new(coeffs)
    }

    /// Lifts a binary polynomial with coefficients 0/1 regarded as elements of Z4.
    pub fn from_f2(p: &F2Poly) -> Self {
        Z4Poly::new(p.bits().to_vec())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> u8 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: u8) -> Z4Poly {
        Z4Poly::new(self.coeffs.iter().map(|&a| a.wrapping_mul(c)).collect())
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: usize) -> Z4Poly {
        if self.is_zero() {
            return Z4Poly::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Z4Poly { coeffs }
    }

    /// Divides every coefficient by 2, provided all of them are even.
    pub fn halve(&self) -> Option<Z4Poly> {
        self.coeffs.iter().all(|c| c % 2 == 0).then(|| Z4Poly::new(self.coeffs.iter().map(|c| c / 2).collect()))
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
        if !divisor.is_monic() {
            return Err(Error::NonMonicModulus(divisor.to_string()));
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Z4Poly::zero(), self.clone()));
        }
        let mut quo = vec![0u8; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c != 0 {
                let shift = top - dd;
                quo[shift] = c;
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    rem[shift + j] = (rem[shift + j] + 4 - (c * b) % 4) % 4;
                }
            }
        }
        Ok((Z4Poly::new(quo), Z4Poly::new(rem)))
    }

    pub fn rem_monic(&self, divisor: &Z4Poly) -> Result<Z4Poly> {
        Ok(self.div_rem_monic(divisor)?.1)
    }

    pub fn mul_mod(&self, other: &Z4Poly, modulus: &Z4Poly) -> Result<Z4Poly> {
        (self * other).rem_monic(modulus)
    }

    /// Reduction modulo x^len + 1 by the rewrite x^len -> -1.
    pub fn reduce_negacyclic(&self, len: usize) -> Z4Poly {
        let mut out = vec![0u8; len.min(self.coeffs.len())];
        for (j, &c) in self.coeffs.iter().enumerate() {
            let (q, r) = (j / len, j % len);
            out[r] = if q % 2 == 0 { (out[r] + c) & 3 } else { (out[r] + 4 - c) & 3 };
        }
        Z4Poly::new(out)
    }

    /// The substitution p(x) -> p(-x^2).
    pub fn subs_neg_x2(&self) -> Z4Poly {
        let mut out = vec![0u8; 2 * self.coeffs.len()];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[2 * j] = if j % 2 == 0 { c } else { (4 - c) & 3 };
        }
        Z4Poly::new(out)
    }

    /// The substitution p(x) -> p(-x), i.e. coefficient j times (-1)^j.
    pub fn subs_neg_x(&self) -> Z4Poly {
        Z4Poly::new(self.coeffs.iter().enumerate().map(|(j, &c)| if j % 2 == 0 { c } else { (4 - c) & 3 }).collect())
    }

    /// Evaluates `self` at the polynomial `y`, reducing modulo a monic modulus (Horner).
    pub fn compose_mod(&self, y: &Z4Poly, modulus: &Z4Poly) -> Result<Z4Poly> {
        let y = y.rem_monic(modulus)?;
        let mut acc = Z4Poly::zero();
        for &c in self.coeffs.iter().rev() {
            acc = (&acc.mul_mod(&y, modulus)? + &Z4Poly::constant(c)).rem_monic(modulus)?;
        }
        Ok(acc)
    }

    /// x^deg p * p(1/x), i.e. the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Result<Z4Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Z4Poly::new(self.coeffs.iter().rev().copied().collect()))
    }

    /// Coefficientwise reduction mod 2.
    pub fn project_mod2(&self) -> F2Poly {
        F2Poly::new(self.coeffs.iter().map(|c| c & 1).collect())
    }

    /// Coefficients as signed integers in the centered range {-1, 0, 1, 2}.
    pub fn centered(&self) -> Vec<i64> {
        self.coeffs.iter().map(|&c| if c == 3 { -1 } else { c as i64 }).collect()
    }
}

/// Exact product of integer polynomials.
pub(crate) fn int_poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl Add for &Z4Poly {
    type Output = Z4Poly;

    fn add(self, rhs: &Z4Poly) -> Z4Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Z4Poly::new((0..len).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &Z4Poly {
    type Output = Z4Poly;

    fn sub(self, rhs: &Z4Poly) -> Z4Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Z4Poly::new((0..len).map(|j| self.coeff(j) + 4 - rhs.coeff(j)).collect())
    }
}

impl Neg for &Z4Poly {
    type Output = Z4Poly;

    fn neg(self) -> Z4Poly {
        Z4Poly::new(self.coeffs.iter().map(|&c| 4 - c).collect())
    }
}

impl Mul for &Z4Poly {
    type Output = Z4Poly;

    fn mul(self, rhs: &Z4Poly) -> Z4Poly {
        if self.is_zero() || rhs.is_zero() {
            return Z4Poly::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) & 3;
            }
        }
        Z4Poly::new(out)
    }
}

impl fmt::Display for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Poly[{self}]")
    }
}

impl FromStr for Z4Poly {
    type Err = Error;

    /// Parses space-separated ascending coefficients, e.g. `"3 1 2 1"`.
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split_whitespace()
            .map(|tok| match tok.parse::<u8>() {
                Ok(c) if c < 4 => Ok(c),
                _ => Err(Error::Parse(format!("invalid Z4 coefficient {tok:?} in {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Z4Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Z4Poly {
        s.parse().unwrap()
    }

    #[test]
    fn product_examples() {
        assert_eq!(&p("3 1") * &p("1 1 1"), p("3 0 0 1"));
        let x14_plus_1 = &Z4Poly::monomial(1, 14) + &Z4Poly::one();
        let x7 = Z4Poly::monomial(1, 7);
        assert_eq!(x7.mul_mod(&x7, &x14_plus_1).unwrap(), p("3"));
        assert_eq!((&x7 * &x7).reduce_negacyclic(14), p("3"));
        // (x - 1)^2 = x^2 - 2x + 1 = -2x = 2x mod x^2 + 1
        let sq = &p("3 1") * &p("3 1");
        assert_eq!(sq.rem_monic(&p("1 0 1")).unwrap(), p("0 2"));
        assert_eq!(sq.reduce_negacyclic(2), p("0 2"));
    }

    #[test]
    fn non_monic_modulus_rejected() {
        assert!(matches!(p("1 2").rem_monic(&p("1 0 3")), Err(Error::NonMonicModulus(_))));
        assert!(p("1 2").rem_monic(&p("1 2 2")).is_err());
    }

    #[test]
    fn projection_examples() {
        assert_eq!(p("3 1 2 1").project_mod2(), "1 1 0 1".parse().unwrap());
        assert!(p("2 2").project_mod2().is_zero());
        assert_eq!(p("3 1").project_mod2(), "1 1".parse().unwrap());
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p("3 1 2 1").reciprocal().unwrap(), p("1 2 1 3"));
        assert_eq!(p("3 1").reciprocal().unwrap(), p("1 3"));
        assert_eq!(p("1 3"), -&p("3 1"));
        assert_eq!(Z4Poly::zero().reciprocal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("3 1 2 1").to_string(), "3 1 2 1");
        assert_eq!(p("1 0 0").to_string(), "1");
        assert_eq!(Z4Poly::zero().to_string(), "0");
        assert!("1 4".parse::<Z4Poly>().is_err());
        assert!("1 x".parse::<Z4Poly>().is_err());
    }

    #[test]
    fn negacyclic_reduction_agrees_with_long_division() {
        let m = &Z4Poly::monomial(1, 6) + &Z4Poly::one();
        let a = Z4Poly::new((0..20).map(|j| (j * 7 % 4) as u8).collect());
        assert_eq!(a.reduce_negacyclic(6), a.rem_monic(&m).unwrap());
    }

    #[test]
    fn composition() {
        // (x^2 + 1) evaluated at -x^13 modulo x^14 + 1 is x^26 + 1 = -x^12 + 1
        let m = &Z4Poly::monomial(1, 14) + &Z4Poly::one();
        let y = Z4Poly::monomial(3, 13);
        let r = p("1 0 1").compose_mod(&y, &m).unwrap();
        assert_eq!(r, &Z4Poly::one() + &Z4Poly::monomial(3, 12));
    }

    fn arb_poly() -> impl Strategy<Value = Z4Poly> {
        prop::collection::vec(0u8..4, 0..=31).prop_map(Z4Poly::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn projection_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).project_mod2(), a.project_mod2().mul(&b.project_mod2()));
            prop_assert_eq!((&a + &b).project_mod2(), a.project_mod2().add(&b.project_mod2()));
        }

        #[test]
        fn reciprocal_is_an_involution(c0 in 1u8..4, rest in arb_poly()) {
            let a = &rest.shift(1) + &Z4Poly::constant(c0);
            prop_assert_eq!(a.reciprocal().unwrap().reciprocal().unwrap(), a);
        }
    }
}

macro_rules! serde_via_text {
    ($ty:ty) => {
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

serde_via_text!(Z4Poly);
serde_via_text!(F2Poly);
