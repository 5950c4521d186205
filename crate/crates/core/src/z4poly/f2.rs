//! Dense polynomials over F2 and the factorization of squarefree polynomials.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Polynomial over F2, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F2Poly {
    bits: Vec<u8>,
}

impl F2Poly {
    pub fn new(bits: Vec<u8>) -> Self {
        let mut p = F2Poly { bits: bits.into_iter().map(|b| b & 1).collect() };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        F2Poly { bits: Vec::new() }
    }

    pub fn one() -> Self {
        F2Poly { bits: vec![1] }
    }

    pub fn x() -> Self {
        F2Poly { bits: vec![0, 1] }
    }

    pub fn monomial(deg: usize) -> Self {
        let mut bits = vec![0; deg + 1];
        bits[deg] = 1;
        F2Poly { bits }
    }

    /// Reads the low `width` bits of `mask` as coefficients (bit j is the coefficient of x^j).
    pub fn from_mask(mask: u64, width: usize) -> Self {
        F2Poly::new((0..width).map(|j| ((mask >> j) & 1) as u8).collect())
    }

    pub fn to_mask(&self) -> u64 {
        self.bits.iter().enumerate().fold(0u64, |acc, (j, &b)| acc | ((b as u64) << j))
    }

    fn trim(&mut self) {
        while self.bits.last() == Some(&0) {
            self.bits.pop();
        }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn coeff(&self, j: usize) -> u8 {
        self.bits.get(j).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.bits.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.bits == [1]
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        let len = self.bits.len().max(other.bits.len());
        F2Poly::new((0..len).map(|j| self.coeff(j) ^ other.coeff(j)).collect())
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        if self.is_zero() || other.is_zero() {
            return F2Poly::zero();
        }
        let mut out = vec![0u8; self.bits.len() + other.bits.len() - 1];
        for (i, &a) in self.bits.iter().enumerate() {
            if a == 1 {
                for (j, &b) in other.bits.iter().enumerate() {
                    out[i + j] ^= b;
                }
            }
        }
        F2Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &F2Poly) -> (F2Poly, F2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.bits.clone();
        if rem.len() <= dd {
            return (F2Poly::zero(), self.clone());
        }
        let mut quo = vec![0u8; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            if rem[top] == 1 {
                let shift = top - dd;
                quo[shift] = 1;
                for (j, &b) in divisor.bits.iter().enumerate() {
                    rem[shift + j] ^= b;
                }
            }
        }
        (F2Poly::new(quo), F2Poly::new(rem))
    }

    pub fn rem(&self, divisor: &F2Poly) -> F2Poly {
        self.div_rem(divisor).1
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &F2Poly) -> Option<F2Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn mul_mod(&self, other: &F2Poly, modulus: &F2Poly) -> F2Poly {
        self.mul(other).rem(modulus)
    }

    pub fn pow_mod(&self, mut exp: u64, modulus: &F2Poly) -> F2Poly {
        let mut base = self.rem(modulus);
        let mut acc = F2Poly::one().rem(modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            base = base.mul_mod(&base, modulus);
            exp >>= 1;
        }
        acc
    }

    pub fn gcd(&self, other: &F2Poly) -> F2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g = gcd(self, other)`.
    pub fn ext_gcd(&self, other: &F2Poly) -> (F2Poly, F2Poly, F2Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (F2Poly::one(), F2Poly::zero());
        let (mut t0, mut t1) = (F2Poly::zero(), F2Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.add(&q.mul(&s1));
            let t = t0.add(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        (r0, s0, t0)
    }

    /// Inverse modulo `modulus`, if it exists.
    pub fn inv_mod(&self, modulus: &F2Poly) -> Option<F2Poly> {
        let (g, s, _) = self.rem(modulus).ext_gcd(modulus);
        g.is_one().then(|| s.rem(modulus))
    }

    pub fn derivative(&self) -> F2Poly {
        F2Poly::new(self.bits.iter().enumerate().skip(1).map(|(j, &b)| if j % 2 == 1 { b } else { 0 }).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Irreducibility by factoring: constants are not irreducible.
    pub fn is_irreducible(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(1) => true,
            Some(_) => self.is_squarefree() && berlekamp_nullity(self) == 1,
        }
    }

    /// Monic irreducible factors of a squarefree polynomial, sorted by
    /// (degree, coefficient sequence).
    pub fn factor_squarefree(&self) -> Result<Vec<F2Poly>> {
        if !self.is_squarefree() {
            return Err(Error::Internal(format!("{self} is not squarefree")));
        }
        if self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let basis = berlekamp_basis(self);
        let target = basis.len();
        let mut factors = vec![self.clone()];
        for v in basis.iter().filter(|v| v.degree().unwrap_or(0) > 0) {
            if factors.len() == target {
                break;
            }
            let mut next = Vec::with_capacity(factors.len() * 2);
            for h in factors {
                if h.degree() == Some(1) {
                    next.push(h);
                    continue;
                }
                let g0 = h.gcd(&v.rem(&h));
                let g1 = h.gcd(&v.add(&F2Poly::one()).rem(&h));
                let nontrivial = |g: &F2Poly| g.degree().unwrap_or(0) > 0 && g.degree() < h.degree();
                if nontrivial(&g0) {
                    next.push(h.exact_div(&g0).expect("gcd divides"));
                    next.push(g0);
                } else if nontrivial(&g1) {
                    next.push(h.exact_div(&g1).expect("gcd divides"));
                    next.push(g1);
                } else {
                    next.push(h);
                }
            }
            factors = next;
        }
        if factors.len() != target {
            return Err(Error::Internal(format!("Berlekamp splitting produced {} of {target} factors", factors.len())));
        }
        factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.bits.cmp(&b.bits)));
        Ok(factors)
    }
}

/// Kernel of v -> v^2 - v on F2[x]/(f), as polynomials of degree < deg f.
fn berlekamp_basis(f: &F2Poly) -> Vec<F2Poly> {
    let d = f.degree().unwrap_or(0);
    // column i holds x^(2i) - x^i mod f
    let mut rows = vec![vec![0u8; d]; d];
    for i in 0..d {
        let col = F2Poly::monomial(2 * i).rem(f).add(&F2Poly::monomial(i));
        for (r, row) in rows.iter_mut().enumerate() {
            row[i] = col.coeff(r);
        }
    }
    nullspace_f2(rows, d).into_iter().map(F2Poly::new).collect()
}

fn berlekamp_nullity(f: &F2Poly) -> usize {
    berlekamp_basis(f).len()
}

/// Basis of the right nullspace of a binary matrix with `cols` columns.
pub(crate) fn nullspace_f2(mut rows: Vec<Vec<u8>>, cols: usize) -> Vec<Vec<u8>> {
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] == 1 {
                let (a, b) = if r < rank {
                    let (lo, hi) = rows.split_at_mut(rank);
                    (&mut lo[r], &hi[0])
                } else {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&mut hi[0], &lo[rank])
                };
                for (x, y) in a.iter_mut().zip(b.iter()) {
                    *x ^= y;
                }
            }
        }
        pivot_cols.push(c);
        rank += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u8; cols];
            v[fc] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = rows[r][fc];
            }
            v
        })
        .collect()
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.bits.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Poly[{self}]")
    }
}

impl FromStr for F2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .split_whitespace()
            .map(|tok| match tok {
                "0" => Ok(0),
                "1" => Ok(1),
                _ => Err(Error::Parse(format!("invalid binary coefficient {tok:?} in {s:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(F2Poly::new(bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> F2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn factors_x7_minus_1() {
        let f = F2Poly::monomial(7).add(&F2Poly::one());
        let fs = f.factor_squarefree().unwrap();
        assert_eq!(fs, vec![p("1 1"), p("1 0 1 1"), p("1 1 0 1")]);
        let prod = fs.iter().fold(F2Poly::one(), |acc, g| acc.mul(g));
        assert_eq!(prod, f);
    }

    #[test]
    fn factor_count_matches_cyclotomic_cosets() {
        // number of 2-cyclotomic cosets mod n
        for (n, r) in [(1, 1), (3, 2), (5, 2), (7, 3), (9, 3), (15, 5), (31, 7), (127, 19)] {
            let f = F2Poly::monomial(n).add(&F2Poly::one());
            let fs = f.factor_squarefree().unwrap();
            assert_eq!(fs.len(), r, "n = {n}");
            assert!(fs.iter().all(F2Poly::is_irreducible));
            assert_eq!(fs.iter().fold(F2Poly::one(), |acc, g| acc.mul(g)), f);
        }
    }

    #[test]
    fn ext_gcd_identity() {
        let a = p("1 1 0 1");
        let b = p("1 0 1 1");
        let (g, s, t) = a.ext_gcd(&b);
        assert!(g.is_one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), F2Poly::one());
    }

    #[test]
    fn irreducibility() {
        assert!(p("1 1 1").is_irreducible());
        assert!(!p("1 0 1").is_irreducible());
        assert!(!p("1").is_irreducible());
        assert!(p("0 1").is_irreducible());
    }

    #[test]
    fn inverse_in_residue_field() {
        let m = p("1 1 0 1");
        for mask in 1..8u64 {
            let a = F2Poly::from_mask(mask, 3);
            let inv = a.inv_mod(&m).unwrap();
            assert!(a.mul_mod(&inv, &m).is_one());
        }
    }
}
