use crate::error::{Error, Result};
use crate::z4poly::Z4Poly;

/// A word of `R^N`, coefficient `j` being `a_j + b_j v`; read as an element of
/// `R[x]/(x^N + 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RWord {
    a: Vec<u8>,
    b: Vec<u8>,
}

impl RWord {
    pub fn zero(len: usize) -> Self {
        RWord { a: vec![0; len], b: vec![0; len] }
    }

    pub fn new(symbols: &[(u8, u8)]) -> Self {
        RWord { a: symbols.iter().map(|s| s.0 & 3).collect(), b: symbols.iter().map(|s| s.1 & 3).collect() }
    }

    pub fn from_polys(a: &Z4Poly, b: &Z4Poly, len: usize) -> Self {
        let a = a.reduce_negacyclic(len);
        let b = b.reduce_negacyclic(len);
        RWord { a: (0..len).map(|j| a.coeff(j)).collect(), b: (0..len).map(|j| b.coeff(j)).collect() }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn symbol(&self, j: usize) -> (u8, u8) {
        (self.a[j], self.b[j])
    }

    pub fn symbols(&self) -> Vec<(u8, u8)> {
        self.a.iter().copied().zip(self.b.iter().copied()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0)
    }

    /// `(a_0, b_0, a_1, b_1, ...)`.
    pub fn flatten(&self) -> Vec<u8> {
        self.a.iter().zip(&self.b).flat_map(|(&x, &y)| [x, y]).collect()
    }

    pub fn unflatten(flat: &[u8]) -> Self {
        let symbols: Vec<(u8, u8)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
        RWord::new(&symbols)
    }

    /// `v (a + bv) = v (a + 2b)`.
    pub fn times_v(&self) -> Self {
        RWord { a: vec![0; self.len()], b: self.a.iter().zip(&self.b).map(|(x, y)| (x + 2 * y) & 3).collect() }
    }

    /// `(c_0, ..., c_{N-1}) -> (-c_{N-1}, c_0, ..., c_{N-2})`, i.e. multiplication by `x`.
    pub fn negashift(&self) -> Self {
        let rot = |v: &[u8]| {
            let n = v.len();
            let mut out = Vec::with_capacity(n);
            out.push((4 - v[n - 1]) & 3);
            out.extend_from_slice(&v[..n - 1]);
            out
        };
        RWord { a: rot(&self.a), b: rot(&self.b) }
    }

    pub fn add(&self, other: &RWord) -> RWord {
        let sum = |x: &[u8], y: &[u8]| x.iter().zip(y).map(|(p, q)| (p + q) & 3).collect();
        RWord { a: sum(&self.a, &other.a), b: sum(&self.b, &other.b) }
    }

    /// Product in `R[x]/(x^N + 1)`.
    pub fn mul(&self, other: &RWord) -> Result<RWord> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        let n = self.len();
        let conv = |x: &[u8], y: &[u8]| {
            let mut out = vec![0u8; n];
            for (i, &p) in x.iter().enumerate() {
                if p == 0 {
                    continue;
                }
                for (j, &q) in y.iter().enumerate() {
                    let k = i + j;
                    let t = (p * q) & 3;
                    if k < n {
                        out[k] = (out[k] + t) & 3;
                    } else {
                        out[k - n] = (out[k - n] + 4 - t) & 3;
                    }
                }
            }
            out
        };
        let aa = conv(&self.a, &other.a);
        let ab = conv(&self.a, &other.b);
        let ba = conv(&self.b, &other.a);
        let bb = conv(&self.b, &other.b);
        let b = (0..n).map(|j| (ab[j] + ba[j] + 2 * bb[j]) & 3).collect();
        Ok(RWord { a: aa, b })
    }

    /// `c(x^{-1}) = c_0 - sum_{j>0} c_j x^{N-j}`.
    pub fn conjugate(&self) -> RWord {
        let conj = |v: &[u8]| {
            let n = v.len();
            let mut out = vec![0u8; n];
            out[0] = v[0];
            for j in 1..n {
                out[n - j] = (4 - v[j]) & 3;
            }
            out
        };
        RWord { a: conj(&self.a), b: conj(&self.b) }
    }

    /// `sum_j c_j d_j` in `R`.
    pub fn inner(&self, other: &RWord) -> (u8, u8) {
        let mut a = 0u32;
        let mut b = 0u32;
        for j in 0..self.len() {
            let (x, y) = self.symbol(j);
            let (p, q) = other.symbol(j);
            a += (x * p) as u32;
            b += (x * q + y * p + 2 * y * q) as u32;
        }
        ((a & 3) as u8, (b & 3) as u8)
    }
}

/// `c(x) d(x^{-1}) = 0`, which makes every negacyclic shift of `c` orthogonal to `d`.
pub fn check_pairing_orthogonal(c: &RWord, d: &RWord) -> Result<bool> {
    Ok(c.mul(&d.conjugate())?.is_zero())
}

/// `a(x) -> a(-x)`: coefficient `j` times `(-1)^j`.
pub fn negate_variable(word: &RWord) -> Result<RWord> {
    if word.len().is_multiple_of(2) {
        return Err(Error::LengthMismatch(word.len(), word.len() + 1));
    }
    let flip = |v: &[u8]| -> Vec<u8> {
        v.iter().enumerate().map(|(j, &c)| if j % 2 == 0 { c } else { (4 - c) & 3 }).collect()
    };
    Ok(RWord { a: flip(&word.a), b: flip(&word.b) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_word(len: usize) -> impl Strategy<Value = RWord> {
        proptest::collection::vec((0u8..4, 0u8..4), len).prop_map(|s| RWord::new(&s))
    }

    #[test]
    fn pairing_basics() {
        let z = RWord::zero(6);
        let w = RWord::new(&[(1, 2), (0, 3), (2, 2), (1, 1), (3, 0), (0, 1)]);
        assert!(check_pairing_orthogonal(&z, &w).unwrap());
        let mut two = vec![(0u8, 0u8); 6];
        two[0] = (2, 0);
        let two = RWord::new(&two);
        assert!(check_pairing_orthogonal(&two, &two).unwrap());
        assert!(check_pairing_orthogonal(&z, &RWord::zero(4)).is_err());
    }

    #[test]
    fn negation_of_x() {
        let x = RWord::new(&[(0, 0), (1, 0), (0, 0)]);
        assert_eq!(negate_variable(&x).unwrap(), RWord::new(&[(0, 0), (3, 0), (0, 0)]));
        let c = RWord::new(&[(2, 1), (0, 0), (0, 0)]);
        assert_eq!(negate_variable(&c).unwrap(), c);
        assert!(negate_variable(&RWord::zero(4)).is_err());
    }

    proptest! {
        #[test]
        fn negate_variable_is_an_involution(w in arb_word(7)) {
            prop_assert_eq!(negate_variable(&negate_variable(&w).unwrap()).unwrap(), w);
        }

        #[test]
        fn negashift_is_multiplication_by_x(w in arb_word(6)) {
            let x = RWord::new(&[(0, 0), (1, 0), (0, 0), (0, 0), (0, 0), (0, 0)]);
            prop_assert_eq!(w.negashift(), w.mul(&x).unwrap());
        }

        #[test]
        fn pairing_matches_inner_products(c in arb_word(6), d in arb_word(6)) {
            // c(x) d(x^{-1}) has coefficient k equal to <x^k d, c>-type sums; it is zero
            // exactly when c is orthogonal to every negacyclic shift of d
            let mut shifted = d.clone();
            let mut all_orthogonal = true;
            for _ in 0..6 {
                all_orthogonal &= c.inner(&shifted) == (0, 0);
                shifted = shifted.negashift();
            }
            prop_assert_eq!(check_pairing_orthogonal(&c, &d).unwrap(), all_orthogonal);
        }
    }
}
