use std::fmt;

use crate::error::{Error, Result};

/// A `Z4`-linear code given by a generator matrix in standard form: `k1` rows of
/// order 4, each with an entry 1 in its own pivot column that is zero in every
/// other row, and `k2` rows of order 2 (entries in `{0, 2}`) in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4LinearCode {
    length: usize,
    gens_order4: Vec<Vec<u8>>,
    pivots4: Vec<usize>,
    gens_order2: Vec<Vec<u8>>,
    pivots2: Vec<usize>,
}

impl Z4LinearCode {
    /// Reduces an arbitrary spanning set to standard form.
    pub fn from_rows(length: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        let mut rest: Vec<Vec<u8>> = Vec::with_capacity(rows.len());
        for r in rows {
            if r.len() != length {
                return Err(Error::LengthMismatch(r.len(), length));
            }
            rest.push(r.into_iter().map(|x| x & 3).collect());
        }

        let mut gens_order4: Vec<Vec<u8>> = Vec::new();
        let mut pivots4 = Vec::new();
        for col in 0..length {
            let Some(pos) = rest.iter().position(|r| r[col] & 1 == 1) else {
                continue;
            };
            let mut pivot = rest.swap_remove(pos);
            if pivot[col] == 3 {
                pivot.iter_mut().for_each(|x| *x = (4 - *x) & 3);
            }
            for r in rest.iter_mut().chain(gens_order4.iter_mut()) {
                let c = r[col];
                if c != 0 {
                    for (x, p) in r.iter_mut().zip(&pivot) {
                        *x = (*x + 4 - (c * p) % 4) & 3;
                    }
                }
            }
            gens_order4.push(pivot);
            pivots4.push(col);
        }

        // every remaining entry is even
        let mut binary: Vec<Vec<u8>> = rest.iter().map(|r| r.iter().map(|x| x >> 1).collect()).collect();
        let mut gens_order2: Vec<Vec<u8>> = Vec::new();
        let mut pivots2 = Vec::new();
        for col in 0..length {
            let Some(pos) = binary.iter().position(|r| r[col] == 1) else {
                continue;
            };
            let pivot = binary.swap_remove(pos);
            for r in binary.iter_mut().chain(gens_order2.iter_mut()) {
                if r[col] == 1 {
                    r.iter_mut().zip(&pivot).for_each(|(x, p)| *x ^= p);
                }
            }
            gens_order2.push(pivot);
            pivots2.push(col);
        }
        let gens_order2 = gens_order2.into_iter().map(|r| r.into_iter().map(|x| 2 * x).collect()).collect();
        Ok(Z4LinearCode { length, gens_order4, pivots4, gens_order2, pivots2 })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn k1(&self) -> usize {
        self.gens_order4.len()
    }

    pub fn k2(&self) -> usize {
        self.gens_order2.len()
    }

    pub fn gens_order4(&self) -> &[Vec<u8>] {
        &self.gens_order4
    }

    pub fn gens_order2(&self) -> &[Vec<u8>] {
        &self.gens_order2
    }

    /// `log2 |C| = 2 k1 + k2`.
    pub fn log2_size(&self) -> usize {
        2 * self.k1() + self.k2()
    }

    pub fn type_string(&self) -> String {
        format!("4^{}2^{}", self.k1(), self.k2())
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        if word.len() != self.length {
            return false;
        }
        let mut w: Vec<u8> = word.iter().map(|x| x & 3).collect();
        for (row, &p) in self.gens_order4.iter().zip(&self.pivots4) {
            let c = w[p];
            if c != 0 {
                for (x, r) in w.iter_mut().zip(row) {
                    *x = (*x + 4 - (c * r) % 4) & 3;
                }
            }
        }
        if w.iter().any(|x| x & 1 == 1) {
            return false;
        }
        for (row, &p) in self.gens_order2.iter().zip(&self.pivots2) {
            if w[p] == 2 {
                for (x, r) in w.iter_mut().zip(row) {
                    *x = (*x + r) & 3;
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// All codewords; only for small codes.
    pub fn codewords(&self) -> Result<Vec<Vec<u8>>> {
        const MAX_BITS: usize = 20;
        if self.log2_size() > MAX_BITS {
            return Err(Error::OverBudget { bits: self.log2_size() as u32, max_bits: MAX_BITS as u32 });
        }
        let mut words = vec![vec![0u8; self.length]];
        for (row, radix) in self.gens_order4.iter().map(|r| (r, 4u8)).chain(self.gens_order2.iter().map(|r| (r, 2u8))) {
            let mut next = Vec::with_capacity(words.len() * radix as usize);
            for w in &words {
                for c in 0..radix {
                    next.push(w.iter().zip(row).map(|(x, r)| (x + c * r) & 3).collect());
                }
            }
            words = next;
        }
        Ok(words)
    }
}

impl fmt::Display for Z4LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "length {} type {}", self.length, self.type_string())?;
        for row in self.gens_order4.iter().chain(&self.gens_order2) {
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn zero_and_full() {
        let zero = Z4LinearCode::from_rows(3, vec![vec![0, 0, 0]]).unwrap();
        assert_eq!((zero.k1(), zero.k2()), (0, 0));
        let full = Z4LinearCode::from_rows(2, vec![vec![1, 0], vec![0, 3]]).unwrap();
        assert_eq!(full.type_string(), "4^22^0");
    }

    #[test]
    fn mixed_type() {
        // span{(1,1,2), (2,2,0), (0,2,2)}
        let c = Z4LinearCode::from_rows(3, vec![vec![1, 1, 2], vec![2, 2, 0], vec![0, 2, 2]]).unwrap();
        assert_eq!((c.k1(), c.k2()), (1, 1));
        assert!(c.contains(&[3, 1, 0]));
        assert!(!c.contains(&[0, 0, 2]));
    }

    #[test]
    fn codewords_agree_with_membership() {
        let rows = vec![vec![1, 3, 0, 2], vec![2, 0, 2, 2], vec![3, 1, 2, 0], vec![0, 2, 0, 2]];
        let c = Z4LinearCode::from_rows(4, rows.clone()).unwrap();
        let words: HashSet<Vec<u8>> = c.codewords().unwrap().into_iter().collect();
        assert_eq!(words.len(), 1 << c.log2_size());
        // brute-force span
        let mut span: HashSet<Vec<u8>> = HashSet::from([vec![0u8; 4]]);
        loop {
            let before = span.len();
            let current: Vec<Vec<u8>> = span.iter().cloned().collect();
            for w in current {
                for r in &rows {
                    span.insert(w.iter().zip(r).map(|(x, y)| (x + y) & 3).collect());
                }
            }
            if span.len() == before {
                break;
            }
        }
        assert_eq!(span, words);
        for a in 0..256u32 {
            let w: Vec<u8> = (0..4).map(|j| ((a >> (2 * j)) & 3) as u8).collect();
            assert_eq!(c.contains(&w), words.contains(&w));
        }
    }
}
