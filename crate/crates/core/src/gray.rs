//! Gray map `R -> Z4^2`, `a + bv -> (a + b, b)`, Lee and Euclidean weights, and
//! exhaustive minimum-weight search over `Z4`-linear codes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::negacode::{RWord, Z4LinearCode};

const LEE: [u32; 4] = [0, 1, 2, 1];
const EUCLID: [u32; 4] = [0, 1, 4, 1];

pub fn gray_rho((a, b): (u8, u8)) -> (u8, u8) {
    ((a + b) & 3, b & 3)
}

pub fn lee_weight_z4(c: u8) -> u32 {
    LEE[(c & 3) as usize]
}

pub fn euclidean_weight_z4(c: u8) -> u32 {
    EUCLID[(c & 3) as usize]
}

/// `w_L(a + bv) = w_L(a + b) + w_L(b)`.
pub fn lee_weight_r((a, b): (u8, u8)) -> u32 {
    lee_weight_z4(a + b) + lee_weight_z4(b)
}

pub fn theta(word: &RWord) -> Vec<u8> {
    word.symbols()
        .into_iter()
        .flat_map(|s| {
            let (p, q) = gray_rho(s);
            [p, q]
        })
        .collect()
}

/// The Gray image of a code given in the flattened `(a, b)` coordinates.
pub fn gray_image(code: &Z4LinearCode) -> Result<Z4LinearCode> {
    let rows = code.gens_order4().iter().chain(code.gens_order2()).map(|r| theta(&RWord::unflatten(r))).collect();
    Z4LinearCode::from_rows(code.length(), rows)
}

/// `0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`.
pub fn z4_to_binary_gray(word: &[u8]) -> Vec<u8> {
    word.iter()
        .flat_map(|&c| match c & 3 {
            0 => [0, 0],
            1 => [0, 1],
            2 => [1, 1],
            _ => [1, 0],
        })
        .collect()
}

/// Shift by `block` positions to the right, negating the wrapped block.
pub fn twist_shift(word: &[u8], block: usize) -> Vec<u8> {
    let n = word.len();
    let mut out = Vec::with_capacity(n);
    out.extend(word[n - block..].iter().map(|&c| (4 - c) & 3));
    out.extend_from_slice(&word[..n - block]);
    out
}

/// Closure of a Gray image under the 2-symbol twisted shift, checked on generators.
pub fn is_quasi_twisted(image: &Z4LinearCode, block: usize) -> bool {
    if image.length() == 0 {
        return true;
    }
    image.gens_order4().iter().chain(image.gens_order2()).all(|row| image.contains(&twist_shift(row, block)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    pub min_lee: u32,
    pub min_euclidean: u32,
    pub codewords_scanned: u64,
}

/// Words of `Z4^L` packed as low and high bit planes.
#[derive(Clone, Copy)]
struct Packed<const W: usize> {
    lo: [u64; W],
    hi: [u64; W],
}

impl<const W: usize> Packed<W> {
    fn zero() -> Self {
        Packed { lo: [0; W], hi: [0; W] }
    }

    fn from_word(word: &[u8]) -> Self {
        let mut p = Self::zero();
        for (j, &c) in word.iter().enumerate() {
            p.lo[j / 64] |= ((c & 1) as u64) << (j % 64);
            p.hi[j / 64] |= (((c >> 1) & 1) as u64) << (j % 64);
        }
        p
    }

    #[inline(always)]
    fn add(&mut self, other: &Self) {
        for k in 0..W {
            let carry = self.lo[k] & other.lo[k];
            self.lo[k] ^= other.lo[k];
            self.hi[k] ^= other.hi[k] ^ carry;
        }
    }

    fn neg(&self) -> Self {
        let mut out = *self;
        for k in 0..W {
            out.hi[k] ^= self.lo[k];
        }
        out
    }

    /// `(count of odd symbols, count of symbols equal to 2)`.
    #[inline(always)]
    fn counts(&self) -> (u32, u32) {
        let mut odd = 0;
        let mut twos = 0;
        for k in 0..W {
            odd += self.lo[k].count_ones();
            twos += (self.hi[k] & !self.lo[k]).count_ones();
        }
        (odd, twos)
    }
}

pub const DEFAULT_MAX_BITS: u32 = 30;

/// Exact minimum Lee and Euclidean weights over all nonzero codewords.
///
/// Codewords are the sums of subsets of `{r, 2r : r order 4} u {s : s order 2}`;
/// each worker fixes the top bits of the subset and walks the rest in binary
/// Gray-code order, adding or subtracting one vector per step.
pub fn min_weights(code: &Z4LinearCode, threads: usize, max_bits: u32) -> Result<WeightProfile> {
    let bits = code.log2_size() as u32;
    if bits > max_bits {
        return Err(Error::OverBudget { bits, max_bits });
    }
    if bits == 0 {
        return Ok(WeightProfile { min_lee: 0, min_euclidean: 0, codewords_scanned: 0 });
    }
    let words = code.length().div_ceil(64);
    match words {
        0 | 1 => run::<1>(code, threads),
        2 => run::<2>(code, threads),
        3 => run::<3>(code, threads),
        4 => run::<4>(code, threads),
        _ => Err(Error::TooLarge { size: code.length() as u64, bound: 256 }),
    }
}

fn run<const W: usize>(code: &Z4LinearCode, threads: usize) -> Result<WeightProfile> {
    let mut basis: Vec<Packed<W>> = Vec::new();
    for r in code.gens_order4() {
        basis.push(Packed::from_word(r));
        let doubled: Vec<u8> = r.iter().map(|c| (2 * c) & 3).collect();
        basis.push(Packed::from_word(&doubled));
    }
    basis.extend(code.gens_order2().iter().map(|r| Packed::<W>::from_word(r)));
    let negs: Vec<Packed<W>> = basis.iter().map(|b| b.neg()).collect();

    let total = basis.len() as u32;
    let top = total.min(10);
    let low = total - top;

    let scan = |chunk: u64| -> (u32, u32) {
        let mut w = Packed::<W>::zero();
        for j in 0..top {
            if chunk >> j & 1 == 1 {
                w.add(&basis[(low + j) as usize]);
            }
        }
        let mut best = (u32::MAX, u32::MAX);
        let mut consider = |w: &Packed<W>| {
            let (odd, twos) = w.counts();
            best.0 = best.0.min(odd + 2 * twos);
            best.1 = best.1.min(odd + 4 * twos);
        };
        if chunk != 0 {
            consider(&w);
        }
        let mut state: u64 = 0;
        for step in 1..(1u64 << low) {
            let t = step.trailing_zeros() as usize;
            state ^= 1 << t;
            if state >> t & 1 == 1 {
                w.add(&basis[t]);
            } else {
                w.add(&negs[t]);
            }
            consider(&w);
        }
        best
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let (min_lee, min_euclidean) = pool.install(|| {
        (0..1u64 << top).into_par_iter().map(scan).reduce(|| (u32::MAX, u32::MAX), |a, b| (a.0.min(b.0), a.1.min(b.1)))
    });
    Ok(WeightProfile { min_lee, min_euclidean, codewords_scanned: (1u64 << total) - 1 })
}

/// Minimum weights by listing every codeword; for small codes.
pub fn naive_min_weights(code: &Z4LinearCode) -> Result<WeightProfile> {
    let words = code.codewords()?;
    let mut lee = u32::MAX;
    let mut euc = u32::MAX;
    let mut scanned = 0;
    for w in &words {
        if w.iter().all(|&c| c == 0) {
            continue;
        }
        scanned += 1;
        lee = lee.min(w.iter().map(|&c| lee_weight_z4(c)).sum());
        euc = euc.min(w.iter().map(|&c| euclidean_weight_z4(c)).sum());
    }
    if scanned == 0 {
        return Ok(WeightProfile { min_lee: 0, min_euclidean: 0, codewords_scanned: 0 });
    }
    Ok(WeightProfile { min_lee: lee, min_euclidean: euc, codewords_scanned: scanned })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rho_examples() {
        assert_eq!(gray_rho((0, 0)), (0, 0));
        assert_eq!(gray_rho((0, 1)), (1, 1));
        assert_eq!(gray_rho((2, 3)), (1, 3));
        assert_eq!(lee_weight_r((0, 1)), 2);
        assert_eq!(lee_weight_r((2, 0)), 2);
    }

    #[test]
    fn lee_weight_is_gray_image_weight() {
        for a in 0..4 {
            for b in 0..4 {
                let (p, q) = gray_rho((a, b));
                assert_eq!(lee_weight_r((a, b)), lee_weight_z4(p) + lee_weight_z4(q));
            }
        }
    }

    #[test]
    fn binary_gray_map() {
        assert_eq!(z4_to_binary_gray(&[0]), vec![0, 0]);
        assert_eq!(z4_to_binary_gray(&[2]), vec![1, 1]);
        for c in 0..4u8 {
            let bits = z4_to_binary_gray(&[c]);
            assert_eq!(bits.iter().map(|&b| b as u32).sum::<u32>(), lee_weight_z4(c));
        }
    }

    #[test]
    fn single_generator_of_twos() {
        let code = Z4LinearCode::from_rows(28, vec![vec![2; 28]]).unwrap();
        let p = min_weights(&code, 2, DEFAULT_MAX_BITS).unwrap();
        assert_eq!((p.min_lee, p.min_euclidean, p.codewords_scanned), (56, 112, 1));
    }

    #[test]
    fn budget_is_enforced() {
        let rows: Vec<Vec<u8>> = (0..4).map(|i| (0..4).map(|j| (i == j) as u8).collect()).collect();
        let code = Z4LinearCode::from_rows(4, rows).unwrap();
        assert_eq!(min_weights(&code, 1, 7), Err(Error::OverBudget { bits: 8, max_bits: 7 }));
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..40 {
            let len = rng.gen_range(4..70);
            let nrows = rng.gen_range(1..9);
            let rows: Vec<Vec<u8>> = (0..nrows).map(|_| (0..len).map(|_| rng.gen_range(0..4)).collect()).collect();
            let code = Z4LinearCode::from_rows(len, rows).unwrap();
            if code.log2_size() > 16 {
                continue;
            }
            let threads = 1 + trial % 3;
            assert_eq!(min_weights(&code, threads, 16).unwrap(), naive_min_weights(&code).unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn theta_is_additive(x in proptest::collection::vec((0u8..4, 0u8..4), 5),
                             y in proptest::collection::vec((0u8..4, 0u8..4), 5)) {
            let (wx, wy) = (RWord::new(&x), RWord::new(&y));
            let lhs = theta(&wx.add(&wy));
            let rhs: Vec<u8> = theta(&wx).iter().zip(theta(&wy)).map(|(a, b)| (a + b) & 3).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
