//! Exhaustive reference computations for tiny lengths, independent of the
//! ideal tables.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gray::theta;
use crate::negacode::{NegacyclicCode, RWord, Z4LinearCode};

const MAX_AMBIENT_BITS: usize = 16;

/// Every codeword of a code, as a set of `R`-words.
pub fn codeword_set(code: &NegacyclicCode) -> Result<HashSet<RWord>> {
    Ok(code.to_z4_code()?.codewords()?.into_iter().map(|w| RWord::unflatten(&w)).collect())
}

fn all_r_words(len: usize) -> Result<impl Iterator<Item = RWord>> {
    if 4 * len > MAX_AMBIENT_BITS {
        return Err(Error::OverBudget { bits: 4 * len as u32, max_bits: MAX_AMBIENT_BITS as u32 });
    }
    Ok((0u32..1 << (4 * len)).map(move |x| {
        let symbols: Vec<(u8, u8)> =
            (0..len).map(|j| (((x >> (4 * j)) & 3) as u8, ((x >> (4 * j + 2)) & 3) as u8)).collect();
        RWord::new(&symbols)
    }))
}

/// `{y in R^len : <x, y> = 0 for all x in words}`.
pub fn r_orthogonal_complement(len: usize, words: &HashSet<RWord>) -> Result<HashSet<RWord>> {
    Ok(all_r_words(len)?.filter(|y| words.iter().all(|x| x.inner(y) == (0, 0))).collect())
}

/// A code of length `2n` is self-dual iff its words are pairwise orthogonal and it
/// has `16^n` of them.
pub fn is_self_dual_brute(code: &NegacyclicCode) -> Result<bool> {
    let words = codeword_set(code)?;
    let n = code.ctx().n();
    if words.len() as u64 != 1u64 << (4 * n) {
        return Ok(false);
    }
    let list: Vec<&RWord> = words.iter().collect();
    Ok(list.iter().all(|x| list.iter().all(|y| x.inner(y) == (0, 0))))
}

pub fn theta_set(words: &HashSet<RWord>) -> HashSet<Vec<u8>> {
    words.iter().map(theta).collect()
}

/// `{y in Z4^len : sum x_j y_j = 0 for all x in words}`.
pub fn z4_orthogonal_complement(len: usize, words: &HashSet<Vec<u8>>) -> Result<HashSet<Vec<u8>>> {
    if 2 * len > MAX_AMBIENT_BITS {
        return Err(Error::OverBudget { bits: 2 * len as u32, max_bits: MAX_AMBIENT_BITS as u32 });
    }
    Ok((0u32..1 << (2 * len))
        .map(|x| (0..len).map(|j| ((x >> (2 * j)) & 3) as u8).collect::<Vec<u8>>())
        .filter(|y| words.iter().all(|x| x.iter().zip(y).map(|(p, q)| (p * q) as u32).sum::<u32>() % 4 == 0))
        .collect())
}

pub fn z4_word_set(code: &Z4LinearCode) -> Result<HashSet<Vec<u8>>> {
    Ok(code.codewords()?.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    use crate::factorbase::FactorizationContext;
    use crate::negacode::enumerate_all;

    #[test]
    fn complement_of_zero_is_everything() {
        let zero = HashSet::from([RWord::zero(1)]);
        assert_eq!(r_orthogonal_complement(1, &zero).unwrap().len(), 16);
        assert!(r_orthogonal_complement(5, &zero).is_err());
    }

    #[test]
    fn length_two_sizes() {
        let ctx = Arc::new(FactorizationContext::new(1).unwrap());
        for code in enumerate_all(&ctx) {
            let words = codeword_set(&code).unwrap();
            assert_eq!(words.len() as u64, 1u64 << code.log2_cardinality());
            let perp = r_orthogonal_complement(2, &words).unwrap();
            assert_eq!(words.len() * perp.len(), 256);
        }
    }
}
