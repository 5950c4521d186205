//! Factorization of `x^n - 1` over Z4 for odd `n`, the conjugation pairing of its
//! factors, and the primitive idempotents of `Z4[x]/(x^{2n} + 1)`.

use crate::chainring::ChainRing;
use crate::error::{Error, Result};
use crate::z4poly::{hensel_lift_factor, lift_bezout, F2Poly, Z4Poly};

/// Everything derived from the factorization of `x^n - 1`.
///
/// Factors are indexed from 0. They are laid out so that the first `lambda` are
/// fixed by the reciprocal map and the remaining `2 * epsilon_pairs` come in
/// pairs `(lambda + k, lambda + epsilon_pairs + k)`. Factor 0 is `x - 1`.
#[derive(Clone, Debug)]
pub struct FactorizationContext {
    n: usize,
    factors: Vec<Z4Poly>,
    cofactors: Vec<Z4Poly>,
    idempotents: Vec<Z4Poly>,
    mu: Vec<usize>,
    delta: Vec<u8>,
    lambda: usize,
    epsilon_pairs: usize,
    rings: Vec<ChainRing>,
}

impl FactorizationContext {
    /// Factors `x^n - 1` and builds every derived table.
    pub fn new(n: i64) -> Result<Self> {
        if n <= 0 || n % 2 == 0 {
            return Err(Error::InvalidLength(n));
        }
        let n = n as usize;
        let factors = factor_xn_minus_1(n)?;
        let (mu, _) = compute_mu_delta(&factors)?;
        let order = layout(&mu);

        let factors: Vec<Z4Poly> = order.iter().map(|&i| factors[i].clone()).collect();
        let (mu, delta) = compute_mu_delta(&factors)?;
        let lambda = (0..factors.len()).filter(|&i| mu[i] == i).count();
        let epsilon_pairs = (factors.len() - lambda) / 2;

        let xn1 = xn_minus_1(n);
        let cofactors = factors
            .iter()
            .map(|f| {
                let (q, r) = xn1.div_rem_monic(f)?;
                if !r.is_zero() {
                    return Err(Error::Internal(format!("{f} does not divide x^{n} - 1")));
                }
                Ok(q)
            })
            .collect::<Result<Vec<_>>>()?;
        let rings = factors.iter().map(ChainRing::new).collect::<Result<Vec<_>>>()?;

        let mut ctx = FactorizationContext {
            n,
            factors,
            cofactors,
            idempotents: Vec::new(),
            mu,
            delta,
            lambda,
            epsilon_pairs,
            rings,
        };
        ctx.idempotents = compute_idempotents(&ctx)?;
        ctx.check_idempotents()?;
        Ok(ctx)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of monic basic irreducible factors.
    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Z4Poly] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &Z4Poly {
        &self.factors[i]
    }

    /// `(x^n - 1) / f_i`.
    pub fn cofactor(&self, i: usize) -> &Z4Poly {
        &self.cofactors[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.factors[i].degree().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.r()).map(|i| self.degree(i)).collect()
    }

    pub fn idempotents(&self) -> &[Z4Poly] {
        &self.idempotents
    }

    pub fn idempotent(&self, i: usize) -> &Z4Poly {
        &self.idempotents[i]
    }

    /// The index `j` with `reciprocal(f_i) = delta_i f_j`.
    pub fn mu(&self, i: usize) -> usize {
        self.mu[i]
    }

    pub fn mu_table(&self) -> &[usize] {
        &self.mu
    }

    /// The unit `delta_i` in `{1, 3}`.
    pub fn delta(&self, i: usize) -> u8 {
        self.delta[i]
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn epsilon_pairs(&self) -> usize {
        self.epsilon_pairs
    }

    pub fn ring(&self, i: usize) -> &ChainRing {
        &self.rings[i]
    }

    pub fn rings(&self) -> &[ChainRing] {
        &self.rings
    }

    /// Length of the ambient ring `A = Z4[x]/(x^{2n} + 1)`.
    pub fn ambient_len(&self) -> usize {
        2 * self.n
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.mu[i] == i
    }

    /// Sum to 1, pairwise orthogonal, idempotent, each `eps_i` a unit of `K_i`
    /// and zero in every other `K_j`.
    fn check_idempotents(&self) -> Result<()> {
        let len = self.ambient_len();
        let mut sum = Z4Poly::zero();
        for (i, e) in self.idempotents.iter().enumerate() {
            sum = &sum + e;
            if (e * e).reduce_negacyclic(len) != *e {
                return Err(Error::Internal(format!("eps_{i} is not idempotent")));
            }
            for (j, k) in self.rings.iter().enumerate() {
                let image = k.reduce(e);
                let ok = if i == j { k.is_one(&image) } else { image.is_zero() };
                if !ok {
                    return Err(Error::Internal(format!("eps_{i} has the wrong image in K_{j}")));
                }
            }
        }
        if sum.reduce_negacyclic(len) != Z4Poly::one() {
            return Err(Error::Internal("idempotents do not sum to 1".into()));
        }
        Ok(())
    }
}

fn xn_minus_1(n: usize) -> Z4Poly {
    &Z4Poly::monomial(1, n) - &Z4Poly::one()
}

/// The monic basic irreducible factors of `x^n - 1` over Z4 (n odd), with `x - 1`
/// first and the rest ordered by degree, then by coefficient vector.
pub fn factor_xn_minus_1(n: usize) -> Result<Vec<Z4Poly>> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::InvalidLength(n as i64));
    }
    let target = xn_minus_1(n);
    let bar = target.project_mod2();
    let irreducibles = bar.factor_squarefree()?;
    let mut out = Vec::with_capacity(irreducibles.len());
    for fbar in &irreducibles {
        let rest =
            bar.exact_div(fbar).ok_or_else(|| Error::Internal(format!("{fbar} does not divide x^{n} - 1 mod 2")))?;
        let (f, _) = hensel_lift_factor(fbar, &rest, &target)?;
        out.push(f);
    }
    let x_minus_1 = Z4Poly::from_ints(&[-1, 1]);
    out.sort_by(|a, b| (*a != x_minus_1, a.degree(), a.coeffs()).cmp(&(*b != x_minus_1, b.degree(), b.coeffs())));
    let product = out.iter().fold(Z4Poly::one(), |acc, f| &acc * f);
    if product != target {
        return Err(Error::ProductMismatch { expected: target.to_string(), got: product.to_string() });
    }
    Ok(out)
}

/// For each factor, the index `j` and unit `delta` with `reciprocal(f_i) = delta f_j`.
pub fn compute_mu_delta(factors: &[Z4Poly]) -> Result<(Vec<usize>, Vec<u8>)> {
    let mut mu = Vec::with_capacity(factors.len());
    let mut delta = Vec::with_capacity(factors.len());
    for f in factors {
        let rec = f.reciprocal()?;
        let lead = rec.coeffs().last().copied().unwrap_or(0);
        if lead % 2 == 0 {
            return Err(Error::Internal(format!("{f} has a non-unit constant term")));
        }
        // lead is its own inverse in Z4
        let monic = rec.scale(lead);
        let j = factors
            .iter()
            .position(|g| *g == monic)
            .ok_or_else(|| Error::Internal(format!("reciprocal of {f} is not a listed factor")))?;
        mu.push(j);
        delta.push(lead);
    }
    Ok((mu, delta))
}

/// Permutation placing fixed points first, then the first member of every pair,
/// then their partners in matching order.
fn layout(mu: &[usize]) -> Vec<usize> {
    let fixed = (0..mu.len()).filter(|&i| mu[i] == i);
    let firsts: Vec<usize> = (0..mu.len()).filter(|&i| mu[i] > i).collect();
    let seconds: Vec<usize> = firsts.iter().map(|&i| mu[i]).collect();
    fixed.chain(firsts).chain(seconds).collect()
}

/// `eps_i = a_i(-x^2) F_i(-x^2) mod (x^{2n} + 1)` from the lifted Bezout identity
/// `a_i F_i + b_i f_i = 1`.
pub fn compute_idempotents(ctx: &FactorizationContext) -> Result<Vec<Z4Poly>> {
    let len = ctx.ambient_len();
    (0..ctx.r())
        .map(|i| {
            let f = ctx.factor(i);
            let big_f = ctx.cofactor(i);
            let (g, s, t) = big_f.project_mod2().ext_gcd(&f.project_mod2());
            if !g.is_one() {
                return Err(Error::NotCoprime(big_f.to_string(), f.to_string()));
            }
            let (a, _) = lift_bezout(&s, &t, big_f, f)?;
            Ok((&a.subs_neg_x2() * &big_f.subs_neg_x2()).reduce_negacyclic(len))
        })
        .collect()
}

/// The involution `a(x) -> a(x^{-1})` of `A = Z4[x]/(x^{len} + 1)`, using `x^{-1} = -x^{len-1}`.
pub fn conjugate_in_ambient(a: &Z4Poly, len: usize) -> Z4Poly {
    let a = a.reduce_negacyclic(len);
    let mut out = vec![0u8; len];
    for (j, &c) in a.coeffs().iter().enumerate() {
        if j == 0 {
            out[0] = c;
        } else {
            out[len - j] = (4 - c) & 3;
        }
    }
    Z4Poly::new(out)
}

/// Residue-field helper used when reading parameters: the binary polynomial as
/// an element of `T_i`, rejecting degrees that do not fit.
pub fn check_rep(ctx: &FactorizationContext, i: usize, t: &F2Poly) -> Result<()> {
    let m = ctx.degree(i);
    match t.degree() {
        Some(d) if d >= m => Err(Error::DegreeMismatch { index: i, degree: d, m }),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> Z4Poly {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_bad_lengths() {
        for n in [0, -3, 2, 8] {
            assert_eq!(FactorizationContext::new(n).unwrap_err(), Error::InvalidLength(n));
        }
    }

    #[test]
    fn n1_is_a_single_fixed_factor() {
        let ctx = FactorizationContext::new(1).unwrap();
        assert_eq!(ctx.factors(), &[z("3 1")]);
        assert_eq!((ctx.lambda(), ctx.epsilon_pairs()), (1, 0));
        assert_eq!(ctx.idempotent(0), &Z4Poly::one());
        assert_eq!(ctx.delta(0), 3);
    }

    #[test]
    fn n3_factors() {
        let ctx = FactorizationContext::new(3).unwrap();
        assert_eq!(ctx.factors(), &[z("3 1"), z("1 1 1")]);
        assert_eq!(ctx.mu_table(), &[0, 1]);
        assert_eq!(ctx.lambda(), 2);
    }

    #[test]
    fn n7_factors_and_pairing() {
        let ctx = FactorizationContext::new(7).unwrap();
        assert_eq!(ctx.factors(), &[z("3 1"), z("3 1 2 1"), z("3 2 3 1")]);
        assert_eq!(ctx.mu_table(), &[0, 2, 1]);
        assert_eq!(&ctx.delta, &[3, 3, 3]);
        assert_eq!((ctx.lambda(), ctx.epsilon_pairs()), (1, 1));
    }

    #[test]
    fn n7_idempotents() {
        let ctx = FactorizationContext::new(7).unwrap();
        assert_eq!(
            ctx.idempotents(),
            &[z("3 0 1 0 3 0 1 0 3 0 1 0 3"), z("1 0 1 0 3 0 2 0 3 0 2 0 2"), z("1 0 2 0 2 0 1 0 2 0 1 0 3"),]
        );
    }

    #[test]
    fn pairing_counts() {
        for (n, lambda, eps) in [(5, 2, 0), (9, 3, 0), (15, 3, 1), (21, 2, 2), (31, 1, 3), (127, 1, 9)] {
            let ctx = FactorizationContext::new(n).unwrap();
            assert_eq!((ctx.lambda(), ctx.epsilon_pairs()), (lambda, eps), "n = {n}");
        }
    }

    #[test]
    fn conjugation_permutes_idempotents() {
        for n in [1, 3, 7, 15, 21] {
            let ctx = FactorizationContext::new(n).unwrap();
            for i in 0..ctx.r() {
                let c = conjugate_in_ambient(ctx.idempotent(i), ctx.ambient_len());
                assert_eq!(&c, ctx.idempotent(ctx.mu(i)), "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn mersenne_factor_counts() {
        for p in [3u32, 5] {
            let n = (1i64 << p) - 1;
            let ctx = FactorizationContext::new(n).unwrap();
            assert_eq!(ctx.r() as i64, 1 + ((1i64 << p) - 2) / p as i64);
        }
    }

    #[test]
    fn conjugation_is_an_involution() {
        let a = z("1 2 3 0 1 1");
        assert_eq!(conjugate_in_ambient(&conjugate_in_ambient(&a, 6), 6), a);
    }
}
