//! The finite chain ring `K_f = Z4[x]/(f(-x^2))` of length 4, whose maximal ideal
//! is generated by `f(x)` for a monic basic irreducible `f`.

use std::fmt;

use crate::error::{Error, Result};
use crate::factorbase::FactorizationContext;
use crate::z4poly::{int_poly_mul, F2Poly, Z4Poly};

/// A residue of `Z4[x]` modulo `f(-x^2)`, stored as its canonical representative
/// of degree `< 2m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ChainRingElem(Z4Poly);

impl ChainRingElem {
    pub fn poly(&self) -> &Z4Poly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for ChainRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for ChainRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}]", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct ChainRing {
    f: Z4Poly,
    fbar: F2Poly,
    modulus: Z4Poly,
    m: usize,
    pi: ChainRingElem,
    g: ChainRingElem,
    omega: ChainRingElem,
}

impl ChainRing {
    /// Builds `K_f` for a monic `f` whose reduction mod 2 is irreducible.
    ///
    /// The unit `g` with `f^2 = 2g` comes from `((-1)^m f(-x^2) - f(x)^2) / 2`
    /// expanded over the integers with the centered lift of `f`; `omega = g^{-1}`.
    pub fn new(f: &Z4Poly) -> Result<Self> {
        if !f.is_monic() {
            return Err(Error::NonMonicModulus(f.to_string()));
        }
        let fbar = f.project_mod2();
        if !fbar.is_irreducible() {
            return Err(Error::Reducible(f.to_string()));
        }
        let m = fbar.degree().unwrap_or(0);
        let mut modulus = f.subs_neg_x2();
        if m % 2 == 1 {
            modulus = -&modulus;
        }

        let lifted = f.centered();
        let mut sub = vec![0i64; 2 * lifted.len()];
        for (j, &c) in lifted.iter().enumerate() {
            // (-1)^m * c_j * (-1)^j
            sub[2 * j] = if (m + j).is_multiple_of(2) { c } else { -c };
        }
        let sq = int_poly_mul(&lifted, &lifted);
        let len = sub.len().max(sq.len());
        let diff: Vec<i64> =
            (0..len).map(|j| sub.get(j).copied().unwrap_or(0) - sq.get(j).copied().unwrap_or(0)).collect();
        if diff.iter().any(|c| c % 2 != 0) {
            return Err(Error::Internal(format!("(-1)^m f(-x^2) - f^2 is not even for {f}")));
        }
        let half: Vec<i64> = diff.iter().map(|c| c / 2).collect();

        let mut ring = ChainRing {
            f: f.clone(),
            fbar,
            modulus,
            m,
            pi: ChainRingElem::default(),
            g: ChainRingElem::default(),
            omega: ChainRingElem::default(),
        };
        ring.pi = ring.reduce(f);
        ring.g = ring.reduce(&Z4Poly::from_ints(&half));
        ring.omega = ring.inverse(&ring.g).ok_or_else(|| Error::Internal(format!("g = {} is not a unit", ring.g)))?;
        ring.verify()?;
        Ok(ring)
    }

    fn verify(&self) -> Result<()> {
        let f2 = self.mul(&self.pi, &self.pi);
        if f2 != self.scale(&self.g, 2) {
            return Err(Error::Internal(format!("f^2 != 2g in K_{}", self.f)));
        }
        if !self.is_one(&self.mul(&self.g, &self.omega)) {
            return Err(Error::Internal("g * omega != 1".into()));
        }
        if self.mul(&self.omega, &f2) != self.constant(2) {
            return Err(Error::Internal("omega f^2 != 2".into()));
        }
        let f3 = self.mul(&f2, &self.pi);
        if f3.is_zero() || !self.mul(&f3, &self.pi).is_zero() {
            return Err(Error::Internal("nilpotency index of f is not 4".into()));
        }
        Ok(())
    }

    pub fn f(&self) -> &Z4Poly {
        &self.f
    }

    pub fn fbar(&self) -> &F2Poly {
        &self.fbar
    }

    /// The monic modulus `±f(-x^2)`.
    pub fn modulus(&self) -> &Z4Poly {
        &self.modulus
    }

    /// Degree of `f`; the residue field has `2^m` elements.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The maximal-ideal generator `f(x)`.
    pub fn pi(&self) -> &ChainRingElem {
        &self.pi
    }

    pub fn g(&self) -> &ChainRingElem {
        &self.g
    }

    pub fn omega(&self) -> &ChainRingElem {
        &self.omega
    }

    /// Number of elements, `4^(2m)`.
    pub fn size(&self) -> u64 {
        1u64 << (4 * self.m)
    }

    pub fn reduce(&self, p: &Z4Poly) -> ChainRingElem {
        ChainRingElem(p.rem_monic(&self.modulus).expect("modulus is monic"))
    }

    pub fn zero(&self) -> ChainRingElem {
        ChainRingElem(Z4Poly::zero())
    }

    pub fn one(&self) -> ChainRingElem {
        self.constant(1)
    }

    pub fn constant(&self, c: u8) -> ChainRingElem {
        ChainRingElem(Z4Poly::constant(c))
    }

    pub fn is_one(&self, e: &ChainRingElem) -> bool {
        e.0 == Z4Poly::one()
    }

    pub fn add(&self, a: &ChainRingElem, b: &ChainRingElem) -> ChainRingElem {
        ChainRingElem(&a.0 + &b.0)
    }

    pub fn sub(&self, a: &ChainRingElem, b: &ChainRingElem) -> ChainRingElem {
        ChainRingElem(&a.0 - &b.0)
    }

    pub fn neg(&self, a: &ChainRingElem) -> ChainRingElem {
        ChainRingElem(-&a.0)
    }

    pub fn scale(&self, a: &ChainRingElem, c: u8) -> ChainRingElem {
        ChainRingElem(a.0.scale(c))
    }

    pub fn mul(&self, a: &ChainRingElem, b: &ChainRingElem) -> ChainRingElem {
        self.reduce(&(&a.0 * &b.0))
    }

    pub fn pow(&self, a: &ChainRingElem, mut exp: usize) -> ChainRingElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn pi_pow(&self, k: usize) -> ChainRingElem {
        self.pow(&self.pi, k)
    }

    /// Embeds a residue-field representative (binary polynomial of degree < m).
    pub fn from_rep(&self, t: &F2Poly) -> ChainRingElem {
        self.reduce(&Z4Poly::from_f2(t))
    }

    /// Image in the residue field `F2[x]/(fbar)`.
    pub fn residue(&self, e: &ChainRingElem) -> F2Poly {
        e.0.project_mod2().rem(&self.fbar)
    }

    /// The representative set `T_f`: binary polynomials of degree < m, ordered by
    /// their coefficient bitmask.
    pub fn reps(&self) -> Vec<F2Poly> {
        (0..1u64 << self.m).map(|mask| F2Poly::from_mask(mask, self.m)).collect()
    }

    pub fn is_unit(&self, e: &ChainRingElem) -> bool {
        !self.residue(e).is_zero()
    }

    /// Inverse of a unit by Newton iteration from the residue-field inverse.
    pub fn inverse(&self, u: &ChainRingElem) -> Option<ChainRingElem> {
        let w0 = self.residue(u).inv_mod(&self.fbar)?;
        let mut w = self.from_rep(&w0);
        let two = self.constant(2);
        for _ in 0..3 {
            let uw = self.mul(u, &w);
            if self.is_one(&uw) {
                return Some(w);
            }
            w = self.mul(&w, &self.sub(&two, &uw));
        }
        self.is_one(&self.mul(u, &w)).then_some(w)
    }

    /// Exact division by `f(x)`: returns some `q` with `f q = e`, or `None` if
    /// `e` is not in the maximal ideal. `q` is unique modulo `f^3`.
    pub fn div_pi(&self, e: &ChainRingElem) -> Option<ChainRingElem> {
        let h = e.0.project_mod2().exact_div(&self.fbar)?;
        let h = Z4Poly::from_f2(&h);
        let rest = self.sub(e, &self.reduce(&(&self.f * &h)));
        let k = rest.0.halve()?;
        let corr = self.mul(&self.omega, &self.mul(&self.pi, &self.reduce(&k)));
        Some(self.add(&self.reduce(&h), &corr))
    }

    /// Exact division by `f^k`.
    pub fn div_pi_pow(&self, e: &ChainRingElem, k: usize) -> Option<ChainRingElem> {
        (0..k).try_fold(e.clone(), |acc, _| self.div_pi(&acc))
    }

    /// The `f`-adic digits `(t0, t1, t2, t3)` with `e = sum t_j f^j`, `t_j` in `T_f`.
    pub fn digits(&self, e: &ChainRingElem) -> [F2Poly; 4] {
        let mut out: [F2Poly; 4] = Default::default();
        let mut cur = e.clone();
        for (j, slot) in out.iter_mut().enumerate() {
            let t = self.residue(&cur);
            *slot = t.clone();
            if j < 3 {
                cur = self
                    .div_pi(&self.sub(&cur, &self.from_rep(&t)))
                    .expect("difference with the leading digit lies in the maximal ideal");
            }
        }
        out
    }

    pub fn digit(&self, e: &ChainRingElem, j: usize) -> F2Poly {
        self.digits(e)[j].clone()
    }

    pub fn recompose(&self, digits: &[F2Poly]) -> ChainRingElem {
        digits.iter().rev().fold(self.zero(), |acc, t| self.add(&self.mul(&acc, &self.pi), &self.from_rep(t)))
    }

    /// Least `j` with a nonzero digit `t_j`; 4 for zero.
    pub fn pi_degree(&self, e: &ChainRingElem) -> usize {
        let mut cur = e.clone();
        for j in 0..4 {
            if cur.is_zero() {
                return 4;
            }
            if !self.residue(&cur).is_zero() {
                return j;
            }
            cur = self.div_pi(&cur).expect("element of the maximal ideal");
        }
        4
    }

    /// Truncation to the digits below `k`: the canonical representative of `e` mod `f^k`.
    pub fn truncate(&self, e: &ChainRingElem, k: usize) -> ChainRingElem {
        let d = self.digits(e);
        self.recompose(&d[..k.min(4)])
    }

    /// All `16^m` elements, indexed consistently with [`ChainRing::index_of`].
    pub fn elements(&self) -> Result<Vec<ChainRingElem>> {
        const BOUND: u64 = 4096;
        if self.size() > BOUND {
            return Err(Error::TooLarge { size: self.size(), bound: BOUND });
        }
        let width = 2 * self.m;
        Ok((0..self.size())
            .map(|idx| ChainRingElem(Z4Poly::new((0..width).map(|j| ((idx >> (2 * j)) & 3) as u8).collect())))
            .collect())
    }

    pub fn index_of(&self, e: &ChainRingElem) -> usize {
        e.0.coeffs().iter().enumerate().fold(0usize, |acc, (j, &c)| acc | ((c as usize) << (2 * j)))
    }
}

/// The conjugation `mu_i : K_i -> K_mu(i)`, `c(x) -> c(x^{-1}) = c(-x^{2n-1})`.
pub fn conjugate_mu(ctx: &FactorizationContext, i: usize, e: &ChainRingElem) -> Result<ChainRingElem> {
    if i >= ctx.r() {
        return Err(Error::IndexOutOfRange { index: i, len: ctx.r() });
    }
    let target = ctx.ring(ctx.mu(i));
    let x_inv = Z4Poly::monomial(3, 2 * ctx.n() - 1);
    Ok(ChainRingElem(e.0.compose_mod(&x_inv, target.modulus())?))
}
