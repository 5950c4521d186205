//! Negacyclic codes of length `2n` over `R = Z4 + vZ4`, assembled as
//! `C = sum_i eps_i(x) C_i` from one ideal `C_i` of `K_i + vK_i` per factor.

mod word;
mod z4code;

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::chainring::{conjugate_mu, ChainRing, ChainRingElem};
use crate::error::{Error, Result};
use crate::factorbase::FactorizationContext;
use crate::ideals::{enumerate_ideals, ideal_count, identify_generated, Family, IdealSpec, RvElem};
use crate::z4poly::{F2Poly, Z4Poly};

pub use word::{check_pairing_orthogonal, negate_variable, RWord};
pub use z4code::Z4LinearCode;

#[derive(Clone, Debug)]
pub struct NegacyclicCode {
    ctx: Arc<FactorizationContext>,
    components: Vec<IdealSpec>,
}

impl PartialEq for NegacyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n() == other.ctx.n() && self.components == other.components
    }
}

impl Eq for NegacyclicCode {}

/// On-disk form: `{"n":7,"components":[{"family":"F7"}, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub n: usize,
    pub components: Vec<IdealSpec>,
}

impl NegacyclicCode {
    pub fn assemble(ctx: &Arc<FactorizationContext>, components: Vec<IdealSpec>) -> Result<Self> {
        if components.len() != ctx.r() {
            return Err(Error::Arity { expected: ctx.r(), got: components.len() });
        }
        for (i, spec) in components.iter().enumerate() {
            spec.validate(ctx.degree(i)).map_err(|e| match e {
                Error::DegreeMismatch { degree, m, .. } => Error::DegreeMismatch { index: i, degree, m },
                other => other,
            })?;
        }
        Ok(NegacyclicCode { ctx: Arc::clone(ctx), components })
    }

    pub fn ctx(&self) -> &Arc<FactorizationContext> {
        &self.ctx
    }

    pub fn components(&self) -> &[IdealSpec] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &IdealSpec {
        &self.components[i]
    }

    pub fn log2_cardinality(&self) -> usize {
        self.components.iter().enumerate().map(|(i, c)| c.log2_cardinality(self.ctx.degree(i))).sum()
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::one() << self.log2_cardinality()
    }

    pub fn to_file(&self) -> CodeFile {
        CodeFile { n: self.ctx.n(), components: self.components.clone() }
    }

    pub fn from_file(ctx: &Arc<FactorizationContext>, file: CodeFile) -> Result<Self> {
        if file.n != ctx.n() {
            return Err(Error::LengthMismatch(file.n, ctx.n()));
        }
        NegacyclicCode::assemble(ctx, file.components)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("code serializes")
    }

    /// Table dual: `D_mu(i)` is the conjugate of `Ann(C_i)` with parameters
    /// read off by digit extraction in `K_mu(i)`.
    pub fn dual(&self) -> NegacyclicCode {
        let mut comps = self.components.clone();
        for (i, spec) in self.components.iter().enumerate() {
            comps[self.ctx.mu(i)] = dual_component(&self.ctx, i, spec);
        }
        NegacyclicCode { ctx: Arc::clone(&self.ctx), components: comps }
    }

    /// Dual computed by conjugating the annihilator generators and identifying the
    /// resulting ideal from its canonical form.
    pub fn dual_generic(&self) -> Result<NegacyclicCode> {
        let mut comps = self.components.clone();
        for (i, spec) in self.components.iter().enumerate() {
            let j = self.ctx.mu(i);
            let ann = spec.annihilator().generators(self.ctx.ring(i));
            let image = ann
                .iter()
                .map(|g| Ok(RvElem::new(conjugate_mu(&self.ctx, i, &g.alpha)?, conjugate_mu(&self.ctx, i, &g.beta)?)))
                .collect::<Result<Vec<_>>>()?;
            comps[j] = identify_generated(self.ctx.ring(j), &image)?;
        }
        Ok(NegacyclicCode { ctx: Arc::clone(&self.ctx), components: comps })
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    /// Ideal generators of the code in `R[x]/(x^{2n} + 1)`: `eps_i g` for each
    /// generator `g` of each `C_i`.
    pub fn generator_words(&self) -> Vec<RWord> {
        let len = self.ctx.ambient_len();
        let mut out = Vec::new();
        for (i, spec) in self.components.iter().enumerate() {
            let eps = self.ctx.idempotent(i);
            for g in spec.generators(self.ctx.ring(i)) {
                if g.is_zero() {
                    continue;
                }
                let a = (eps * g.alpha.poly()).reduce_negacyclic(len);
                let b = (eps * g.beta.poly()).reduce_negacyclic(len);
                out.push(RWord::from_polys(&a, &b, len));
            }
        }
        out
    }

    /// The code as a `Z4`-module in `Z4^{4n}`, symbol `a + bv` flattened to `(a, b)`.
    pub fn to_z4_code(&self) -> Result<Z4LinearCode> {
        let len = self.ctx.ambient_len();
        let mut rows = Vec::new();
        for g in self.generator_words() {
            for base in [g.clone(), g.times_v()] {
                let mut w = base;
                for _ in 0..len {
                    rows.push(w.flatten());
                    w = w.negashift();
                }
            }
        }
        let code = Z4LinearCode::from_rows(2 * len, rows)?;
        if code.log2_size() != self.log2_cardinality() {
            return Err(Error::Internal(format!(
                "standard form has 2^{} words, expected 2^{}",
                code.log2_size(),
                self.log2_cardinality()
            )));
        }
        Ok(code)
    }
}

/// `x^{-1}` applied to a residue-field representative of `T_i`, landing in `K_mu(i)`.
fn conj_rep(ctx: &FactorizationContext, i: usize, t: &F2Poly) -> ChainRingElem {
    conjugate_mu(ctx, i, &ctx.ring(i).from_rep(t)).expect("valid factor index")
}

/// `-delta_i x^{2n - m_i}` in `K_mu(i)`.
fn dual_unit(ctx: &FactorizationContext, i: usize) -> ChainRingElem {
    let target = ctx.ring(ctx.mu(i));
    let sign = (4 - ctx.delta(i)) & 3;
    target.reduce(&Z4Poly::monomial(sign, 2 * ctx.n() - ctx.degree(i)))
}

/// The table image `D_mu(i)` of a component `C_i`.
pub fn dual_component(ctx: &FactorizationContext, i: usize, spec: &IdealSpec) -> IdealSpec {
    let target: &ChainRing = ctx.ring(ctx.mu(i));
    let one_plus_conj = |a: &F2Poly| target.add(&target.one(), &conj_rep(ctx, i, a));
    let u = dual_unit(ctx, i);
    let scaled_conj = |b: &F2Poly| target.mul(&u, &conj_rep(ctx, i, b));
    let a = spec.a.clone().unwrap_or_default();
    let b = spec.b.clone().unwrap_or_default();
    match spec.family {
        Family::F1 => {
            let e = target.add(&one_plus_conj(&a), &target.mul(&scaled_conj(&b), target.pi()));
            let d = target.digits(&e);
            IdealSpec::f1(d[0].clone(), d[1].clone())
        }
        Family::F3 => IdealSpec::with_b(Family::F11, target.residue(&scaled_conj(&b))),
        Family::F11 => IdealSpec::with_b(Family::F3, target.residue(&scaled_conj(&b))),
        Family::F4 => IdealSpec::with_a(Family::F12, target.residue(&one_plus_conj(&a))),
        Family::F12 => IdealSpec::with_a(Family::F4, target.residue(&one_plus_conj(&a))),
        Family::F15 => {
            let u_inv = target.inverse(&u).expect("unit");
            let bb = target.mul(&u_inv, &conj_rep(ctx, i, &b));
            IdealSpec::with_b(Family::F15, target.residue(&bb))
        }
        _ => spec.annihilator(),
    }
}

/// `prod_i (4^{m_i} + 5 2^{m_i} + 9)`.
pub fn count_codes(ctx: &FactorizationContext) -> BigUint {
    (0..ctx.r()).map(|i| ideal_count(ctx.degree(i))).product()
}

/// Residue-field data for a fixed factor: `x^{-1}` and `x^{2n - m}` modulo `fbar_i`.
struct FixedFieldMaps {
    fbar: F2Poly,
    x_inv: F2Poly,
    x_shift: F2Poly,
    x_m: F2Poly,
}

impl FixedFieldMaps {
    fn new(ctx: &FactorizationContext, i: usize) -> Self {
        let fbar = ctx.ring(i).fbar().clone();
        let x_inv = F2Poly::x().inv_mod(&fbar).expect("x is a unit modulo fbar");
        let m = ctx.degree(i) as u64;
        let x_shift = F2Poly::x().pow_mod(2 * ctx.n() as u64 - m, &fbar);
        let x_m = F2Poly::x().pow_mod(m, &fbar);
        FixedFieldMaps { fbar, x_inv, x_shift, x_m }
    }

    /// `a(x^{-1}) mod fbar`.
    fn conj(&self, a: &F2Poly) -> F2Poly {
        let mut acc = F2Poly::zero();
        for j in (0..a.bits().len()).rev() {
            acc = acc.mul_mod(&self.x_inv, &self.fbar);
            if a.coeff(j) == 1 {
                acc = acc.add(&F2Poly::one());
            }
        }
        acc.rem(&self.fbar)
    }
}

/// Pairs `(a, b)` with `a + a(x^{-1}) + 1 = b + x^{2n-m} b(x^{-1}) = 0` mod `(2, fbar_i)`.
pub fn w1_set(ctx: &FactorizationContext, i: usize) -> Vec<(F2Poly, F2Poly)> {
    let maps = FixedFieldMaps::new(ctx, i);
    let reps = ctx.ring(i).reps();
    let a_ok: Vec<&F2Poly> =
        reps.iter().filter(|a| a.add(&maps.conj(a)).add(&F2Poly::one()).rem(&maps.fbar).is_zero()).collect();
    let b_ok: Vec<&F2Poly> = reps
        .iter()
        .filter(|b| b.add(&maps.x_shift.mul_mod(&maps.conj(b), &maps.fbar)).rem(&maps.fbar).is_zero())
        .collect();
    a_ok.iter().flat_map(|a| b_ok.iter().map(move |b| ((*a).clone(), (*b).clone()))).collect()
}

/// `b` with `b + x^m b(x^{-1}) = 0` mod `(2, fbar_i)`.
pub fn w2_set(ctx: &FactorizationContext, i: usize) -> Vec<F2Poly> {
    let maps = FixedFieldMaps::new(ctx, i);
    ctx.ring(i)
        .reps()
        .into_iter()
        .filter(|b| b.add(&maps.x_m.mul_mod(&maps.conj(b), &maps.fbar)).rem(&maps.fbar).is_zero())
        .collect()
}

/// Parameters `(a, b)` for which `<2(a + b f_i) + v>` equals its own dual
/// component, with the dual read off digit by digit.
pub fn w1_exact(ctx: &FactorizationContext, i: usize) -> Vec<(F2Poly, F2Poly)> {
    let reps = ctx.ring(i).reps();
    let mut out = Vec::new();
    for a in &reps {
        for b in &reps {
            let spec = IdealSpec::f1(a.clone(), b.clone());
            if dual_component(ctx, i, &spec) == spec {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Self-dual choices for a fixed component: `<2>`, then `F1` over the
/// self-dual parameter pairs, then `F15` over `W2`.
pub fn fixed_choices(ctx: &FactorizationContext, i: usize) -> Vec<IdealSpec> {
    let mut out = vec![IdealSpec::plain(Family::F7)];
    out.extend(w1_exact(ctx, i).into_iter().map(|(a, b)| IdealSpec::f1(a, b)));
    out.extend(w2_set(ctx, i).into_iter().map(|b| IdealSpec::with_b(Family::F15, b)));
    out
}

/// The count `prod_{fixed} (1 + |W1_i| + |W2_i|) prod_{pairs} (4^m + 5 2^m + 9)` with
/// the residue-field `W1` sets.
pub fn count_selfdual_formula(ctx: &FactorizationContext) -> BigUint {
    let fixed: BigUint =
        (0..ctx.lambda()).map(|i| BigUint::from(1 + w1_set(ctx, i).len() + w2_set(ctx, i).len())).product();
    let pairs: BigUint =
        (ctx.lambda()..ctx.lambda() + ctx.epsilon_pairs()).map(|i| ideal_count(ctx.degree(i))).product();
    fixed * pairs
}

/// Number of self-dual codes, using the digit-exact fixed-component choices.
pub fn count_selfdual(ctx: &FactorizationContext) -> BigUint {
    let fixed: BigUint = (0..ctx.lambda()).map(|i| BigUint::from(fixed_choices(ctx, i).len())).product();
    let pairs: BigUint =
        (ctx.lambda()..ctx.lambda() + ctx.epsilon_pairs()).map(|i| ideal_count(ctx.degree(i))).product();
    fixed * pairs
}

/// Self-dual counts for `n = 2^p - 1` prime: total `23 (4^p + 5 2^p + 9)^{2e}` and
/// self-dual `3 (4^p + 5 2^p + 9)^e` with `e = (2^{p-1} - 1) / p`.
pub fn mersenne_counts(p: u32) -> (BigUint, BigUint) {
    let q = BigUint::one() << p;
    let per = &q * &q + BigUint::from(5u8) * &q + BigUint::from(9u8);
    let e = ((1u64 << (p - 1)) - 1) / p as u64;
    let total = BigUint::from(23u8) * per.pow(2 * e as u32);
    let selfdual = BigUint::from(3u8) * per.pow(e as u32);
    (total, selfdual)
}

/// Lazy stream of all self-dual codes.
///
/// The first component is the most significant digit: fixed components take
/// their choices in the order of [`fixed_choices`], and the first member of each
/// swapped pair ranges over all ideals (family order, then parameters), its
/// partner being the table image.
pub struct SelfDualIter {
    ctx: Arc<FactorizationContext>,
    choices: Vec<Vec<IdealSpec>>,
    counter: Vec<usize>,
    done: bool,
}

impl SelfDualIter {
    fn new(ctx: &Arc<FactorizationContext>) -> Self {
        let mut choices: Vec<Vec<IdealSpec>> = (0..ctx.lambda()).map(|i| fixed_choices(ctx, i)).collect();
        for i in ctx.lambda()..ctx.lambda() + ctx.epsilon_pairs() {
            choices.push(enumerate_ideals(ctx.degree(i)));
        }
        let done = choices.iter().any(|c| c.is_empty());
        SelfDualIter { ctx: Arc::clone(ctx), counter: vec![0; choices.len()], choices, done }
    }

    fn current(&self) -> NegacyclicCode {
        let ctx = &self.ctx;
        let mut comps = vec![IdealSpec::plain(Family::F9); ctx.r()];
        for (slot, (opts, &c)) in self.choices.iter().zip(&self.counter).enumerate() {
            comps[slot] = opts[c].clone();
            if slot >= ctx.lambda() {
                comps[ctx.mu(slot)] = dual_component(ctx, slot, &opts[c]);
            }
        }
        NegacyclicCode { ctx: Arc::clone(ctx), components: comps }
    }
}

impl Iterator for SelfDualIter {
    type Item = NegacyclicCode;

    fn next(&mut self) -> Option<NegacyclicCode> {
        if self.done {
            return None;
        }
        let code = self.current();
        let mut pos = self.counter.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.counter[pos] += 1;
            if self.counter[pos] < self.choices[pos].len() {
                break;
            }
            self.counter[pos] = 0;
        }
        Some(code)
    }
}

pub fn enumerate_selfdual(ctx: &Arc<FactorizationContext>) -> SelfDualIter {
    SelfDualIter::new(ctx)
}

/// All codes; only for small contexts.
pub fn enumerate_all(ctx: &Arc<FactorizationContext>) -> Vec<NegacyclicCode> {
    let mut out = vec![Vec::new()];
    for i in 0..ctx.r() {
        let opts = enumerate_ideals(ctx.degree(i));
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<IdealSpec>| {
                opts.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(|components| NegacyclicCode { ctx: Arc::clone(ctx), components }).collect()
}

/// A code with independently uniform components.
pub fn random_code<R: Rng>(ctx: &Arc<FactorizationContext>, rng: &mut R) -> NegacyclicCode {
    let components = (0..ctx.r())
        .map(|i| {
            let opts = enumerate_ideals(ctx.degree(i));
            opts[rng.gen_range(0..opts.len())].clone()
        })
        .collect();
    NegacyclicCode { ctx: Arc::clone(ctx), components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ctx(n: i64) -> Arc<FactorizationContext> {
        Arc::new(FactorizationContext::new(n).unwrap())
    }

    fn all(c: &Arc<FactorizationContext>, fam: Family) -> NegacyclicCode {
        NegacyclicCode::assemble(c, vec![IdealSpec::plain(fam); c.r()]).unwrap()
    }

    #[test]
    fn extreme_codes() {
        let c = ctx(7);
        assert_eq!(all(&c, Family::F5).log2_cardinality(), 4 * 14);
        assert_eq!(all(&c, Family::F9).cardinality(), BigUint::one());
        assert_eq!(all(&c, Family::F7).log2_cardinality(), 28);
        assert_eq!(all(&c, Family::F5).dual(), all(&c, Family::F9));
        assert!(all(&c, Family::F7).is_self_dual());
    }

    #[test]
    fn assemble_rejects_bad_input() {
        let c = ctx(7);
        assert!(matches!(
            NegacyclicCode::assemble(&c, vec![IdealSpec::plain(Family::F7)]),
            Err(Error::Arity { expected: 3, got: 1 })
        ));
        let bad = IdealSpec::with_b(Family::F3, "0 0 0 1".parse().unwrap());
        let comps = vec![IdealSpec::plain(Family::F7), bad, IdealSpec::plain(Family::F7)];
        assert!(matches!(
            NegacyclicCode::assemble(&c, comps),
            Err(Error::DegreeMismatch { index: 1, degree: 3, m: 3 })
        ));
    }

    #[test]
    fn counts_n7() {
        let c = ctx(7);
        assert_eq!(count_codes(&c), BigUint::from(293687u32));
        assert_eq!(count_selfdual(&c), BigUint::from(339u32));
        assert_eq!(count_selfdual_formula(&c), BigUint::from(339u32));
        assert!(w1_set(&c, 0).is_empty());
        assert_eq!(w2_set(&c, 0), vec![F2Poly::zero(), F2Poly::one()]);
    }

    #[test]
    fn mersenne_formulas() {
        let (total, sd) = mersenne_counts(3);
        assert_eq!((total, sd), (BigUint::from(293687u32), BigUint::from(339u32)));
        assert_eq!(mersenne_counts(5).1, BigUint::from(5093808171u64));
    }

    #[test]
    fn table_and_generic_duals_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [1, 3, 7, 9, 15] {
            let c = ctx(n);
            for _ in 0..60 {
                let code = random_code(&c, &mut rng);
                let d = code.dual();
                assert_eq!(d, code.dual_generic().unwrap(), "n = {n}: {}", code.to_json());
                assert_eq!(d.dual(), code);
                assert_eq!(code.log2_cardinality() + d.log2_cardinality(), 8 * c.n());
            }
        }
    }

    #[test]
    fn selfdual_stream_n7() {
        let c = ctx(7);
        let codes: Vec<NegacyclicCode> = enumerate_selfdual(&c).collect();
        assert_eq!(codes.len(), 339);
        assert!(codes.iter().all(|code| code.is_self_dual()));
        let firsts: std::collections::BTreeSet<String> =
            codes.iter().map(|code| code.component(0).to_string()).collect();
        assert_eq!(firsts.len(), 3);
    }

    #[test]
    fn z4_type_of_all_2() {
        let c = ctx(7);
        let z = all(&c, Family::F7).to_z4_code().unwrap();
        assert_eq!((z.k1(), z.k2()), (0, 28));
        let zero = all(&c, Family::F9).to_z4_code().unwrap();
        assert_eq!((zero.k1(), zero.k2()), (0, 0));
    }

    #[test]
    fn json_round_trip() {
        let c = ctx(7);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let code = random_code(&c, &mut rng);
        let file: CodeFile = serde_json::from_str(&code.to_json()).unwrap();
        assert_eq!(NegacyclicCode::from_file(&c, file).unwrap(), code);
    }
}
