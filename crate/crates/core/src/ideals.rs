//! Ideals of `K + vK` (`v^2 = 2v`) for a chain ring `K = K_f`: the fifteen
//! parametric families, their sizes and annihilators, and identification of an
//! arbitrary ideal by its canonical form.
//!
//! An ideal `C` corresponds to the `K`-submodule `{(alpha, beta) : alpha + v beta in C}`
//! of `K^2`; the ideal generated by `alpha + v beta` is spanned by `(alpha, beta)` and
//! `(0, alpha + 2 beta)`.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::chainring::{ChainRing, ChainRingElem};
use crate::error::{Error, Result};
use crate::length2::{Pair, Submodule};
use crate::z4poly::F2Poly;

/// `alpha + v beta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RvElem {
    pub alpha: ChainRingElem,
    pub beta: ChainRingElem,
}

impl RvElem {
    pub fn new(alpha: ChainRingElem, beta: ChainRingElem) -> Self {
        RvElem { alpha, beta }
    }

    pub fn zero(ring: &ChainRing) -> Self {
        RvElem::new(ring.zero(), ring.zero())
    }

    pub fn one(ring: &ChainRing) -> Self {
        RvElem::new(ring.one(), ring.zero())
    }

    pub fn v(ring: &ChainRing) -> Self {
        RvElem::new(ring.zero(), ring.one())
    }

    pub fn scalar(e: ChainRingElem, ring: &ChainRing) -> Self {
        RvElem::new(e, ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }
}

impl fmt::Display for RvElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + v({})", self.alpha, self.beta)
    }
}

pub fn rv_add(ring: &ChainRing, x: &RvElem, y: &RvElem) -> RvElem {
    RvElem::new(ring.add(&x.alpha, &y.alpha), ring.add(&x.beta, &y.beta))
}

/// `(a1 + v b1)(a2 + v b2) = a1 a2 + v (a1 b2 + b1 a2 + 2 b1 b2)`.
pub fn rv_mul(ring: &ChainRing, x: &RvElem, y: &RvElem) -> RvElem {
    let cross = ring.add(
        &ring.add(&ring.mul(&x.alpha, &y.beta), &ring.mul(&x.beta, &y.alpha)),
        &ring.scale(&ring.mul(&x.beta, &y.beta), 2),
    );
    RvElem::new(ring.mul(&x.alpha, &y.alpha), cross)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `<2(a + b f) + v>`
    F1,
    /// `<2 v f>`
    F2,
    /// `<2(f b + v)>`
    F3,
    /// `<f (2a + v)>`
    F4,
    /// `<1>`
    F5,
    /// `<f>`
    F6,
    /// `<2>`
    F7,
    /// `<2 f>`
    F8,
    /// `<0>`
    F9,
    /// `<f, v>`
    F10,
    /// `<f b + v, 2>`
    F11,
    /// `<2a + v, 2f>`
    F12,
    /// `<2, v f>`
    F13,
    /// `<2f, 2v>`
    F14,
    /// `<2b + v f, 2f>`
    F15,
}

impl Family {
    pub const ALL: [Family; 15] = [
        Family::F1,
        Family::F2,
        Family::F3,
        Family::F4,
        Family::F5,
        Family::F6,
        Family::F7,
        Family::F8,
        Family::F9,
        Family::F10,
        Family::F11,
        Family::F12,
        Family::F13,
        Family::F14,
        Family::F15,
    ];

    pub fn takes_a(self) -> bool {
        matches!(self, Family::F1 | Family::F4 | Family::F12)
    }

    pub fn takes_b(self) -> bool {
        matches!(self, Family::F1 | Family::F3 | Family::F11 | Family::F15)
    }

    /// `log2 |C|` in units of `m`.
    pub fn log2_size_per_m(self) -> usize {
        match self {
            Family::F1 => 4,
            Family::F2 => 1,
            Family::F3 => 2,
            Family::F4 => 3,
            Family::F5 => 8,
            Family::F6 => 6,
            Family::F7 => 4,
            Family::F8 => 2,
            Family::F9 => 0,
            Family::F10 => 7,
            Family::F11 => 6,
            Family::F12 => 5,
            Family::F13 => 5,
            Family::F14 => 3,
            Family::F15 => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IdealSpec {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<F2Poly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<F2Poly>,
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if let Some(a) = &self.a {
            write!(f, " a=[{a}]")?;
        }
        if let Some(b) = &self.b {
            write!(f, " b=[{b}]")?;
        }
        Ok(())
    }
}

impl IdealSpec {
    pub fn plain(family: Family) -> Self {
        IdealSpec { family, a: None, b: None }
    }

    pub fn with_a(family: Family, a: F2Poly) -> Self {
        IdealSpec { family, a: Some(a), b: None }
    }

    pub fn with_b(family: Family, b: F2Poly) -> Self {
        IdealSpec { family, a: None, b: Some(b) }
    }

    pub fn f1(a: F2Poly, b: F2Poly) -> Self {
        IdealSpec { family: Family::F1, a: Some(a), b: Some(b) }
    }

    /// Checks parameter presence and that parameters lie in `T` for residue degree `m`.
    pub fn validate(&self, m: usize) -> Result<()> {
        let fam = self.family;
        if fam.takes_a() != self.a.is_some() || fam.takes_b() != self.b.is_some() {
            return Err(Error::Parse(format!("parameters do not match family {fam}")));
        }
        for t in self.a.iter().chain(self.b.iter()) {
            if let Some(d) = t.degree() {
                if d >= m {
                    return Err(Error::DegreeMismatch { index: 0, degree: d, m });
                }
            }
        }
        Ok(())
    }

    fn a(&self) -> F2Poly {
        self.a.clone().unwrap_or_default()
    }

    fn b(&self) -> F2Poly {
        self.b.clone().unwrap_or_default()
    }

    pub fn log2_cardinality(&self, m: usize) -> usize {
        self.family.log2_size_per_m() * m
    }

    pub fn cardinality(&self, m: usize) -> BigUint {
        BigUint::from(1u8) << self.log2_cardinality(m)
    }

    /// The annihilator, from the table of annihilating ideals.
    pub fn annihilator(&self) -> IdealSpec {
        let flip = |a: F2Poly| a.add(&F2Poly::one());
        match self.family {
            Family::F1 => IdealSpec::f1(flip(self.a()), self.b()),
            Family::F2 => IdealSpec::plain(Family::F10),
            Family::F3 => IdealSpec::with_b(Family::F11, self.b()),
            Family::F4 => IdealSpec::with_a(Family::F12, flip(self.a())),
            Family::F5 => IdealSpec::plain(Family::F9),
            Family::F6 => IdealSpec::plain(Family::F8),
            Family::F7 => IdealSpec::plain(Family::F7),
            Family::F8 => IdealSpec::plain(Family::F6),
            Family::F9 => IdealSpec::plain(Family::F5),
            Family::F10 => IdealSpec::plain(Family::F2),
            Family::F11 => IdealSpec::with_b(Family::F3, self.b()),
            Family::F12 => IdealSpec::with_a(Family::F4, flip(self.a())),
            Family::F13 => IdealSpec::plain(Family::F14),
            Family::F14 => IdealSpec::plain(Family::F13),
            Family::F15 => IdealSpec::with_b(Family::F15, self.b()),
        }
    }

    /// The generators as written in the family definition.
    pub fn generators(&self, ring: &ChainRing) -> Vec<RvElem> {
        let f = ring.pi().clone();
        let two = ring.constant(2);
        let a = ring.from_rep(&self.a());
        let b = ring.from_rep(&self.b());
        let rv = |alpha: ChainRingElem, beta: ChainRingElem| RvElem::new(alpha, beta);
        let two_f = ring.mul(&two, &f);
        match self.family {
            Family::F1 => {
                let inner = ring.add(&a, &ring.mul(&b, &f));
                vec![rv(ring.mul(&two, &inner), ring.one())]
            }
            Family::F2 => vec![rv(ring.zero(), two_f)],
            Family::F3 => vec![rv(ring.mul(&two_f, &b), two)],
            Family::F4 => vec![rv(ring.mul(&f, &ring.mul(&two, &a)), f)],
            Family::F5 => vec![RvElem::one(ring)],
            Family::F6 => vec![rv(f, ring.zero())],
            Family::F7 => vec![rv(two, ring.zero())],
            Family::F8 => vec![rv(two_f, ring.zero())],
            Family::F9 => vec![RvElem::zero(ring)],
            Family::F10 => vec![rv(f, ring.zero()), RvElem::v(ring)],
            Family::F11 => vec![rv(ring.mul(&f, &b), ring.one()), rv(two, ring.zero())],
            Family::F12 => vec![rv(ring.mul(&two, &a), ring.one()), rv(two_f, ring.zero())],
            Family::F13 => vec![rv(two, ring.zero()), rv(ring.zero(), f)],
            Family::F14 => vec![rv(two_f, ring.zero()), rv(ring.zero(), two)],
            Family::F15 => vec![rv(ring.mul(&two, &b), f), rv(two_f, ring.zero())],
        }
    }

    pub fn module(&self, ring: &ChainRing) -> Submodule {
        module_of(ring, &self.generators(ring))
    }

    pub fn contains(&self, ring: &ChainRing, x: &RvElem) -> bool {
        self.module(ring).contains(ring, (&x.alpha, &x.beta))
    }
}

/// The submodule of `K^2` underlying the ideal generated by `gens`.
pub fn module_of(ring: &ChainRing, gens: &[RvElem]) -> Submodule {
    let pairs: Vec<Pair> = gens
        .iter()
        .flat_map(|g| {
            let vg = ring.add(&g.alpha, &ring.scale(&g.beta, 2));
            [(g.alpha.clone(), g.beta.clone()), (ring.zero(), vg)]
        })
        .collect();
    Submodule::from_generators(ring, &pairs)
}

/// The family member with the given canonical form.
///
/// With `G` the residue of `g = omega^{-1}`: `(k, s) = (2, 2)` holds `<2>`, `F1` with
/// `a != 0` (`c` a unit) and `F15` with `b != 0` (`c = pi G / b`); `(3, 1)` holds `F15(0)`
/// and `F1(0, b)` with `c = G / b`; and so on for the remaining shapes.
pub fn identify(ring: &ChainRing, module: &Submodule) -> Result<IdealSpec> {
    let g = ring.residue(ring.g());
    let fbar = ring.fbar();
    let div = |num: &F2Poly, den: &F2Poly| -> F2Poly {
        num.mul_mod(&den.inv_mod(fbar).expect("nonzero residue is invertible"), fbar)
    };
    let zero = F2Poly::zero;
    let (k, s) = (module.k(), module.s());
    let c0 = module.c_digit(0);
    let c1 = module.c_digit(1);
    let c2 = module.c_digit(2);
    let spec = match (k, s) {
        (0, 0) => IdealSpec::plain(Family::F5),
        (1, 0) => IdealSpec::plain(Family::F10),
        (1, 1) if c0.is_zero() => IdealSpec::plain(Family::F6),
        (1, 1) => IdealSpec::with_b(Family::F11, div(&F2Poly::one(), &c0)),
        (2, 0) => IdealSpec::with_b(Family::F11, zero()),
        (2, 1) if c0.is_zero() => IdealSpec::plain(Family::F13),
        (2, 1) => IdealSpec::with_a(Family::F12, div(&g, &c0)),
        (2, 2) if c0.is_zero() && c1.is_zero() => IdealSpec::plain(Family::F7),
        (2, 2) if c0.is_zero() => IdealSpec::with_b(Family::F15, div(&g, &c1)),
        (2, 2) => {
            let c = module.offset(ring);
            let e = ring
                .inverse(&ring.mul(ring.omega(), &c))
                .ok_or_else(|| Error::Internal("offset is not a unit".into()))?;
            let d = ring.digits(&e);
            IdealSpec::f1(d[0].clone(), d[1].clone())
        }
        (3, 0) => IdealSpec::with_a(Family::F12, zero()),
        (3, 1) if c0.is_zero() => IdealSpec::with_b(Family::F15, zero()),
        (3, 1) => IdealSpec::f1(zero(), div(&g, &c0)),
        (3, 2) if c1.is_zero() => IdealSpec::plain(Family::F14),
        (3, 2) => IdealSpec::with_a(Family::F4, div(&g, &c1)),
        (3, 3) if c2.is_zero() => IdealSpec::plain(Family::F8),
        (3, 3) => IdealSpec::with_b(Family::F3, div(&F2Poly::one(), &c2)),
        (4, 0) => IdealSpec::f1(zero(), zero()),
        (4, 1) => IdealSpec::with_a(Family::F4, zero()),
        (4, 2) => IdealSpec::with_b(Family::F3, zero()),
        (4, 3) => IdealSpec::plain(Family::F2),
        (4, 4) => IdealSpec::plain(Family::F9),
        _ => return Err(Error::ConditionUnmet),
    };
    Ok(spec)
}

/// Identifies the ideal generated by arbitrary elements.
pub fn identify_generated(ring: &ChainRing, gens: &[RvElem]) -> Result<IdealSpec> {
    identify(ring, &module_of(ring, gens))
}

/// Number of ideals for residue degree `m`: `4^m + 5 2^m + 9`.
pub fn ideal_count(m: usize) -> BigUint {
    let q = BigUint::from(1u8) << m;
    &q * &q + BigUint::from(5u8) * &q + BigUint::from(9u8)
}

/// All ideals for residue degree `m`, by family then parameter bitmask.
pub fn enumerate_ideals(m: usize) -> Vec<IdealSpec> {
    let reps: Vec<F2Poly> = (0..1u64 << m).map(|mask| F2Poly::from_mask(mask, m)).collect();
    let mut out = Vec::new();
    for fam in Family::ALL {
        match (fam.takes_a(), fam.takes_b()) {
            (true, true) => {
                for a in &reps {
                    for b in &reps {
                        out.push(IdealSpec::f1(a.clone(), b.clone()));
                    }
                }
            }
            (true, false) => out.extend(reps.iter().map(|a| IdealSpec::with_a(fam, a.clone()))),
            (false, true) => out.extend(reps.iter().map(|b| IdealSpec::with_b(fam, b.clone()))),
            (false, false) => out.push(IdealSpec::plain(fam)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::z4poly::Z4Poly;
    use std::collections::HashSet;

    fn ring(f: &str) -> ChainRing {
        ChainRing::new(&f.parse::<Z4Poly>().unwrap()).unwrap()
    }

    #[test]
    fn rv_products() {
        let k = ring("3 1");
        let v = RvElem::v(&k);
        assert_eq!(rv_mul(&k, &v, &v), RvElem::new(k.zero(), k.constant(2)));
        let one_v = RvElem::new(k.one(), k.one());
        assert_eq!(rv_mul(&k, &one_v, &one_v), RvElem::one(&k));
        let x = RvElem::scalar(k.reduce(&Z4Poly::x()), &k);
        assert_eq!(rv_mul(&k, &x, &RvElem::one(&k)), x);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ideals(1).len(), 23);
        assert_eq!(enumerate_ideals(3).len(), 113);
        assert_eq!(ideal_count(3), BigUint::from(113u32));
    }

    #[test]
    fn annihilator_table_rows() {
        assert_eq!(IdealSpec::plain(Family::F7).annihilator(), IdealSpec::plain(Family::F7));
        assert_eq!(IdealSpec::plain(Family::F2).annihilator(), IdealSpec::plain(Family::F10));
        assert_eq!(IdealSpec::plain(Family::F10).log2_cardinality(3), 21);
        assert_eq!(IdealSpec::plain(Family::F9).cardinality(5), BigUint::from(1u8));
        for m in 1..=3 {
            for spec in enumerate_ideals(m) {
                assert_eq!(spec.annihilator().annihilator(), spec);
                assert_eq!(spec.log2_cardinality(m) + spec.annihilator().log2_cardinality(m), 8 * m);
            }
        }
    }

    #[test]
    fn specs_identify_themselves() {
        for f in ["3 1", "1 1 1", "3 1 2 1", "3 2 3 1", "1 1 1 1 1"] {
            let k = ring(f);
            let specs = enumerate_ideals(k.m());
            let mut modules = HashSet::new();
            for spec in &specs {
                let module = spec.module(&k);
                assert_eq!(module.log2_size(k.m()), spec.log2_cardinality(k.m()), "{spec}");
                assert!(module.satisfies_condition2(&k, k.omega()));
                assert_eq!(&identify(&k, &module).unwrap(), spec, "f = {f}");
                assert!(modules.insert(module));
            }
        }
    }

    #[test]
    fn generator_substitution() {
        let k = ring("3 1");
        let g = IdealSpec::f1(F2Poly::one(), F2Poly::zero()).generators(&k);
        assert_eq!(g, vec![RvElem::new(k.constant(2), k.one())]);
        assert_eq!(IdealSpec::plain(Family::F9).generators(&k), vec![RvElem::zero(&k)]);
    }

    #[test]
    fn json_shape() {
        let spec = IdealSpec::f1(F2Poly::one(), "0 1".parse().unwrap());
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"family":"F1","a":"1","b":"0 1"}"#);
        assert_eq!(serde_json::from_str::<IdealSpec>(&text).unwrap(), spec);
        let plain = serde_json::to_string(&IdealSpec::plain(Family::F7)).unwrap();
        assert_eq!(plain, r#"{"family":"F7"}"#);
    }
}
