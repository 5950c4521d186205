//! Linear codes of length 2 over a chain ring `K` of length 4: canonical forms,
//! the complete family list, the closure condition `(a, b) -> (0, a + w pi^2 b)`,
//! and the standard-form classes of the codes satisfying it.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::chainring::{ChainRing, ChainRingElem};
use crate::error::{Error, Result};
use crate::z4poly::F2Poly;

pub type Pair = (ChainRingElem, ChainRingElem);

/// Canonical form of a `K`-submodule of `K^2`.
///
/// Every submodule equals `K (pi^k, c) + K (0, pi^s)` for unique `k`, `s` in
/// `0..=4` and a unique `c` taken modulo `pi^s`; `c` is stored as its first `s`
/// digits. When `k = 4` the first generator is absent and `c` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Submodule {
    k: usize,
    s: usize,
    c: Vec<F2Poly>,
}

impl Submodule {
    pub fn zero() -> Self {
        Submodule { k: 4, s: 4, c: Vec::new() }
    }

    pub fn from_generators(ring: &ChainRing, gens: &[Pair]) -> Self {
        let k = gens.iter().map(|(a, _)| ring.pi_degree(a)).min().unwrap_or(4);
        let mut seconds: Vec<ChainRingElem> = Vec::new();
        let mut c = ring.zero();
        if k < 4 {
            let pivot = gens.iter().position(|(a, _)| ring.pi_degree(a) == k).unwrap();
            let (a0, b0) = &gens[pivot];
            let u = ring.div_pi_pow(a0, k).expect("valuation k");
            c = ring.mul(b0, &ring.inverse(&u).expect("quotient by pi^k of a degree-k element is a unit"));
            seconds.push(ring.mul(&c, &ring.pi_pow(4 - k)));
            for (j, (a, b)) in gens.iter().enumerate() {
                if j != pivot {
                    let q = ring.div_pi_pow(a, k).expect("valuation at least k");
                    seconds.push(ring.sub(b, &ring.mul(&q, &c)));
                }
            }
        } else {
            seconds.extend(gens.iter().map(|(_, b)| b.clone()));
        }
        let s = seconds.iter().map(|b| ring.pi_degree(b)).min().unwrap_or(4);
        let c = if k < 4 { ring.digits(&c)[..s].to_vec() } else { Vec::new() };
        Submodule { k, s, c }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Digits of `c` below `pi^s`.
    pub fn c_digits(&self) -> &[F2Poly] {
        &self.c
    }

    /// The digit `j` of `c` (zero past the stored digits).
    pub fn c_digit(&self, j: usize) -> F2Poly {
        self.c.get(j).cloned().unwrap_or_default()
    }

    pub fn offset(&self, ring: &ChainRing) -> ChainRingElem {
        ring.recompose(&self.c)
    }

    /// `log2 |M| = m ((4 - k) + (4 - s))`.
    pub fn log2_size(&self, m: usize) -> usize {
        m * ((4 - self.k) + (4 - self.s))
    }

    pub fn generators(&self, ring: &ChainRing) -> Vec<Pair> {
        let mut out = Vec::new();
        if self.k < 4 {
            out.push((ring.pi_pow(self.k), self.offset(ring)));
        }
        if self.s < 4 {
            out.push((ring.zero(), ring.pi_pow(self.s)));
        }
        out
    }

    pub fn contains(&self, ring: &ChainRing, (a, b): (&ChainRingElem, &ChainRingElem)) -> bool {
        if ring.pi_degree(a) < self.k {
            return false;
        }
        let rest = if self.k < 4 {
            let q = ring.div_pi_pow(a, self.k).expect("valuation at least k");
            ring.sub(b, &ring.mul(&q, &self.offset(ring)))
        } else {
            b.clone()
        };
        ring.pi_degree(&rest) >= self.s
    }

    /// Closure under `(a, b) -> (0, a + w pi^2 b)` for the given `w`; linear, so it
    /// suffices to test the generators.
    pub fn satisfies_condition2(&self, ring: &ChainRing, omega: &ChainRingElem) -> bool {
        let w2 = ring.mul(omega, &ring.pi_pow(2));
        self.generators(ring).iter().all(|(a, b)| {
            let image = ring.add(a, &ring.mul(&w2, b));
            self.contains(ring, (&ring.zero(), &image))
        })
    }
}

/// The nine generator-matrix families that together list every length-2 code once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    /// `(1, a)`
    I { a: Vec<F2Poly> },
    /// `(pi^k, pi^k a)`
    II { k: usize, a: Vec<F2Poly> },
    /// `(pi b, 1)`
    III { b: Vec<F2Poly> },
    /// `(pi^{k+1} b, pi^k)`
    IV { k: usize, b: Vec<F2Poly> },
    /// `pi^k I_2`
    V { k: usize },
    /// rows `(1, c)`, `(0, pi^t)`
    VI { t: usize, c: Vec<F2Poly> },
    /// rows `(pi^k, pi^k c)`, `(0, pi^{k+t})`
    VII { k: usize, t: usize, c: Vec<F2Poly> },
    /// rows `(c, 1)`, `(pi^t, 0)` with `c` in `pi K`
    VIII { t: usize, c: Vec<F2Poly> },
    /// rows `(pi^k c, pi^k)`, `(pi^{k+t}, 0)` with `c` in `pi K`
    IX { k: usize, t: usize, c: Vec<F2Poly> },
}

impl FamilyTag {
    pub fn family_index(&self) -> usize {
        match self {
            FamilyTag::I { .. } => 1,
            FamilyTag::II { .. } => 2,
            FamilyTag::III { .. } => 3,
            FamilyTag::IV { .. } => 4,
            FamilyTag::V { .. } => 5,
            FamilyTag::VI { .. } => 6,
            FamilyTag::VII { .. } => 7,
            FamilyTag::VIII { .. } => 8,
            FamilyTag::IX { .. } => 9,
        }
    }

    pub fn generators(&self, ring: &ChainRing) -> Vec<Pair> {
        let p = |e: usize| ring.pi_pow(e);
        let el = |d: &[F2Poly]| ring.recompose(d);
        match self {
            FamilyTag::I { a } => vec![(ring.one(), el(a))],
            FamilyTag::II { k, a } => vec![(p(*k), ring.mul(&p(*k), &el(a)))],
            FamilyTag::III { b } => vec![(ring.mul(&p(1), &el(b)), ring.one())],
            FamilyTag::IV { k, b } => vec![(ring.mul(&p(k + 1), &el(b)), p(*k))],
            FamilyTag::V { k } => vec![(p(*k), ring.zero()), (ring.zero(), p(*k))],
            FamilyTag::VI { t, c } => vec![(ring.one(), el(c)), (ring.zero(), p(*t))],
            FamilyTag::VII { k, t, c } => {
                vec![(p(*k), ring.mul(&p(*k), &el(c))), (ring.zero(), p(k + t))]
            }
            FamilyTag::VIII { t, c } => vec![(el(c), ring.one()), (p(*t), ring.zero())],
            FamilyTag::IX { k, t, c } => {
                vec![(ring.mul(&p(*k), &el(c)), p(*k)), (p(k + t), ring.zero())]
            }
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let roman = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"][self.family_index() - 1];
        write!(f, "({roman})")?;
        match self {
            FamilyTag::I { a } | FamilyTag::II { a, .. } => write!(f, " a={}", digits_str(a))?,
            FamilyTag::III { b } | FamilyTag::IV { b, .. } => write!(f, " b={}", digits_str(b))?,
            FamilyTag::VI { c, .. }
            | FamilyTag::VII { c, .. }
            | FamilyTag::VIII { c, .. }
            | FamilyTag::IX { c, .. } => write!(f, " c={}", digits_str(c))?,
            FamilyTag::V { .. } => {}
        }
        match self {
            FamilyTag::II { k, .. } | FamilyTag::IV { k, .. } | FamilyTag::V { k } => {
                write!(f, " k={k}")
            }
            FamilyTag::VI { t, .. } | FamilyTag::VIII { t, .. } => write!(f, " t={t}"),
            FamilyTag::VII { k, t, .. } | FamilyTag::IX { k, t, .. } => write!(f, " k={k} t={t}"),
            _ => Ok(()),
        }
    }
}

fn digits_str(d: &[F2Poly]) -> String {
    let parts: Vec<String> = d.iter().map(|t| format!("[{t}]")).collect();
    parts.join("")
}

/// The five standard-form classes of codes satisfying the closure condition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StandardTag {
    /// `(pi^2 (a + b pi), 1)`
    I { a: F2Poly, b: F2Poly },
    /// `(0, pi^3)`, `(pi^3 b, pi^2)`, `(pi^3 a, pi)`
    II { variant: usize, z: F2Poly },
    /// `pi^k I_2`
    III { k: usize },
    /// rows `(0, 1)`, `(pi, 0)` or `(pi^{t-1} z, 1)`, `(pi^t, 0)`
    IV { t: usize, z: F2Poly },
    /// rows `(pi^2 z, pi)`, `(pi^3, 0)` (t = 3 with z) or `(0, pi^{t-1})`, `(pi^t, 0)`
    V { t: usize, z: Option<F2Poly> },
}

impl StandardTag {
    pub fn class_index(&self) -> usize {
        match self {
            StandardTag::I { .. } => 1,
            StandardTag::II { .. } => 2,
            StandardTag::III { .. } => 3,
            StandardTag::IV { .. } => 4,
            StandardTag::V { .. } => 5,
        }
    }

    pub fn generators(&self, ring: &ChainRing) -> Vec<Pair> {
        let p = |e: usize| ring.pi_pow(e);
        let t = |z: &F2Poly| ring.from_rep(z);
        match self {
            StandardTag::I { a, b } => {
                let ab = ring.add(&t(a), &ring.mul(&t(b), &p(1)));
                vec![(ring.mul(&p(2), &ab), ring.one())]
            }
            StandardTag::II { variant: 0, .. } => vec![(ring.zero(), p(3))],
            StandardTag::II { variant: 1, z } => vec![(ring.mul(&p(3), &t(z)), p(2))],
            StandardTag::II { z, .. } => vec![(ring.mul(&p(3), &t(z)), p(1))],
            StandardTag::III { k } => vec![(p(*k), ring.zero()), (ring.zero(), p(*k))],
            StandardTag::IV { t: tt, z } => {
                vec![(ring.mul(&p(tt - 1), &t(z)), ring.one()), (p(*tt), ring.zero())]
            }
            StandardTag::V { z: Some(z), .. } => {
                vec![(ring.mul(&p(2), &t(z)), p(1)), (p(3), ring.zero())]
            }
            StandardTag::V { t: tt, z: None } => vec![(ring.zero(), p(tt - 1)), (p(*tt), ring.zero())],
        }
    }

    /// Every class member over the given ring.
    pub fn all(ring: &ChainRing) -> Vec<StandardTag> {
        let reps = ring.reps();
        let mut out = Vec::new();
        for a in &reps {
            for b in &reps {
                out.push(StandardTag::I { a: a.clone(), b: b.clone() });
            }
        }
        out.push(StandardTag::II { variant: 0, z: F2Poly::zero() });
        for variant in 1..=2 {
            out.extend(reps.iter().map(|z| StandardTag::II { variant, z: z.clone() }));
        }
        out.extend((0..=4).map(|k| StandardTag::III { k }));
        out.push(StandardTag::IV { t: 1, z: F2Poly::zero() });
        for t in 2..=3 {
            out.extend(reps.iter().map(|z| StandardTag::IV { t, z: z.clone() }));
        }
        out.extend(reps.iter().map(|z| StandardTag::V { t: 3, z: Some(z.clone()) }));
        out.extend((2..=3).map(|t| StandardTag::V { t, z: None }));
        out
    }
}

impl fmt::Display for StandardTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardTag::I { a, b } => write!(f, "(I) a=[{a}] b=[{b}]"),
            StandardTag::II { variant: 0, .. } => write!(f, "(II) (0, pi^3)"),
            StandardTag::II { variant: 1, z } => write!(f, "(II) (pi^3 b, pi^2) b=[{z}]"),
            StandardTag::II { z, .. } => write!(f, "(II) (pi^3 a, pi) a=[{z}]"),
            StandardTag::III { k } => write!(f, "(III) k={k}"),
            StandardTag::IV { t, z } => write!(f, "(IV) t={t} z=[{z}]"),
            StandardTag::V { t, z: Some(z) } => write!(f, "(V) t={t} z=[{z}]"),
            StandardTag::V { t, z: None } => write!(f, "(V) t={t}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Length2Code {
    pub tag: FamilyTag,
    pub generators: Vec<Pair>,
    pub module: Submodule,
    pub elements: Option<FixedBitSet>,
}

impl Length2Code {
    pub fn new(ring: &ChainRing, tag: FamilyTag) -> Self {
        let generators = tag.generators(ring);
        let module = Submodule::from_generators(ring, &generators);
        Length2Code { tag, generators, module, elements: None }
    }

    pub fn materialize(&mut self, tables: &ElementTables) {
        self.elements = Some(tables.span(&self.generators));
    }
}

fn digit_tuples(ring: &ChainRing, len: usize, lead_zero: bool) -> Vec<Vec<F2Poly>> {
    let reps = ring.reps();
    let mut out = vec![Vec::new()];
    for j in 0..len {
        let choices: Vec<F2Poly> = if lead_zero && j == 0 { vec![F2Poly::zero()] } else { reps.clone() };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |t| {
                    let mut v = prefix.clone();
                    v.push(t.clone());
                    v
                })
            })
            .collect();
    }
    out
}

const ENUMERATION_BOUND: u64 = 4096;

/// All length-2 codes over `ring`, one per family member.
///
/// Fails if two members give the same submodule.
pub fn enumerate_all_length2(ring: &ChainRing) -> Result<Vec<Length2Code>> {
    if ring.size() > ENUMERATION_BOUND {
        return Err(Error::TooLarge { size: ring.size(), bound: ENUMERATION_BOUND });
    }
    let mut tags = Vec::new();
    tags.extend(digit_tuples(ring, 4, false).into_iter().map(|a| FamilyTag::I { a }));
    for k in 1..=3 {
        tags.extend(digit_tuples(ring, 4 - k, false).into_iter().map(|a| FamilyTag::II { k, a }));
    }
    tags.extend(digit_tuples(ring, 3, false).into_iter().map(|b| FamilyTag::III { b }));
    for k in 1..=3 {
        tags.extend(digit_tuples(ring, 3 - k, false).into_iter().map(|b| FamilyTag::IV { k, b }));
    }
    tags.extend((0..=4).map(|k| FamilyTag::V { k }));
    for t in 1..=3 {
        tags.extend(digit_tuples(ring, t, false).into_iter().map(|c| FamilyTag::VI { t, c }));
    }
    for k in 1..=2 {
        for t in 1..=3 - k {
            tags.extend(digit_tuples(ring, t, false).into_iter().map(|c| FamilyTag::VII { k, t, c }));
        }
    }
    for t in 1..=3 {
        tags.extend(digit_tuples(ring, t, true).into_iter().map(|c| FamilyTag::VIII { t, c }));
    }
    for k in 1..=2 {
        for t in 1..=3 - k {
            tags.extend(digit_tuples(ring, t, true).into_iter().map(|c| FamilyTag::IX { k, t, c }));
        }
    }

    let codes: Vec<Length2Code> = tags.into_iter().map(|t| Length2Code::new(ring, t)).collect();
    let mut seen: HashMap<&Submodule, &FamilyTag> = HashMap::new();
    for code in &codes {
        if let Some(prev) = seen.insert(&code.module, &code.tag) {
            return Err(Error::Internal(format!("{} and {} generate the same code", prev, code.tag)));
        }
    }
    Ok(codes)
}

/// `sum_{i=0}^{4} (2i + 1) q^{4-i}`.
pub fn total_count(q: u64) -> u64 {
    (0..=4u32).map(|i| (2 * i as u64 + 1) * q.pow(4 - i)).sum()
}

/// `q^2 + 5q + 9`.
pub fn condition2_count(q: u64) -> u64 {
    q * q + 5 * q + 9
}

pub fn filter_condition2(ring: &ChainRing, codes: Vec<Length2Code>, omega: &ChainRingElem) -> Vec<Length2Code> {
    codes.into_iter().filter(|c| c.module.satisfies_condition2(ring, omega)).collect()
}

/// Lookup from canonical form to standard class.
pub struct StandardClassifier {
    table: HashMap<Submodule, StandardTag>,
}

impl StandardClassifier {
    pub fn new(ring: &ChainRing) -> Result<Self> {
        let mut table = HashMap::new();
        for tag in StandardTag::all(ring) {
            let module = Submodule::from_generators(ring, &tag.generators(ring));
            if let Some(prev) = table.insert(module, tag.clone()) {
                return Err(Error::Internal(format!("{prev} and {tag} generate the same code")));
            }
        }
        Ok(StandardClassifier { table })
    }

    pub fn classify(&self, module: &Submodule) -> Result<StandardTag> {
        self.table.get(module).cloned().ok_or_else(|| Error::Internal(format!("no standard class for {module:?}")))
    }
}

pub fn classify_standard_form(ring: &ChainRing, code: &Length2Code) -> Result<StandardTag> {
    if !code.module.satisfies_condition2(ring, ring.omega()) {
        return Err(Error::ConditionUnmet);
    }
    StandardClassifier::new(ring)?.classify(&code.module)
}

/// The image of a code under `(a, b) -> a + b v`, as a set of elements of `K + vK`
/// indexed by `index(a) + |K| index(b)`.
pub fn sigma_to_ideal(ring: &ChainRing, tables: &ElementTables, code: &Length2Code) -> Result<FixedBitSet> {
    if !code.module.satisfies_condition2(ring, ring.omega()) {
        return Err(Error::ConditionUnmet);
    }
    Ok(match &code.elements {
        Some(set) => set.clone(),
        None => tables.span(&code.generators),
    })
}

/// Addition and multiplication tables of a small chain ring, on element indices.
#[derive(Clone, Debug)]
pub struct ElementTables {
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    index: HashMap<ChainRingElem, u16>,
}

impl ElementTables {
    const BOUND: u64 = 256;

    pub fn new(ring: &ChainRing) -> Result<Self> {
        if ring.size() > Self::BOUND {
            return Err(Error::TooLarge { size: ring.size(), bound: Self::BOUND });
        }
        let elems = ring.elements()?;
        let size = elems.len();
        let index: HashMap<ChainRingElem, u16> = elems.iter().enumerate().map(|(i, e)| (e.clone(), i as u16)).collect();
        let mut add = vec![0u16; size * size];
        let mut mul = vec![0u16; size * size];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * size + j] = index[&ring.add(a, b)];
                mul[i * size + j] = index[&ring.mul(a, b)];
            }
        }
        let neg = elems.iter().map(|a| index[&ring.neg(a)]).collect();
        Ok(ElementTables { size, add, mul, neg, index })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn index(&self, e: &ChainRingElem) -> usize {
        self.index[e] as usize
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        a + self.size * b
    }

    pub fn split(&self, p: usize) -> (usize, usize) {
        (p % self.size, p / self.size)
    }

    pub fn pair_add(&self, p: usize, q: usize) -> usize {
        let (a, b) = self.split(p);
        let (c, d) = self.split(q);
        self.pair_index(self.add(a, c), self.add(b, d))
    }

    pub fn pair_scale(&self, x: usize, p: usize) -> usize {
        let (a, b) = self.split(p);
        self.pair_index(self.mul(x, a), self.mul(x, b))
    }

    /// Product in `K + vK` with `v^2 = 2v`, on pair indices `alpha + |K| beta`.
    pub fn rv_mul(&self, p: usize, q: usize) -> usize {
        let (a1, b1) = self.split(p);
        let (a2, b2) = self.split(q);
        let two = self.add(1, 1);
        let cross = self.add(self.add(self.mul(a1, b2), self.mul(b1, a2)), self.mul(two, self.mul(b1, b2)));
        self.pair_index(self.mul(a1, a2), cross)
    }

    /// The `K`-span of the given pairs.
    pub fn span(&self, gens: &[Pair]) -> FixedBitSet {
        let universe = self.size * self.size;
        let mut set = FixedBitSet::with_capacity(universe);
        set.insert(0);
        let mut members = vec![0usize];
        for (a, b) in gens {
            let g = self.pair_index(self.index(a), self.index(b));
            let multiples: Vec<usize> = (0..self.size).map(|x| self.pair_scale(x, g)).collect();
            let mut next = Vec::new();
            for &s in &members {
                for &m in &multiples {
                    let e = self.pair_add(s, m);
                    if !set.put(e) {
                        next.push(e);
                    }
                }
            }
            members.extend(next);
        }
        set
    }
}

/// All `K`-submodules of `K^2` found by closing cyclic submodules under sums.
pub fn closure_submodules(tables: &ElementTables) -> Vec<FixedBitSet> {
    let universe = tables.size() * tables.size();
    let cyclic = (0..universe).map(|g| {
        let mut set = FixedBitSet::with_capacity(universe);
        for x in 0..tables.size() {
            set.insert(tables.pair_scale(x, g));
        }
        set
    });
    close_under_sums(cyclic, |a, b| sum_sets(a, b, |p, q| tables.pair_add(p, q)))
}

/// All ideals of `K + vK` found by closing principal ideals under sums.
pub fn closure_ideals(tables: &ElementTables) -> Vec<FixedBitSet> {
    let universe = tables.size() * tables.size();
    let principal = (0..universe).map(|g| {
        let mut set = FixedBitSet::with_capacity(universe);
        for x in 0..universe {
            set.insert(tables.rv_mul(x, g));
        }
        set
    });
    close_under_sums(principal, |a, b| sum_sets(a, b, |p, q| tables.pair_add(p, q)))
}

fn sum_sets(a: &FixedBitSet, b: &FixedBitSet, add: impl Fn(usize, usize) -> usize) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(a.len());
    for p in a.ones() {
        for q in b.ones() {
            out.insert(add(p, q));
        }
    }
    out
}

fn close_under_sums(
    seeds: impl Iterator<Item = FixedBitSet>,
    sum: impl Fn(&FixedBitSet, &FixedBitSet) -> FixedBitSet,
) -> Vec<FixedBitSet> {
    let mut all: Vec<FixedBitSet> = Vec::new();
    let mut known = std::collections::HashSet::new();
    for s in seeds {
        if known.insert(s.clone()) {
            all.push(s);
        }
    }
    let mut frontier = 0;
    while frontier < all.len() {
        let end = all.len();
        for i in frontier..end {
            for j in 0..=i {
                let s = sum(&all[i], &all[j]);
                if known.insert(s.clone()) {
                    all.push(s);
                }
            }
        }
        frontier = end;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::z4poly::Z4Poly;

    fn ring1() -> ChainRing {
        ChainRing::new(&"3 1".parse::<Z4Poly>().unwrap()).unwrap()
    }

    #[test]
    fn counts_at_q2() {
        assert_eq!(total_count(2), 83);
        assert_eq!(condition2_count(2), 23);
        let ring = ring1();
        let all = enumerate_all_length2(&ring).unwrap();
        assert_eq!(all.len(), 83);
        assert_eq!(filter_condition2(&ring, all, ring.omega()).len(), 23);
    }

    #[test]
    fn extreme_members() {
        let ring = ring1();
        let zero = Length2Code::new(&ring, FamilyTag::V { k: 4 });
        assert_eq!(zero.module, Submodule::zero());
        assert!(zero.module.satisfies_condition2(&ring, ring.omega()));
        let full = Length2Code::new(&ring, FamilyTag::V { k: 0 });
        assert_eq!(full.module.log2_size(1), 8);
        assert_eq!(classify_standard_form(&ring, &full).unwrap(), StandardTag::III { k: 0 });
    }

    #[test]
    fn family_i_never_survives() {
        let ring = ring1();
        for code in enumerate_all_length2(&ring).unwrap() {
            if code.tag.family_index() == 1 {
                assert!(!code.module.satisfies_condition2(&ring, ring.omega()));
            }
        }
    }

    #[test]
    fn pi_cubed_row_is_class_ii() {
        let ring = ring1();
        let code = Length2Code::new(&ring, FamilyTag::IV { k: 3, b: vec![] });
        assert_eq!(classify_standard_form(&ring, &code).unwrap(), StandardTag::II { variant: 0, z: F2Poly::zero() });
    }

    #[test]
    fn membership_matches_materialization() {
        let ring = ring1();
        let tables = ElementTables::new(&ring).unwrap();
        let elems = ring.elements().unwrap();
        for mut code in enumerate_all_length2(&ring).unwrap() {
            code.materialize(&tables);
            let set = code.elements.as_ref().unwrap();
            assert_eq!(set.count_ones(..), 1 << code.module.log2_size(1));
            for a in &elems {
                for b in &elems {
                    let idx = tables.pair_index(tables.index(a), tables.index(b));
                    assert_eq!(set.contains(idx), code.module.contains(&ring, (a, b)));
                }
            }
        }
    }
}
