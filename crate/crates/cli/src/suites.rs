//! Verification suites shared by `verify`, `reproduce` and the acceptance tests.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use negaz4v::chainring::ChainRing;
use negaz4v::factorbase::FactorizationContext;
use negaz4v::gray::{
    gray_image, gray_rho, is_quasi_twisted, lee_weight_r, lee_weight_z4, min_weights, naive_min_weights, theta,
    DEFAULT_MAX_BITS,
};
use negaz4v::ideals::{enumerate_ideals, ideal_count, identify, IdealSpec, RvElem};
use negaz4v::length2::{
    closure_ideals, closure_submodules, condition2_count, enumerate_all_length2, filter_condition2, total_count,
    ElementTables, Pair, StandardClassifier,
};
use negaz4v::negacode::{
    check_pairing_orthogonal, count_codes, count_selfdual, count_selfdual_formula, enumerate_all, enumerate_selfdual,
    mersenne_counts, random_code, NegacyclicCode, RWord, Z4LinearCode,
};
use negaz4v::oracle::{
    codeword_set, is_self_dual_brute, r_orthogonal_complement, theta_set, z4_orthogonal_complement, z4_word_set,
};
use negaz4v::z4poly::Z4Poly;

use crate::fixtures::{self, Expected};
use crate::report::Report;

fn context(n: i64) -> anyhow::Result<Arc<FactorizationContext>> {
    Ok(Arc::new(FactorizationContext::new(n)?))
}

/// A chain ring whose residue field has `2^m` elements.
pub fn ring_of_degree(m: usize) -> anyhow::Result<ChainRing> {
    for n in (1..200).step_by(2) {
        let ctx = FactorizationContext::new(n)?;
        if let Some(i) = (0..ctx.r()).find(|&i| ctx.degree(i) == m) {
            return Ok(ctx.ring(i).clone());
        }
    }
    anyhow::bail!("no factor of degree {m} for n < 200")
}

pub fn n7_fixtures(r: &mut Report) -> anyhow::Result<()> {
    let ctx = FactorizationContext::new(7)?;
    let got: Vec<String> = ctx.factors().iter().map(|f| f.to_string()).collect();
    r.check("n=7 factors", got == fixtures::N7_FACTORS, || format!("{got:?}"));
    let eps: Vec<String> = ctx.idempotents().iter().map(|e| e.to_string()).collect();
    r.check("n=7 idempotents", eps == fixtures::N7_IDEMPOTENTS, || format!("{eps:?}"));
    idempotent_identities(r, &ctx);
    Ok(())
}

fn idempotent_identities(r: &mut Report, ctx: &FactorizationContext) {
    let len = ctx.ambient_len();
    let eps = ctx.idempotents();
    let sum = eps.iter().fold(Z4Poly::zero(), |acc, e| &acc + e).reduce_negacyclic(len);
    r.check(&format!("n={} sum of idempotents is 1", ctx.n()), sum == Z4Poly::one(), || sum.to_string());
    let mut bad = None;
    for (i, a) in eps.iter().enumerate() {
        for (j, b) in eps.iter().enumerate() {
            let prod = (a * b).reduce_negacyclic(len);
            let want = if i == j { a.reduce_negacyclic(len) } else { Z4Poly::zero() };
            if prod != want && bad.is_none() {
                bad = Some((i + 1, j + 1));
            }
        }
    }
    r.check(&format!("n={} idempotents orthogonal", ctx.n()), bad.is_none(), || format!("e{:?}", bad));
}

pub fn rings(r: &mut Report, ns: &[i64]) -> anyhow::Result<()> {
    for &n in ns {
        let ctx = FactorizationContext::new(n)?;
        let mut bad = Vec::new();
        for i in 0..ctx.r() {
            let ring = ctx.ring(i);
            let pi = ring.pi();
            let square_ok = ring.mul(pi, pi) == ring.scale(ring.g(), 2);
            let nil_ok = !ring.pi_pow(3).is_zero() && ring.pi_pow(4).is_zero();
            let unit_ok = ring.is_one(&ring.mul(ring.g(), ring.omega()));
            if !(square_ok && nil_ok && unit_ok) {
                bad.push(format!("f{} ({square_ok}, {nil_ok}, {unit_ok})", i + 1));
            }
        }
        r.check(&format!("n={n} f^2 = 2g, nilpotency 4, g invertible ({} factors)", ctx.r()), bad.is_empty(), || {
            bad.join(", ")
        });
        idempotent_identities(r, &ctx);
    }
    Ok(())
}

fn condition2_elementwise(ring: &ChainRing, tables: &ElementTables, set: &FixedBitSet) -> bool {
    let w2 = tables.index(&ring.mul(ring.omega(), &ring.pi_pow(2)));
    set.ones().all(|p| {
        let (a, b) = tables.split(p);
        set.contains(tables.pair_index(0, tables.add(a, tables.mul(w2, b))))
    })
}

pub fn length2(r: &mut Report, m: usize) -> anyhow::Result<()> {
    let ring = ring_of_degree(m)?;
    let q = 1u64 << m;
    let all = enumerate_all_length2(&ring)?;
    r.check(&format!("m={m} length-2 codes: {} distinct", all.len()), all.len() as u64 == total_count(q), || {
        format!("expected {}", total_count(q))
    });
    let tables = ElementTables::new(&ring).ok();
    if let Some(t) = &tables {
        let mut disagree = 0;
        for code in &all {
            let set = t.span(&code.generators);
            if condition2_elementwise(&ring, t, &set) != code.module.satisfies_condition2(&ring, ring.omega()) {
                disagree += 1;
            }
        }
        r.check(&format!("m={m} condition on generators = condition on elements"), disagree == 0, || {
            format!("{disagree} codes disagree")
        });
    }
    if m == 1 {
        let t = tables.as_ref().expect("m = 1 tables");
        let closure: HashSet<FixedBitSet> = closure_submodules(t).into_iter().collect();
        let listed: HashSet<FixedBitSet> = all.iter().map(|c| t.span(&c.generators)).collect();
        r.check("m=1 family list = closure enumeration of submodules", closure == listed, || {
            format!("closure {} vs listed {}", closure.len(), listed.len())
        });
    }
    let kept = filter_condition2(&ring, all, ring.omega());
    r.check(
        &format!("m={m} codes kept by the condition: {}", kept.len()),
        kept.len() as u64 == condition2_count(q),
        || format!("expected {}", condition2_count(q)),
    );
    let classifier = StandardClassifier::new(&ring)?;
    let mut per_class: BTreeMap<usize, usize> = BTreeMap::new();
    let mut unclassified = 0;
    for code in &kept {
        match classifier.classify(&code.module) {
            Ok(tag) => *per_class.entry(tag.class_index()).or_default() += 1,
            Err(_) => unclassified += 1,
        }
    }
    let roman = ["I", "II", "III", "IV", "V"];
    let summary: Vec<String> =
        per_class.iter().map(|(k, v)| format!("{}:{v}", roman.get(k - 1).copied().unwrap_or("?"))).collect();
    r.info(format!("m={m} standard classes {}", summary.join(" ")));
    r.check(&format!("m={m} every kept code lies in exactly one standard class"), unclassified == 0, || {
        format!("{unclassified} unclassified")
    });
    Ok(())
}

fn ideal_pairs(ring: &ChainRing, gens: &[RvElem]) -> Vec<Pair> {
    let mut out = Vec::new();
    for g in gens {
        out.push((g.alpha.clone(), g.beta.clone()));
        out.push((ring.zero(), ring.add(&g.alpha, &ring.scale(&g.beta, 2))));
    }
    out
}

pub fn ideals(r: &mut Report, m: usize) -> anyhow::Result<()> {
    let ring = ring_of_degree(m)?;
    let specs = enumerate_ideals(m);
    r.check(&format!("m={m} ideal table has {} entries", specs.len()), ideal_count(m) == specs.len().into(), || {
        format!("expected {}", ideal_count(m))
    });
    let mut roundtrip_bad = Vec::new();
    let mut ann_bad = Vec::new();
    for spec in &specs {
        if identify(&ring, &spec.module(&ring)).ok().as_ref() != Some(spec) {
            roundtrip_bad.push(spec.to_string());
        }
        let ann = spec.annihilator();
        if ann.annihilator() != *spec || spec.log2_cardinality(m) + ann.log2_cardinality(m) != 8 * m {
            ann_bad.push(spec.to_string());
        }
    }
    r.check(&format!("m={m} identify(module(C)) = C"), roundtrip_bad.is_empty(), || roundtrip_bad.join(", "));
    r.check(&format!("m={m} Ann(Ann(C)) = C and |C||Ann(C)| = 4^(4m)"), ann_bad.is_empty(), || ann_bad.join(", "));

    let Ok(tables) = ElementTables::new(&ring) else {
        r.info(format!("m={m} element tables skipped (ring too large)"));
        return Ok(());
    };
    let sets: Vec<FixedBitSet> = specs.iter().map(|s| tables.span(&ideal_pairs(&ring, &s.generators(&ring)))).collect();
    let distinct: HashSet<&FixedBitSet> = sets.iter().collect();
    r.check(&format!("m={m} ideals materialize to distinct sets"), distinct.len() == specs.len(), || {
        format!("{} distinct", distinct.len())
    });
    let size_bad: Vec<String> = specs
        .iter()
        .zip(&sets)
        .filter(|(s, set)| set.count_ones(..) != 1 << s.log2_cardinality(m))
        .map(|(s, set)| format!("{s}: {}", set.count_ones(..)))
        .collect();
    r.check(&format!("m={m} cardinalities"), size_bad.is_empty(), || size_bad.join(", "));
    let mut zero_bad = Vec::new();
    for (spec, set) in specs.iter().zip(&sets) {
        let ann_set = tables.span(&ideal_pairs(&ring, &spec.annihilator().generators(&ring)));
        let ok = set.ones().all(|x| ann_set.ones().all(|y| tables.rv_mul(x, y) == 0));
        if !ok {
            zero_bad.push(spec.to_string());
        }
    }
    r.check(&format!("m={m} C Ann(C) = 0 elementwise"), zero_bad.is_empty(), || zero_bad.join(", "));
    if m == 1 {
        let closure: HashSet<FixedBitSet> = closure_ideals(&tables).into_iter().collect();
        let listed: HashSet<FixedBitSet> = sets.iter().cloned().collect();
        r.check("m=1 ideal table = closure enumeration of ideals", closure == listed, || {
            format!("closure {} vs table {}", closure.len(), listed.len())
        });
    }
    Ok(())
}

fn pairing_ok(c: &NegacyclicCode, d: &NegacyclicCode) -> anyhow::Result<bool> {
    let dw = d.generator_words();
    for x in c.generator_words() {
        for y in &dw {
            if !check_pairing_orthogonal(&x, y)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn duality(r: &mut Report, samples: usize) -> anyhow::Result<()> {
    let ctx = context(1)?;
    let mut bad = Vec::new();
    for code in enumerate_all(&ctx) {
        let words = codeword_set(&code)?;
        let dual_words = codeword_set(&code.dual())?;
        if r_orthogonal_complement(2, &words)? != dual_words {
            bad.push(code.to_json());
        }
    }
    r.check("n=1 table dual = exhaustive orthogonal complement (23 codes)", bad.is_empty(), || bad.join(" "));

    for n in [3, 7] {
        let ctx = context(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let mut bad = Vec::new();
        for _ in 0..samples {
            let c = random_code(&ctx, &mut rng);
            let d = c.dual();
            let sizes = c.log2_cardinality() + d.log2_cardinality() == 8 * ctx.n();
            let ok = sizes && pairing_ok(&c, &d)? && d.dual() == c && c.dual_generic()? == d;
            if !ok {
                bad.push(c.to_json());
            }
        }
        r.check(
            &format!("n={n} {samples} random codes: |C||D| = 16^(2n), pairing, dual of dual, generic dual"),
            bad.is_empty(),
            || bad.join(" "),
        );
    }
    Ok(())
}

pub fn selfdual_n7(r: &mut Report) -> anyhow::Result<Vec<NegacyclicCode>> {
    let ctx = context(7)?;
    let codes: Vec<NegacyclicCode> = enumerate_selfdual(&ctx).collect();
    r.check(
        &format!("n=7 self-dual stream has {} codes", codes.len()),
        codes.len().to_string() == fixtures::N7_SELF_DUAL,
        || format!("expected {}", fixtures::N7_SELF_DUAL),
    );
    let not_sd: Vec<String> = codes.iter().filter(|c| !c.is_self_dual()).map(|c| c.to_json()).collect();
    r.check("n=7 every streamed code equals its dual", not_sd.is_empty(), || not_sd.join(" "));
    let mut not_orth = 0;
    for c in &codes {
        if c.log2_cardinality() != 4 * 7 || !pairing_ok(c, c)? {
            not_orth += 1;
        }
    }
    r.check("n=7 every streamed code has 16^7 words and self-orthogonal generators", not_orth == 0, || {
        format!("{not_orth} codes fail")
    });
    let firsts: HashSet<IdealSpec> = codes.iter().map(|c| c.component(0).clone()).collect();
    let want: HashSet<IdealSpec> = fixtures::n7_first_components().into_iter().collect();
    r.check("n=7 first components are <2>, <v(x-1), 2(x-1)>, <2+v(x-1), 2(x-1)>", firsts == want, || {
        format!("{firsts:?}")
    });
    Ok(codes)
}

pub fn selfdual_n1(r: &mut Report) -> anyhow::Result<()> {
    let ctx = context(1)?;
    let streamed: Vec<NegacyclicCode> = enumerate_selfdual(&ctx).collect();
    let mut brute_ok = streamed.len() == 3;
    for c in &streamed {
        brute_ok &= is_self_dual_brute(c)?;
    }
    r.check("n=1 three self-dual codes pass the exhaustive check", brute_ok, || format!("{} streamed", streamed.len()));
    let mut brute_count = 0;
    for c in enumerate_all(&ctx) {
        if is_self_dual_brute(&c)? {
            brute_count += 1;
        }
    }
    r.check("n=1 exhaustive search finds exactly 3 self-dual codes", brute_count == 3, || brute_count.to_string());
    Ok(())
}

pub fn selfdual_n31_prefix(r: &mut Report, prefix: usize) -> anyhow::Result<()> {
    let ctx = context(31)?;
    let mut bad = 0;
    let mut seen = 0;
    for c in enumerate_selfdual(&ctx).take(prefix) {
        seen += 1;
        if !c.is_self_dual() || !pairing_ok(&c, &c)? {
            bad += 1;
        }
    }
    r.check(&format!("n=31 first {seen} streamed codes are self-dual"), bad == 0 && seen == prefix, || {
        format!("{bad} fail")
    });
    Ok(())
}

pub fn selfdual(r: &mut Report, n31_prefix: usize) -> anyhow::Result<()> {
    selfdual_n1(r)?;
    selfdual_n7(r)?;
    selfdual_n31_prefix(r, n31_prefix)
}

pub fn counts(r: &mut Report) -> anyhow::Result<()> {
    let ctx = context(7)?;
    let total = count_codes(&ctx).to_string();
    r.check(&format!("n=7 codes: {total}"), total == fixtures::N7_CODES, || format!("expected {}", fixtures::N7_CODES));
    let sd = count_selfdual(&ctx).to_string();
    r.check(&format!("n=7 self-dual codes: {sd}"), sd == fixtures::N7_SELF_DUAL, || {
        format!("expected {}", fixtures::N7_SELF_DUAL)
    });
    mersenne(r)
}

pub fn mersenne(r: &mut Report) -> anyhow::Result<()> {
    for (p, want) in fixtures::mersenne_self_dual() {
        let (_, formula) = mersenne_counts(p);
        r.check(&format!("p={p} closed-form self-dual count {formula}"), formula.to_string() == want, || {
            format!("expected {want}")
        });
        let ctx = context((1i64 << p) - 1)?;
        let exact = count_selfdual(&ctx).to_string();
        let table = count_selfdual_formula(&ctx).to_string();
        r.check(
            &format!("n={} self-dual count from the factorization {exact}", (1 << p) - 1),
            exact == want && table == want,
            || format!("exact {exact}, table {table}, expected {want}"),
        );
    }
    Ok(())
}

pub fn gray(r: &mut Report, samples: usize) -> anyhow::Result<()> {
    let mut bad = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            let (p, q) = gray_rho((a, b));
            if lee_weight_r((a, b)) != lee_weight_z4(p) + lee_weight_z4(q) {
                bad.push(format!("{a}+{b}v"));
            }
        }
    }
    r.check("w_L(e) = Lee weight of rho(e) for all 16 elements", bad.is_empty(), || bad.join(", "));

    let ctx = context(1)?;
    let mut dual_bad = Vec::new();
    let mut isometry_bad = Vec::new();
    for code in enumerate_all(&ctx) {
        let words = codeword_set(&code)?;
        let image = theta_set(&words);
        let image_dual = theta_set(&codeword_set(&code.dual())?);
        if z4_orthogonal_complement(4, &image)? != image_dual {
            dual_bad.push(code.to_json());
        }
        let via_matrix = z4_word_set(&gray_image(&code.to_z4_code()?)?)?;
        let list: Vec<_> = words.iter().collect();
        let preserved = image.len() == words.len()
            && via_matrix == image
            && list.iter().all(|x| {
                list.iter().all(|y| {
                    let diff = x.add(&negated(y));
                    let lee_r: u32 = diff.symbols().into_iter().map(lee_weight_r).sum();
                    let tx = theta(x);
                    let ty = theta(y);
                    let lee_z: u32 = tx.iter().zip(&ty).map(|(p, q)| lee_weight_z4((p + 4 - q) & 3)).sum();
                    lee_r == lee_z
                })
            });
        if !preserved {
            isometry_bad.push(code.to_json());
        }
    }
    r.check("n=1 theta is a Lee isometry onto the Gray image (23 codes)", isometry_bad.is_empty(), || {
        isometry_bad.join(" ")
    });
    r.check("n=1 theta(dual C) = Z4-dual of theta(C) (23 codes)", dual_bad.is_empty(), || dual_bad.join(" "));

    let ctx = context(3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut mw_bad = Vec::new();
    let mut tried = 0;
    while tried < samples {
        let c = random_code(&ctx, &mut rng);
        if c.log2_cardinality() > 16 || c.log2_cardinality() == 0 {
            continue;
        }
        tried += 1;
        let img = gray_image(&c.to_z4_code()?)?;
        if min_weights(&img, 2, 16)? != naive_min_weights(&img)? {
            mw_bad.push(c.to_json());
        }
    }
    r.check(&format!("n=3 min_weights = naive enumeration on {samples} random Gray images"), mw_bad.is_empty(), || {
        mw_bad.join(" ")
    });
    Ok(())
}

fn negated(w: &RWord) -> RWord {
    let symbols: Vec<(u8, u8)> = w.symbols().into_iter().map(|(a, b)| ((4 - a) & 3, (4 - b) & 3)).collect();
    RWord::new(&symbols)
}

pub fn quasi_twist(r: &mut Report, codes: &[NegacyclicCode]) -> anyhow::Result<()> {
    let mut bad = Vec::new();
    for c in codes {
        if !is_quasi_twisted(&gray_image(&c.to_z4_code()?)?, 2) {
            bad.push(c.to_json());
        }
    }
    r.check(&format!("Gray images of {} self-dual codes are 2-quasi-twisted", codes.len()), bad.is_empty(), || {
        bad.join(" ")
    });
    Ok(())
}

/// Gray-image parameters of a code: type and exact minimum weights.
pub fn gray_parameters(code: &NegacyclicCode, threads: usize) -> anyhow::Result<(Z4LinearCode, u32, u32)> {
    let img = gray_image(&code.to_z4_code()?)?;
    let p = min_weights(&img, threads, DEFAULT_MAX_BITS)?;
    Ok((img, p.min_lee, p.min_euclidean))
}

pub fn flagship(r: &mut Report, threads: usize) -> anyhow::Result<()> {
    let ctx = context(7)?;
    let mut tally: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for (k, (code, want)) in fixtures::highlighted_n7(&ctx)?.into_iter().enumerate() {
        let (img, lee, euc) = r.timed(&format!("code {}", k + 1), |_| gray_parameters(&code, threads))?;
        let got = Expected { min_lee: lee, min_euclidean: euc, k1: img.k1(), k2: img.k2() };
        *tally.entry((lee, euc)).or_default() += 1;
        let self_dual = code.is_self_dual();
        r.check(
            &format!("code {:2} {} d_L={lee} d_E={euc} type={}", k + 1, code.to_json(), img.type_string()),
            got == want && self_dual,
            || {
                format!(
                    "expected d_L={} d_E={} type=4^{}2^{}, self-dual {self_dual}",
                    want.min_lee, want.min_euclidean, want.k1, want.k2
                )
            },
        );
    }
    for ((lee, euc), count) in &tally {
        r.info(format!("{count} codes at (d_L={lee}, d_E={euc})"));
    }
    Ok(())
}

pub fn length14_example(r: &mut Report, threads: usize) -> anyhow::Result<()> {
    n7_fixtures(r)?;
    let ctx = context(7)?;
    let total = count_codes(&ctx).to_string();
    r.check(&format!("n=7 codes: {total}"), total == fixtures::N7_CODES, || format!("expected {}", fixtures::N7_CODES));
    let sd = count_selfdual(&ctx).to_string();
    r.check(&format!("n=7 self-dual codes: {sd}"), sd == fixtures::N7_SELF_DUAL, || {
        format!("expected {}", fixtures::N7_SELF_DUAL)
    });
    let codes = r.timed("self-dual stream", selfdual_n7)?;
    r.timed("quasi-twist", |r| quasi_twist(r, &codes))?;
    r.timed("flagship weights", |r| flagship(r, threads))
}
