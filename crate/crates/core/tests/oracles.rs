use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use negaz4v::factorbase::FactorizationContext;
use negaz4v::gray::{gray_image, min_weights, naive_min_weights};
use negaz4v::negacode::{
    check_pairing_orthogonal, count_selfdual, enumerate_all, enumerate_selfdual, random_code, NegacyclicCode,
};
use negaz4v::oracle::{codeword_set, r_orthogonal_complement, theta_set, z4_orthogonal_complement};

fn ctx(n: i64) -> Arc<FactorizationContext> {
    Arc::new(FactorizationContext::new(n).unwrap())
}

/// `D = C^perp` iff `|C||D| = 16^{2n}` and every generator of `C` pairs to zero
/// with every generator of `D`.
fn is_dual_pair(c: &NegacyclicCode, d: &NegacyclicCode) -> bool {
    if c.log2_cardinality() + d.log2_cardinality() != 8 * c.ctx().n() {
        return false;
    }
    let dw = d.generator_words();
    c.generator_words().iter().all(|x| dw.iter().all(|y| check_pairing_orthogonal(x, y).unwrap()))
}

#[test]
fn length_two_duals_match_exhaustive_complement() {
    let ctx = ctx(1);
    for code in enumerate_all(&ctx) {
        let perp = r_orthogonal_complement(2, &codeword_set(&code).unwrap()).unwrap();
        assert_eq!(codeword_set(&code.dual()).unwrap(), perp, "{}", code.to_json());
    }
}

#[test]
fn gray_image_of_dual_is_z4_dual() {
    let ctx = ctx(1);
    for code in enumerate_all(&ctx) {
        let image = theta_set(&codeword_set(&code).unwrap());
        let dual_image = theta_set(&codeword_set(&code.dual()).unwrap());
        assert_eq!(z4_orthogonal_complement(4, &image).unwrap(), dual_image, "{}", code.to_json());
    }
}

#[test]
fn self_dual_counts_match_exhaustive_search() {
    for n in [3, 5] {
        let ctx = ctx(n);
        let brute = enumerate_all(&ctx).iter().filter(|c| is_dual_pair(c, c)).count();
        assert_eq!(count_selfdual(&ctx), brute.into(), "n = {n}");
        assert_eq!(enumerate_selfdual(&ctx).count(), brute, "n = {n}");
    }
}

#[test]
fn streamed_self_dual_codes_are_self_orthogonal() {
    for n in [9, 15] {
        let ctx = ctx(n);
        for code in enumerate_selfdual(&ctx).take(300) {
            assert!(is_dual_pair(&code, &code), "{}", code.to_json());
        }
    }
}

#[test]
fn minimum_weights_match_listing() {
    let ctx = ctx(3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 30 {
        let code = random_code(&ctx, &mut rng);
        if code.log2_cardinality() == 0 || code.log2_cardinality() > 16 {
            continue;
        }
        let image = gray_image(&code.to_z4_code().unwrap()).unwrap();
        assert_eq!(min_weights(&image, 3, 16).unwrap(), naive_min_weights(&image).unwrap());
        checked += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn random_codes_pair_with_their_duals(seed in any::<u64>(), big in any::<bool>()) {
        let ctx = ctx(if big { 7 } else { 3 });
        let code = random_code(&ctx, &mut ChaCha8Rng::seed_from_u64(seed));
        let dual = code.dual();
        prop_assert!(is_dual_pair(&code, &dual));
        prop_assert_eq!(dual.dual(), code);
    }
}
