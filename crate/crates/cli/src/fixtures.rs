//! Reference values for length 14 (n = 7) and the Mersenne counts.

use std::sync::Arc;

use num_bigint::BigUint;

use negaz4v::factorbase::FactorizationContext;
use negaz4v::ideals::{Family, IdealSpec};
use negaz4v::negacode::{dual_component, NegacyclicCode};
use negaz4v::Result;

pub const N7_FACTORS: [&str; 3] = ["3 1", "3 1 2 1", "3 2 3 1"];

pub const N7_IDEMPOTENTS: [&str; 3] =
    ["3 0 1 0 3 0 1 0 3 0 1 0 3", "1 0 1 0 3 0 2 0 3 0 2 0 2", "1 0 2 0 2 0 1 0 2 0 1 0 3"];

pub const N7_CODES: &str = "293687";
pub const N7_SELF_DUAL: &str = "339";
pub const N31_SELF_DUAL: &str = "5093808171";

/// `(p, self-dual count)` for `n = 2^p - 1`.
pub fn mersenne_self_dual() -> Vec<(u32, String)> {
    vec![
        (3, N7_SELF_DUAL.to_string()),
        (5, N31_SELF_DUAL.to_string()),
        (7, (BigUint::from(17033u32).pow(9) * 3u32).to_string()),
    ]
}

/// The self-dual first components at n = 7: `<2>`, `<v(x-1), 2(x-1)>`, `<2 + v(x-1), 2(x-1)>`.
pub fn n7_first_components() -> Vec<IdealSpec> {
    vec![
        IdealSpec::plain(Family::F7),
        IdealSpec::with_b(Family::F15, "0".parse().expect("literal")),
        IdealSpec::with_b(Family::F15, "1".parse().expect("literal")),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub min_lee: u32,
    pub min_euclidean: u32,
    pub k1: usize,
    pub k2: usize,
}

const GOOD_B: [&str; 6] = ["0 0 1", "0 1", "0 1 1", "1 0 1", "1 1", "1 1 1"];

/// The 36 highlighted self-dual codes of length 14 with their expected Gray-image
/// parameters. The second component runs over `<2(b f + v)>` then `<b f + v, 2>`
/// for the six `b` above; the third is its dual partner.
pub fn highlighted_n7(ctx: &Arc<FactorizationContext>) -> Result<Vec<(NegacyclicCode, Expected)>> {
    let firsts = n7_first_components();
    let mut out = Vec::new();
    for c1 in [&firsts[1], &firsts[2], &firsts[0]] {
        let expected = if c1.family == Family::F7 {
            Expected { min_lee: 6, min_euclidean: 12, k1: 6, k2: 16 }
        } else {
            Expected { min_lee: 8, min_euclidean: 12, k1: 7, k2: 14 }
        };
        for family in [Family::F3, Family::F11] {
            for b in GOOD_B {
                let c2 = IdealSpec::with_b(family, b.parse()?);
                let c3 = dual_component(ctx, 1, &c2);
                out.push((NegacyclicCode::assemble(ctx, vec![c1.clone(), c2, c3])?, expected));
            }
        }
    }
    Ok(out)
}
