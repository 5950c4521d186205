use super::{F2Poly, Z4Poly};
use crate::error::{Error, Result};

/// Lifts a coprime factorization `fbar * gbar = target (mod 2)` to the unique
/// monic factorization `f * g = target` over Z4 with `f = fbar`, `g = gbar` mod 2.
pub fn hensel_lift_factor(fbar: &F2Poly, gbar: &F2Poly, target: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
    if !target.is_monic() {
        return Err(Error::NonMonicModulus(target.to_string()));
    }
    let product = fbar.mul(gbar);
    if product != target.project_mod2() {
        return Err(Error::ProductMismatch { expected: target.project_mod2().to_string(), got: product.to_string() });
    }
    let (g, _, t) = fbar.ext_gcd(gbar);
    if !g.is_one() {
        return Err(Error::NotCoprime(fbar.to_string(), gbar.to_string()));
    }

    let f0 = Z4Poly::from_f2(fbar);
    let g0 = Z4Poly::from_f2(gbar);
    let err = (target - &(&f0 * &g0))
        .halve()
        .ok_or_else(|| Error::Internal("lifted product differs by an odd polynomial".into()))?
        .project_mod2();

    // Solve sigma * gbar + tau * fbar = err with deg sigma < deg fbar.
    let sigma = err.mul(&t).rem(fbar);
    let tau = err
        .add(&sigma.mul(gbar))
        .exact_div(fbar)
        .ok_or_else(|| Error::Internal("Hensel correction is not divisible".into()))?;

    let f = &f0 + &Z4Poly::from_f2(&sigma).scale(2);
    let g = &g0 + &Z4Poly::from_f2(&tau).scale(2);
    if &f * &g != *target {
        return Err(Error::Internal(format!("lift {f} * {g} does not multiply to {target}")));
    }
    Ok((f, g))
}

/// Lifts `a2 * F + b2 * f = 1 (mod 2)` to an exact identity `a * F + b * f = 1` over Z4.
///
/// With `u = a2 F + b2 f = 1 + 2w` one Newton step gives `u (2 - u) = 1 - 4w^2 = 1`.
/// When `f` is monic the result is normalized to `deg a < deg f`.
pub fn lift_bezout(a2: &F2Poly, b2: &F2Poly, big_f: &Z4Poly, f: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
    let check = a2.mul(&big_f.project_mod2()).add(&b2.mul(&f.project_mod2()));
    if !check.is_one() {
        return Err(Error::NotBezoutPair { a: a2.to_string(), b: b2.to_string() });
    }
    let a_lift = Z4Poly::from_f2(a2);
    let b_lift = Z4Poly::from_f2(b2);
    let u = &(&a_lift * big_f) + &(&b_lift * f);
    let correction = &Z4Poly::constant(2) - &u;
    let mut a = &a_lift * &correction;
    let mut b = &b_lift * &correction;

    if f.is_monic() && f.degree() > Some(0) {
        a = a.rem_monic(f)?;
        let rest = &Z4Poly::one() - &(&a * big_f);
        let (q, r) = rest.div_rem_monic(f)?;
        if !r.is_zero() {
            return Err(Error::Internal("Bezout normalization left a remainder".into()));
        }
        b = q;
    }
    if &(&a * big_f) + &(&b * f) != Z4Poly::one() {
        return Err(Error::Internal("lifted Bezout identity does not hold".into()));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> Z4Poly {
        s.parse().unwrap()
    }
    fn b(s: &str) -> F2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn lifts_x3_minus_1() {
        let (f, g) = hensel_lift_factor(&b("1 1"), &b("1 1 1"), &z("3 0 0 1")).unwrap();
        assert_eq!(f, z("3 1"));
        assert_eq!(g, z("1 1 1"));
    }

    #[test]
    fn lifts_x7_minus_1() {
        let target = z("3 0 0 0 0 0 0 1");
        let rest = b("1 1 0 1").mul(&b("1 0 1 1"));
        let (f, g) = hensel_lift_factor(&b("1 1"), &rest, &target).unwrap();
        assert_eq!(f, z("3 1"));
        assert_eq!(&f * &g, target);
        assert_eq!(g.project_mod2(), rest);

        let cof = b("1 1").mul(&b("1 0 1 1"));
        let (f2, _) = hensel_lift_factor(&b("1 1 0 1"), &cof, &target).unwrap();
        assert_eq!(f2, z("3 1 2 1"));
        let cof = b("1 1").mul(&b("1 1 0 1"));
        let (f3, _) = hensel_lift_factor(&b("1 0 1 1"), &cof, &target).unwrap();
        assert_eq!(f3, z("3 2 3 1"));
    }

    #[test]
    fn identity_cofactor() {
        let target = z("3 1 2 1");
        let (f, g) = hensel_lift_factor(&b("1 1 0 1"), &F2Poly::one(), &target).unwrap();
        assert_eq!((f, g), (target, Z4Poly::one()));
    }

    #[test]
    fn rejects_bad_inputs() {
        // not coprime: (x+1)(x+1) = x^2 + 1
        assert!(matches!(hensel_lift_factor(&b("1 1"), &b("1 1"), &z("1 0 1")), Err(Error::NotCoprime(..))));
        assert!(matches!(
            hensel_lift_factor(&b("1 1"), &b("1 1 1"), &z("1 0 0 1 1")),
            Err(Error::ProductMismatch { .. })
        ));
    }

    #[test]
    fn bezout_for_n3() {
        let big_f = z("1 1 1");
        let f = z("3 1");
        let (_, s, t) = big_f.project_mod2().ext_gcd(&f.project_mod2());
        let (a, bb) = lift_bezout(&s, &t, &big_f, &f).unwrap();
        assert_eq!(&(&a * &big_f) + &(&bb * &f), Z4Poly::one());
    }

    #[test]
    fn bezout_trivial_cofactor() {
        let f = z("3 1 2 1");
        let (a, bb) = lift_bezout(&F2Poly::one(), &F2Poly::zero(), &Z4Poly::one(), &f).unwrap();
        assert_eq!(a, Z4Poly::one());
        assert!(bb.is_zero());
    }

    #[test]
    fn bezout_rejects_non_pair() {
        assert!(matches!(
            lift_bezout(&F2Poly::one(), &F2Poly::one(), &z("1 1 1"), &z("3 1")),
            Err(Error::NotBezoutPair { .. })
        ));
    }
}
