use strata_core::certify::{
    build_hierarchy, certify_g_power, certify_natural, derivative_on_stratum, multisets, CertifyOptions, Mode,
    StratumContext, StratumRestriction, Verdict,
};
use strata_core::partition::{n_k, natural_k, natural_k_i};
use strata_core::poly::Rational;
use strata_core::semigroup::CurveSignature;

fn sig(r: u32, s: u32) -> CurveSignature {
    CurveSignature::new(r, s).unwrap()
}

fn small_sigs() -> Vec<CurveSignature> {
    CurveSignature::all_up_to(13).into_iter().filter(|s| s.genus() >= 2 && s.genus() <= 6).collect()
}

#[test]
fn natural_variants_are_nonzero() {
    let opts = CertifyOptions::default();
    for s in small_sigs() {
        for k in 1..s.genus() {
            let ctx = StratumContext::new(s, k, &opts).unwrap();
            for i in 1..=k {
                let idx = natural_k_i(s, k, i).unwrap();
                let c = ctx.certify(&idx).unwrap();
                assert!(matches!(c.verdict, Verdict::NonZero { .. }), "{s} k={k} i={i} {idx:?}");
            }
        }
    }
}

#[test]
fn natural_constant_is_a_sign() {
    // With T_k = (1/k) Σ t^k the measured constant is ±1 throughout.
    let opts = CertifyOptions::default();
    for s in small_sigs() {
        for k in 1..s.genus() {
            let c = certify_natural(s, k, &opts).unwrap();
            assert!(c.constant.abs().is_one(), "{s} k={k}: {}", c.constant);
            assert_eq!(c.natural.len(), n_k(s, k).unwrap());
        }
    }
}

#[test]
fn stable_under_seed() {
    let s = sig(3, 5);
    for k in 1..s.genus() {
        let a = certify_natural(s, k, &CertifyOptions::default()).unwrap();
        let b = certify_natural(s, k, &CertifyOptions { seed: 17, trials: 5, ..Default::default() }).unwrap();
        assert_eq!(a.constant, b.constant);
        assert_eq!(b.certificate.points.len(), 5);
    }
}

#[test]
fn derivative_order_is_irrelevant() {
    let s = sig(2, 9);
    let r = StratumRestriction::new(s, vec![Rational::new(2, 7), Rational::new(-3, 5)]).unwrap();
    for idx in multisets(4, 3) {
        let mut rev = idx.clone();
        rev.reverse();
        assert_eq!(
            derivative_on_stratum(s, 2, &idx, &r).unwrap(),
            derivative_on_stratum(s, 2, &rev, &r).unwrap()
        );
    }
}

#[test]
fn theta_divisor_vanishing() {
    let opts = CertifyOptions::default();
    for s in small_sigs() {
        let g = s.genus();
        let ctx = StratumContext::new(s, g - 1, &opts).unwrap();
        assert!(ctx.certify(&[]).unwrap().is_zero(), "{s}");
        let full = StratumContext::new(s, g, &opts).unwrap();
        assert!(!full.certify(&[]).unwrap().is_zero(), "{s}");
    }
}

#[test]
fn g_power_examples() {
    let opts = CertifyOptions::default();
    let s = sig(2, 5);
    let a = certify_g_power(s, 1, 1, &opts).unwrap();
    let b = certify_g_power(s, 1, 2, &opts).unwrap();
    let n = certify_natural(s, 1, &opts).unwrap();
    assert_eq!((a.power, b.power), (0, 1));
    assert_eq!(a.constant, n.constant);
    assert_eq!(b.constant, n.constant);

    let c = certify_g_power(sig(2, 7), 1, 2, &opts).unwrap();
    assert_eq!(c.power, 3);
    assert_eq!(c.lower_powers.len(), 3);
    assert_eq!(c.constant, Rational::from_int(2));

    let c = certify_g_power(sig(3, 4), 2, 2, &opts).unwrap();
    assert_eq!(c.power, 1);
}

#[test]
fn sampled_route_large_genus() {
    // (5,7), g = 12: the top stratum k = 11 with ♮_11 = {12}.
    let s = sig(5, 7);
    let opts = CertifyOptions { trials: 2, ..Default::default() };
    let ctx = StratumContext::new(s, 11, &opts).unwrap();
    assert_eq!(ctx.mode(), Mode::Sampled);
    assert_eq!(natural_k(s, 11).unwrap(), vec![12]);
    assert!(ctx.certify(&[]).unwrap().is_zero());
    let c = ctx.certify(&[12]).unwrap();
    assert!(c.constant().is_some_and(|c| c.abs().is_one()));
}

#[test]
fn hierarchy_spec_displays() {
    let h = build_hierarchy(sig(3, 7), 2).unwrap();
    assert_eq!(h.matrices[1].to_string(), "[[1]]");
    let h = build_hierarchy(sig(7, 9), 13).unwrap();
    assert_eq!(h.matrices[2].to_string(), "[[1,2],[0,1]]");
    assert!(build_hierarchy(sig(2, 5), 2).is_err());
}
