use num_complex::Complex64;
use proptest::prelude::*;
use strata_core::numerics::{fs_det, lift_points, mu_coeffs, CurveInstance, ZERO_TOL};
use strata_core::semigroup::CurveSignature;

fn complex() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| Complex64::new(a, b))
}

fn case() -> impl Strategy<Value = (CurveInstance, Vec<(Complex64, u32)>)> {
    prop::sample::select(vec![(2u32, 5u32), (2, 7), (3, 4), (3, 5), (4, 5), (3, 7)]).prop_flat_map(|(r, s)| {
        let sig = CurveSignature::new(r, s).unwrap();
        let g = sig.genus();
        (
            prop::collection::vec(complex(), s as usize),
            prop::collection::vec(((0.3f64..1.2, 0.0f64..std::f64::consts::TAU), 0..r), 1..=g),
        )
            .prop_map(move |(l, pts)| {
                let curve = CurveInstance::new(sig, l).unwrap();
                let pts = pts.into_iter().map(|((m, a), b)| (Complex64::from_polar(m, a), b)).collect();
                (curve, pts)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mu_vanishes_at_its_points((curve, raw) in case()) {
        let pts: Vec<_> = raw.iter().filter_map(|&(x, b)| lift_points(&curve, &[x], b).ok().map(|p| p[0])).collect();
        prop_assume!(!pts.is_empty());
        let Ok(mu) = mu_coeffs(&curve, &pts) else { return Ok(()); };
        prop_assert_eq!(mu.extra_zeros, mu.pole_order - pts.len() as u64);
        for p in &pts {
            prop_assert!(p.residual <= 1e-10 * p.y.norm().powi(curve.sig.r() as i32).max(1.0));
            prop_assert!(mu.eval(&curve, p).norm() <= ZERO_TOL * mu.scale(&curve, p));
        }
    }

    #[test]
    fn fs_det_antisymmetric((curve, raw) in case()) {
        let pts: Vec<_> = raw.iter().filter_map(|&(x, b)| lift_points(&curve, &[x], b).ok().map(|p| p[0])).collect();
        prop_assume!(pts.len() >= 2);
        let mut sw = pts.clone();
        sw.swap(0, 1);
        let (a, b) = (fs_det(&curve, &pts), fs_det(&curve, &sw));
        prop_assert!((a + b).norm() <= ZERO_TOL * a.norm().max(1e-300));
    }
}
