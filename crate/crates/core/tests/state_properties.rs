mod common;

use common::{max_abs_diff, random_hermitian, random_indefinite, random_operator, random_profile, random_psd, random_state, rng};
use num_complex::Complex64;
use proptest::prelude::*;
use qweight::ame::DimensionProfile;
use qweight::enumerators::{macwilliams, shadow_from_unitary, shadow_transform, EnumeratorKind, EnumeratorVector};
use qweight::exactmath::Rational;
use qweight::states::{
    channel_partial_trace, partial_trace, partial_trace_with_identity, shadow_coeffs_brute,
    shor_laflamme_from_operators, unitary_enum_from_operators, LocalErrorBasis,
};

fn cfg() -> ProptestConfig {
    ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn exact(kind: EnumeratorKind, dim: u32, v: &[f64]) -> EnumeratorVector {
    let coeffs = v.iter().map(|&x| Rational::from_f64(x).unwrap()).collect();
    EnumeratorVector::new(kind, dim, coeffs).unwrap()
}

fn floats(v: &EnumeratorVector) -> Vec<f64> {
    v.coeffs().iter().map(Rational::to_f64).collect()
}

/// Uniform profiles small enough for full error-basis enumeration.
fn uniform() -> impl Strategy<Value = DimensionProfile> {
    (1usize..=3, 2u32..=3).prop_map(|(n, d)| DimensionProfile::uniform(n, d).unwrap())
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn channel_matches_direct_partial_trace(seed in any::<u64>(), n in 1usize..=3, mask in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_profile(n, 3, &mut r);
        let m = random_operator(&p, &mut r);
        let s = mask & p.full_mask();
        let ch = channel_partial_trace(&m, s).unwrap();
        let direct = partial_trace_with_identity(&m, s).unwrap();
        prop_assert!(ch.max_abs_diff(&direct) <= 1e-10);
        if s != p.full_mask() {
            let t = partial_trace(&m, s).unwrap();
            prop_assert!((t.trace() - m.trace()).norm() <= 1e-10);
        }
    }

    #[test]
    fn enumerators_decompose_trace_products(seed in any::<u64>(), p in uniform()) {
        let mut r = rng(seed);
        let m = random_hermitian(&p, &mut r);
        let n_op = random_hermitian(&p, &mut r);
        let e = shor_laflamme_from_operators(&m, &n_op).unwrap();
        let scale = (p.dims()[0] as f64).powi(-(p.n() as i32));
        let tr_mn = m.matmul(&n_op).unwrap().trace();
        let tr_tr = m.trace() * n_op.trace();
        prop_assert!(e.max_imag <= 1e-9);
        prop_assert!((scale * e.a.iter().sum::<f64>() - tr_mn.re).abs() <= 1e-9);
        prop_assert!((scale * e.b.iter().sum::<f64>() - tr_tr.re).abs() <= 1e-9);
        prop_assert!((e.a[0] - tr_tr.re).abs() <= 1e-9);
        prop_assert!((e.b[0] - tr_mn.re).abs() <= 1e-9);
    }

    #[test]
    fn macwilliams_holds_for_indefinite_pairs(seed in any::<u64>(), p in uniform()) {
        let mut r = rng(seed);
        let m = random_indefinite(&p, &mut r);
        let n_op = random_indefinite(&p, &mut r);
        let e = shor_laflamme_from_operators(&m, &n_op).unwrap();
        let b = macwilliams(&exact(EnumeratorKind::ShorLaflammeA, p.dims()[0], &e.a)).unwrap();
        prop_assert!(max_abs_diff(&floats(&b), &e.b) <= 1e-8);
    }

    #[test]
    fn psd_shadow_is_nonnegative(seed in any::<u64>(), n in 1usize..=4, dim in 2u32..=3) {
        let n = if dim == 3 { n.min(3) } else { n };
        let p = DimensionProfile::uniform(n, dim).unwrap();
        let mut r = rng(seed);
        let m = random_psd(&p, &mut r);
        let n_op = random_psd(&p, &mut r);
        let brute = shadow_coeffs_brute(&m, &n_op).unwrap();
        prop_assert!(brute.iter().all(|&s| s >= -1e-9), "{:?}", brute);

        let u = unitary_enum_from_operators(&m, &n_op).unwrap();
        let s = shadow_from_unitary(&exact(EnumeratorKind::UnitaryA, dim, &u.a_prime)).unwrap();
        prop_assert!(max_abs_diff(&floats(&s), &brute) <= 1e-8);
    }

    #[test]
    fn shadow_from_measured_a_matches_brute(seed in any::<u64>(), p in uniform()) {
        let mut r = rng(seed);
        let m = random_hermitian(&p, &mut r);
        let n_op = random_hermitian(&p, &mut r);
        let e = shor_laflamme_from_operators(&m, &n_op).unwrap();
        let s = shadow_transform(&exact(EnumeratorKind::ShorLaflammeA, p.dims()[0], &e.a)).unwrap();
        prop_assert!(max_abs_diff(&floats(&s), &shadow_coeffs_brute(&m, &n_op).unwrap()) <= 1e-8);
    }

    #[test]
    fn pure_states_have_equal_a_and_b(seed in any::<u64>(), p in uniform()) {
        let mut r = rng(seed);
        let rho = random_state(&p, &mut r).density().unwrap();
        let e = shor_laflamme_from_operators(&rho, &rho).unwrap();
        prop_assert!(max_abs_diff(&e.a, &e.b) <= 1e-9);
        // Schmidt symmetry of the unitary enumerator
        let u = unitary_enum_from_operators(&rho, &rho).unwrap();
        let rev: Vec<f64> = u.a_prime.iter().rev().copied().collect();
        prop_assert!(max_abs_diff(&u.a_prime, &rev) <= 1e-9);
    }

    #[test]
    fn local_basis_is_orthogonal(dim in 2u32..=12) {
        let basis = LocalErrorBasis::new(dim).unwrap();
        let d = dim as usize;
        let elems: Vec<Vec<Complex64>> = basis.labels().map(|(a, b)| basis.element(a, b)).collect();
        prop_assert_eq!(elems.len(), d * d);
        for (i, e) in elems.iter().enumerate() {
            for (j, f) in elems.iter().enumerate() {
                // Tr(e† f)
                let ip: Complex64 = e.iter().zip(f).map(|(x, y)| x.conj() * y).sum();
                let want = if i == j { dim as f64 } else { 0.0 };
                prop_assert!((ip - want).norm() <= 1e-12);
            }
        }
    }
}
