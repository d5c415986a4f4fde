use std::time::Instant;

use num_bigint::BigInt;
use proptest::prelude::*;
use qweight::ame::{
    ame_shadow_coeffs, ame_shor_laflamme, check_ame_uniform, mixed_shadow_scan, mixed_shadow_value, scott_bound,
    DimensionProfile,
};
use qweight::enumerators::macwilliams;
use qweight::exactmath::Rational;
use qweight::qecclp::{build_lp, check_code_params, find_feasible, CodeParams, CodeVerdict, LinearConstraint, Relation};

fn cfg() -> ProptestConfig {
    ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn ame_enumerator_is_self_dual_and_pure(n in 2usize..=24, dim in 2u32..=7) {
        let a = ame_shor_laflamme(n, dim).unwrap();
        prop_assert_eq!(&a.coeffs()[0], &Rational::one());
        // Σ_j A_j = D^n Tr(ρ²) = D^n
        prop_assert_eq!(a.sum(), Rational::from(num_traits::pow(BigInt::from(dim), n)));
        prop_assert!(a.coeffs()[1..=n / 2].iter().all(Rational::is_zero));
        let b = macwilliams(&a).unwrap();
        prop_assert_eq!(b.coeffs(), a.coeffs());
    }

    #[test]
    fn mixed_scan_matches_direct_sums(dims in prop::collection::vec(2u32..=5, 1..=6)) {
        let p = DimensionProfile::new(dims).unwrap();
        let scan = mixed_shadow_scan(&p).unwrap();
        let direct: Vec<Rational> = (0..=p.full_mask()).map(|t| mixed_shadow_value(&p, t).unwrap()).collect();
        let min = direct.iter().min().unwrap();
        prop_assert_eq!(&scan.min_value, min);
        prop_assert_eq!(&direct[scan.witness_t as usize], min);
        prop_assert!(direct[..scan.witness_t as usize].iter().all(|v| v > min));
        prop_assert_eq!(scan.excluded, min.is_negative());
    }

    #[test]
    fn uniform_mixed_values_sum_to_shadow(n in 1usize..=9, dim in 2u32..=5) {
        // Σ_{|T| = m} value(T) = S_{n-m}
        let p = DimensionProfile::uniform(n, dim).unwrap();
        let s = ame_shadow_coeffs(n, dim).unwrap();
        let mut sums = vec![Rational::zero(); n + 1];
        for t in 0..=p.full_mask() {
            sums[t.count_ones() as usize] += mixed_shadow_value(&p, t).unwrap();
        }
        for m in 0..=n {
            prop_assert_eq!(&sums[m], &s.coeffs()[n - m]);
        }
    }

    #[test]
    fn simplex_finds_planted_points(
        x0 in prop::collection::vec(0i64..=5, 2..=6),
        rows in prop::collection::vec((prop::collection::vec(-4i64..=4, 6), any::<bool>(), 0i64..=3), 1..=6),
    ) {
        let nv = x0.len();
        let cons: Vec<LinearConstraint> = rows
            .iter()
            .enumerate()
            .map(|(i, (c, eq, slack))| {
                let coeffs: Vec<Rational> = c[..nv].iter().map(|&v| Rational::from(v)).collect();
                let lhs: i64 = c[..nv].iter().zip(&x0).map(|(a, b)| a * b).sum();
                let (relation, rhs) = if *eq { (Relation::Eq, lhs) } else { (Relation::Ge, lhs - slack) };
                LinearConstraint { label: format!("r{i}"), coeffs, relation, rhs: Rational::from(rhs) }
            })
            .collect();
        let f = find_feasible(nv, &cons);
        let x = f.point.expect("planted point makes the system feasible");
        prop_assert!(x.iter().all(|v| !v.is_negative()));
        prop_assert!(cons.iter().all(|c| c.holds(&x)));
        prop_assert_eq!(find_feasible(nv, &cons).iterations, f.iterations);
    }

    #[test]
    fn lp_witnesses_satisfy_their_model(n in 1usize..=9, k_exp in 0u32..=3, d_frac in 0.0f64..=1.0, dim in 2u32..=4) {
        let k = (dim as u64).pow(k_exp.min(n as u32));
        let d = 1 + (d_frac * n as f64).floor() as usize;
        let params = CodeParams::new(n, k, d, dim).unwrap();
        let model = build_lp(&params).unwrap();
        let check = check_code_params(&params).unwrap();
        match &check.witness {
            Some(w) => prop_assert!(model.is_satisfied_by(w)),
            None => prop_assert_eq!(check.verdict, CodeVerdict::Excluded),
        }
    }
}

#[test]
fn lp_excludes_every_cell_the_enumerator_tests_exclude() {
    let start = Instant::now();
    let mut checked = 0;
    for dim in 2..=5u32 {
        for n in 2..=scott_bound(dim).1 as usize {
            let verdict = check_ame_uniform(n, dim).unwrap();
            let lp = check_code_params(&CodeParams::ame(n, dim).unwrap()).unwrap();
            if verdict.excluded {
                assert_eq!(lp.verdict, CodeVerdict::Excluded, "n={n} D={dim}");
            } else {
                // the distance equations pin A to the AME enumerator, which must pass
                assert_eq!(lp.verdict, CodeVerdict::Undecided, "n={n} D={dim}");
                assert_eq!(lp.witness.as_deref(), Some(ame_shor_laflamme(n, dim).unwrap().coeffs()));
            }
            checked += 1;
        }
    }
    eprintln!("LP agreement over {checked} cells in {:?}", start.elapsed());
}
