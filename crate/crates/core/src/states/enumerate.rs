use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::trace::reduce;
use super::{strides, DenseOperator, LocalErrorBasis};
use crate::error::{Error, Result};

/// Largest `D^{4n}` for which the error-basis sums are attempted. Admits
/// `n ≤ 6` qubits and `n ≤ 4` qutrits.
pub const ENUMERATION_BUDGET: u64 = 50_000_000;

/// Party limit of [`shadow_coeffs_brute`].
pub const BRUTE_SHADOW_MAX_PARTIES: usize = 4;

/// Tolerance of the distance conditions.
pub const DISTANCE_TOL: f64 = 1e-8;

/// Tolerance used when validating projectors.
pub const PROJECTOR_TOL: f64 = 1e-9;

/// Shor-Laflamme enumerators measured from explicit operators. `max_imag`
/// is the largest discarded imaginary part.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorEnumerators {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub max_imag: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitaryEnumerators {
    pub a_prime: Vec<f64>,
    pub b_prime: Vec<f64>,
    pub max_imag: f64,
}

fn same_profile(m: &DenseOperator, n: &DenseOperator) -> Result<()> {
    if m.profile() != n.profile() {
        return Err(Error::Validation(format!(
            "operators live on different systems ({} vs {})",
            m.profile(),
            n.profile()
        )));
    }
    Ok(())
}

fn uniform_within_budget(m: &DenseOperator) -> Result<u32> {
    let profile = m.profile();
    let dim = profile
        .uniform_dim()
        .ok_or_else(|| Error::Domain(format!("error-basis sums need a uniform local dimension, got {profile}")))?;
    let cost = (dim as u64).checked_pow(4 * profile.n() as u32);
    if cost.is_none_or(|c| c > ENUMERATION_BUDGET) {
        return Err(Error::Resource(format!(
            "enumerating the error basis of {profile} needs D^(4n) operations, above the budget of {ENUMERATION_BUDGET}"
        )));
    }
    Ok(dim)
}

fn split(v: Vec<Complex64>) -> (Vec<f64>, f64) {
    let imag = v.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
    (v.into_iter().map(|c| c.re).collect(), imag)
}

/// `A_j = Σ_{wt(E)=j} Tr(E M) Tr(E† N)` and `B_j = Σ_{wt(E)=j} Tr(E M E† N)`
/// over the full Heisenberg-Weyl error basis.
pub fn shor_laflamme_from_operators(m: &DenseOperator, n_op: &DenseOperator) -> Result<OperatorEnumerators> {
    same_profile(m, n_op)?;
    let dim = uniform_within_budget(m)?;
    let basis = LocalErrorBasis::new(dim)?;
    let n = m.profile().n();
    let side = m.side();
    let d = dim as usize;
    let st = strides(m.profile().dims());
    let digits: Vec<usize> = (0..side).flat_map(|r| st.iter().map(move |s| r / s % d)).collect();
    let (mm, nn) = (m.matrix(), n_op.matrix());

    // E = X^a Z^b maps |r⟩ to ω^{b·r} |r + a⟩
    let per_shift: Vec<(Vec<Complex64>, Vec<Complex64>)> = (0..side)
        .into_par_iter()
        .map(|ia| {
            let a = &digits[ia * n..(ia + 1) * n];
            let shift: Vec<usize> = (0..side)
                .map(|r| {
                    let rd = &digits[r * n..(r + 1) * n];
                    (0..n).map(|i| (rd[i] + a[i]) % d * st[i]).sum()
                })
                .collect();
            let mut acc_a = vec![Complex64::new(0.0, 0.0); n + 1];
            let mut acc_b = vec![Complex64::new(0.0, 0.0); n + 1];
            let mut phase = vec![0u64; side];
            for ib in 0..side {
                let b = &digits[ib * n..(ib + 1) * n];
                let weight = (0..n).filter(|&i| a[i] != 0 || b[i] != 0).count();
                for (r, p) in phase.iter_mut().enumerate() {
                    let rd = &digits[r * n..(r + 1) * n];
                    *p = (0..n).map(|i| (b[i] * rd[i]) as u64).sum::<u64>() % dim as u64;
                }
                let mut tr_em = Complex64::new(0.0, 0.0);
                let mut tr_edn = Complex64::new(0.0, 0.0);
                for r in 0..side {
                    let w = basis.root(phase[r]);
                    tr_em += w * mm[r * side + shift[r]];
                    tr_edn += w.conj() * nn[shift[r] * side + r];
                }
                let mut tr_eme_n = Complex64::new(0.0, 0.0);
                for r in 0..side {
                    let row = &mm[r * side..(r + 1) * side];
                    let sr = shift[r];
                    for c in 0..side {
                        let v = row[c];
                        if v == Complex64::new(0.0, 0.0) {
                            continue;
                        }
                        let k = phase[r] + dim as u64 - phase[c];
                        tr_eme_n += basis.root(k) * v * nn[shift[c] * side + sr];
                    }
                }
                acc_a[weight] += tr_em * tr_edn;
                acc_b[weight] += tr_eme_n;
            }
            (acc_a, acc_b)
        })
        .collect();

    let mut a = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut b = vec![Complex64::new(0.0, 0.0); n + 1];
    for (pa, pb) in per_shift {
        a.iter_mut().zip(pa).for_each(|(x, y)| *x += y);
        b.iter_mut().zip(pb).for_each(|(x, y)| *x += y);
    }
    let (a, ia) = split(a);
    let (b, ib) = split(b);
    Ok(OperatorEnumerators {
        a,
        b,
        max_imag: ia.max(ib),
    })
}

fn trace_product(x: &[Complex64], y: &[Complex64], k: usize) -> Complex64 {
    let mut t = Complex64::new(0.0, 0.0);
    for i in 0..k {
        for j in 0..k {
            t += x[i * k + j] * y[j * k + i];
        }
    }
    t
}

/// `Tr[Tr_{S^c}(M) Tr_{S^c}(N)]` for every subset mask `S`.
fn subset_overlaps(m: &DenseOperator, n_op: &DenseOperator) -> Vec<Complex64> {
    let full = m.profile().full_mask();
    (0..=full)
        .into_par_iter()
        .map(|s| {
            let (x, k) = reduce(m, s);
            let (y, _) = reduce(n_op, s);
            trace_product(&x, &y, k)
        })
        .collect()
}

/// `A′_m = Σ_{|S|=m} Tr[Tr_{S^c}(M) Tr_{S^c}(N)]` and
/// `B′_m = Σ_{|S|=m} Tr[Tr_S(M) Tr_S(N)]`, each term computed by its own
/// partial traces.
pub fn unitary_enum_from_operators(m: &DenseOperator, n_op: &DenseOperator) -> Result<UnitaryEnumerators> {
    same_profile(m, n_op)?;
    let n = m.profile().n();
    let full = m.profile().full_mask();
    let mut a = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut b = vec![Complex64::new(0.0, 0.0); n + 1];
    let terms_b: Vec<Complex64> = (0..=full)
        .into_par_iter()
        .map(|s| {
            let keep = full & !s;
            let (x, k) = reduce(m, keep);
            let (y, _) = reduce(n_op, keep);
            trace_product(&x, &y, k)
        })
        .collect();
    for (s, (ta, tb)) in subset_overlaps(m, n_op).into_iter().zip(terms_b).enumerate() {
        let size = (s as u64).count_ones() as usize;
        a[size] += ta;
        b[size] += tb;
    }
    let (a_prime, ia) = split(a);
    let (b_prime, ib) = split(b);
    Ok(UnitaryEnumerators {
        a_prime,
        b_prime,
        max_imag: ia.max(ib),
    })
}

/// `S_j = Σ_{|T|=j} Σ_S (-1)^{|S ∩ T^c|} Tr[Tr_{S^c}(M) Tr_{S^c}(N)]` by
/// explicit double summation over subsets. Real parts are returned.
pub fn shadow_coeffs_brute(m: &DenseOperator, n_op: &DenseOperator) -> Result<Vec<f64>> {
    same_profile(m, n_op)?;
    let n = m.profile().n();
    if n > BRUTE_SHADOW_MAX_PARTIES {
        return Err(Error::Resource(format!(
            "brute-force shadow needs n ≤ {BRUTE_SHADOW_MAX_PARTIES}, got {n}"
        )));
    }
    let full = m.profile().full_mask();
    let overlaps = subset_overlaps(m, n_op);
    let mut s = vec![Complex64::new(0.0, 0.0); n + 1];
    for t in 0..=full {
        let tc = full & !t;
        let j = t.count_ones() as usize;
        for (sub, v) in overlaps.iter().enumerate() {
            if (sub as u64 & tc).count_ones().is_multiple_of(2) {
                s[j] += v;
            } else {
                s[j] -= v;
            }
        }
    }
    Ok(s.into_iter().map(|c| c.re).collect())
}

fn check_projector(p: &DenseOperator, k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::Parameter("code dimension K must be at least 1".into()));
    }
    if !p.is_hermitian(PROJECTOR_TOL) {
        return Err(Error::Validation("projector is not Hermitian".into()));
    }
    let sq = p.matmul(p)?;
    let dev = sq.max_abs_diff(p);
    if dev > PROJECTOR_TOL {
        return Err(Error::Validation(format!("operator is not idempotent (deviation {dev:.3e})")));
    }
    let tr = p.trace();
    if (tr - Complex64::new(k as f64, 0.0)).norm() > PROJECTOR_TOL {
        return Err(Error::Validation(format!("projector trace is {:.6}, expected K = {k}", tr.re)));
    }
    Ok(())
}

/// Largest `d` such that `K·B_j = A_j` for all `j < d` (for `K = 1`,
/// `A_j = 0` for `0 < j < d`, the pure-state form), capped at `n + 1`.
pub fn code_distance(projector: &DenseOperator, k: u64) -> Result<usize> {
    check_projector(projector, k)?;
    let e = shor_laflamme_from_operators(projector, projector)?;
    let n = projector.profile().n();
    let first_violation = if k == 1 {
        (1..=n).find(|&j| e.a[j].abs() > DISTANCE_TOL)
    } else {
        (0..=n).find(|&j| (k as f64 * e.b[j] - e.a[j]).abs() > DISTANCE_TOL)
    };
    Ok(first_violation.unwrap_or(n + 1))
}

/// Whether the projector spans a code of distance at least `d`.
pub fn verify_code(projector: &DenseOperator, k: u64, d: usize) -> Result<bool> {
    let n = projector.profile().n();
    if d == 0 || d > n + 1 {
        return Err(Error::Parameter(format!("distance must lie in 1..={}, got {d}", n + 1)));
    }
    Ok(code_distance(projector, k)? >= d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ame::DimensionProfile;
    use crate::states::{bell, five_qubit_code_projector, ghz, ring_graph_state};

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn bell_and_ghz() {
        let rho = bell().density().unwrap();
        let e = shor_laflamme_from_operators(&rho, &rho).unwrap();
        assert!(close(&e.a, &[1.0, 0.0, 3.0], 1e-12), "{:?}", e.a);
        assert!(close(&e.b, &[1.0, 0.0, 3.0], 1e-12));
        assert!(e.max_imag < 1e-12);

        let rho = ghz(3).unwrap().density().unwrap();
        let e = shor_laflamme_from_operators(&rho, &rho).unwrap();
        assert!(close(&e.a, &[1.0, 0.0, 3.0, 4.0], 1e-12), "{:?}", e.a);
        assert!(close(&e.b, &e.a, 1e-12));
    }

    #[test]
    fn maximally_mixed_qubits() {
        let n = 3;
        let p = DimensionProfile::uniform(n, 2).unwrap();
        let m = DenseOperator::identity(p).unwrap().scale(Complex64::new(0.125, 0.0));
        let e = shor_laflamme_from_operators(&m, &m).unwrap();
        assert!(close(&e.a, &[1.0, 0.0, 0.0, 0.0], 1e-12));
        // B_j = C(3, j) 3^j / 8
        assert!(close(&e.b, &[0.125, 1.125, 3.375, 3.375], 1e-12), "{:?}", e.b);
    }

    #[test]
    fn guards() {
        let p = DimensionProfile::uniform(5, 3).unwrap();
        let m = DenseOperator::identity(p).unwrap();
        assert!(matches!(shor_laflamme_from_operators(&m, &m), Err(Error::Resource(_))));
        let mixed = DenseOperator::identity(DimensionProfile::new(vec![2, 3]).unwrap()).unwrap();
        assert!(matches!(shor_laflamme_from_operators(&mixed, &mixed), Err(Error::Domain(_))));
        let big = DenseOperator::identity(DimensionProfile::uniform(5, 2).unwrap()).unwrap();
        assert!(shadow_coeffs_brute(&big, &big).is_err());
    }

    #[test]
    fn unitary_of_bell() {
        let rho = bell().density().unwrap();
        let u = unitary_enum_from_operators(&rho, &rho).unwrap();
        assert!(close(&u.a_prime, &[1.0, 1.0, 1.0], 1e-12));
        assert!(close(&u.b_prime, &[1.0, 1.0, 1.0], 1e-12));
    }

    #[test]
    fn brute_shadow_of_pure_qubit() {
        let p = DimensionProfile::uniform(1, 2).unwrap();
        let zero = DenseOperator::new(
            p,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        let s = shadow_coeffs_brute(&zero, &zero).unwrap();
        assert!(close(&s, &[0.0, 2.0], 1e-15));
        let rho = bell().density().unwrap();
        assert!(shadow_coeffs_brute(&rho, &rho).unwrap().iter().all(|&v| v >= -1e-9));
    }

    #[test]
    fn distances() {
        assert_eq!(code_distance(&bell().density().unwrap(), 1).unwrap(), 2);
        assert_eq!(code_distance(&ghz(3).unwrap().density().unwrap(), 1).unwrap(), 2);
        let ring = ring_graph_state(5).unwrap().density().unwrap();
        assert_eq!(code_distance(&ring, 1).unwrap(), 3);
        assert!(verify_code(&ring, 1, 3).unwrap());
        assert!(!verify_code(&ring, 1, 4).unwrap());
        assert!(verify_code(&ring, 1, 7).is_err());

        let q = five_qubit_code_projector().unwrap();
        assert_eq!(code_distance(&q, 2).unwrap(), 3);
        assert!(matches!(code_distance(&q, 1), Err(Error::Validation(_))));
        let not_proj = q.scale(Complex64::new(0.5, 0.0));
        assert!(matches!(code_distance(&not_proj, 1), Err(Error::Validation(_))));
    }
}
