#![allow(dead_code)]

use num_complex::Complex64;
use qweight::ame::DimensionProfile;
use qweight::states::{DenseOperator, StateVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn side(profile: &DimensionProfile) -> usize {
    profile.dims().iter().map(|&d| d as usize).product()
}

pub fn random_matrix(profile: &DimensionProfile, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let n = side(profile);
    (0..n * n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

fn frobenius_normalized(mut m: Vec<Complex64>) -> Vec<Complex64> {
    let f = m.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
    m.iter_mut().for_each(|v| *v /= f);
    m
}

/// Arbitrary complex matrix, unit Frobenius norm.
pub fn random_operator(profile: &DimensionProfile, rng: &mut ChaCha8Rng) -> DenseOperator {
    DenseOperator::new(profile.clone(), frobenius_normalized(random_matrix(profile, rng))).unwrap()
}

/// Hermitian, unit Frobenius norm.
pub fn random_hermitian(profile: &DimensionProfile, rng: &mut ChaCha8Rng) -> DenseOperator {
    let n = side(profile);
    let g = random_matrix(profile, rng);
    let mut h = vec![Complex64::new(0.0, 0.0); n * n];
    for r in 0..n {
        for c in 0..n {
            h[r * n + c] = g[r * n + c] + g[c * n + r].conj();
        }
    }
    DenseOperator::new(profile.clone(), frobenius_normalized(h)).unwrap()
}

/// Traceless Hermitian, hence indefinite.
pub fn random_indefinite(profile: &DimensionProfile, rng: &mut ChaCha8Rng) -> DenseOperator {
    let h = random_hermitian(profile, rng);
    let n = h.side();
    let shift = h.trace().re / n as f64;
    let mut m = h.matrix().to_vec();
    (0..n).for_each(|i| m[i * n + i] -= shift);
    DenseOperator::new(profile.clone(), m).unwrap()
}

/// `G G† / Tr(G G†)`.
pub fn random_psd(profile: &DimensionProfile, rng: &mut ChaCha8Rng) -> DenseOperator {
    let g = random_operator(profile, rng);
    let p = g.matmul(&g.adjoint()).unwrap();
    let t = p.trace();
    p.scale(t.inv())
}

pub fn random_state(profile: &DimensionProfile, rng: &mut ChaCha8Rng) -> StateVector {
    let amps = (0..side(profile))
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    StateVector::normalized(profile.clone(), amps).unwrap()
}

/// Random profile with `n` parties, each dimension in `2..=max_dim`.
pub fn random_profile(n: usize, max_dim: u32, rng: &mut ChaCha8Rng) -> DimensionProfile {
    DimensionProfile::new((0..n).map(|_| rng.gen_range(2..=max_dim)).collect()).unwrap()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
