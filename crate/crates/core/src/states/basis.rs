use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Heisenberg-Weyl operators `X^a Z^b` on one `D`-level site, with
/// `X|j⟩ = |j+1 mod D⟩` and `Z|j⟩ = ω^j |j⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalErrorBasis {
    dim: u32,
    /// `ω^k` for `k = 0..D`.
    roots: Vec<Complex64>,
}

impl LocalErrorBasis {
    pub fn new(dim: u32) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain(format!("local dimension must be at least 2, got {dim}")));
        }
        let roots = (0..dim).map(|k| Complex64::from_polar(1.0, TAU * k as f64 / dim as f64)).collect();
        Ok(LocalErrorBasis { dim, roots })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// `ω^k`, with `k` reduced modulo `D`.
    pub fn root(&self, k: u64) -> Complex64 {
        self.roots[(k % self.dim as u64) as usize]
    }

    /// All `(a, b)` labels, `(0, 0)` first.
    pub fn labels(&self) -> impl Iterator<Item = (u32, u32)> {
        let d = self.dim;
        (0..d).flat_map(move |a| (0..d).map(move |b| (a, b)))
    }

    /// Dense row-major matrix of `X^a Z^b`.
    pub fn element(&self, a: u32, b: u32) -> Vec<Complex64> {
        let d = self.dim as usize;
        let mut m = vec![Complex64::new(0.0, 0.0); d * d];
        for j in 0..d {
            // X^a Z^b |j⟩ = ω^{bj} |j + a⟩
            m[(j + a as usize) % d * d + j] = self.root(b as u64 * j as u64);
        }
        m
    }
}

/// Tensor product `E = e_{α₁} ⊗ … ⊗ e_{αₙ}` named by its per-site labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedErrorIndex {
    labels: Vec<(u32, u32)>,
}

impl WeightedErrorIndex {
    pub fn new(labels: Vec<(u32, u32)>) -> Self {
        WeightedErrorIndex { labels }
    }

    /// Decodes `index ∈ [0, D^{2n})`: site `i` takes the base-`D²` digit
    /// `i` counted from the most significant end, split as `a·D + b`.
    pub fn from_linear(index: u64, n: usize, dim: u32) -> Self {
        let dd = dim as u64 * dim as u64;
        let mut labels = vec![(0, 0); n];
        let mut rest = index;
        for slot in labels.iter_mut().rev() {
            let digit = rest % dd;
            rest /= dd;
            *slot = ((digit / dim as u64) as u32, (digit % dim as u64) as u32);
        }
        WeightedErrorIndex { labels }
    }

    pub fn labels(&self) -> &[(u32, u32)] {
        &self.labels
    }

    /// Sites whose factor is not the identity, as a bit mask.
    pub fn support(&self) -> u64 {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l != (0, 0))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn weight(&self) -> usize {
        self.labels.iter().filter(|&&l| l != (0, 0)).count()
    }
}
