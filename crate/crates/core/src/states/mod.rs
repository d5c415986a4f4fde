//! Dense complex numerics over mixed local dimensions.
//!
//! Everything here is floating point and serves as an independent check on
//! the exact machinery: enumerators measured from explicit operators, both
//! forms of the partial trace, code distances and the `2×3×3×3` AME state.
//!
//! Basis states are indexed row-major with the last subsystem varying
//! fastest. Subsets of sites are bit masks, bit `i` standing for site `i`.

mod basis;
mod enumerate;
mod library;
mod trace;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ame::DimensionProfile;
use crate::error::{Error, Result};

pub use basis::{LocalErrorBasis, WeightedErrorIndex};
pub use enumerate::{
    code_distance, shadow_coeffs_brute, shor_laflamme_from_operators, unitary_enum_from_operators, verify_code,
    OperatorEnumerators, UnitaryEnumerators, BRUTE_SHADOW_MAX_PARTIES, DISTANCE_TOL, ENUMERATION_BUDGET, PROJECTOR_TOL,
};
pub use library::{
    bell, branch_overlap, five_qubit_code_projector, ghz, is_ame, lu_branch_map_check, marginal_deviation, phi_2333,
    phi_2333_branch, phi_2333_coefficients, product_zero, ring_graph_state, lu_angle, Branch,
};
pub use trace::{channel_partial_trace, partial_trace, partial_trace_with_identity};

/// Ordering tag carried by every interchange file.
pub const ORDERING: &str = "row-major-last-fastest";

/// Largest operator side accepted, to keep dense matrices in memory.
pub const MAX_OPERATOR_SIDE: usize = 4096;

/// Normalization tolerance for [`StateVector`].
pub const NORM_TOL: f64 = 1e-9;

fn side_of(profile: &DimensionProfile) -> Result<usize> {
    profile
        .dims()
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d as usize))
        .ok_or_else(|| Error::Resource(format!("total dimension of {profile} overflows")))
}

/// Digit strides: `stride[i] = ∏_{j > i} d_j`.
pub(crate) fn strides(dims: &[u32]) -> Vec<usize> {
    let mut s = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1] as usize;
    }
    s
}

fn check_mask(profile: &DimensionProfile, subset: u64) -> Result<()> {
    if subset & !profile.full_mask() != 0 {
        return Err(Error::Domain(format!(
            "subset mask {subset:#b} names sites beyond the {} available",
            profile.n()
        )));
    }
    Ok(())
}

/// Normalized pure state.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawState", into = "RawState")]
pub struct StateVector {
    profile: DimensionProfile,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Rejects inputs whose norm is off by more than [`NORM_TOL`].
    pub fn new(profile: DimensionProfile, amplitudes: Vec<Complex64>) -> Result<Self> {
        let side = side_of(&profile)?;
        if amplitudes.len() != side {
            return Err(Error::Validation(format!(
                "{} amplitudes given for total dimension {side}",
                amplitudes.len()
            )));
        }
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::Validation(format!("state norm is {norm}, expected 1")));
        }
        Ok(StateVector { profile, amplitudes })
    }

    /// Scales `amplitudes` to unit norm.
    pub fn normalized(profile: DimensionProfile, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = norm(&amplitudes);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::Validation("cannot normalize a zero or non-finite vector".into()));
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Self::new(profile, amplitudes)
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn density(&self) -> Result<DenseOperator> {
        let side = self.amplitudes.len();
        if side > MAX_OPERATOR_SIDE {
            return Err(Error::Resource(format!("density matrix of side {side} exceeds {MAX_OPERATOR_SIDE}")));
        }
        let mut m = Vec::with_capacity(side * side);
        for a in &self.amplitudes {
            for b in &self.amplitudes {
                m.push(a * b.conj());
            }
        }
        DenseOperator::new(self.profile.clone(), m)
    }

    /// Reduced state on the sites of `keep`, ordered as in the full system.
    pub fn reduced_density(&self, keep: u64) -> Result<(Vec<Complex64>, usize)> {
        check_mask(&self.profile, keep)?;
        let (keep_idx, trace_idx, ks, ts) = trace::split_indices(self.profile.dims(), keep);
        // ψ as a ks × ts matrix, ρ = Ψ Ψ†
        let mut psi = vec![Complex64::new(0.0, 0.0); ks * ts];
        for (idx, a) in self.amplitudes.iter().enumerate() {
            psi[keep_idx[idx] * ts + trace_idx[idx]] = *a;
        }
        let mut rho = vec![Complex64::new(0.0, 0.0); ks * ks];
        for r in 0..ks {
            for c in r..ks {
                let v: Complex64 = (0..ts).map(|t| psi[r * ts + t] * psi[c * ts + t].conj()).sum();
                rho[r * ks + c] = v;
                rho[c * ks + r] = v.conj();
            }
        }
        Ok((rho, ks))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("state serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// Square complex matrix over a dimension profile, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawOperator", into = "RawOperator")]
pub struct DenseOperator {
    profile: DimensionProfile,
    side: usize,
    matrix: Vec<Complex64>,
}

impl DenseOperator {
    pub fn new(profile: DimensionProfile, matrix: Vec<Complex64>) -> Result<Self> {
        let side = side_of(&profile)?;
        if side > MAX_OPERATOR_SIDE {
            return Err(Error::Resource(format!("operator side {side} exceeds {MAX_OPERATOR_SIDE}")));
        }
        if matrix.len() != side * side {
            return Err(Error::Validation(format!(
                "matrix has {} entries, expected {side}×{side}",
                matrix.len()
            )));
        }
        Ok(DenseOperator { profile, side, matrix })
    }

    pub fn identity(profile: DimensionProfile) -> Result<Self> {
        let side = side_of(&profile)?;
        let mut m = vec![Complex64::new(0.0, 0.0); side * side];
        (0..side).for_each(|i| m[i * side + i] = Complex64::new(1.0, 0.0));
        Self::new(profile, m)
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn matrix(&self) -> &[Complex64] {
        &self.matrix
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.matrix[r * self.side + c]
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.side).map(|i| self.get(i, i)).sum()
    }

    pub fn adjoint(&self) -> DenseOperator {
        let n = self.side;
        let mut m = vec![Complex64::new(0.0, 0.0); n * n];
        for r in 0..n {
            for c in 0..n {
                m[c * n + r] = self.matrix[r * n + c].conj();
            }
        }
        DenseOperator {
            profile: self.profile.clone(),
            side: n,
            matrix: m,
        }
    }

    pub fn matmul(&self, other: &DenseOperator) -> Result<DenseOperator> {
        if self.profile != other.profile {
            return Err(Error::Validation("operator profiles differ".into()));
        }
        let m = matmul(&self.matrix, &other.matrix, self.side);
        DenseOperator::new(self.profile.clone(), m)
    }

    pub fn scale(&self, f: Complex64) -> DenseOperator {
        DenseOperator {
            profile: self.profile.clone(),
            side: self.side,
            matrix: self.matrix.iter().map(|v| v * f).collect(),
        }
    }

    /// Largest entry-wise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        max_abs_diff(&self.matrix, &other.matrix)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    /// `self ⊗ other`, sites of `self` first.
    pub fn kron(&self, other: &DenseOperator) -> Result<DenseOperator> {
        let mut dims = self.profile.dims().to_vec();
        dims.extend_from_slice(other.profile.dims());
        let (a, b) = (self.side, other.side);
        let n = a * b;
        let mut m = vec![Complex64::new(0.0, 0.0); n * n];
        for r1 in 0..a {
            for c1 in 0..a {
                let x = self.matrix[r1 * a + c1];
                if x == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for r2 in 0..b {
                    for c2 in 0..b {
                        m[(r1 * b + r2) * n + c1 * b + c2] = x * other.matrix[r2 * b + c2];
                    }
                }
            }
        }
        DenseOperator::new(DimensionProfile::new(dims)?, m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("operator serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

pub(crate) fn matmul(a: &[Complex64], b: &[Complex64], n: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == Complex64::new(0.0, 0.0) {
                continue;
            }
            let row = &b[k * n..(k + 1) * n];
            for (o, y) in out[r * n..(r + 1) * n].iter_mut().zip(row) {
                *o += x * y;
            }
        }
    }
    out
}

pub(crate) fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

#[derive(Serialize, Deserialize)]
struct RawState {
    dims: Vec<u32>,
    amplitudes: Vec<[f64; 2]>,
    #[serde(default = "default_ordering")]
    ordering: String,
}

#[derive(Serialize, Deserialize)]
struct RawOperator {
    dims: Vec<u32>,
    /// Flattened row-major matrix.
    matrix: Vec<[f64; 2]>,
    #[serde(default = "default_ordering")]
    ordering: String,
}

fn default_ordering() -> String {
    ORDERING.to_string()
}

fn check_ordering(o: &str) -> Result<()> {
    if o != ORDERING {
        return Err(Error::Validation(format!("unsupported amplitude ordering '{o}', expected '{ORDERING}'")));
    }
    Ok(())
}

fn to_complex(v: Vec<[f64; 2]>) -> Vec<Complex64> {
    v.into_iter().map(|[re, im]| Complex64::new(re, im)).collect()
}

fn to_pairs(v: &[Complex64]) -> Vec<[f64; 2]> {
    v.iter().map(|c| [c.re, c.im]).collect()
}

impl TryFrom<RawState> for StateVector {
    type Error = Error;

    fn try_from(raw: RawState) -> Result<Self> {
        check_ordering(&raw.ordering)?;
        StateVector::new(DimensionProfile::new(raw.dims)?, to_complex(raw.amplitudes))
    }
}

impl From<StateVector> for RawState {
    fn from(s: StateVector) -> Self {
        RawState {
            dims: s.profile.dims().to_vec(),
            amplitudes: to_pairs(&s.amplitudes),
            ordering: default_ordering(),
        }
    }
}

impl TryFrom<RawOperator> for DenseOperator {
    type Error = Error;

    fn try_from(raw: RawOperator) -> Result<Self> {
        check_ordering(&raw.ordering)?;
        DenseOperator::new(DimensionProfile::new(raw.dims)?, to_complex(raw.matrix))
    }
}

impl From<DenseOperator> for RawOperator {
    fn from(m: DenseOperator) -> Self {
        RawOperator {
            dims: m.profile.dims().to_vec(),
            matrix: to_pairs(&m.matrix),
            ordering: default_ordering(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn strides_are_last_fastest() {
        assert_eq!(strides(&[2, 3, 3, 3]), vec![27, 9, 3, 1]);
        assert_eq!(strides(&[5]), vec![1]);
    }

    #[test]
    fn state_validation() {
        let p = DimensionProfile::uniform(1, 2).unwrap();
        assert!(StateVector::new(p.clone(), vec![c(1.0)]).is_err());
        assert!(StateVector::new(p.clone(), vec![c(1.0), c(1.0)]).is_err());
        let s = StateVector::normalized(p.clone(), vec![c(1.0), c(1.0)]).unwrap();
        assert!((s.norm() - 1.0).abs() < 1e-15);
        assert!(StateVector::normalized(p, vec![c(0.0), c(0.0)]).is_err());
    }

    #[test]
    fn state_json_round_trip() {
        let s = bell();
        let json = s.to_json();
        assert!(json.contains(ORDERING));
        assert_eq!(StateVector::from_json(&json).unwrap(), s);
        let bad = r#"{"dims":[2],"amplitudes":[[1,0],[0,0]],"ordering":"column-major"}"#;
        assert!(StateVector::from_json(bad).is_err());
        let short = r#"{"dims":[2,2],"amplitudes":[[1,0]]}"#;
        assert!(StateVector::from_json(short).is_err());
    }

    #[test]
    fn operator_json_round_trip() {
        let m = bell().density().unwrap();
        assert_eq!(DenseOperator::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn reduced_density_of_bell_is_maximally_mixed() {
        let (rho, k) = bell().reduced_density(0b01).unwrap();
        assert_eq!(k, 2);
        let expect = [c(0.5), c(0.0), c(0.0), c(0.5)];
        assert!(max_abs_diff(&rho, &expect) < 1e-15);
        assert!(bell().reduced_density(0b100).is_err());
    }

    #[test]
    fn kron_and_identity() {
        let p1 = DimensionProfile::uniform(1, 2).unwrap();
        let p2 = DimensionProfile::uniform(1, 3).unwrap();
        let i = DenseOperator::identity(p1).unwrap().kron(&DenseOperator::identity(p2).unwrap()).unwrap();
        assert_eq!(i.profile().dims(), &[2, 3]);
        assert_eq!(i.trace(), c(6.0));
        assert!(i.is_hermitian(0.0));
    }
}
