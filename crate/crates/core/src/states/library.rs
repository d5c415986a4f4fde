use num_complex::Complex64;

use super::{matmul, DenseOperator, StateVector};
use crate::ame::DimensionProfile;
use crate::error::{Error, Result};

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `|0…0⟩` over `profile`.
pub fn product_zero(profile: &DimensionProfile) -> Result<StateVector> {
    let side = profile.dims().iter().map(|&d| d as usize).product::<usize>();
    let mut amps = vec![re(0.0); side];
    amps[0] = re(1.0);
    StateVector::new(profile.clone(), amps)
}

/// `(|00⟩ + |11⟩)/√2`.
pub fn bell() -> StateVector {
    ghz(2).expect("two-qubit GHZ is valid")
}

/// `(|0…0⟩ + |1…1⟩)/√2` on `n` qubits.
pub fn ghz(n: usize) -> Result<StateVector> {
    let profile = DimensionProfile::uniform(n, 2)?;
    let side = 1usize << n;
    let mut amps = vec![re(0.0); side];
    amps[0] = re(1.0);
    amps[side - 1] = re(1.0);
    StateVector::normalized(profile, amps)
}

/// Graph state of the `n`-cycle: `2^{-n/2} Σ_x (-1)^{Σ_i x_i x_{i+1}} |x⟩`.
pub fn ring_graph_state(n: usize) -> Result<StateVector> {
    if n < 3 {
        return Err(Error::Domain(format!("a ring needs at least 3 vertices, got {n}")));
    }
    let profile = DimensionProfile::uniform(n, 2)?;
    let amps = (0..1usize << n)
        .map(|x| {
            let edges = (0..n).filter(|&i| x >> i & 1 == 1 && x >> ((i + 1) % n) & 1 == 1).count();
            re(if edges % 2 == 0 { 1.0 } else { -1.0 })
        })
        .collect();
    StateVector::normalized(profile, amps)
}

/// Dense Pauli string such as `"XZZXI"`, leftmost letter on site 0.
fn pauli_string(s: &str) -> Result<DenseOperator> {
    let mut op: Option<DenseOperator> = None;
    for ch in s.chars() {
        let m = match ch {
            'I' => [re(1.0), re(0.0), re(0.0), re(1.0)],
            'X' => [re(0.0), re(1.0), re(1.0), re(0.0)],
            'Y' => [re(0.0), Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0), re(0.0)],
            'Z' => [re(1.0), re(0.0), re(0.0), re(-1.0)],
            _ => return Err(Error::Parse { what: "Pauli string", input: s.into() }),
        };
        let site = DenseOperator::new(DimensionProfile::uniform(1, 2)?, m.to_vec())?;
        op = Some(match op {
            None => site,
            Some(acc) => acc.kron(&site)?,
        });
    }
    op.ok_or_else(|| Error::Parse { what: "Pauli string", input: s.into() })
}

/// Projector onto the `((5, 2, 3))_2` code stabilized by the cyclic shifts
/// of `XZZXI`.
pub fn five_qubit_code_projector() -> Result<DenseOperator> {
    let profile = DimensionProfile::uniform(5, 2)?;
    let side = 32;
    let mut p = DenseOperator::identity(profile.clone())?.matrix().to_vec();
    for g in ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"] {
        let mut half = pauli_string(g)?.matrix().to_vec();
        (0..side).for_each(|i| half[i * side + i] += re(1.0));
        half.iter_mut().for_each(|v| *v *= 0.5);
        p = matmul(&p, &half, side);
    }
    DenseOperator::new(profile, p)
}

/// The two coefficient solutions of the `2×3×3×3` state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Rotation angle `-2 arctan √(5/13)` relating the two branches.
pub fn lu_angle() -> f64 {
    -2.0 * (5f64 / 13.0).sqrt().atan()
}

// (sign, uses β, basis label abcd)
const PHI_TERMS: [(i8, bool, [usize; 4]); 24] = [
    (-1, false, [0, 0, 1, 1]),
    (-1, true, [0, 0, 1, 2]),
    (1, true, [0, 0, 2, 1]),
    (1, false, [0, 0, 2, 2]),
    (-1, true, [0, 1, 0, 1]),
    (1, false, [0, 1, 0, 2]),
    (1, true, [0, 1, 1, 0]),
    (1, false, [0, 1, 2, 0]),
    (-1, false, [0, 2, 0, 1]),
    (1, true, [0, 2, 0, 2]),
    (-1, false, [0, 2, 1, 0]),
    (-1, true, [0, 2, 2, 0]),
    (-1, true, [1, 0, 1, 1]),
    (1, false, [1, 0, 1, 2]),
    (-1, false, [1, 0, 2, 1]),
    (1, true, [1, 0, 2, 2]),
    (1, false, [1, 1, 0, 1]),
    (1, true, [1, 1, 0, 2]),
    (-1, false, [1, 1, 1, 0]),
    (1, true, [1, 1, 2, 0]),
    (-1, true, [1, 2, 0, 1]),
    (-1, false, [1, 2, 0, 2]),
    (-1, true, [1, 2, 1, 0]),
    (1, false, [1, 2, 2, 0]),
];

/// `α = (1/6)√(3/2 ± √65/6)` and `β = 1/(54α)`.
pub fn phi_2333_coefficients(branch: Branch) -> (f64, f64) {
    let root = 65f64.sqrt() / 6.0;
    let inner = match branch {
        Branch::Plus => 1.5 + root,
        Branch::Minus => 1.5 - root,
    };
    let alpha = inner.sqrt() / 6.0;
    (alpha, 1.0 / (54.0 * alpha))
}

pub fn phi_2333_branch(branch: Branch) -> StateVector {
    let (alpha, beta) = phi_2333_coefficients(branch);
    let mut amps = vec![re(0.0); 54];
    for (sign, uses_beta, [a, b, c, d]) in PHI_TERMS {
        let coeff = if uses_beta { beta } else { alpha };
        amps[a * 27 + b * 9 + c * 3 + d] = re(sign as f64 * coeff);
    }
    let profile = DimensionProfile::new(vec![2, 3, 3, 3]).expect("fixed profile");
    StateVector::new(profile, amps).expect("12(α² + β²) = 1")
}

/// The `2×3×3×3` AME state, `+` branch.
pub fn phi_2333() -> StateVector {
    phi_2333_branch(Branch::Plus)
}

/// `|⟨φ⁻| (exp(iφσ_y) ⊗ 1) |φ⁺⟩|`.
pub fn branch_overlap(phi: f64) -> f64 {
    rotated_overlap(phi).norm()
}

fn rotate_first_qubit(psi: &StateVector, phi: f64) -> Vec<Complex64> {
    // exp(iφσ_y) = [[cos φ, sin φ], [-sin φ, cos φ]]
    let (s, c) = phi.sin_cos();
    let amps = psi.amplitudes();
    let half = amps.len() / 2;
    let mut out = vec![re(0.0); amps.len()];
    for k in 0..half {
        let (a0, a1) = (amps[k], amps[half + k]);
        out[k] = a0 * c + a1 * s;
        out[half + k] = -a0 * s + a1 * c;
    }
    out
}

fn rotated_overlap(phi: f64) -> Complex64 {
    let plus = phi_2333_branch(Branch::Plus);
    let minus = phi_2333_branch(Branch::Minus);
    let rotated = rotate_first_qubit(&plus, phi);
    minus.amplitudes().iter().zip(&rotated).map(|(m, r)| m.conj() * r).sum()
}

/// Whether the local rotation by [`lu_angle`] on the qubit maps the `+`
/// branch onto the `-` branch up to a global phase, to `1e-9`.
pub fn lu_branch_map_check() -> bool {
    branch_map_holds(lu_angle(), 1e-9)
}

pub(crate) fn branch_map_holds(phi: f64, tol: f64) -> bool {
    let overlap = rotated_overlap(phi);
    if (overlap.norm() - 1.0).abs() > tol {
        return false;
    }
    let phase = overlap / overlap.norm();
    let rotated = rotate_first_qubit(&phi_2333_branch(Branch::Plus), phi);
    let minus = phi_2333_branch(Branch::Minus);
    rotated
        .iter()
        .zip(minus.amplitudes())
        .all(|(r, m)| (r - phase * m).norm() <= tol)
}

/// Largest `‖ρ_S - 1/d_S‖_max` over subsets `S` with `d_S ≤ d_{S^c}`.
pub fn marginal_deviation(psi: &StateVector) -> Result<f64> {
    let profile = psi.profile();
    let full = profile.full_mask();
    let total = profile.total_dim();
    let mut worst = 0.0f64;
    for s in 1..full {
        let ds = profile.subset_dim(s);
        if &ds * &ds > total {
            continue;
        }
        let (rho, k) = psi.reduced_density(s)?;
        let target = 1.0 / k as f64;
        for r in 0..k {
            for c in 0..k {
                let expect = if r == c { target } else { 0.0 };
                worst = worst.max((rho[r * k + c] - expect).norm());
            }
        }
    }
    Ok(worst)
}

/// Every subsystem no larger than its complement is maximally mixed, to
/// `tol` entry-wise.
pub fn is_ame(psi: &StateVector, tol: f64) -> Result<bool> {
    Ok(marginal_deviation(psi)? <= tol)
}
