//! Linear-programming bound for hypothetical `((n, K, d))_D` codes.
//!
//! The unknowns are the Shor-Laflamme coefficients `A_0 … A_n`. A code can
//! only exist if some non-negative `A` satisfies the distance conditions
//! `K·B_i = A_i (i < d)`, `K·B_i ≥ A_i (i ≥ d)` together with non-negative
//! shadow coefficients, where `B` and `S` are the Krawtchouk-like images of
//! `A`. Infeasibility excludes the code; feasibility decides nothing.

mod simplex;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub use simplex::{find_feasible, Feasibility, LinearConstraint, Relation};

use crate::error::{Error, Result};
use crate::exactmath::{krawtchouk_like_matrix, Rational};

/// Parity condition on `Σ_{i even} A_i` for qubit stabilizer codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StabilizerParity {
    /// `Σ_{i even} A_i = 2^{n - log2 K - 1}`.
    #[serde(rename = "I")]
    TypeI,
    /// `Σ_{i even} A_i = 2^{n - log2 K}`.
    #[serde(rename = "II")]
    TypeII,
    /// Either of the two; solved as two programs.
    #[serde(rename = "either")]
    Either,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    #[serde(rename = "K")]
    pub k: u64,
    pub d: usize,
    #[serde(rename = "D")]
    pub dim: u32,
    pub pure: bool,
    pub stabilizer_parity: Option<StabilizerParity>,
    pub self_dual_odd_shadow: bool,
}

impl CodeParams {
    /// Validated parameters. `K = 1` forces a pure code.
    pub fn new(n: usize, k: u64, d: usize, dim: u32) -> Result<Self> {
        CodeParams {
            n,
            k,
            d,
            dim,
            pure: false,
            stabilizer_parity: None,
            self_dual_odd_shadow: false,
        }
        .validated()
    }

    pub fn with_pure(mut self, pure: bool) -> Result<Self> {
        self.pure = pure;
        self.validated()
    }

    pub fn with_stabilizer_parity(mut self, parity: StabilizerParity) -> Result<Self> {
        self.stabilizer_parity = Some(parity);
        self.validated()
    }

    pub fn with_self_dual_odd_shadow(mut self, on: bool) -> Result<Self> {
        self.self_dual_odd_shadow = on;
        self.validated()
    }

    /// The AME parameters `((n, 1, ⌊n/2⌋+1))_D`.
    pub fn ame(n: usize, dim: u32) -> Result<Self> {
        Self::new(n, 1, n / 2 + 1, dim)
    }

    fn validated(mut self) -> Result<Self> {
        let bad = |m: String| Err(Error::Parameter(m));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if self.dim < 2 {
            return bad(format!("local dimension must be at least 2, got {}", self.dim));
        }
        if self.k == 0 {
            return bad("K must be at least 1".into());
        }
        if self.d == 0 || self.d > self.n + 1 {
            return bad(format!("distance must lie in 1..={}, got {}", self.n + 1, self.d));
        }
        if BigInt::from(self.k) > num_traits::pow(BigInt::from(self.dim), self.n) {
            return bad(format!("K = {} exceeds D^n", self.k));
        }
        if self.k == 1 {
            self.pure = true;
        }
        if self.stabilizer_parity.is_some() && (self.dim != 2 || !self.k.is_power_of_two()) {
            return bad("stabilizer parity needs D = 2 and K a power of two".into());
        }
        if self.self_dual_odd_shadow && self.k != 1 {
            return bad("the odd-shadow condition applies to self-dual (K = 1) codes only".into());
        }
        Ok(self)
    }
}

/// Feasibility program over `A_0 … A_n ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpModel {
    pub nvars: usize,
    pub constraints: Vec<LinearConstraint>,
}

impl LpModel {
    pub fn equalities(&self) -> impl Iterator<Item = &LinearConstraint> {
        self.constraints.iter().filter(|c| c.relation == Relation::Eq)
    }

    pub fn inequalities(&self) -> impl Iterator<Item = &LinearConstraint> {
        self.constraints.iter().filter(|c| c.relation == Relation::Ge)
    }

    pub fn constraint(&self, label: &str) -> Option<&LinearConstraint> {
        self.constraints.iter().find(|c| c.label == label)
    }

    /// Exact check of `A ≥ 0` and every row.
    pub fn is_satisfied_by(&self, a: &[Rational]) -> bool {
        a.len() == self.nvars && a.iter().all(|v| !v.is_negative()) && self.constraints.iter().all(|c| c.holds(a))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpResult {
    pub feasible: bool,
    pub witness: Option<Vec<Rational>>,
    pub iterations: usize,
}

/// Rows `i` of `B = D^{-n} Σ_k K̃_i(k; n, 1, D²-1) A_k`.
pub fn dual_rows(n: usize, dim: u32) -> Vec<Vec<Rational>> {
    let d = BigInt::from(dim);
    let scale = Rational::pow_int(&Rational::from(dim), -(n as i64));
    scaled(krawtchouk_like_matrix(n, &BigInt::one(), &(&d * &d - 1)), &scale, false)
}

/// Rows `i` of `S = D^{-n} Σ_k (-1)^k K̃_i(k; n, D-1, D+1) A_k`.
pub fn shadow_rows(n: usize, dim: u32) -> Vec<Vec<Rational>> {
    let d = BigInt::from(dim);
    let scale = Rational::pow_int(&Rational::from(dim), -(n as i64));
    scaled(krawtchouk_like_matrix(n, &(&d - 1), &(&d + 1)), &scale, true)
}

fn scaled(mat: Vec<Vec<BigInt>>, scale: &Rational, alternate: bool) -> Vec<Vec<Rational>> {
    mat.into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .map(|(k, v)| {
                    let r = Rational::from(v) * scale;
                    if alternate && k % 2 == 1 {
                        -r
                    } else {
                        r
                    }
                })
                .collect()
        })
        .collect()
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n + 1];
    v[i] = Rational::one();
    v
}

/// Builds the program for one parity choice; [`StabilizerParity::Either`]
/// needs [`build_lps`].
pub fn build_lp(params: &CodeParams) -> Result<LpModel> {
    if params.stabilizer_parity == Some(StabilizerParity::Either) {
        return Err(Error::Parameter("parity 'either' expands to two programs; use build_lps".into()));
    }
    let n = params.n;
    let k = Rational::from(params.k);
    let b_rows = dual_rows(n, params.dim);
    let s_rows = shadow_rows(n, params.dim);
    let mut cons = Vec::new();

    cons.push(LinearConstraint {
        label: "A0".into(),
        coeffs: unit(n, 0),
        relation: Relation::Eq,
        rhs: &k * &k,
    });
    for (i, b) in b_rows.iter().enumerate() {
        let mut coeffs: Vec<Rational> = b.iter().map(|v| v * &k).collect();
        coeffs[i] -= Rational::one();
        let relation = if i < params.d { Relation::Eq } else { Relation::Ge };
        cons.push(LinearConstraint {
            label: format!("KB{i}-A{i}"),
            coeffs,
            relation,
            rhs: Rational::zero(),
        });
    }
    for (i, s) in s_rows.iter().enumerate() {
        cons.push(LinearConstraint {
            label: format!("S{i}"),
            coeffs: s.clone(),
            relation: Relation::Ge,
            rhs: Rational::zero(),
        });
    }
    if params.pure {
        for i in 1..params.d.min(n + 1) {
            cons.push(LinearConstraint {
                label: format!("pure{i}"),
                coeffs: unit(n, i),
                relation: Relation::Eq,
                rhs: Rational::zero(),
            });
        }
    }
    if let Some(parity) = params.stabilizer_parity {
        let log2k = params.k.trailing_zeros() as i64;
        let exp = match parity {
            StabilizerParity::TypeI => n as i64 - log2k - 1,
            StabilizerParity::TypeII => n as i64 - log2k,
            StabilizerParity::Either => unreachable!("rejected above"),
        };
        let coeffs = (0..=n)
            .map(|i| if i % 2 == 0 { Rational::one() } else { Rational::zero() })
            .collect();
        cons.push(LinearConstraint {
            label: "even-weight".into(),
            coeffs,
            relation: Relation::Eq,
            rhs: Rational::pow_int(&Rational::from(2), exp),
        });
    }
    if params.self_dual_odd_shadow {
        for j in (1..=n).step_by(2) {
            cons.push(LinearConstraint {
                label: format!("S{}=0", n - j),
                coeffs: s_rows[n - j].clone(),
                relation: Relation::Eq,
                rhs: Rational::zero(),
            });
        }
    }
    Ok(LpModel {
        nvars: n + 1,
        constraints: cons,
    })
}

/// One program per admissible parity choice.
pub fn build_lps(params: &CodeParams) -> Result<Vec<LpModel>> {
    match params.stabilizer_parity {
        Some(StabilizerParity::Either) => [StabilizerParity::TypeI, StabilizerParity::TypeII]
            .into_iter()
            .map(|p| {
                let mut q = params.clone();
                q.stabilizer_parity = Some(p);
                build_lp(&q)
            })
            .collect(),
        _ => Ok(vec![build_lp(params)?]),
    }
}

pub fn lp_feasible(model: &LpModel) -> LpResult {
    let f = find_feasible(model.nvars, &model.constraints);
    if let Some(w) = &f.point {
        debug_assert!(model.is_satisfied_by(w), "simplex returned a non-feasible point");
    }
    LpResult {
        feasible: f.point.is_some(),
        witness: f.point,
        iterations: f.iterations,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeVerdict {
    Excluded,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeCheck {
    pub params: CodeParams,
    pub verdict: CodeVerdict,
    pub feasible: bool,
    pub witness: Option<Vec<Rational>>,
    pub iterations: usize,
}

/// Excluded iff every program for `params` is infeasible.
pub fn check_code_params(params: &CodeParams) -> Result<CodeCheck> {
    let mut iterations = 0;
    let mut witness = None;
    for model in build_lps(params)? {
        let res = lp_feasible(&model);
        iterations += res.iterations;
        if res.feasible {
            witness = res.witness;
            break;
        }
    }
    Ok(CodeCheck {
        params: params.clone(),
        verdict: if witness.is_some() { CodeVerdict::Undecided } else { CodeVerdict::Excluded },
        feasible: witness.is_some(),
        witness,
        iterations,
    })
}
