//! Existence tests for absolutely maximally entangled (AME) states.
//!
//! For `n` parties of local dimension `D`, a putative AME state fixes every
//! marginal purity, hence the whole unitary enumerator. From there the
//! Shor-Laflamme and shadow enumerators follow exactly, and any negative
//! coefficient rules the state out. Mixed local dimensions are handled by
//! evaluating the shadow inequalities directly for every subset `T`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerators::{a_from_unitary, shadow_from_unitary, EnumeratorKind, EnumeratorVector};
use crate::error::{Error, Result};
use crate::exactmath::{PascalTable, Rational};

/// Largest party count accepted by [`mixed_shadow_scan`].
pub const MIXED_SCAN_MAX_PARTIES: usize = 20;

/// Ordered local dimensions of an `n`-party system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DimensionProfile {
    dims: Vec<u32>,
}

impl TryFrom<Vec<u32>> for DimensionProfile {
    type Error = Error;

    fn try_from(dims: Vec<u32>) -> Result<Self> {
        DimensionProfile::new(dims)
    }
}

impl From<DimensionProfile> for Vec<u32> {
    fn from(p: DimensionProfile) -> Self {
        p.dims
    }
}

impl DimensionProfile {
    pub fn new(dims: Vec<u32>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Domain("dimension profile must be non-empty".into()));
        }
        if let Some(d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::Domain(format!("local dimension {d} is below 2")));
        }
        Ok(DimensionProfile { dims })
    }

    pub fn uniform(n: usize, dim: u32) -> Result<Self> {
        Self::new(vec![dim; n])
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    /// The common local dimension, if all parties share one.
    pub fn uniform_dim(&self) -> Option<u32> {
        let d = self.dims[0];
        self.dims.iter().all(|&x| x == d).then_some(d)
    }

    pub fn total_dim(&self) -> BigInt {
        self.dims.iter().map(|&d| BigInt::from(d)).product()
    }

    /// Product of the local dimensions of the parties in `subset`
    /// (bit `i` set means party `i + 1` is included).
    pub fn subset_dim(&self, subset: u64) -> BigInt {
        self.dims
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .map(|(_, &d)| BigInt::from(d))
            .product()
    }

    pub fn full_mask(&self) -> u64 {
        if self.n() >= 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    pub fn parse_list(s: &str) -> Result<Self> {
        let dims = s
            .split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|_| Error::Parse {
                    what: "dimension list",
                    input: s.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dims)
    }
}

impl fmt::Display for DimensionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(u32::to_string).collect();
        f.write_str(&parts.join("x"))
    }
}

/// A criterion that rules out an AME state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Criterion {
    #[serde(rename = "scott")]
    Scott,
    #[serde(rename = "A-coefficient")]
    ACoefficient,
    #[serde(rename = "shadow")]
    Shadow,
    #[serde(rename = "mixed-shadow")]
    MixedShadow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmeVerdict {
    pub profile: DimensionProfile,
    pub scott_violated: bool,
    pub negative_a_index: Option<usize>,
    pub negative_shadow_index: Option<usize>,
    pub min_shadow_coeff: Option<Rational>,
    pub min_mixed_value: Option<Rational>,
    pub witness_t: Option<u64>,
    pub excluded: bool,
    pub excluded_by: Vec<Criterion>,
}

impl AmeVerdict {
    fn empty(profile: DimensionProfile) -> Self {
        AmeVerdict {
            profile,
            scott_violated: false,
            negative_a_index: None,
            negative_shadow_index: None,
            min_shadow_coeff: None,
            min_mixed_value: None,
            witness_t: None,
            excluded: false,
            excluded_by: Vec::new(),
        }
    }

    fn exclude(&mut self, by: Criterion) {
        self.excluded = true;
        self.excluded_by.push(by);
    }

    pub fn classification(&self) -> GridClass {
        if self.scott_violated {
            GridClass::ExcludedScott
        } else if self.excluded_by.contains(&Criterion::ACoefficient) {
            GridClass::ExcludedACoefficient
        } else if self.excluded {
            GridClass::ExcludedShadow
        } else {
            GridClass::Open
        }
    }
}

/// Per-cell classification used by [`scan_grid`] output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridClass {
    ExcludedScott,
    /// Scott-allowed but some `A_j < 0`; never observed for `D ≤ 9`.
    #[serde(rename = "excluded_a")]
    ExcludedACoefficient,
    ExcludedShadow,
    Open,
}

impl GridClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GridClass::ExcludedScott => "excluded_scott",
            GridClass::ExcludedACoefficient => "excluded_a",
            GridClass::ExcludedShadow => "excluded_shadow",
            GridClass::Open => "open",
        }
    }
}

fn check_uniform_args(n: usize, dim: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("party count must be at least 1".into()));
    }
    if dim < 2 {
        return Err(Error::Domain(format!("local dimension must be at least 2, got {dim}")));
    }
    Ok(())
}

/// Purity `D^{-min(k, n-k)}` of every `k`-party marginal of an AME state.
pub fn ame_purity(k: usize, n: usize, dim: u32) -> Result<Rational> {
    if k > n || dim < 2 {
        return Err(Error::Domain(format!("ame_purity needs 0 ≤ k ≤ n and D ≥ 2 (k={k}, n={n}, D={dim})")));
    }
    Ok(Rational::pow_int(&Rational::from(dim), -(k.min(n - k) as i64)))
}

/// `A′_k = C(n, k) · D^{-min(k, n-k)}`.
pub fn ame_unitary_coeffs(n: usize, dim: u32) -> Result<EnumeratorVector> {
    check_uniform_args(n, dim)?;
    let pascal = PascalTable::new(n);
    let coeffs = (0..=n)
        .map(|k| Ok(Rational::from(pascal.get(n, k as i64)) * ame_purity(k, n, dim)?))
        .collect::<Result<Vec<_>>>()?;
    EnumeratorVector::new(EnumeratorKind::UnitaryA, dim, coeffs)
}

/// Shor-Laflamme enumerator forced by the AME purities. Negative entries
/// signal that no such state exists.
pub fn ame_shor_laflamme(n: usize, dim: u32) -> Result<EnumeratorVector> {
    a_from_unitary(&ame_unitary_coeffs(n, dim)?)
}

pub fn ame_shadow_coeffs(n: usize, dim: u32) -> Result<EnumeratorVector> {
    shadow_from_unitary(&ame_unitary_coeffs(n, dim)?)
}

/// Largest even and largest odd `n` allowed by the Scott bound:
/// `(2(D²-1), 2D(D+1)-1)`.
pub fn scott_bound(dim: u32) -> (u64, u64) {
    let d = dim as u64;
    (2 * (d * d - 1), 2 * d * (d + 1) - 1)
}

pub fn violates_scott(n: usize, dim: u32) -> bool {
    let (even, odd) = scott_bound(dim);
    let n = n as u64;
    if n.is_multiple_of(2) {
        n > even
    } else {
        n > odd
    }
}

/// Scott bound, then non-negativity of the forced `A_j`, then of the
/// shadow coefficients. Every violated criterion is recorded.
pub fn check_ame_uniform(n: usize, dim: u32) -> Result<AmeVerdict> {
    check_uniform_args(n, dim)?;
    let mut verdict = AmeVerdict::empty(DimensionProfile::uniform(n, dim)?);
    if violates_scott(n, dim) {
        verdict.scott_violated = true;
        verdict.exclude(Criterion::Scott);
    }

    let unitary = ame_unitary_coeffs(n, dim)?;
    let a = a_from_unitary(&unitary)?;
    if let Some((j, _)) = a.first_negative() {
        verdict.negative_a_index = Some(j);
        verdict.exclude(Criterion::ACoefficient);
    }

    let s = shadow_from_unitary(&unitary)?;
    verdict.min_shadow_coeff = Some(s.min_coeff().clone());
    if let Some((j, _)) = s.first_negative() {
        verdict.negative_shadow_index = Some(j);
        verdict.exclude(Criterion::Shadow);
    }
    Ok(verdict)
}

/// `1 / min(d_S, d_{S^c})`: the purity of the marginal on `subset` when the
/// state is maximally entangled across that cut.
pub fn mixed_purity(profile: &DimensionProfile, subset: u64) -> Result<Rational> {
    if subset & !profile.full_mask() != 0 {
        return Err(Error::Domain(format!("subset mask {subset:#b} exceeds {} parties", profile.n())));
    }
    let ds = profile.subset_dim(subset);
    let dc = profile.subset_dim(profile.full_mask() & !subset);
    Rational::new(BigInt::one(), ds.min(dc))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedScan {
    pub profile: DimensionProfile,
    pub min_value: Rational,
    /// Lowest subset mask attaining `min_value`.
    pub witness_t: u64,
    pub excluded: bool,
}

impl MixedScan {
    pub fn verdict(&self) -> &'static str {
        if self.excluded {
            "excluded"
        } else {
            "not_excluded"
        }
    }
}

/// Evaluates `Σ_S (-1)^{|S∩T|} mixed_purity(S)` for every `T` and returns the
/// minimum. A negative minimum violates a shadow inequality.
///
/// The `2^n × 2^n` double sum is a Walsh-Hadamard transform of the purity
/// table, computed in `O(n·2^n)` over integers scaled by the total dimension
/// (every `min(d_S, d_{S^c})` divides it).
pub fn mixed_shadow_scan(profile: &DimensionProfile) -> Result<MixedScan> {
    let n = profile.n();
    if n > MIXED_SCAN_MAX_PARTIES {
        return Err(Error::Resource(format!(
            "mixed shadow scan enumerates 2^n subsets; n = {n} exceeds {MIXED_SCAN_MAX_PARTIES}"
        )));
    }
    let total = profile.total_dim();
    let size = 1usize << n;
    let sub_dims = subset_dims(profile);
    let mut table: Vec<BigInt> = (0..size)
        .map(|s| {
            let ds = &sub_dims[s];
            let dc = &sub_dims[(size - 1) & !s];
            &total / ds.min(dc)
        })
        .collect();
    walsh_hadamard(&mut table);

    let (witness, min) = table
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)))
        .expect("at least one subset");
    let min_value = Rational::new(min.clone(), total)?;
    Ok(MixedScan {
        profile: profile.clone(),
        excluded: min_value.is_negative(),
        min_value,
        witness_t: witness as u64,
    })
}

/// Shadow-inequality value for a single `T`, by direct summation.
pub fn mixed_shadow_value(profile: &DimensionProfile, t: u64) -> Result<Rational> {
    let full = profile.full_mask();
    if t & !full != 0 {
        return Err(Error::Domain(format!("subset mask {t:#b} exceeds {} parties", profile.n())));
    }
    let mut acc = Rational::zero();
    for s in 0..=full {
        let p = mixed_purity(profile, s)?;
        if (s & t).count_ones().is_multiple_of(2) {
            acc += p;
        } else {
            acc -= p;
        }
    }
    Ok(acc)
}

fn subset_dims(profile: &DimensionProfile) -> Vec<BigInt> {
    let size = 1usize << profile.n();
    let mut out = vec![BigInt::one(); size];
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        out[s] = &out[s & (s - 1)] * profile.dims()[low];
    }
    out
}

/// In-place unnormalized transform `v[t] <- Σ_s (-1)^{|s∧t|} v[s]`.
fn walsh_hadamard(v: &mut [BigInt]) {
    let mut h = 1;
    while h < v.len() {
        for block in v.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let sum = &*a + &*b;
                let diff = &*a - &*b;
                *a = sum;
                *b = diff;
            }
        }
        h *= 2;
    }
}

/// AME verdict for an arbitrary profile. Uniform profiles get the
/// enumerator criteria; profiles with at most
/// [`MIXED_SCAN_MAX_PARTIES`] parties also get the direct shadow scan.
pub fn check_ame(profile: &DimensionProfile) -> Result<AmeVerdict> {
    let mut verdict = match profile.uniform_dim() {
        Some(d) => check_ame_uniform(profile.n(), d)?,
        None => AmeVerdict::empty(profile.clone()),
    };
    if profile.n() <= MIXED_SCAN_MAX_PARTIES {
        let scan = mixed_shadow_scan(profile)?;
        verdict.min_mixed_value = Some(scan.min_value);
        verdict.witness_t = Some(scan.witness_t);
        if scan.excluded {
            verdict.exclude(Criterion::MixedShadow);
        }
    }
    Ok(verdict)
}

/// Verdicts for every `D` in `2..=d_max` and every `n` from 2 up to the odd
/// Scott bound, ordered by `D` then `n`. `threads` caps the worker pool.
pub fn scan_grid(d_max: u32, threads: Option<usize>) -> Result<Vec<AmeVerdict>> {
    if d_max < 2 {
        return Err(Error::Domain(format!("scan needs D_max ≥ 2, got {d_max}")));
    }
    let cells: Vec<(usize, u32)> = (2..=d_max)
        .flat_map(|d| (2..=scott_bound(d).1 as usize).map(move |n| (n, d)))
        .collect();
    let run = || -> Result<Vec<AmeVerdict>> {
        cells.par_iter().map(|&(n, d)| check_ame_uniform(n, d)).collect()
    };
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Resource(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

pub const SCAN_CSV_HEADER: [&str; 7] = [
    "n",
    "D",
    "scott_excluded",
    "negative_A_index",
    "negative_shadow_index",
    "min_shadow_coeff",
    "verdict",
];

/// Scan rows as CSV, exact rationals as `p/q` strings, `-1` for absent indices.
pub fn scan_to_csv(rows: &[AmeVerdict]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SCAN_CSV_HEADER).expect("in-memory write");
    for v in rows {
        let idx = |o: Option<usize>| o.map_or("-1".to_string(), |j| j.to_string());
        w.write_record([
            v.profile.n().to_string(),
            v.profile.uniform_dim().unwrap_or(0).to_string(),
            v.scott_violated.to_string(),
            idx(v.negative_a_index),
            idx(v.negative_shadow_index),
            v.min_shadow_coeff.as_ref().map_or(String::new(), Rational::to_string),
            v.classification().as_str().to_string(),
        ])
        .expect("in-memory write");
    }
    let bytes = w.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("CSV fields are ASCII")
}
