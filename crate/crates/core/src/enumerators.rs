//! Enumerator vectors and the exact transforms between them.
//!
//! All transforms are linear changes of variables of the enumerator
//! polynomial `Σ_j c_j x^{n-j} y^j`:
//!
//! | transform              | substitution                                   |
//! |------------------------|------------------------------------------------|
//! | MacWilliams (A ↔ B)    | `((x + (D²-1)y)/D, (x - y)/D)`                 |
//! | shadow (A → S)         | `(((D-1)x + (D+1)y)/D, (y - x)/D)`             |
//! | unitary (A → A′)       | `(x + y/D, y/D)`                               |
//! | from unitary (A′ → A)  | `(x - y, D·y)`                                 |
//! | shadow (A′ → S)        | `(x + y, y - x)`                               |
//! | dual unitary (A′ ↔ B′) | `(y, x)`                                       |
//!
//! MacWilliams and both shadow transforms also have a Krawtchouk-matrix
//! form, computed independently by the `*_via_krawtchouk` functions.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{krawtchouk_like_matrix, krawtchouk_matrix, HomogeneousPoly, Rational, Substitution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EnumeratorKind {
    /// Shor-Laflamme `A_j`.
    #[serde(rename = "A")]
    ShorLaflammeA,
    /// Shor-Laflamme `B_j`.
    #[serde(rename = "B")]
    ShorLaflammeB,
    /// Unitary `A′_j`.
    #[serde(rename = "Aprime")]
    UnitaryA,
    /// Unitary `B′_j`.
    #[serde(rename = "Bprime")]
    UnitaryB,
    #[serde(rename = "S")]
    Shadow,
}

impl EnumeratorKind {
    pub fn tag(self) -> &'static str {
        match self {
            EnumeratorKind::ShorLaflammeA => "A",
            EnumeratorKind::ShorLaflammeB => "B",
            EnumeratorKind::UnitaryA => "Aprime",
            EnumeratorKind::UnitaryB => "Bprime",
            EnumeratorKind::Shadow => "S",
        }
    }
}

impl fmt::Display for EnumeratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Coefficients `c_0 … c_n` of one enumerator of an `n`-party system with
/// local dimension `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawEnumerator")]
pub struct EnumeratorVector {
    n: usize,
    #[serde(rename = "D")]
    dim: u32,
    kind: EnumeratorKind,
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawEnumerator {
    n: usize,
    #[serde(rename = "D")]
    dim: u32,
    kind: EnumeratorKind,
    coeffs: Vec<Rational>,
}

impl TryFrom<RawEnumerator> for EnumeratorVector {
    type Error = Error;

    fn try_from(raw: RawEnumerator) -> Result<Self> {
        if raw.coeffs.len() != raw.n + 1 {
            return Err(Error::Validation(format!(
                "enumerator with n = {} needs {} coefficients, got {}",
                raw.n,
                raw.n + 1,
                raw.coeffs.len()
            )));
        }
        EnumeratorVector::new(raw.kind, raw.dim, raw.coeffs)
    }
}

impl EnumeratorVector {
    /// `n` is taken from the coefficient count.
    pub fn new(kind: EnumeratorKind, dim: u32, coeffs: Vec<Rational>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain(format!("local dimension must be at least 2, got {dim}")));
        }
        if coeffs.is_empty() {
            return Err(Error::Domain("enumerator needs at least one coefficient".into()));
        }
        Ok(EnumeratorVector {
            n: coeffs.len() - 1,
            dim,
            kind,
            coeffs,
        })
    }

    pub fn from_integers(kind: EnumeratorKind, dim: u32, coeffs: &[i64]) -> Result<Self> {
        Self::new(kind, dim, coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn kind(&self) -> EnumeratorKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn as_poly(&self) -> HomogeneousPoly {
        HomogeneousPoly::new(self.coeffs.clone()).expect("non-empty by construction")
    }

    /// Index and value of the first strictly negative coefficient.
    pub fn first_negative(&self) -> Option<(usize, &Rational)> {
        self.coeffs.iter().enumerate().find(|(_, c)| c.is_negative())
    }

    pub fn min_coeff(&self) -> &Rational {
        self.coeffs.iter().min().expect("non-empty by construction")
    }

    pub fn sum(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    fn with(&self, kind: EnumeratorKind, coeffs: Vec<Rational>) -> EnumeratorVector {
        EnumeratorVector {
            n: self.n,
            dim: self.dim,
            kind,
            coeffs,
        }
    }

    fn substituted(&self, kind: EnumeratorKind, s: &Substitution) -> EnumeratorVector {
        self.with(kind, self.as_poly().substitute(s).into_coeffs())
    }

    fn d(&self) -> Rational {
        Rational::from(self.dim)
    }
}

fn expect_kind(v: &EnumeratorVector, allowed: &[EnumeratorKind], expected: &'static str) -> Result<()> {
    if allowed.contains(&v.kind) {
        Ok(())
    } else {
        Err(Error::Kind {
            expected,
            found: v.kind,
        })
    }
}

fn macwilliams_substitution(dim: u32) -> Substitution {
    let d = Rational::from(dim);
    let inv = d.recip();
    Substitution {
        a: inv.clone(),
        b: (&d * &d - Rational::one()) / &d,
        c: inv.clone(),
        d: -inv,
    }
}

fn shadow_substitution(dim: u32) -> Substitution {
    let d = Rational::from(dim);
    Substitution {
        a: (&d - Rational::one()) / &d,
        b: (&d + Rational::one()) / &d,
        c: -d.recip(),
        d: d.recip(),
    }
}

/// Quantum MacWilliams transform `A ↔ B`; the transform is an involution.
pub fn macwilliams(v: &EnumeratorVector) -> Result<EnumeratorVector> {
    let dual = match v.kind {
        EnumeratorKind::ShorLaflammeA => EnumeratorKind::ShorLaflammeB,
        EnumeratorKind::ShorLaflammeB => EnumeratorKind::ShorLaflammeA,
        other => {
            return Err(Error::Kind {
                expected: "A or B",
                found: other,
            })
        }
    };
    Ok(v.substituted(dual, &macwilliams_substitution(v.dim)))
}

/// MacWilliams transform as `D^{-n} Σ_k K̃_i(k; n, 1, D²-1) c_k`.
pub fn macwilliams_via_krawtchouk(v: &EnumeratorVector) -> Result<EnumeratorVector> {
    expect_kind(v, &[EnumeratorKind::ShorLaflammeA, EnumeratorKind::ShorLaflammeB], "A or B")?;
    let dual = if v.kind == EnumeratorKind::ShorLaflammeA {
        EnumeratorKind::ShorLaflammeB
    } else {
        EnumeratorKind::ShorLaflammeA
    };
    let dim = BigInt::from(v.dim);
    let mat = krawtchouk_like_matrix(v.n, &BigInt::from(1), &(&dim * &dim - 1));
    let coeffs = apply_matrix(&mat, &v.coeffs, false, &Rational::pow_int(&v.d(), -(v.n as i64)));
    Ok(v.with(dual, coeffs))
}

/// Shadow enumerator from the Shor-Laflamme `A` enumerator.
pub fn shadow_transform(v: &EnumeratorVector) -> Result<EnumeratorVector> {
    expect_kind(v, &[EnumeratorKind::ShorLaflammeA], "A")?;
    Ok(v.substituted(EnumeratorKind::Shadow, &shadow_substitution(v.dim)))
}

/// Shadow transform as `D^{-n} Σ_k (-1)^k K̃_i(k; n, D-1, D+1) A_k`.
pub fn shadow_via_krawtchouk(v: &EnumeratorVector) -> Result<EnumeratorVector> {
    expect_kind(v, &[EnumeratorKind::ShorLaflammeA], "A")?;
    let dim = BigInt::from(v.dim);
    let mat = krawtchouk_like_matrix(v.n, &(&dim - 1), &(&dim + 1));
    let coeffs = apply_matrix(&mat, &v.coeffs, true, &Rational::pow_int(&v.d(), -(v.n as i64)));
    Ok(v.with(EnumeratorKind::Shadow, coeffs))
}

/// `out_i = scale · Σ_k (±1)^k mat[i][k] · c_k`.
fn apply_matrix(mat: &[Vec<BigInt>], c: &[Rational], alternate: bool, scale: &Rational) -> Vec<Rational> {
    mat.iter()
        .map(|row| {
            let s: Rational = row
                .iter()
                .zip(c)
                .enumerate()
                .filter(|(_, (_, ck))| !ck.is_zero())
                .map(|(k, (m, ck))| {
                    let t = Rational::from(m.clone()) * ck;
                    if alternate && k % 2 == 1 {
                        -t
                    } else {
                        t
                    }
                })
                .sum();
            s * scale
        })
        .collect()
}

/// `A′(x, y) = A(x + y/D, y/D)`; maps `A → A′` and `B → B′`.
pub fn unitary_from_a(v: &EnumeratorVector) -> Result<EnumeratorVector> {
    let kind = match v.kind {
        EnumeratorKind::ShorLaflammeA => EnumeratorKind::UnitaryA,
        EnumeratorKind::ShorLaflammeB => EnumeratorKind::UnitaryB,
        other => {
            return Err(Error::Kind {
                expected: "A or B",
                found: other,
            })
        }
    };
    let inv = v.d().recip();
    Ok(v.substituted(kind, &Substitution::new(Rational::one(), inv.clone(), Rational::zero(), inv)))
}

/// `A(x, y) = A′(x - y, D·y)`; maps `A′ → A` and `B′ → B`.
pub fn a_from_unitary(v: &EnumeratorVector) -> Result<EnumeratorVector> {
    let kind = match v.kind {
        EnumeratorKind::UnitaryA => EnumeratorKind::ShorLaflammeA,
        EnumeratorKind::UnitaryB => EnumeratorKind::ShorLaflammeB,
        other => {
            return Err(Error::Kind {
                expected: "Aprime or Bprime",
                found: other,
            })
        }
    };
    Ok(v.substituted(kind, &Substitution::new(1, -1, 0, v.dim)))
}

/// Shadow enumerator from the unitary enumerator, `S(x, y) = A′(x + y, y - x)`.
pub fn shadow_from_unitary(v: &EnumeratorVector) -> Result<EnumeratorVector> {
    expect_kind(v, &[EnumeratorKind::UnitaryA], "Aprime")?;
    Ok(v.substituted(EnumeratorKind::Shadow, &Substitution::new(1, 1, -1, 1)))
}

/// Shadow coefficients `S_j = Σ_k K_{n-j}(k; n) A′_k`.
pub fn shadow_from_unitary_via_krawtchouk(v: &EnumeratorVector) -> Result<EnumeratorVector> {
    expect_kind(v, &[EnumeratorKind::UnitaryA], "Aprime")?;
    let kr = krawtchouk_matrix(v.n);
    let coeffs = (0..=v.n)
        .map(|j| {
            kr[v.n - j]
                .iter()
                .zip(&v.coeffs)
                .map(|(k, a)| Rational::from(k.clone()) * a)
                .sum()
        })
        .collect();
    Ok(v.with(EnumeratorKind::Shadow, coeffs))
}

/// `B′_k = A′_{n-k}` (and back).
pub fn dual_unitary(v: &EnumeratorVector) -> Result<EnumeratorVector> {
    let kind = match v.kind {
        EnumeratorKind::UnitaryA => EnumeratorKind::UnitaryB,
        EnumeratorKind::UnitaryB => EnumeratorKind::UnitaryA,
        other => {
            return Err(Error::Kind {
                expected: "Aprime or Bprime",
                found: other,
            })
        }
    };
    let mut c = v.coeffs.clone();
    c.reverse();
    Ok(v.with(kind, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use EnumeratorKind::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn ev(kind: EnumeratorKind, dim: u32, c: Vec<Rational>) -> EnumeratorVector {
        EnumeratorVector::new(kind, dim, c).unwrap()
    }

    #[test]
    fn macwilliams_bell() {
        let a = EnumeratorVector::from_integers(ShorLaflammeA, 2, &[1, 0, 3]).unwrap();
        let b = macwilliams(&a).unwrap();
        assert_eq!(b.kind(), ShorLaflammeB);
        assert_eq!(b.coeffs(), a.coeffs());
    }

    #[test]
    fn macwilliams_maximally_mixed_qubit() {
        let a = EnumeratorVector::from_integers(ShorLaflammeA, 2, &[1, 0]).unwrap();
        let b = macwilliams(&a).unwrap();
        assert_eq!(b.coeffs(), &[r(1, 2), r(3, 2)]);
    }

    #[test]
    fn shadow_examples() {
        let a = EnumeratorVector::from_integers(ShorLaflammeA, 2, &[1, 0, 0, 12, 3]).unwrap();
        assert_eq!(shadow_transform(&a).unwrap().coeffs()[0], r(-1, 2));
        let a = EnumeratorVector::from_integers(ShorLaflammeA, 2, &[1, 1]).unwrap();
        assert_eq!(shadow_transform(&a).unwrap().coeffs(), &[r(0, 1), r(2, 1)]);
        let z = EnumeratorVector::from_integers(ShorLaflammeA, 5, &[0, 0, 0]).unwrap();
        assert!(shadow_transform(&z).unwrap().coeffs().iter().all(Rational::is_zero));
    }

    #[test]
    fn unitary_examples() {
        let bell = EnumeratorVector::from_integers(ShorLaflammeA, 2, &[1, 0, 3]).unwrap();
        let up = unitary_from_a(&bell).unwrap();
        assert_eq!(up.kind(), UnitaryA);
        assert_eq!(up.coeffs(), &[r(1, 1), r(1, 1), r(1, 1)]);

        let n = 5;
        let mut c = vec![Rational::zero(); n + 1];
        c[0] = Rational::one();
        let id = ev(ShorLaflammeA, 3, c);
        let up = unitary_from_a(&id).unwrap();
        for (k, v) in up.coeffs().iter().enumerate() {
            let expect = Rational::from(crate::exactmath::binomial(n as u64, k as i64))
                * Rational::pow_int(&r(1, 3), k as i64);
            assert_eq!(v, &expect);
        }
    }

    #[test]
    fn from_unitary_examples() {
        let ap = ev(UnitaryA, 2, vec![r(1, 1), r(2, 1), r(3, 2), r(2, 1), r(1, 1)]);
        let a = a_from_unitary(&ap).unwrap();
        assert_eq!(a.coeffs(), EnumeratorVector::from_integers(ShorLaflammeA, 2, &[1, 0, 0, 12, 3]).unwrap().coeffs());
        assert_eq!(a.sum(), Rational::from(16));

        let ap = ev(UnitaryA, 2, vec![r(1, 1), r(5, 2), r(5, 2), r(5, 2), r(5, 2), r(1, 1)]);
        let a = a_from_unitary(&ap).unwrap();
        let expect: Vec<Rational> = [1, 0, 0, 10, 15, 6].iter().map(|&c| Rational::from(c)).collect();
        assert_eq!(a.coeffs(), expect.as_slice());
        assert_eq!(unitary_from_a(&a).unwrap(), ap);
    }

    #[test]
    fn shadow_from_unitary_examples() {
        let ap = ev(UnitaryA, 2, vec![r(1, 1), r(2, 1), r(3, 2), r(2, 1), r(1, 1)]);
        for s in [shadow_from_unitary(&ap).unwrap(), shadow_from_unitary_via_krawtchouk(&ap).unwrap()] {
            assert_eq!(s.coeffs()[0], r(-1, 2));
            assert_eq!(s.coeffs()[4], r(15, 2));
        }
        let ap = ev(UnitaryA, 2, vec![r(1, 1), r(1, 1)]);
        assert_eq!(shadow_from_unitary(&ap).unwrap().coeffs(), &[r(0, 1), r(2, 1)]);
    }

    #[test]
    fn dual_examples() {
        let ap = EnumeratorVector::from_integers(UnitaryA, 2, &[1, 2, 3]).unwrap();
        let bp = dual_unitary(&ap).unwrap();
        assert_eq!(bp.kind(), UnitaryB);
        assert_eq!(bp.coeffs(), EnumeratorVector::from_integers(UnitaryB, 2, &[3, 2, 1]).unwrap().coeffs());
        let pal = EnumeratorVector::from_integers(UnitaryA, 2, &[1, 4, 1]).unwrap();
        assert_eq!(dual_unitary(&pal).unwrap().coeffs(), pal.coeffs());
        assert_eq!(dual_unitary(&bp).unwrap(), ap);
    }

    #[test]
    fn kind_errors() {
        let s = EnumeratorVector::from_integers(Shadow, 2, &[1, 1]).unwrap();
        assert!(matches!(macwilliams(&s), Err(Error::Kind { .. })));
        assert!(matches!(shadow_transform(&s), Err(Error::Kind { .. })));
        assert!(matches!(unitary_from_a(&s), Err(Error::Kind { .. })));
        assert!(matches!(a_from_unitary(&s), Err(Error::Kind { .. })));
        assert!(matches!(shadow_from_unitary(&s), Err(Error::Kind { .. })));
        assert!(matches!(dual_unitary(&s), Err(Error::Kind { .. })));
        let b = EnumeratorVector::from_integers(ShorLaflammeB, 2, &[1, 1]).unwrap();
        assert!(shadow_transform(&b).is_err());
        assert!(shadow_via_krawtchouk(&b).is_err());
    }

    #[test]
    fn json_shape() {
        let v = ev(UnitaryA, 3, vec![r(1, 1), r(2, 3)]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"n":1,"D":3,"kind":"Aprime","coeffs":["1","2/3"]}"#);
        let back: EnumeratorVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        let bad = r#"{"n":2,"D":3,"kind":"A","coeffs":["1","2/3"]}"#;
        assert!(serde_json::from_str::<EnumeratorVector>(bad).is_err());
        let bad_dim = r#"{"n":0,"D":1,"kind":"A","coeffs":["1"]}"#;
        assert!(serde_json::from_str::<EnumeratorVector>(bad_dim).is_err());
    }
}
