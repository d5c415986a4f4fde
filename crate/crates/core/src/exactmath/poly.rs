use std::ops::{Add, Mul};

use crate::error::{Error, Result};

use super::Rational;

/// Homogeneous bivariate polynomial of degree `n`.
///
/// `coeffs[j]` is the coefficient of `x^{n-j} y^j`, so there are always
/// exactly `n + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousPoly {
    coeffs: Vec<Rational>,
}

/// A linear change of variables `(x, y) -> (a·x + b·y, c·x + d·y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Substitution {
    pub fn new(
        a: impl Into<Rational>,
        b: impl Into<Rational>,
        c: impl Into<Rational>,
        d: impl Into<Rational>,
    ) -> Self {
        Substitution {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Substitution::new(1, 0, 0, 1)
    }

    /// The substitution equivalent to applying `self` and then `next`:
    /// `p.substitute(self).substitute(next) == p.substitute(self.then(next))`.
    pub fn then(&self, next: &Substitution) -> Substitution {
        // q(x,y) = p(a L1 + b L2, c L1 + d L2) with L1 = a'x + b'y, L2 = c'x + d'y
        Substitution {
            a: &self.a * &next.a + &self.b * &next.c,
            b: &self.a * &next.b + &self.b * &next.d,
            c: &self.c * &next.a + &self.d * &next.c,
            d: &self.c * &next.b + &self.d * &next.d,
        }
    }
}

impl HomogeneousPoly {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("homogeneous polynomial needs at least one coefficient".into()));
        }
        Ok(HomogeneousPoly { coeffs })
    }

    pub fn zero(degree: usize) -> Self {
        HomogeneousPoly {
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let n = self.degree();
        let xp = power_list(x, n);
        let yp = power_list(y, n);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * &xp[n - j] * &yp[j])
            .sum()
    }

    /// Returns `q(x, y) = p(a·x + b·y, c·x + d·y)`, expanded exactly.
    ///
    /// Evaluated Horner-style as `r_j = r_{j-1}·L1 + p_j·L2^j` with
    /// `L1 = a·x + b·y`, `L2 = c·x + d·y`, which keeps the cost quadratic in
    /// the degree.
    pub fn substitute(&self, s: &Substitution) -> HomogeneousPoly {
        let n = self.degree();
        let mut acc: Vec<Rational> = vec![self.coeffs[0].clone()];
        let mut l2_pow: Vec<Rational> = vec![Rational::one()];
        for j in 1..=n {
            l2_pow = mul_linear(&l2_pow, &s.c, &s.d);
            acc = mul_linear(&acc, &s.a, &s.b);
            let pj = &self.coeffs[j];
            if !pj.is_zero() {
                for (t, l) in acc.iter_mut().zip(&l2_pow) {
                    *t += pj * l;
                }
            }
        }
        HomogeneousPoly { coeffs: acc }
    }

    pub fn scale(&self, factor: &Rational) -> HomogeneousPoly {
        HomogeneousPoly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}

/// Multiply a homogeneous coefficient list by `(u·x + v·y)`.
fn mul_linear(p: &[Rational], u: &Rational, v: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !u.is_zero() {
            out[i] += c * u;
        }
        if !v.is_zero() {
            out[i + 1] += c * v;
        }
    }
    out
}

fn power_list(base: &Rational, n: usize) -> Vec<Rational> {
    let mut v = Vec::with_capacity(n + 1);
    let mut cur = Rational::one();
    for _ in 0..=n {
        v.push(cur.clone());
        cur *= base;
    }
    v
}

impl Add for &HomogeneousPoly {
    type Output = HomogeneousPoly;

    /// Panics when the degrees differ.
    fn add(self, rhs: &HomogeneousPoly) -> HomogeneousPoly {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        HomogeneousPoly {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul<&Rational> for &HomogeneousPoly {
    type Output = HomogeneousPoly;

    fn mul(self, rhs: &Rational) -> HomogeneousPoly {
        self.scale(rhs)
    }
}
