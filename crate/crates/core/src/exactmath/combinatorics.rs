use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i+1) after the division
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Rows `0..=n` of Pascal's triangle.
#[derive(Clone, Debug)]
pub struct PascalTable {
    rows: Vec<Vec<BigInt>>,
}

impl PascalTable {
    pub fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for r in 0..=n {
            let mut row = vec![BigInt::one(); r + 1];
            for c in 1..r {
                row[c] = &rows[r - 1][c - 1] + &rows[r - 1][c];
            }
            rows.push(row);
        }
        PascalTable { rows }
    }

    pub fn get(&self, n: usize, k: i64) -> BigInt {
        if k < 0 || k as usize > n {
            BigInt::zero()
        } else {
            self.rows[n][k as usize].clone()
        }
    }

    fn get_ref(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }
}

fn check_k(k: i64, n: u64) -> Result<()> {
    if k < 0 || k as u64 > n {
        Err(Error::Domain(format!("Krawtchouk index k = {k} outside [0, {n}]")))
    } else {
        Ok(())
    }
}

/// Krawtchouk polynomial `K_m(k; n) = Σ_α (-1)^α C(n-k, m-α) C(k, α)`.
///
/// Zero for `m < 0` and `m > n`.
pub fn krawtchouk(m: i64, k: i64, n: u64) -> Result<BigInt> {
    check_k(k, n)?;
    let mut acc = BigInt::zero();
    if m < 0 || m as u64 > n {
        return Ok(acc);
    }
    let nk = (n - k as u64) as i64;
    for alpha in 0..=k.min(m) {
        let term = binomial(nk as u64, m - alpha) * binomial(k as u64, alpha);
        if alpha % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Krawtchouk-like polynomial
/// `K̃_m(k; n, γ, δ) = Σ_α (-1)^α C(n-k, m-α) C(k, α) γ^{(n-k)-(m-α)} δ^{m-α}`,
/// the coefficient of `x^{n-m} y^m` in `(γx + δy)^{n-k} (x - y)^k`.
pub fn krawtchouk_like(m: i64, k: i64, n: u64, gamma: &BigInt, delta: &BigInt) -> Result<BigInt> {
    check_k(k, n)?;
    let mut acc = BigInt::zero();
    if m < 0 || m as u64 > n {
        return Ok(acc);
    }
    let nk = (n - k as u64) as i64;
    for alpha in 0..=k.min(m) {
        let outside = m - alpha;
        if outside > nk {
            continue;
        }
        let term = binomial(nk as u64, outside)
            * binomial(k as u64, alpha)
            * num_traits::pow(gamma.clone(), (nk - outside) as usize)
            * num_traits::pow(delta.clone(), outside as usize);
        if alpha % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Full table `[m][k]` of `K̃_m(k; n, γ, δ)` for `0 ≤ m, k ≤ n`, evaluated by
/// the same defining sum with cached binomials and powers.
pub fn krawtchouk_like_matrix(n: usize, gamma: &BigInt, delta: &BigInt) -> Vec<Vec<BigInt>> {
    let pascal = PascalTable::new(n);
    let gpow: Vec<BigInt> = powers(gamma, n);
    let dpow: Vec<BigInt> = powers(delta, n);
    let mut out = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for (m, row) in out.iter_mut().enumerate() {
        for (k, cell) in row.iter_mut().enumerate() {
            let nk = n - k;
            let lo = m.saturating_sub(nk);
            let mut acc = BigInt::zero();
            for alpha in lo..=k.min(m) {
                let outside = m - alpha;
                let term = pascal.get_ref(nk, outside)
                    * pascal.get_ref(k, alpha)
                    * &gpow[nk - outside]
                    * &dpow[outside];
                if alpha % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            *cell = acc;
        }
    }
    out
}

/// Table `[m][k]` of `K_m(k; n)`.
pub fn krawtchouk_matrix(n: usize) -> Vec<Vec<BigInt>> {
    krawtchouk_like_matrix(n, &BigInt::one(), &BigInt::one())
}

fn powers(base: &BigInt, n: usize) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(n + 1);
    let mut cur = BigInt::one();
    for _ in 0..=n {
        v.push(cur.clone());
        cur *= base;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal_oracle(n: usize, k: usize) -> BigInt {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row[k].clone()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(60, 30), pascal_oracle(60, 30));
        assert_eq!(binomial(179, 89), PascalTable::new(179).get(179, 89));
    }

    #[test]
    fn krawtchouk_values() {
        for n in 0..6u64 {
            for k in 0..=n as i64 {
                assert_eq!(krawtchouk(0, k, n).unwrap(), BigInt::one());
            }
        }
        assert_eq!(krawtchouk(-1, 2, 5).unwrap(), BigInt::zero());
        assert_eq!(krawtchouk(3, 1, 4).unwrap(), BigInt::from(-2));
        assert_eq!(krawtchouk(6, 1, 5).unwrap(), BigInt::zero());
    }

    #[test]
    fn krawtchouk_domain() {
        assert!(matches!(krawtchouk(1, 6, 5), Err(Error::Domain(_))));
        assert!(matches!(krawtchouk(1, -1, 5), Err(Error::Domain(_))));
        let one = BigInt::one();
        assert!(krawtchouk_like(0, 4, 3, &one, &one).is_err());
    }

    #[test]
    fn krawtchouk_like_values() {
        let b = BigInt::from;
        assert_eq!(krawtchouk_like(0, 0, 3, &b(2), &b(5)).unwrap(), b(8));
        // (x + 3y)^2 (x - y) = x^3 + 5x^2y + 3xy^2 - 9y^3
        assert_eq!(krawtchouk_like(2, 1, 3, &b(1), &b(3)).unwrap(), b(3));
        for m in -1..6 {
            for k in 0..=4 {
                assert_eq!(
                    krawtchouk_like(m, k, 4, &b(1), &b(1)).unwrap(),
                    krawtchouk(m, k, 4).unwrap()
                );
            }
        }
    }

    #[test]
    fn matrix_matches_scalar() {
        let (g, d) = (BigInt::from(2), BigInt::from(-3));
        let mat = krawtchouk_like_matrix(7, &g, &d);
        for m in 0..=7 {
            for k in 0..=7 {
                assert_eq!(mat[m][k], krawtchouk_like(m as i64, k as i64, 7, &g, &d).unwrap());
            }
        }
    }
}
