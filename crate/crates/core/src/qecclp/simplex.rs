//! Phase-1 simplex over exact rationals with Bland's pivot rule.
//!
//! Decides whether `{x ≥ 0 : rows}` is non-empty and returns a point of it.
//! Equality rows are eliminated exactly before pivoting, so the tableau only
//! carries inequalities.

use serde::{Deserialize, Serialize};

use crate::exactmath::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

/// `coeffs · x (relation) rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearConstraint {
    pub label: String,
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(x)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| c * v)
            .sum()
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Feasibility {
    pub point: Option<Vec<Rational>>,
    pub iterations: usize,
}

/// Finds `x ≥ 0` (of length `nvars`) satisfying every constraint, or proves
/// none exists.
pub fn find_feasible(nvars: usize, constraints: &[LinearConstraint]) -> Feasibility {
    let infeasible = Feasibility { point: None, iterations: 0 };
    let Some(elim) = Elimination::new(nvars, constraints) else {
        return infeasible;
    };

    // x_p = r_p - Σ_f e_pf x_f must stay non-negative
    let mut reduced: Vec<(Vec<Rational>, Relation, Rational)> = elim
        .pivots
        .iter()
        .map(|(_, row)| {
            let coeffs = elim.free.iter().map(|&f| -&row[f]).collect();
            (coeffs, Relation::Ge, -&row[nvars])
        })
        .collect();
    for con in constraints.iter().filter(|c| c.relation == Relation::Ge) {
        let mut full = con.coeffs.clone();
        full.push(con.rhs.clone());
        for (p, row) in &elim.pivots {
            let a = full[*p].clone();
            if !a.is_zero() {
                for (v, e) in full.iter_mut().zip(row) {
                    if !e.is_zero() {
                        *v -= &a * e;
                    }
                }
            }
        }
        let coeffs: Vec<Rational> = elim.free.iter().map(|&f| full[f].clone()).collect();
        reduced.push((coeffs, Relation::Ge, full[nvars].clone()));
    }
    let mut kept = Vec::with_capacity(reduced.len());
    for row in reduced {
        if row.0.iter().all(Rational::is_zero) {
            if row.2.is_positive() {
                return infeasible;
            }
        } else {
            kept.push(row);
        }
    }

    let (sub, iterations) = Tableau::phase_one(elim.free.len(), &kept);
    let point = sub.map(|vals| {
        let mut x = vec![Rational::zero(); nvars];
        for (slot, v) in elim.free.iter().zip(vals) {
            x[*slot] = v;
        }
        for (p, row) in &elim.pivots {
            let mut v = row[nvars].clone();
            for &f in &elim.free {
                if !row[f].is_zero() {
                    v -= &row[f] * &x[f];
                }
            }
            x[*p] = v;
        }
        x
    });
    Feasibility { point, iterations }
}

/// Reduced row echelon form of the equality rows.
struct Elimination {
    /// Pivot column with its row; each row has a unit at its pivot, zeros at
    /// the other pivots and the right-hand side last.
    pivots: Vec<(usize, Vec<Rational>)>,
    free: Vec<usize>,
}

impl Elimination {
    /// `None` when the equalities are inconsistent.
    fn new(nvars: usize, constraints: &[LinearConstraint]) -> Option<Self> {
        let mut rows: Vec<Vec<Rational>> = constraints
            .iter()
            .filter(|c| c.relation == Relation::Eq)
            .map(|c| {
                let mut r = c.coeffs.clone();
                r.push(c.rhs.clone());
                r
            })
            .collect();
        let mut pivots: Vec<(usize, Vec<Rational>)> = Vec::new();
        let mut free = Vec::new();
        for col in 0..nvars {
            // sparsest candidate first keeps fill-in down
            let nnz = |r: &Vec<Rational>| r[..nvars].iter().filter(|v| !v.is_zero()).count();
            let candidate = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| !r[col].is_zero())
                .min_by_key(|(i, r)| (nnz(r), *i));
            let Some((pos, _)) = candidate else {
                free.push(col);
                continue;
            };
            let mut prow = rows.swap_remove(pos);
            let inv = prow[col].recip();
            prow.iter_mut().filter(|v| !v.is_zero()).for_each(|v| *v *= &inv);
            let others = rows.iter_mut().chain(pivots.iter_mut().map(|(_, r)| r));
            for r in others {
                let f = r[col].clone();
                if f.is_zero() {
                    continue;
                }
                for (v, p) in r.iter_mut().zip(&prow) {
                    if !p.is_zero() {
                        *v -= &f * p;
                    }
                }
            }
            pivots.push((col, prow));
        }
        // what is left has no coefficients
        rows.iter().all(|r| r[nvars].is_zero()).then_some(Self { pivots, free })
    }
}

struct Tableau {
    /// `rows[r]` has `ncols` coefficients followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Phase-1 reduced costs, last entry is minus the objective value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn phase_one(nvars: usize, rows: &[(Vec<Rational>, Relation, Rational)]) -> (Option<Vec<Rational>>, usize) {
        // column layout: originals | one surplus per Ge row | artificials
        let nsurplus = rows.iter().filter(|r| r.1 == Relation::Ge).count();
        let needs_art: Vec<bool> = rows
            .iter()
            .map(|(_, rel, rhs)| match rel {
                Relation::Eq => true,
                // a·x - s = b with b ≤ 0 becomes -a·x + s = -b, s basic
                Relation::Ge => rhs.is_positive(),
            })
            .collect();
        let nart = needs_art.iter().filter(|&&b| b).count();
        let ncols = nvars + nsurplus + nart;

        let mut t = Tableau {
            rows: Vec::with_capacity(rows.len()),
            cost: vec![Rational::zero(); ncols + 1],
            basis: Vec::with_capacity(rows.len()),
            ncols,
        };
        let mut next_surplus = nvars;
        let mut next_art = nvars + nsurplus;
        for ((coeffs, rel, rhs), art) in rows.iter().zip(&needs_art) {
            let mut row = vec![Rational::zero(); ncols + 1];
            row[..nvars].clone_from_slice(coeffs);
            row[ncols] = rhs.clone();
            let surplus = (*rel == Relation::Ge).then(|| {
                let s = next_surplus;
                next_surplus += 1;
                row[s] = -Rational::one();
                s
            });
            if row[ncols].is_negative() || !*art {
                row.iter_mut().for_each(|v| *v = -&*v);
            }
            if *art {
                row[next_art] = Rational::one();
                t.basis.push(next_art);
                next_art += 1;
                // artificial cost 1 priced out of the basis
                for (c, v) in t.cost.iter_mut().zip(&row) {
                    *c -= v;
                }
            } else {
                t.basis.push(surplus.expect("Ge row without artificial has a surplus"));
            }
            t.rows.push(row);
        }
        // reduced cost of each basic artificial is 1 - 1 = 0
        for c in &mut t.cost[nvars + nsurplus..ncols] {
            *c = Rational::zero();
        }

        let iterations = t.run();
        if !t.cost[ncols].is_zero() {
            return (None, iterations);
        }
        let mut x = vec![Rational::zero(); nvars];
        for (r, &b) in t.basis.iter().enumerate() {
            if b < nvars {
                x[b] = t.rows[r][ncols].clone();
            }
        }
        (Some(x), iterations)
    }

    fn run(&mut self) -> usize {
        let mut iterations = 0;
        loop {
            // Bland: lowest-index column with negative reduced cost
            let Some(enter) = (0..self.ncols).find(|&j| self.cost[j].is_negative()) else {
                return iterations;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[self.ncols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            // phase-1 objective is bounded below by zero
            let (pr, _) = leave.expect("phase-1 objective is bounded");
            self.pivot(pr, enter);
            iterations += 1;
        }
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let inv = self.rows[pr][pc].recip();
        for v in self.rows[pr].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[pr].clone();
        let nz: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[pc].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nz {
                let delta = &f * &pivot_row[j];
                row[j] -= delta;
            }
        };
        for (r, row) in self.rows.iter_mut().enumerate() {
            if r != pr {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.basis[pr] = pc;
    }
}
