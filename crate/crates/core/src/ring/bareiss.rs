//! Fraction-free Gaussian elimination over the Laurent polynomial ring.
//!
//! Every entry produced during elimination is a minor of the input, so
//! the divisions by the previous pivot are exact and results over the
//! fraction field come out as polynomial numerators over one common
//! denominator.

use rayon::prelude::*;

use crate::ring::poly::LaurentPolynomial as P;
use crate::ring::ratfunc::RationalFunction;

/// Row echelon form produced by [`echelon`].
pub struct Echelon {
    pub rows: Vec<Vec<P>>,
    /// `(row, column)` of each pivot, rows `0..r` in order.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The last pivot: the determinant of the pivot minor, up to sign.
    pub fn det(&self) -> P {
        match self.pivots.last() {
            Some(&c) => self.rows[self.pivots.len() - 1][c].clone(),
            None => P::one(),
        }
    }

    /// Polynomial vector `X` over the pivot columns with `X = d·x` where
    /// `x` solves the pivot system with right-hand side column `rhs`
    /// (already transformed), `d` = [`Echelon::det`].
    fn back_substitute(&self, rhs: impl Fn(usize) -> P, cols: usize) -> Vec<P> {
        let d = self.det();
        let mut x = vec![P::zero(); cols];
        for k in (0..self.pivots.len()).rev() {
            let pk = self.pivots[k];
            let mut acc = &d * &rhs(k);
            for &pj in &self.pivots[k + 1..] {
                let a = &self.rows[k][pj];
                if !a.is_zero() && !x[pj].is_zero() {
                    acc -= &(a * &x[pj]);
                }
            }
            x[pk] = acc.div_exact(&self.rows[k][pk]).expect("fraction-free back substitution is exact");
        }
        x
    }
}

/// Fraction-free echelon form of `m` restricted to the first `cols`
/// columns for pivot selection; later columns are carried along.
pub fn echelon_with(m: &[Vec<P>], pivot_cols: usize) -> Echelon {
    let mut rows: Vec<Vec<P>> = m.to_vec();
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut prev = P::one();
    let mut r = 0;
    for c in 0..pivot_cols.min(ncols) {
        if r == nrows {
            break;
        }
        let best = (r..nrows).filter(|&i| !rows[i][c].is_zero()).min_by_key(|&i| rows[i][c].len());
        let Some(p) = best else { continue };
        rows.swap(r, p);
        let (top, bottom) = rows.split_at_mut(r + 1);
        let prow = &top[r];
        let piv = &prow[c];
        bottom.par_iter_mut().for_each(|row| {
            let f = std::mem::replace(&mut row[c], P::zero());
            for j in c + 1..ncols {
                let mut v = piv * &row[j];
                if !f.is_zero() && !prow[j].is_zero() {
                    v -= &(&f * &prow[j]);
                }
                row[j] = if prev.is_one() { v } else { v.div_exact(&prev).expect("Bareiss division is exact") };
            }
        });
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Echelon { rows, pivots }
}

pub fn echelon(m: &[Vec<P>]) -> Echelon {
    let cols = m.first().map_or(0, |r| r.len());
    echelon_with(m, cols)
}

/// Rank over the fraction field.
pub fn rank(m: &[Vec<P>]) -> usize {
    echelon(m).rank()
}

/// Exact solution of a linear system over the fraction field.
#[derive(Clone, Debug)]
pub struct Solution {
    /// `x = numerators / denominator`.
    pub numerators: Vec<P>,
    pub denominator: P,
    /// Dimension of the solution space of the homogeneous system.
    pub nullity: usize,
}

impl Solution {
    pub fn values(&self) -> Vec<RationalFunction> {
        self.numerators.iter().map(|n| RationalFunction::new(n.clone(), self.denominator.clone())).collect()
    }

    /// The solution as polynomials, when the denominator divides every
    /// numerator.
    pub fn polynomial(&self) -> Option<Vec<P>> {
        self.numerators.iter().map(|n| n.div_exact(&self.denominator)).collect()
    }
}

/// Solve `matrix · x = rhs`. Returns `None` when inconsistent; for
/// underdetermined systems the free variables are set to zero.
pub fn fraction_solve(matrix: &[Vec<P>], rhs: &[P]) -> Option<Solution> {
    assert_eq!(matrix.len(), rhs.len(), "row count mismatch");
    let cols = matrix.first().map_or(0, |r| r.len());
    assert!(matrix.iter().all(|r| r.len() == cols), "matrix must be rectangular");
    let aug: Vec<Vec<P>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut v = row.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let e = echelon_with(&aug, cols);
    let r = e.rank();
    if e.rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let numerators = e.back_substitute(|k| e.rows[k][cols].clone(), cols);
    Some(Solution { numerators, denominator: e.det(), nullity: cols - r })
}

/// Polynomial basis of the right nullspace `{x : m x = 0}` over the
/// fraction field; `cols` is needed when `m` has no rows.
pub fn nullspace(m: &[Vec<P>], cols: usize) -> Vec<Vec<P>> {
    if m.is_empty() {
        return (0..cols)
            .map(|i| (0..cols).map(|j| if i == j { P::one() } else { P::zero() }).collect())
            .collect();
    }
    let e = echelon(m);
    let d = e.det();
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !e.pivots.contains(c)) {
        let mut x = e.back_substitute(|k| -&e.rows[k][f], cols);
        x[f] = d.clone();
        out.push(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[&str]]) -> Vec<Vec<P>> {
        rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()
    }

    fn apply(m: &[Vec<P>], x: &[RationalFunction]) -> Vec<RationalFunction> {
        m.iter()
            .map(|row| {
                row.iter().zip(x).fold(RationalFunction::zero(), |acc, (a, v)| {
                    &acc + &(&RationalFunction::from_poly(a.clone()) * v)
                })
            })
            .collect()
    }

    #[test]
    fn identity_system() {
        let m = mat(&[&["1", "0"], &["0", "1"]]);
        let s = fraction_solve(&m, &[p("q"), p("Q1 + 2")]).unwrap();
        assert_eq!(s.polynomial().unwrap(), vec![p("q"), p("Q1 + 2")]);
        assert_eq!(s.nullity, 0);
    }

    #[test]
    fn diagonal_q() {
        let m = mat(&[&["q", "0"], &["0", "q"]]);
        let s = fraction_solve(&m, &[p("1"), p("1")]).unwrap();
        for v in s.values() {
            assert!(v.equals(&RationalFunction::new(p("1"), p("q"))));
            assert_eq!(v.as_poly(), Some(p("q^-1")));
        }
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let m = mat(&[&["1", "q"], &["2", "2*q"]]);
        assert!(fraction_solve(&m, &[p("1"), p("3")]).is_none());
        let s = fraction_solve(&m, &[p("1"), p("2")]).unwrap();
        assert_eq!(s.nullity, 1);
        let ns = nullspace(&m, 2);
        assert_eq!(ns.len(), 1);
        let z = apply(&m, &ns[0].iter().map(|v| RationalFunction::from_poly(v.clone())).collect::<Vec<_>>());
        assert!(z.iter().all(|v| v.is_zero()));
    }

    #[test]
    fn skipped_column() {
        let m = mat(&[&["0", "q", "1"], &["0", "1", "Q1"], &["0", "Q1", "q"]]);
        let e = echelon(&m);
        assert_eq!(e.rank(), 2);
        assert_eq!(nullspace(&m, 3).len(), 1);
    }

    #[test]
    fn random_square_residual() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let gens = ["q", "q^-1", "Q1", "Q2", "1", "-1", "q*Q1", "2"];
        for _ in 0..5 {
            let m: Vec<Vec<P>> = (0..4)
                .map(|_| (0..4).map(|_| &p(gens[rng.gen_range(0..8)]) + &p(gens[rng.gen_range(0..8)])).collect())
                .collect();
            let b: Vec<P> = (0..4).map(|_| p(gens[rng.gen_range(0..8)])).collect();
            if let Some(s) = fraction_solve(&m, &b) {
                let r = apply(&m, &s.values());
                for (lhs, rhs) in r.iter().zip(&b) {
                    assert!(lhs.equals(&RationalFunction::from_poly(rhs.clone())));
                }
            }
        }
    }
}
