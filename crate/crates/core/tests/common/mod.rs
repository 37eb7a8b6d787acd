//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;

use cyclo_schur::hecke::{HeckeAlgebra, HeckeElement};
use cyclo_schur::ring::{Field, LaurentPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;

/// A signed permutation matrix, row-major.
pub type Signed = Vec<i8>;

fn matmul(a: &Signed, b: &Signed, n: usize) -> Signed {
    let mut c = vec![0i8; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

fn identity(n: usize) -> Signed {
    let mut m = vec![0i8; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// The hyperoctahedral group `Z_2 ≀ S_n` as signed permutation matrices,
/// playing the role of `H(2, n)` at `q = 1`, `Q = (1, -1)`.
pub struct WreathOracle {
    n: usize,
    gens: Vec<Signed>,
}

impl WreathOracle {
    pub fn new(n: usize) -> Self {
        let mut t0 = identity(n);
        t0[0] = -1;
        let mut gens = vec![t0];
        for i in 1..n {
            let mut s = vec![0i8; n * n];
            for r in 0..n {
                let c = if r == i - 1 { i } else if r == i { i - 1 } else { r };
                s[r * n + c] = 1;
            }
            gens.push(s);
        }
        WreathOracle { n, gens }
    }

    fn word(&self, word: &[usize]) -> Signed {
        word.iter().fold(identity(self.n), |acc, &g| matmul(&acc, &self.gens[g], self.n))
    }

    pub fn mul(&self, a: &Signed, b: &Signed) -> Signed {
        matmul(a, b, self.n)
    }

    /// Image of the basis element `T_w J_1^{c_1} ⋯ J_n^{c_n}`.
    pub fn image(&self, h: &HeckeAlgebra, label: usize) -> Signed {
        let (w, c) = h.label(label);
        let mut acc = self.word(&w.reduced_word());
        for (k, &ck) in c.iter().enumerate() {
            let j = self.gens_j(k);
            for _ in 0..ck {
                acc = matmul(&acc, &j, self.n);
            }
        }
        acc
    }

    /// `J_{k+1} = T_k J_k T_k` at `q = 1`.
    fn gens_j(&self, k: usize) -> Signed {
        let mut j = self.gens[0].clone();
        for i in 1..=k {
            j = matmul(&matmul(&self.gens[i], &j, self.n), &self.gens[i], self.n);
        }
        j
    }
}

/// Specializes a coefficient at `q = 1`, `Q = (1, -1)`.
pub fn at_classical(p: &LaurentPolynomial) -> BigRational {
    let one = BigRational::from_integer(BigInt::from(1));
    let params = [one.clone(), -one.clone()];
    p.eval_with(&one, &one, &params)
}

/// Image of a Hecke element in the group algebra, zero terms removed.
pub fn group_image(oracle: &WreathOracle, h: &HeckeAlgebra, e: &HeckeElement) -> HashMap<Signed, BigRational> {
    let mut out: HashMap<Signed, BigRational> = HashMap::new();
    for (l, c) in e.terms() {
        let v = at_classical(c);
        let slot = out.entry(oracle.image(h, l)).or_insert_with(|| v.zero());
        *slot = slot.add(&v);
    }
    out.retain(|_, v| !Field::is_zero(v));
    out
}

/// Compares the full multiplication table of `H(2, n)` at `q = 1`,
/// `Q = (1, -1)` with the group algebra. Returns the number of mismatches,
/// counting a non-injective labelling as one.
pub fn wreath_mismatches(n: usize) -> usize {
    let h = HeckeAlgebra::new(2, n).unwrap();
    let oracle = WreathOracle::new(n);
    let images: Vec<Signed> = (0..h.dim()).map(|l| oracle.image(&h, l)).collect();
    let distinct: std::collections::HashSet<&Signed> = images.iter().collect();
    let mut bad = usize::from(distinct.len() != h.dim());
    for a in 0..h.dim() {
        for b in 0..h.dim() {
            let prod = h.mul(&h.basis_label(a), &h.basis_label(b));
            let got = group_image(&oracle, &h, &prod);
            let want = oracle.mul(&images[a], &images[b]);
            let ok = got.len() == 1 && got.get(&want).is_some_and(|v| v == &v.one());
            bad += usize::from(!ok);
        }
    }
    bad
}
