//! The cyclotomic Hecke algebra `H` of type `G(m,1,n)` over
//! `Z[q, q^-1, Q_1, …, Q_m]`.
//!
//! Relations: `(T_0 - Q_1)⋯(T_0 - Q_m) = 0`, `T_i^2 = (q-1)T_i + q`, the
//! braid relations and `T_0T_1T_0T_1 = T_1T_0T_1T_0`. Jucys–Murphy
//! elements are `J_1 = T_0` and `J_{i+1} = q^{-1} T_i J_i T_i`.
//!
//! Elements are stored in the basis `T_w J_1^{c_1} ⋯ J_n^{c_n}` with
//! `0 ≤ c_i < m`. A label `(w, c)` has index `lex_rank(w)·m^n + code(c)`,
//! where `code` reads `c` in base `m` with `c_1` most significant.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combin::{enumerate_multipartitions, Multicomposition, Multipartition};
use crate::error::{Error, Result};
use crate::ring::LaurentPolynomial as P;
use crate::ring::MAX_PARAMS;
use crate::ring::{rank_at, SpecializationTarget};
use crate::symm::{d_of, enumerate_standard, Permutation, Tableau, YoungSubgroup};

/// Default bound on `m^n n!`.
pub const DEFAULT_DIM_LIMIT: usize = 20_000;

/// An element of `H`: sparse coordinates in the standard basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeckeElement {
    m: usize,
    n: usize,
    terms: BTreeMap<usize, P>,
}

impl HeckeElement {
    pub fn zero(m: usize, n: usize) -> Self {
        HeckeElement { m, n, terms: BTreeMap::new() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(label index, coefficient)` in ascending index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &P)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, label: usize) -> P {
        self.terms.get(&label).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, label: usize, c: P) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &[(usize, P)], c: &P) {
        for (l, v) in other {
            self.add_term(*l, if c.is_one() { v.clone() } else { v * c });
        }
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        self.check_same(other);
        let mut out = self.clone();
        for (l, v) in &other.terms {
            out.add_term(*l, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        self.add(&other.scale(&P::constant(-1)))
    }

    pub fn scale(&self, c: &P) -> HeckeElement {
        let mut out = HeckeElement::zero(self.m, self.n);
        if c.is_zero() {
            return out;
        }
        for (l, v) in &self.terms {
            out.add_term(*l, v * c);
        }
        out
    }

    /// Dense coordinate vector of length `m^n n!`.
    pub fn coords(&self, dim: usize) -> Vec<P> {
        let mut v = vec![P::zero(); dim];
        for (l, c) in &self.terms {
            v[*l] = c.clone();
        }
        v
    }

    pub fn from_coords(m: usize, n: usize, v: &[P]) -> HeckeElement {
        let mut out = HeckeElement::zero(m, n);
        for (l, c) in v.iter().enumerate() {
            out.add_term(l, c.clone());
        }
        out
    }

    fn check_same(&self, other: &HeckeElement) {
        assert!(self.m == other.m && self.n == other.n, "elements of different algebras");
    }

    /// Records `{perm, cvec, coeff}` in label order.
    pub fn records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(l, c)| {
                let (w, cv) = decode(*l, self.m, self.n);
                TermRecord { perm: w, cvec: cv, coeff: c.clone() }
            })
            .collect()
    }

    pub fn from_records(m: usize, n: usize, recs: &[TermRecord]) -> Result<HeckeElement> {
        let mut out = HeckeElement::zero(m, n);
        for r in recs {
            if r.perm.n() != n || r.cvec.len() != n || r.cvec.iter().any(|&c| c >= m) {
                return Err(Error::InvalidInput(format!("label {:?}/{:?} outside H({m},{n})", r.perm, r.cvec)));
            }
            out.add_term(encode(&r.perm, &r.cvec, m), r.coeff.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.records()).expect("serializable")
    }

    pub fn from_json(m: usize, n: usize, s: &str) -> Result<HeckeElement> {
        let recs: Vec<TermRecord> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_records(m, n, &recs)
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                let (w, cv) = decode(*l, self.m, self.n);
                let mut label = String::new();
                if !w.is_identity() {
                    label.push_str(&format!("T{}", w));
                }
                for (i, &e) in cv.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => label.push_str(&format!("J{}", i + 1)),
                        _ => label.push_str(&format!("J{}^{}", i + 1, e)),
                    }
                }
                if label.is_empty() {
                    format!("({c})")
                } else if c.is_one() {
                    label
                } else {
                    format!("({c})*{label}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One serialized term of an element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub perm: Permutation,
    pub cvec: Vec<usize>,
    pub coeff: P,
}

fn code(c: &[usize], m: usize) -> usize {
    c.iter().fold(0, |acc, &x| acc * m + x)
}

fn uncode(mut k: usize, m: usize, n: usize) -> Vec<usize> {
    let mut c = vec![0; n];
    for i in (0..n).rev() {
        c[i] = k % m;
        k /= m;
    }
    c
}

pub fn encode(w: &Permutation, c: &[usize], m: usize) -> usize {
    w.lex_rank() * m.pow(c.len() as u32) + code(c, m)
}

pub fn decode(label: usize, m: usize, n: usize) -> (Permutation, Vec<usize>) {
    let mn = m.pow(n as u32);
    (Permutation::from_lex_rank(label / mn, n), uncode(label % mn, m, n))
}

type Row = Arc<Vec<(usize, P)>>;

/// A generator of `H`: `T_0, …, T_{n-1}`.
pub type Generator = usize;

/// Arithmetic context for `H(m, n)` with memoized generator actions.
///
/// Caches sit behind read-write locks: lookups take a shared lock and
/// inserts an exclusive one, so an algebra can be shared across threads.
pub struct HeckeAlgebra {
    m: usize,
    n: usize,
    mn: usize,
    dim: usize,
    /// `J_1^m = Σ_j overflow[j] J_1^j`.
    overflow: Vec<P>,
    gen_cache: RwLock<HashMap<(Generator, usize), Row>>,
    prod_cache: RwLock<HashMap<(usize, usize), Row>>,
    jm: OnceLock<Vec<HeckeElement>>,
}

impl fmt::Debug for HeckeAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeAlgebra(m={}, n={})", self.m, self.n)
    }
}

impl HeckeAlgebra {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        Self::with_limit(m, n, DEFAULT_DIM_LIMIT)
    }

    pub fn with_limit(m: usize, n: usize, limit: usize) -> Result<Self> {
        if m == 0 || m > MAX_PARAMS {
            return Err(Error::InvalidInput(format!("m must be in 1..={MAX_PARAMS}, got {m}")));
        }
        let dim = checked_dim(m, n).filter(|&d| d <= limit).ok_or(Error::ScaleLimit {
            what: "dim H".into(),
            value: checked_dim(m, n).unwrap_or(usize::MAX),
            limit,
        })?;
        // Π (X - Q_i) = X^m + Σ p_j X^j, so X^m = -Σ p_j X^j
        let mut poly = vec![P::one()];
        for i in 1..=m {
            let mut next = vec![P::zero(); poly.len() + 1];
            for (j, c) in poly.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= &(c * &P::big_q(i));
            }
            poly = next;
        }
        let overflow = poly[..m].iter().map(|c| -c).collect();
        Ok(HeckeAlgebra {
            m,
            n,
            mn: m.pow(n as u32),
            dim,
            overflow,
            gen_cache: RwLock::new(HashMap::new()),
            prod_cache: RwLock::new(HashMap::new()),
            jm: OnceLock::new(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement::zero(self.m, self.n)
    }

    pub fn one(&self) -> HeckeElement {
        self.basis(&Permutation::identity(self.n), &vec![0; self.n])
    }

    pub fn scalar(&self, c: P) -> HeckeElement {
        let mut e = self.zero();
        e.add_term(0, c);
        e
    }

    /// `T_w J^c`.
    pub fn basis(&self, w: &Permutation, c: &[usize]) -> HeckeElement {
        assert!(w.n() == self.n && c.len() == self.n && c.iter().all(|&x| x < self.m));
        let mut e = self.zero();
        e.add_term(encode(w, c, self.m), P::one());
        e
    }

    pub fn basis_label(&self, label: usize) -> HeckeElement {
        let mut e = self.zero();
        e.add_term(label, P::one());
        e
    }

    pub fn t_w(&self, w: &Permutation) -> HeckeElement {
        self.basis(w, &vec![0; self.n])
    }

    pub fn label(&self, label: usize) -> (Permutation, Vec<usize>) {
        decode(label, self.m, self.n)
    }

    /// `T_i`, `0 ≤ i < n`.
    pub fn t(&self, i: usize) -> Result<HeckeElement> {
        if i >= self.n.max(1) || (self.n == 0) {
            return Err(Error::InvalidInput(format!("T_{i} out of range for n = {}", self.n)));
        }
        Ok(self.right_gen(&self.one(), i))
    }

    /// `J_i`, `1 ≤ i ≤ n`.
    pub fn j(&self, i: usize) -> Result<HeckeElement> {
        if i == 0 || i > self.n {
            return Err(Error::InvalidInput(format!("J_{i} out of range for n = {}", self.n)));
        }
        Ok(self.jucys_murphy()[i - 1].clone())
    }

    fn jucys_murphy(&self) -> &[HeckeElement] {
        self.jm.get_or_init(|| (1..=self.n).map(|k| self.right_j(&self.one(), k)).collect())
    }

    /// Right action of one generator on one basis label.
    fn gen_row(&self, g: Generator, label: usize) -> Row {
        if let Some(r) = self.gen_cache.read().unwrap().get(&(g, label)) {
            return r.clone();
        }
        let row = Arc::new(self.compute_gen_row(g, label));
        self.gen_cache.write().unwrap().insert((g, label), row.clone());
        row
    }

    fn compute_gen_row(&self, g: Generator, label: usize) -> Vec<(usize, P)> {
        let (w, c) = decode(label, self.m, self.n);
        let rank = label / self.mn;
        let mut out: Vec<(usize, P)> = Vec::new();
        if g == 0 {
            if c[0] + 1 < self.m {
                let mut c2 = c.clone();
                c2[0] += 1;
                out.push((rank * self.mn + code(&c2, self.m), P::one()));
            } else {
                for (j, e) in self.overflow.iter().enumerate() {
                    if !e.is_zero() {
                        let mut c2 = c.clone();
                        c2[0] = j;
                        out.push((rank * self.mn + code(&c2, self.m), e.clone()));
                    }
                }
            }
            return out;
        }
        let i = g;
        let (a, b) = (c[i - 1], c[i]);
        let q = P::q();
        let qm1 = &q - &P::one();
        let ws = w.mul_simple_right(i);
        let ws_rank = ws.lex_rank();
        let mut swapped = c.clone();
        swapped.swap(i - 1, i);
        // T_w T_i J^{swapped}
        if w.right_ascent(i) {
            out.push((ws_rank * self.mn + code(&swapped, self.m), P::one()));
        } else {
            out.push((rank * self.mn + code(&swapped, self.m), qm1.clone()));
            out.push((ws_rank * self.mn + code(&swapped, self.m), q.clone()));
        }
        // (q-1) T_w · correction, L = J_i, M = J_{i+1}
        let mut push = |x: usize, y: usize, sign: i64| {
            let mut c2 = c.clone();
            c2[i - 1] = x;
            c2[i] = y;
            out.push((rank * self.mn + code(&c2, self.m), qm1.scale(&BigInt::from(sign))));
        };
        if a > b {
            for j in 0..a - b {
                push(b + j, a - j, -1);
            }
        } else if b > a {
            for j in 0..b - a {
                push(a + j, b - j, 1);
            }
        }
        let mut acc = HeckeElement::zero(self.m, self.n);
        for (l, v) in out {
            acc.add_term(l, v);
        }
        acc.terms.into_iter().collect()
    }

    /// `h · T_g`.
    pub fn right_gen(&self, h: &HeckeElement, g: Generator) -> HeckeElement {
        assert!(g < self.n.max(1));
        let mut out = self.zero();
        for (l, c) in &h.terms {
            out.add_scaled(&self.gen_row(g, *l), c);
        }
        out
    }

    /// `T_i · h` for `i ≥ 1`.
    pub fn left_gen(&self, i: usize, h: &HeckeElement) -> HeckeElement {
        assert!(i >= 1 && i < self.n);
        let q = P::q();
        let qm1 = &q - &P::one();
        let mut out = self.zero();
        for (l, c) in &h.terms {
            let (w, cv) = decode(*l, self.m, self.n);
            let sw = encode(&w.mul_simple_left(i), &cv, self.m);
            if w.left_ascent(i) {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(*l, c * &qm1);
                out.add_term(sw, c * &q);
            }
        }
        out
    }

    /// `h · J_k` via `J_k = q^{1-k} T_{k-1}⋯T_1 T_0 T_1⋯T_{k-1}`.
    fn right_j(&self, h: &HeckeElement, k: usize) -> HeckeElement {
        let mut x = h.clone();
        for g in (1..k).rev() {
            x = self.right_gen(&x, g);
        }
        x = self.right_gen(&x, 0);
        for g in 1..k {
            x = self.right_gen(&x, g);
        }
        if k > 1 {
            x = x.scale(&P::q_pow(1 - k as i32));
        }
        x
    }

    /// `h · T_w J^c`.
    fn right_label(&self, h: &HeckeElement, label: usize) -> HeckeElement {
        let (w, c) = decode(label, self.m, self.n);
        let mut x = h.clone();
        for g in w.reduced_word() {
            x = self.right_gen(&x, g);
        }
        for (k, &e) in c.iter().enumerate() {
            for _ in 0..e {
                x = self.right_j(&x, k + 1);
            }
        }
        x
    }

    fn prod_row(&self, a: usize, b: usize) -> Row {
        if let Some(r) = self.prod_cache.read().unwrap().get(&(a, b)) {
            return r.clone();
        }
        let p = self.right_label(&self.basis_label(a), b);
        let row: Row = Arc::new(p.terms.into_iter().collect());
        self.prod_cache.write().unwrap().insert((a, b), row.clone());
        row
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        self.check(a);
        self.check(b);
        let mut out = self.zero();
        for (lb, cb) in &b.terms {
            for (la, ca) in &a.terms {
                out.add_scaled(&self.prod_row(*la, *lb), &(ca * cb));
            }
        }
        out
    }

    pub fn product(&self, factors: &[HeckeElement]) -> HeckeElement {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// `h · T_w`, by the reduced word of `w`.
    pub fn right_t_w(&self, h: &HeckeElement, w: &Permutation) -> HeckeElement {
        w.reduced_word().into_iter().fold(h.clone(), |x, g| self.right_gen(&x, g))
    }

    /// `T_w · h`.
    pub fn left_t_w(&self, w: &Permutation, h: &HeckeElement) -> HeckeElement {
        w.reduced_word().into_iter().rev().fold(h.clone(), |x, g| self.left_gen(g, &x))
    }

    /// The anti-involution fixing every `T_i`: `(T_w J^c)* = J^c T_{w^{-1}}`.
    pub fn star(&self, a: &HeckeElement) -> HeckeElement {
        self.check(a);
        let mut out = self.zero();
        for (l, coeff) in &a.terms {
            let (w, c) = decode(*l, self.m, self.n);
            let mut x = self.scalar(coeff.clone());
            for (k, &e) in c.iter().enumerate() {
                for _ in 0..e {
                    x = self.right_j(&x, k + 1);
                }
            }
            x = self.right_t_w(&x, &w.inverse());
            out = out.add(&x);
        }
        out
    }

    fn check(&self, a: &HeckeElement) {
        assert!(a.m == self.m && a.n == self.n, "element of H({}, {}) used in H({}, {})", a.m, a.n, self.m, self.n);
    }

    /// Whether right multiplication by the generators, started at `1`,
    /// reaches exactly the labels `S_n × {0..m-1}^n` and nothing else.
    pub fn dim_check(&self) -> (usize, bool) {
        let mut seen = vec![false; self.dim];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        let mut ok = true;
        while let Some(l) = stack.pop() {
            for g in 0..self.n {
                for (l2, _) in self.gen_row(g, l).iter() {
                    if *l2 >= self.dim {
                        ok = false;
                        continue;
                    }
                    if !seen[*l2] {
                        seen[*l2] = true;
                        count += 1;
                        stack.push(*l2);
                    }
                }
            }
        }
        // every label is T_w J^c: check the label map is onto S_n × codes
        let perms = Permutation::all(self.n).len();
        (count, ok && count == self.dim && count == perms * self.mn)
    }

    /// `Σ_{w ∈ S_a} T_w` for the Young subgroup of the row-reading tableau.
    pub fn x(&self, a: &Multicomposition) -> HeckeElement {
        let mut e = self.zero();
        for w in YoungSubgroup::new(a).elements() {
            e.add_term(encode(&w, &vec![0; self.n], self.m), P::one());
        }
        e
    }

    /// `Σ_{w ∈ S_a} (-q)^{-ℓ(w)} T_w`.
    pub fn y(&self, a: &Multicomposition) -> HeckeElement {
        let mut e = self.zero();
        for w in YoungSubgroup::new(a).elements() {
            e.add_term(encode(&w, &vec![0; self.n], self.m), P::neg_q_pow(-(w.length() as i32)));
        }
        e
    }

    /// `Π_{i=2}^m Π_{j=1}^{a_i} (J_j - Q_{σ(i)})` with `a_i` the total size
    /// of the first `i-1` components.
    fn u(&self, sizes: &[usize], sigma: impl Fn(usize) -> usize) -> HeckeElement {
        let mut x = self.one();
        let mut a = 0;
        for i in 2..=self.m {
            a += sizes.get(i - 2).copied().unwrap_or(0);
            for j in 1..=a {
                let jx = self.right_j(&x, j);
                x = jx.sub(&x.scale(&P::big_q(sigma(i))));
            }
        }
        x
    }

    /// `u⁺` for component sizes `sizes`.
    pub fn u_plus(&self, sizes: &[usize]) -> HeckeElement {
        self.u(sizes, |i| i)
    }

    /// `u⁻` for component sizes `sizes`.
    pub fn u_minus(&self, sizes: &[usize]) -> HeckeElement {
        let m = self.m;
        self.u(sizes, move |i| m - i + 1)
    }

    pub fn m_lambda(&self, a: &Multicomposition) -> HeckeElement {
        self.mul(&self.x(a), &self.u_plus(&a.component_sizes()))
    }

    pub fn n_lambda(&self, a: &Multicomposition) -> HeckeElement {
        self.mul(&self.y(a), &self.u_minus(&a.component_sizes()))
    }

    /// `(x, y, u⁺, u⁻, m, n)` for a shape.
    pub fn cell_elements(&self, shape: &Multipartition) -> CellElements {
        let a = shape.as_multicomposition();
        let sizes = a.component_sizes();
        let x = self.x(&a);
        let y = self.y(&a);
        let u_plus = self.u_plus(&sizes);
        let u_minus = self.u_minus(&sizes);
        let m = self.mul(&x, &u_plus);
        let n = self.mul(&y, &u_minus);
        debug_assert_eq!(m, self.mul(&u_plus, &x));
        debug_assert_eq!(n, self.mul(&u_minus, &y));
        CellElements { x, y, u_plus, u_minus, m, n }
    }

    /// `T*_{d(s)} m_λ T_{d(t)}` for row-standard `s, t` of one shape.
    pub fn m_st(&self, s: &Tableau, t: &Tableau) -> Result<HeckeElement> {
        if s.shape() != t.shape() {
            return Err(Error::InvalidInput("m_st: shape mismatch".into()));
        }
        let m = self.m_lambda(s.shape());
        self.sandwich(&d_of(s)?, &m, &d_of(t)?)
    }

    /// `(-q)^{-ℓ(d(s))-ℓ(d(t))} T*_{d(s)} n_λ T_{d(t)}`.
    pub fn n_st(&self, s: &Tableau, t: &Tableau) -> Result<HeckeElement> {
        if s.shape() != t.shape() {
            return Err(Error::InvalidInput("n_st: shape mismatch".into()));
        }
        let (ds, dt) = (d_of(s)?, d_of(t)?);
        let n = self.n_lambda(s.shape());
        let e = -((ds.length() + dt.length()) as i32);
        Ok(self.sandwich(&ds, &n, &dt)?.scale(&P::neg_q_pow(e)))
    }

    /// All `m_st` with `s, t` standard of a common shape.
    pub fn murphy_basis(&self) -> Result<Vec<HeckeElement>> {
        let mut out = Vec::new();
        for shape in enumerate_multipartitions(self.m, self.n) {
            let std = enumerate_standard(&shape);
            for s in &std {
                for t in &std {
                    out.push(self.m_st(s, t)?);
                }
            }
        }
        Ok(out)
    }

    /// `(count, rank)` of the Murphy basis. The rank is taken at a
    /// pseudo-random point of `F_p`; full rank there already forces linear
    /// independence over the coefficient ring.
    pub fn murphy_basis_check(&self) -> Result<(usize, usize)> {
        let basis = self.murphy_basis()?;
        let rows: Vec<Vec<P>> = basis.iter().map(|b| b.coords(self.dim)).collect();
        Ok((basis.len(), rank_at(&SpecializationTarget::generic(self.m, 1), &rows)?))
    }

    /// `T*_{d} h T_{e}`.
    pub fn sandwich(&self, d: &Permutation, h: &HeckeElement, e: &Permutation) -> Result<HeckeElement> {
        if d.n() != self.n || e.n() != self.n {
            return Err(Error::InvalidInput("permutation size mismatch".into()));
        }
        Ok(self.right_t_w(&self.left_t_w(&d.inverse(), h), e))
    }
}

fn checked_dim(m: usize, n: usize) -> Option<usize> {
    let mut d: usize = 1;
    for i in 1..=n {
        d = d.checked_mul(i)?.checked_mul(m)?;
    }
    Some(d)
}

/// The six cell elements of one shape.
#[derive(Clone, Debug)]
pub struct CellElements {
    pub x: HeckeElement,
    pub y: HeckeElement,
    pub u_plus: HeckeElement,
    pub u_minus: HeckeElement,
    pub m: HeckeElement,
    pub n: HeckeElement,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(m: usize, n: usize) -> HeckeAlgebra {
        HeckeAlgebra::new(m, n).unwrap()
    }

    #[test]
    fn quadratic_and_unit() {
        let h = alg(2, 3);
        let t1 = h.t(1).unwrap();
        let lhs = h.mul(&t1, &t1);
        let rhs = t1.scale(&(P::q() - P::one())).add(&h.scalar(P::q()));
        assert_eq!(lhs, rhs);
        assert_eq!(h.mul(&t1, &h.one()), t1);
        assert_eq!(h.mul(&h.one(), &t1), t1);
    }

    #[test]
    fn defining_relations() {
        for (m, n) in [(1, 3), (2, 3), (3, 3)] {
            let h = alg(m, n);
            let t: Vec<_> = (0..n).map(|i| h.t(i).unwrap()).collect();
            // cyclotomic relation
            let mut c = h.one();
            for i in 1..=m {
                c = h.mul(&c, &t[0].sub(&h.scalar(P::big_q(i))));
            }
            assert!(c.is_zero());
            for i in 1..n {
                let sq = h.mul(&t[i], &t[i]);
                assert_eq!(sq, t[i].scale(&(P::q() - P::one())).add(&h.scalar(P::q())));
            }
            let p = |xs: &[&HeckeElement]| xs.iter().fold(h.one(), |a, b| h.mul(&a, b));
            assert_eq!(p(&[&t[0], &t[1], &t[0], &t[1]]), p(&[&t[1], &t[0], &t[1], &t[0]]));
            assert_eq!(p(&[&t[1], &t[2], &t[1]]), p(&[&t[2], &t[1], &t[2]]));
            assert_eq!(p(&[&t[0], &t[2]]), p(&[&t[2], &t[0]]));
        }
    }

    #[test]
    fn jucys_murphy_commute_and_fixed_by_star() {
        let h = alg(2, 3);
        let js: Vec<_> = (1..=3).map(|i| h.j(i).unwrap()).collect();
        for a in &js {
            assert_eq!(&h.star(a), a);
            for b in &js {
                assert_eq!(h.mul(a, b), h.mul(b, a));
            }
        }
        // J_2 built from the definition
        let t0 = h.t(0).unwrap();
        let t1 = h.t(1).unwrap();
        let j2 = h.product(&[t1.clone(), t0, t1]).scale(&P::q_pow(-1));
        assert_eq!(j2, js[1]);
        // J_2 is the basis label itself
        assert_eq!(js[1], h.basis(&Permutation::identity(3), &[0, 1, 0]));
    }

    #[test]
    fn j1_collapses_for_m1() {
        let h = alg(1, 2);
        assert_eq!(h.j(1).unwrap(), h.scalar(P::big_q(1)));
    }

    #[test]
    fn star_is_antimultiplicative() {
        let h = alg(2, 3);
        let t1 = h.t(1).unwrap();
        let t2 = h.t(2).unwrap();
        assert_eq!(h.star(&h.mul(&t1, &t2)), h.mul(&t2, &t1));
        for a in (0..h.dim()).step_by(5) {
            for b in (0..h.dim()).step_by(7) {
                let (x, y) = (h.basis_label(a), h.basis_label(b));
                assert_eq!(h.star(&h.mul(&x, &y)), h.mul(&h.star(&y), &h.star(&x)));
            }
        }
    }

    #[test]
    fn dims() {
        for (m, n, d) in [(1, 2, 2), (1, 3, 6), (2, 2, 8), (2, 3, 48), (3, 2, 18)] {
            let h = alg(m, n);
            assert_eq!(h.dim_check(), (d, true));
        }
        assert!(matches!(HeckeAlgebra::with_limit(3, 6, 1000), Err(Error::ScaleLimit { .. })));
    }

    #[test]
    fn murphy_basis_is_a_basis() {
        for (m, n) in [(1, 3), (2, 2), (2, 3)] {
            let h = alg(m, n);
            assert_eq!(h.murphy_basis_check().unwrap(), (h.dim(), h.dim()));
        }
    }

    #[test]
    fn cell_elements_examples() {
        let h = alg(2, 2);
        let lam = Multipartition::new(vec![vec![1], vec![1]]).unwrap();
        let ce = h.cell_elements(&lam);
        assert_eq!(ce.u_plus, h.j(1).unwrap().sub(&h.scalar(P::big_q(2))));
        assert_eq!(ce.u_minus, h.j(1).unwrap().sub(&h.scalar(P::big_q(1))));
        let h1 = alg(1, 3);
        let lam = Multipartition::new(vec![vec![2, 1]]).unwrap();
        let ce = h1.cell_elements(&lam);
        assert_eq!(ce.u_plus, h1.one());
        assert_eq!(ce.m, ce.x);
        assert_eq!(ce.m, h1.one().add(&h1.t(1).unwrap()));
    }

    #[test]
    fn m_st_star_symmetry() {
        for (m, n) in [(1, 3), (2, 2)] {
            let h = alg(m, n);
            for lam in enumerate_multipartitions(m, n) {
                let ce = h.cell_elements(&lam);
                assert_eq!(h.star(&ce.m), ce.m);
                assert_eq!(h.star(&ce.n), ce.n);
                let st = enumerate_standard(&lam);
                for s in &st {
                    for t in &st {
                        assert_eq!(h.star(&h.m_st(s, t).unwrap()), h.m_st(t, s).unwrap());
                    }
                }
                assert_eq!(h.m_st(&st[0], &st[0]).unwrap(), ce.m);
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let h = alg(2, 2);
        let e = h.j(2).unwrap();
        let s = e.to_json();
        assert_eq!(HeckeElement::from_json(2, 2, &s).unwrap(), e);
        assert!(s.contains("\"perm\""));
    }
}
