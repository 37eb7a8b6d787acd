//! Concrete fields that the ground ring specializes into, and dense linear
//! algebra over them.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::ring::poly::{LaurentPolynomial, MAX_PARAMS};

/// Minimal field interface used by the specialized linear algebra.
///
/// Constants are produced from an existing element so that fields carrying
/// runtime data (a defining polynomial) can build them.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn from_bigint(&self, c: &BigInt) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
}

impl Field for BigRational {
    fn zero(&self) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(&self) -> Self {
        <BigRational as One>::one()
    }
    fn from_bigint(&self, c: &BigInt) -> Self {
        BigRational::from_integer(c.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Element of `Q[t]/(p(t))` for a monic `p`. Coefficients are stored
/// lowest degree first and always reduced below `deg p`.
#[derive(Clone, PartialEq)]
pub struct NumberFieldElem {
    modulus: Arc<Vec<BigRational>>,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for NumberFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !Zero::is_zero(*c))
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![<BigRational as Zero>::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let d = m.len() - 1;
    while r.len() > d {
        let lead = r.last().unwrap().clone();
        let shift = r.len() - 1 - d;
        for (i, c) in m.iter().enumerate() {
            r[shift + i] -= &lead * c;
        }
        trim(&mut r);
    }
    r
}

/// Division with remainder over `Q[t]` for an arbitrary nonzero divisor.
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut q = vec![<BigRational as Zero>::zero(); r.len().saturating_sub(db).max(1)];
    while r.len() > db && !r.is_empty() {
        let c = r.last().unwrap() / &lb;
        let shift = r.len() - 1 - db;
        for (i, x) in b.iter().enumerate() {
            r[shift + i] -= &c * x;
        }
        q[shift] += c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

impl NumberFieldElem {
    pub fn new(modulus: Arc<Vec<BigRational>>, coeffs: Vec<BigRational>) -> Self {
        let coeffs = poly_rem(&coeffs, &modulus);
        NumberFieldElem { modulus, coeffs }
    }

    /// The class of `t`.
    pub fn generator(modulus: Arc<Vec<BigRational>>) -> Self {
        Self::new(modulus, vec![<BigRational as Zero>::zero(), <BigRational as One>::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl Field for NumberFieldElem {
    fn zero(&self) -> Self {
        NumberFieldElem { modulus: self.modulus.clone(), coeffs: Vec::new() }
    }
    fn one(&self) -> Self {
        self.from_bigint(&BigInt::one())
    }
    fn from_bigint(&self, c: &BigInt) -> Self {
        Self::new(self.modulus.clone(), vec![BigRational::from_integer(c.clone())])
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![<BigRational as Zero>::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        trim(&mut v);
        NumberFieldElem { modulus: self.modulus.clone(), coeffs: v }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        Self::new(self.modulus.clone(), poly_mul(&self.coeffs, &other.coeffs))
    }
    fn neg(&self) -> Self {
        NumberFieldElem { modulus: self.modulus.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn inv(&self) -> Option<Self> {
        if self.coeffs.is_empty() {
            return None;
        }
        // extended Euclid: s*a + u*m = g
        let (mut r0, mut r1) = (self.modulus.to_vec(), self.coeffs.clone());
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![<BigRational as One>::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let qs = poly_mul(&q, &s1);
            let n = s0.len().max(qs.len());
            let mut s2 = vec![<BigRational as Zero>::zero(); n];
            for (i, c) in s0.iter().enumerate() {
                s2[i] += c;
            }
            for (i, c) in qs.iter().enumerate() {
                s2[i] -= c;
            }
            trim(&mut s2);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is the gcd; invertible only if it is a nonzero constant
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].clone();
        let s: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
        Some(Self::new(self.modulus.clone(), s))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Element of the prime field `F_p`, `p < 2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    v: u64,
    p: u64,
}

impl fmt::Debug for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.v, self.p)
    }
}

/// The Mersenne prime `2^61 - 1`.
pub const DEFAULT_PRIME: u64 = (1 << 61) - 1;

impl PrimeFieldElem {
    pub fn new(v: i64, p: u64) -> Self {
        PrimeFieldElem { v: v.rem_euclid(p as i64) as u64, p }
    }
    pub fn value(&self) -> u64 {
        self.v
    }
    fn pow(self, mut e: u64) -> Self {
        let mut acc = PrimeFieldElem { v: 1 % self.p, p: self.p };
        let mut b = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }
}

impl Field for PrimeFieldElem {
    fn zero(&self) -> Self {
        PrimeFieldElem { v: 0, p: self.p }
    }
    fn one(&self) -> Self {
        PrimeFieldElem { v: 1, p: self.p }
    }
    fn from_bigint(&self, c: &BigInt) -> Self {
        let r = c % BigInt::from(self.p);
        let r = if r.is_negative() { r + BigInt::from(self.p) } else { r };
        PrimeFieldElem { v: r.try_into().expect("reduced below p"), p: self.p }
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.v + o.v;
        PrimeFieldElem { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        PrimeFieldElem { v: if self.v >= o.v { self.v - o.v } else { self.v + self.p - o.v }, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        PrimeFieldElem { v: ((self.v as u128 * o.v as u128) % self.p as u128) as u64, p: self.p }
    }
    fn neg(&self) -> Self {
        PrimeFieldElem { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

/// Where to send `q, Q_1, …, Q_m`.
#[derive(Clone, Debug, PartialEq)]
pub enum SpecializationTarget {
    /// Values in the rationals.
    Rationals { q: BigRational, params: Vec<BigRational> },
    /// Values in `Q[t]/(p(t))`, each given as a polynomial in `t`
    /// (coefficients lowest degree first). The caller certifies that `p`
    /// is irreducible; only monicity and positive degree are checked.
    NumberField { modulus: Vec<BigRational>, q: Vec<BigRational>, params: Vec<Vec<BigRational>> },
    /// Values in `F_p`. The caller certifies that `p` is prime. Integer
    /// coefficients are reduced mod `p`, so ranks here never exceed ranks
    /// over the fraction field.
    Prime { p: u64, q: u64, params: Vec<u64> },
}

/// A value of a specialized polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldValue {
    Rational(BigRational),
    NumberField(NumberFieldElem),
    Prime(PrimeFieldElem),
}

/// Images of `q`, `q^-1` and the `Q_i` in a concrete field.
#[derive(Clone, Debug)]
pub struct Point<F: Field> {
    pub q: F,
    pub q_inv: F,
    pub params: Vec<F>,
}

impl<F: Field> Point<F> {
    pub fn eval(&self, a: &LaurentPolynomial) -> F {
        a.eval_with(&self.q, &self.q_inv, &self.params)
    }
    pub fn sample(&self) -> &F {
        &self.q
    }
}

/// Generic computation run at a specialization point; see
/// [`SpecializationTarget::visit`].
pub trait PointVisitor {
    type Output;
    fn visit<F: Field>(self, point: Point<F>) -> Self::Output;
}

impl SpecializationTarget {
    pub fn rationals(q: i64, params: &[i64]) -> Result<Self, Error> {
        let t = SpecializationTarget::Rationals {
            q: BigRational::from_integer(q.into()),
            params: params.iter().map(|v| BigRational::from_integer((*v).into())).collect(),
        };
        t.validate()?;
        Ok(t)
    }

    /// `q ↦ q`, `Q_i ↦ ξ^i` with `ξ = t` a root of the `m`-th cyclotomic
    /// polynomial, for `m ≤ 4`. For `m ≤ 2` this stays in the rationals.
    pub fn root_of_unity(m: usize, q: i64) -> Result<Self, Error> {
        let r = |v: i64| BigRational::from_integer(v.into());
        match m {
            1 => Self::rationals(q, &[1]),
            2 => Self::rationals(q, &[-1, 1]),
            3 | 4 => {
                let modulus = if m == 3 { vec![r(1), r(1), r(1)] } else { vec![r(1), r(0), r(1)] };
                let m_arc = Arc::new(modulus.clone());
                let xi = NumberFieldElem::generator(m_arc.clone());
                let mut params = Vec::new();
                let mut acc = xi.clone();
                for _ in 0..m {
                    params.push(acc.coeffs().to_vec());
                    acc = acc.mul(&xi);
                }
                let t = SpecializationTarget::NumberField { modulus, q: vec![r(q)], params };
                t.validate()?;
                Ok(t)
            }
            _ => Err(Error::InvalidTarget(format!("no built-in root of unity target for m = {m}"))),
        }
    }

    /// A fixed pseudo-random point of `F_p`, `p = 2^61 - 1`, standing in for
    /// generic parameters. The values are derived from `seed` by a simple
    /// mixing function so the point is reproducible.
    pub fn generic(m: usize, seed: u64) -> Self {
        let p = DEFAULT_PRIME;
        let mut state = seed ^ 0x9e37_79b9_7f4a_7c15;
        let mut next = || {
            state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^= z >> 31;
            2 + z % (p - 3)
        };
        let q = next();
        let params = (0..m).map(|_| next()).collect();
        SpecializationTarget::Prime { p, q, params }
    }

    pub fn num_params(&self) -> usize {
        match self {
            SpecializationTarget::Rationals { params, .. } => params.len(),
            SpecializationTarget::NumberField { params, .. } => params.len(),
            SpecializationTarget::Prime { params, .. } => params.len(),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        match self {
            SpecializationTarget::Rationals { q, .. } => {
                if Zero::is_zero(q) {
                    return Err(Error::InvalidTarget("q must be invertible".into()));
                }
            }
            SpecializationTarget::NumberField { modulus, q, .. } => {
                if modulus.len() < 2 {
                    return Err(Error::InvalidTarget("defining polynomial must have positive degree".into()));
                }
                if !modulus.last().unwrap().is_one() {
                    return Err(Error::InvalidTarget("defining polynomial must be monic".into()));
                }
                let qe = NumberFieldElem::new(Arc::new(modulus.clone()), q.clone());
                if qe.inv().is_none() {
                    return Err(Error::InvalidTarget("q must be invertible".into()));
                }
            }
            SpecializationTarget::Prime { p, q, .. } => {
                if *p < 2 || *p >= 1 << 63 {
                    return Err(Error::InvalidTarget("modulus out of range".into()));
                }
                if q % p == 0 {
                    return Err(Error::InvalidTarget("q must be invertible".into()));
                }
            }
        }
        Ok(())
    }

    /// Run `v` with the concrete field of this target.
    pub fn visit<V: PointVisitor>(&self, v: V) -> Result<V::Output, Error> {
        self.validate()?;
        Ok(match self {
            SpecializationTarget::Rationals { q, params } => {
                v.visit(Point { q: q.clone(), q_inv: q.recip(), params: params.clone() })
            }
            SpecializationTarget::NumberField { modulus, q, params } => {
                let m = Arc::new(modulus.clone());
                let qe = NumberFieldElem::new(m.clone(), q.clone());
                let qi = qe.inv().expect("validated");
                let ps = params.iter().map(|p| NumberFieldElem::new(m.clone(), p.clone())).collect();
                v.visit(Point { q: qe, q_inv: qi, params: ps })
            }
            SpecializationTarget::Prime { p, q, params } => {
                let qe = PrimeFieldElem { v: q % p, p: *p };
                let qi = qe.inv().expect("validated");
                let ps = params.iter().map(|x| PrimeFieldElem { v: x % p, p: *p }).collect();
                v.visit(Point { q: qe, q_inv: qi, params: ps })
            }
        })
    }

    /// Evaluate a polynomial at this target.
    pub fn specialize(&self, a: &LaurentPolynomial) -> Result<FieldValue, Error> {
        if a.max_param() > self.num_params() {
            return Err(Error::InvalidTarget(format!(
                "polynomial uses Q{} but only {} parameters were assigned",
                a.max_param(),
                self.num_params()
            )));
        }
        struct Eval<'a>(&'a LaurentPolynomial);
        impl PointVisitor for Eval<'_> {
            type Output = FieldValue;
            fn visit<F: Field>(self, point: Point<F>) -> FieldValue {
                let v = point.eval(self.0);
                let any: &dyn std::any::Any = &v;
                if let Some(r) = any.downcast_ref::<BigRational>() {
                    FieldValue::Rational(r.clone())
                } else if let Some(e) = any.downcast_ref::<NumberFieldElem>() {
                    FieldValue::NumberField(e.clone())
                } else if let Some(e) = any.downcast_ref::<PrimeFieldElem>() {
                    FieldValue::Prime(*e)
                } else {
                    unreachable!("unknown field type")
                }
            }
        }
        self.visit(Eval(a))
    }

    /// Parse `q=1,Q=1,-1` or `generic` / `generic:SEED`.
    pub fn parse_spec(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("generic") {
            let seed = rest.trim_start_matches(':');
            let seed = if seed.is_empty() { 0 } else { seed.parse().map_err(|_| Error::Parse(s.into()))? };
            return Ok(Self::generic(MAX_PARAMS, seed));
        }
        let bad = || Error::Parse(format!("bad specialization '{s}'"));
        let (qpart, rest) = s.split_once(',').ok_or_else(bad)?;
        let qv: i64 = qpart.trim().strip_prefix("q=").ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let rest = rest.trim().strip_prefix("Q=").ok_or_else(bad)?;
        let params: Vec<i64> =
            rest.split(',').map(|x| x.trim().parse::<i64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        Self::rationals(qv, &params)
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(r) => write!(f, "{r}"),
            FieldValue::NumberField(e) => write!(f, "{e:?}"),
            FieldValue::Prime(e) => write!(f, "{}", e.value()),
        }
    }
}

impl FieldValue {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldValue::Rational(r) => Zero::is_zero(r),
            FieldValue::NumberField(e) => Field::is_zero(e),
            FieldValue::Prime(e) => e.is_zero(),
        }
    }
}

/// Row-reduce in place; returns the pivot columns.
pub fn row_reduce<F: Field>(m: &mut [Vec<F>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = m[r][j].mul(&f);
                    m[i][j] = m[i][j].sub(&v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut work = m.to_vec();
    row_reduce(&mut work).len()
}

/// Basis of the right nullspace `{x : m x = 0}`; `cols` is needed when `m`
/// has no rows.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize, sample: &F) -> Vec<Vec<F>> {
    let mut work = m.to_vec();
    let pivots = row_reduce(&mut work);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![sample.zero(); cols];
        v[free] = sample.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = work[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Rank of a polynomial matrix after specializing at `target`.
pub fn rank_at(target: &SpecializationTarget, m: &[Vec<LaurentPolynomial>]) -> Result<usize, Error> {
    struct R<'a>(&'a [Vec<LaurentPolynomial>]);
    impl PointVisitor for R<'_> {
        type Output = usize;
        fn visit<F: Field>(self, point: Point<F>) -> usize {
            let mat: Vec<Vec<F>> = self.0.iter().map(|r| r.iter().map(|a| point.eval(a)).collect()).collect();
            rank(&mat)
        }
    }
    target.visit(R(m))
}


#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn number_field_inverse() {
        let target = SpecializationTarget::root_of_unity(3, 1).unwrap();
        let SpecializationTarget::NumberField { modulus, .. } = target else { panic!() };
        let m = Arc::new(modulus);
        let xi = NumberFieldElem::generator(m.clone());
        let cube = xi.mul(&xi).mul(&xi);
        assert_eq!(cube, xi.one());
        let a = xi.add(&xi.from_bigint(&BigInt::from(2)));
        let ai = a.inv().unwrap();
        assert_eq!(a.mul(&ai), xi.one());
    }

    #[test]
    fn rejects_zero_q() {
        assert!(SpecializationTarget::rationals(0, &[1]).is_err());
        let bad = SpecializationTarget::NumberField { modulus: vec![r(1), r(2)], q: vec![r(1)], params: vec![] };
        assert!(bad.validate().is_err());
        let nonmonic = SpecializationTarget::NumberField { modulus: vec![r(1), r(0), r(2)], q: vec![r(1)], params: vec![] };
        assert!(nonmonic.validate().is_err());
    }

    #[test]
    fn specialize_examples() {
        let t = SpecializationTarget::rationals(1, &[1, -1]).unwrap();
        let a: LaurentPolynomial = "q - 1".parse().unwrap();
        assert!(t.specialize(&a).unwrap().is_zero());
        let b: LaurentPolynomial = "Q1*Q2".parse().unwrap();
        assert_eq!(t.specialize(&b).unwrap(), FieldValue::Rational(r(-1)));
    }

    #[test]
    fn rank_and_nullspace() {
        let m = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)]];
        assert_eq!(rank(&m), 1);
        let ns = nullspace(&m, 3, &r(0));
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot: BigRational = m[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(Zero::is_zero(&dot));
        }
    }
}
