//! Sparse Laurent polynomials in `q^{±1}, Q_1, …, Q_m` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Largest number of cyclotomic parameters `Q_i` a polynomial may carry.
pub const MAX_PARAMS: usize = 7;

/// Exponent vector `(e_q, e_{Q_1}, …, e_{Q_MAX})`. The `q` exponent may be
/// negative; the `Q_i` exponents never are.
///
/// The derived ordering is lexicographic with `q` first, which is the
/// canonical term order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub q: i32,
    pub params: [u16; MAX_PARAMS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, params: [0; MAX_PARAMS] };

    pub fn q_power(e: i32) -> Self {
        Monomial { q: e, ..Self::ONE }
    }

    pub fn param(i: usize) -> Self {
        assert!((1..=MAX_PARAMS).contains(&i), "Q index {i} out of range");
        let mut m = Self::ONE;
        m.params[i - 1] = 1;
        m
    }

    fn mul(&self, other: &Self) -> Self {
        let mut params = self.params;
        for (p, o) in params.iter_mut().zip(other.params.iter()) {
            *p += *o;
        }
        Monomial { q: self.q + other.q, params }
    }

    /// `self / other` when every `Q` exponent stays nonnegative.
    fn div(&self, other: &Self) -> Option<Self> {
        let mut params = self.params;
        for (p, o) in params.iter_mut().zip(other.params.iter()) {
            *p = p.checked_sub(*o)?;
        }
        Some(Monomial { q: self.q - other.q, params })
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }
}

/// An exact element of `Z[q, q^{-1}, Q_1, …, Q_m]`.
///
/// Zero coefficients are never stored, so structural equality is ring
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term<T: Into<BigInt>>(c: T, mono: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        LaurentPolynomial { terms }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i32) -> Self {
        Self::term(1, Monomial::q_power(e))
    }

    /// The parameter `Q_i` (1-based).
    pub fn big_q(i: usize) -> Self {
        Self::term(1, Monomial::param(i))
    }

    /// `(-q)^e`.
    pub fn neg_q_pow(e: i32) -> Self {
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::term(sign, Monomial::q_power(e))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Largest term in the canonical order.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Highest index `i` such that `Q_i` occurs.
    pub fn max_param(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.params.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i + 1))
            .max()
            .unwrap_or(0)
    }

    /// Is this `±q^e` (a unit of the ground ring)?
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.params.iter().all(|e| *e == 0) && c.abs().is_one())
    }

    fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(m, v)| (m.mul(mono), v.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| {
                    debug_assert!((v % c).is_zero());
                    (*m, v / c)
                })
                .collect(),
        }
    }

    fn min_q(&self) -> i32 {
        self.terms.keys().map(|m| m.q).min().unwrap_or(0)
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` when
    /// the divisor does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.terms.len() == 1 {
            let (dm, dc) = divisor.terms.iter().next().unwrap();
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                let (quo, rem) = c.div_rem(dc);
                if !rem.is_zero() {
                    return None;
                }
                out.insert(m.div(dm)?, quo);
            }
            return Some(LaurentPolynomial { terms: out });
        }
        // Strip the q-content of both sides so the division happens between
        // honest polynomials; the lex-leading-term division is then exact
        // whenever the divisor divides.
        let shift_a = self.min_q();
        let shift_b = divisor.min_q();
        let mut rem = self.mul_monomial(&Monomial::q_power(-shift_a));
        let b = divisor.mul_monomial(&Monomial::q_power(-shift_b));
        let (lm_b, lc_b) = b.leading().map(|(m, c)| (*m, c.clone())).unwrap();
        let mut quotient = Self::zero();
        while let Some((lm, lc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let mono = lm.div(&lm_b)?;
            if mono.q < 0 {
                return None;
            }
            let (c, r) = lc.div_rem(&lc_b);
            if !r.is_zero() {
                return None;
            }
            let t = LaurentPolynomial::term(c.clone(), mono);
            rem = &rem - &(&b * &t);
            quotient.add_term(mono, c);
        }
        Some(quotient.mul_monomial(&Monomial::q_power(shift_a - shift_b)))
    }

    /// Evaluate at field values. `q_inv` must be the inverse of `q`.
    pub fn eval_with<F: crate::ring::Field>(&self, q: &F, q_inv: &F, params: &[F]) -> F {
        let one = q.one();
        let mut acc = q.zero();
        for (m, c) in &self.terms {
            let mut v = q.from_bigint(c);
            let base = if m.q >= 0 { q } else { q_inv };
            v = v.mul(&pow_field(base, m.q.unsigned_abs(), &one));
            for (i, e) in m.params.iter().enumerate() {
                if *e > 0 {
                    let p = params.get(i).unwrap_or_else(|| panic!("no value for Q{}", i + 1));
                    v = v.mul(&pow_field(p, *e as u32, &one));
                }
            }
            acc = acc.add(&v);
        }
        acc
    }
}

fn pow_field<F: crate::ring::Field>(base: &F, e: u32, one: &F) -> F {
    let mut acc = one.clone();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b);
        }
        b = b.mul(&b);
        e >>= 1;
    }
    acc
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Canonical form: terms in ascending lexicographic exponent order,
    /// e.g. `-2*q^-1*Q1^2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            match m.q {
                0 => {}
                1 => factors.push("q".into()),
                e => factors.push(format!("q^{e}")),
            }
            for (i, e) in m.params.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("Q{}", i + 1)),
                    e => factors.push(format!("Q{}^{}", i + 1, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    /// Parses the canonical text form (and any reordering of it).
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        // split into signed terms; a '-' directly after '^' is an exponent sign
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                    neg = false;
                }
                neg ^= ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(bad("trailing sign"));
        }
        pieces.push((neg, cur));

        let mut out = LaurentPolynomial::zero();
        for (neg, piece) in pieces {
            let mut coeff = BigInt::one();
            let mut mono = Monomial::ONE;
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<i32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                if base == "q" {
                    mono.q += exp;
                } else if let Some(idx) = base.strip_prefix('Q') {
                    let i: usize = idx.parse().map_err(|_| bad("bad parameter index"))?;
                    if i == 0 || i > MAX_PARAMS || exp < 0 {
                        return Err(bad("bad parameter"));
                    }
                    mono.params[i - 1] += exp as u16;
                } else {
                    let c: BigInt = base.parse().map_err(|_| bad("bad coefficient"))?;
                    if factor.contains('^') {
                        return Err(bad("exponent on coefficient"));
                    }
                    coeff *= c;
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

impl serde::Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn cancellation() {
        let a = &LaurentPolynomial::q() - &LaurentPolynomial::one();
        assert_eq!(&a + &LaurentPolynomial::one(), LaurentPolynomial::q());
    }

    #[test]
    fn zero_absorbs() {
        let a = p("3*q^-2*Q1 - Q2^3 + 7");
        assert!((&a * &LaurentPolynomial::zero()).is_zero());
    }

    #[test]
    fn display_canonical() {
        let a = p("3 - 2*q^-1*Q1^2");
        assert_eq!(a.to_string(), "-2*q^-1*Q1^2 + 3");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(p("-q").to_string(), "-q");
        assert_eq!(p("q*Q1 - Q1*q").to_string(), "0");
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in ["-2*q^-1*Q1^2 + 3", "q^-3 + 5*Q2 - q", "-1", "Q7"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn exact_division() {
        let a = p("q - 1");
        let b = p("q + 1");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(p("q^2 - 1").div_exact(&p("q^-1 + q^-2")).unwrap(), p("q^3 - q^2"));
        assert!(p("q^2 + 1").div_exact(&a).is_none());
        assert!(p("Q1").div_exact(&p("Q2")).is_none());
        let c = p("q*Q1 - Q2 + 3*q^-1");
        assert_eq!((&c * &prod).div_exact(&c).unwrap(), prod);
    }

    #[test]
    fn content_and_units() {
        assert_eq!(p("6*q - 4*Q1").content(), BigInt::from(2));
        assert!(p("-q^-3").is_unit());
        assert!(!p("2*q").is_unit());
    }
}
