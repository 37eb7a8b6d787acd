//! Quotients of Laurent polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::ring::poly::{LaurentPolynomial, Monomial};

/// `numerator / denominator`, with the integer content and any common
/// power of `q` divided out and the denominator's leading coefficient
/// positive. No polynomial gcd is taken, so equal values can have distinct
/// representations; compare with [`RationalFunction::equals`].
#[derive(Clone, PartialEq)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = RationalFunction { num, den };
        r.normalize();
        r
    }

    pub fn from_poly(p: LaurentPolynomial) -> Self {
        RationalFunction { num: p, den: LaurentPolynomial::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPolynomial::zero())
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial when the denominator divides.
    pub fn as_poly(&self) -> Option<LaurentPolynomial> {
        self.num.div_exact(&self.den)
    }

    pub fn equals(&self, other: &Self) -> bool {
        (&self.num * &other.den) == (&other.num * &self.den)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPolynomial::one();
            return;
        }
        if let Some(p) = self.num.div_exact(&self.den) {
            self.num = p;
            self.den = LaurentPolynomial::one();
            return;
        }
        let g: BigInt = self.num.content().gcd(&self.den.content());
        let mut g = g;
        if self.den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            g = -g;
        }
        if !g.is_one() {
            self.num = self.num.div_scalar_exact(&g);
            self.den = self.den.div_scalar_exact(&g);
        }
        // move the denominator's lowest q-power across
        let shift = self.den.terms().map(|(m, _)| m.q).min().unwrap_or(0);
        if shift != 0 {
            let m = Monomial::q_power(-shift);
            self.num = self.num.mul_monomial(&m);
            self.den = self.den.mul_monomial(&m);
        }
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(&self.num + &o.num, self.den.clone());
        }
        RationalFunction::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &RationalFunction { num: -&o.num, den: o.den.clone() }
    }
}

impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn reduces_exact_quotients() {
        let r = RationalFunction::new(p("q^2 - 1"), p("q - 1"));
        assert_eq!(r.denominator(), &LaurentPolynomial::one());
        assert_eq!(r.numerator(), &p("q + 1"));
    }

    #[test]
    fn normalizes_sign_and_content() {
        let r = RationalFunction::new(p("2"), p("-4*q - 2"));
        assert_eq!(r.numerator(), &p("-1"));
        assert_eq!(r.denominator(), &p("2*q + 1"));
    }

    #[test]
    fn arithmetic() {
        let a = RationalFunction::new(p("1"), p("q"));
        let b = RationalFunction::new(p("1"), p("q + 1"));
        let s = &a + &b;
        assert!(s.equals(&RationalFunction::new(p("2*q + 1"), p("q^2 + q"))));
        assert!((&s - &b).equals(&a));
        assert!((&a * &b).equals(&RationalFunction::new(p("1"), p("q^2 + q"))));
    }
}
