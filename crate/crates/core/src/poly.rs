//! Univariate polynomials in `t` over a [`Field`], stored sparsely by exponent.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// A nonzero scalar times `t^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: Scalar,
    pub exponent: u32,
}

impl Monomial {
    pub fn new(coeff: Scalar, exponent: u32) -> Monomial {
        assert!(!coeff.is_zero(), "monomial coefficient must be nonzero");
        Monomial { coeff, exponent }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::monomial(self.coeff.clone(), self.exponent)
    }
}

/// An element of `K[t]`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    terms: BTreeMap<u32, Scalar>,
}

impl Polynomial {
    pub fn zero(field: Field) -> Polynomial {
        Polynomial {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Polynomial {
        Polynomial::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Polynomial {
        Polynomial::monomial(c, 0)
    }

    /// `t` itself.
    pub fn t(field: Field) -> Polynomial {
        Polynomial::monomial(field.one(), 1)
    }

    /// `t^e` with coefficient one.
    pub fn t_pow(field: Field, e: u32) -> Polynomial {
        Polynomial::monomial(field.one(), e)
    }

    pub fn monomial(c: Scalar, e: u32) -> Polynomial {
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Polynomial { field, terms }
    }

    /// Builds from dense coefficients, lowest degree first.
    pub fn from_coeffs(field: Field, coeffs: &[i64]) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (e, &c) in coeffs.iter().enumerate() {
            let s = field.from_i64(c);
            if !s.is_zero() {
                terms.insert(e as u32, s);
            }
        }
        Polynomial { field, terms }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, e: u32) -> Scalar {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Scalar)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[&0].is_one()
    }

    pub fn as_monomial(&self) -> Option<Monomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Monomial {
            coeff: c.clone(),
            exponent: *e,
        })
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_field(other);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, *e, c.clone());
        }
        Polynomial {
            field: self.field,
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_field(other);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                accumulate(&mut terms, ea + eb, ca.mul(cb));
            }
        }
        Polynomial {
            field: self.field,
            terms,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field);
        }
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(e, x)| (*e, x.mul(c))).collect(),
        }
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: u32) -> Polynomial {
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_field(divisor);
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.leading_coeff().unwrap().inv();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.field);
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let c = rem.leading_coeff().unwrap().mul(&lead_inv);
            let e = rd - d;
            for (k, dc) in &divisor.terms {
                accumulate(&mut rem.terms, k + e, dc.mul(&c).neg());
            }
            rem.terms.remove(&rd);
            accumulate(&mut quot.terms, e, c);
        }
        Ok((quot, rem))
    }

    /// True when `self` divides `other` (zero divides only zero).
    pub fn divides(&self, other: &Polynomial) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        self.check_field(other);
        // t^i, t^j fast path
        if let (Some(a), Some(b)) = (self.as_monomial(), other.as_monomial()) {
            return Polynomial::t_pow(self.field, a.exponent.min(b.exponent));
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic lcm; zero if either argument is zero.
    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.field);
        }
        let g = self.gcd(other);
        let (q, _) = self.mul(other).div_rem(&g).expect("gcd nonzero");
        q.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            acc = acc.add(&c.mul(&x.pow(*e as u64)));
        }
        acc
    }

    /// Sets `t := 1`.
    pub fn eval_at_one(&self) -> Scalar {
        self.terms
            .values()
            .fold(self.field.zero(), |acc, c| acc.add(c))
    }

    /// Parses expressions like `t^2`, `t^3 - 1`, `2*t + 1/2`, `3t^2`.
    pub fn parse(field: Field, text: &str) -> Result<Polynomial> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| Error::InvalidModule(format!("bad polynomial `{text}`: {why}"));
        if s.is_empty() {
            return Err(bad("empty"));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&s[start..i]);
                start = i;
            }
        }
        pieces.push(&s[start..]);

        let mut out = Polynomial::zero(field);
        for piece in pieces {
            let (negative, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (coeff_text, var_text) = match body.find('t') {
                Some(pos) => (&body[..pos], Some(&body[pos + 1..])),
                None => (body, None),
            };
            let coeff_text = coeff_text.strip_suffix('*').unwrap_or(coeff_text);
            let mut coeff = if coeff_text.is_empty() {
                if var_text.is_none() {
                    return Err(bad("empty term"));
                }
                field.one()
            } else {
                field.parse_scalar(coeff_text).map_err(|_| bad("bad coefficient"))?
            };
            if negative {
                coeff = coeff.neg();
            }
            let exp = match var_text {
                None => 0,
                Some("") => 1,
                Some(rest) => rest
                    .strip_prefix('^')
                    .and_then(|e| e.parse::<u32>().ok())
                    .ok_or_else(|| bad("bad exponent"))?,
            };
            out = out.add(&Polynomial::monomial(coeff, exp));
        }
        Ok(out)
    }

    fn check_field(&self, other: &Polynomial) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
    }
}

fn accumulate(terms: &mut BTreeMap<u32, Scalar>, e: u32, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&e) {
        Some(x) => {
            let s = x.add(&c);
            if s.is_zero() {
                terms.remove(&e);
            } else {
                *x = s;
            }
        }
        None => {
            terms.insert(e, c);
        }
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first (zero smallest), then coefficients from the top down.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.terms.iter().rev().cmp(other.terms.iter().rev()))
            .then_with(|| self.field.cmp(&other.field))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = self.field.one();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = match c {
                Scalar::Rational(q) => q < &num_rational::BigRational::from_integer(0.into()),
                Scalar::Prime { .. } => false,
            };
            let mag = if negative { c.neg() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag == one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (e, true) => write!(f, "t^{e}")?,
                (e, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rational;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(Q, c)
    }

    #[test]
    fn gcd_of_monomials_is_min_power() {
        let g = Polynomial::t_pow(Q, 2).gcd(&Polynomial::t_pow(Q, 3));
        assert_eq!(g, Polynomial::t_pow(Q, 2));
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let f = p(&[2, 0, 4]);
        assert_eq!(Polynomial::zero(Q).gcd(&f), f.monic());
        assert!(Polynomial::zero(Q).gcd(&Polynomial::zero(Q)).is_zero());
    }

    #[test]
    fn gcd_by_euclid() {
        // t^2 - 1 and t^3 - 1 share exactly t - 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 0, 0, 1])), p(&[-1, 1]));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p(&[1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 1]));
        let (q, r) = p(&[0, 0, 0, 1]).div_rem(&p(&[0, 0, 1])).unwrap();
        assert_eq!((q, r), (p(&[0, 1]), Polynomial::zero(Q)));
        let (q, r) = p(&[1, 0, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[1]).div_rem(&Polynomial::zero(Q)), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_and_display() {
        let f = Polynomial::parse(Q, "t^3 - t + 1").unwrap();
        assert_eq!(f, p(&[1, -1, 0, 1]));
        assert_eq!(f.to_string(), "t^3 - t + 1");
        assert_eq!(Polynomial::parse(Q, "2*t^2").unwrap(), p(&[0, 0, 2]));
        assert_eq!(Polynomial::parse(Q, "3t").unwrap(), p(&[0, 3]));
        assert_eq!(Polynomial::parse(Q, "1/2*t").unwrap().to_string(), "1/2*t");
        assert!(Polynomial::parse(Q, "t^").is_err());
        assert!(Polynomial::parse(Q, "x^2").is_err());
        assert!(Polynomial::parse(Q, "").is_err());
    }

    #[test]
    fn fermat_in_prime_fields() {
        for prime in [2u64, 3, 5, 7, 1_000_003] {
            let f = Field::Prime(prime);
            for v in [0i64, 1, 2, 3, 4, 6, 123_456] {
                let x = f.from_i64(v);
                assert_eq!(x.pow(prime), x, "x^p = x in F_{prime}");
            }
        }
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-4i64..=4, 0..5).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn division_reconstructs(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn gcd_divides_and_is_greatest(a in small_poly(), b in small_poly(), c in small_poly()) {
            let ac = a.mul(&c);
            let bc = b.mul(&c);
            let g = ac.gcd(&bc);
            prop_assert!(g.divides(&ac));
            prop_assert!(g.divides(&bc));
            // c is a common divisor, so it divides the gcd
            prop_assert!(c.divides(&g));
        }
    }
}
