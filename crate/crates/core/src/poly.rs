//! Sparse bivariate polynomials in `q` and `t` with exact integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent pair `(q-degree, t-degree)`.
pub type Exponent = (u32, u32);

/// A polynomial in `q` and `t`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Exponent, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    Q,
    T,
}

impl Variable {
    fn as_char(self) -> char {
        match self {
            Variable::Q => 'q',
            Variable::T => 't',
        }
    }
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `c·q^a·t^b`.
    pub fn monomial(c: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, c.into());
        }
        p
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Stored terms in exponent order `(a, b)` ascending.
    pub fn iter(&self) -> impl Iterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Terms in graded-lexicographic order: total degree descending, then
    /// `q`-degree descending.
    pub fn graded_terms(&self) -> Vec<(Exponent, &BigInt)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by_key(|&((a, b), _)| std::cmp::Reverse((a + b, a)));
        v
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn evaluate(&self, q: &BigInt, t: &BigInt) -> BigInt {
        self.iter()
            .map(|((a, b), c)| c * num_traits::pow(q.clone(), a as usize) * num_traits::pow(t.clone(), b as usize))
            .sum()
    }

    pub fn evaluate_i64(&self, q: i64, t: i64) -> BigInt {
        self.evaluate(&BigInt::from(q), &BigInt::from(t))
    }

    pub fn swap_qt(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(a, b), c)| self.terms.get(&(b, a)) == Some(c))
    }

    /// Substitutes `q = t = x`, collecting by total degree.
    pub fn diagonal(&self) -> BTreeMap<u32, BigInt> {
        let mut out: BTreeMap<u32, BigInt> = BTreeMap::new();
        for ((a, b), c) in self.iter() {
            *out.entry(a + b).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Exact quotient by `1 − var`.
    ///
    /// Long division along `var` for each fixed exponent of the other
    /// variable: if `P = (1 − x)·Q` then `Q_k = Σ_{i ≤ k} P_i`, and the
    /// division is exact iff the full sum vanishes.
    pub fn div_one_minus(&self, var: Variable) -> Result<Self> {
        let mut lines: BTreeMap<u32, BTreeMap<u32, &BigInt>> = BTreeMap::new();
        for ((a, b), c) in self.iter() {
            let (along, other) = match var {
                Variable::Q => (a, b),
                Variable::T => (b, a),
            };
            lines.entry(other).or_default().insert(along, c);
        }
        let mut out = Self::zero();
        for (other, line) in lines {
            let top = *line.keys().next_back().expect("lines are nonempty");
            let mut acc = BigInt::zero();
            for k in 0..=top {
                if let Some(c) = line.get(&k) {
                    acc += *c;
                }
                if k == top {
                    break;
                }
                let (a, b) = match var {
                    Variable::Q => (k, other),
                    Variable::T => (other, k),
                };
                out.add_term(a, b, acc.clone());
            }
            if !acc.is_zero() {
                return Err(Error::NotDivisible {
                    variable: var.as_char(),
                });
            }
        }
        Ok(out)
    }

    /// Structured form: `(q-degree, t-degree, coefficient)` triples in
    /// graded-lexicographic order.
    pub fn triples(&self) -> Vec<(u32, u32, BigInt)> {
        self.graded_terms()
            .into_iter()
            .map(|((a, b), c)| (a, b, c.clone()))
            .collect()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &BigInt, a: u32, b: u32) -> fmt::Result {
    let mut parts: Vec<String> = Vec::new();
    if !c.is_one() || (a == 0 && b == 0) {
        parts.push(c.to_string());
    }
    for (var, e) in [('q', a), ('t', b)] {
        match e {
            0 => {}
            1 => parts.push(var.to_string()),
            _ => parts.push(format!("{var}^{e}")),
        }
    }
    f.write_str(&parts.join("*"))
}

/// Graded-lex text form, e.g. `q^2 + 2*q*t + t^2`; the zero polynomial is `0`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.graded_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in terms.into_iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_monomial(f, &magnitude, a, b)?;
        }
        Ok(())
    }
}

fn parse_monomial(text: &str) -> Result<(BigInt, u32, u32)> {
    let bad = |reason: String| Error::Malformed { what: "polynomial", reason };
    let mut coeff = BigInt::one();
    let (mut a, mut b) = (0u32, 0u32);
    for factor in text.split('*').map(str::trim) {
        let (base, exp) = match factor.split_once('^') {
            Some((base, exp)) => {
                let e = exp.trim().parse::<u32>().map_err(|e| bad(format!("exponent in {factor:?}: {e}")))?;
                (base.trim(), e)
            }
            None => (factor, 1),
        };
        match base {
            "q" => a += exp,
            "t" => b += exp,
            _ => {
                let c: BigInt = base.parse().map_err(|_| bad(format!("unexpected factor {factor:?}")))?;
                coeff *= num_traits::pow(c, exp as usize);
            }
        }
    }
    Ok((coeff, a, b))
}

/// Accepts the text form written by `Display`, with terms in any order.
impl std::str::FromStr for BivariatePolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::Malformed { what: "polynomial", reason };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input".into()));
        }
        let mut out = Self::zero();
        let mut sign = BigInt::one();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 0..=bytes.len() {
            let at_sign = i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') && i > 0 && bytes[i - 1] != b'^';
            if i == bytes.len() || at_sign {
                let term = &compact[start..i];
                let (term, leading_minus) = match term.strip_prefix('-') {
                    Some(rest) => (rest, true),
                    None => (term, false),
                };
                if term.is_empty() {
                    return Err(bad(format!("empty term in {s:?}")));
                }
                let (c, a, b) = parse_monomial(term)?;
                let c = if leading_minus { -c } else { c };
                out.add_term(a, b, &sign * c);
                if i < bytes.len() {
                    sign = if bytes[i] == b'-' { -BigInt::one() } else { BigInt::one() };
                }
                start = i + 1;
            }
        }
        Ok(out)
    }
}

impl AddAssign<&BivariatePolynomial> for BivariatePolynomial {
    fn add_assign(&mut self, rhs: &BivariatePolynomial) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }
}

impl AddAssign for BivariatePolynomial {
    fn add_assign(&mut self, rhs: BivariatePolynomial) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
        } else {
            *self += &rhs;
        }
    }
}

impl Add for BivariatePolynomial {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for BivariatePolynomial {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        -self.clone()
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: Self) -> BivariatePolynomial {
        self + &(-rhs)
    }
}

impl Sub for BivariatePolynomial {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for BivariatePolynomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl std::iter::Sum for BivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), Add::add)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type P = BivariatePolynomial;

    fn q_plus_t() -> P {
        P::q() + P::t()
    }

    #[test]
    fn display_forms() {
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::one().to_string(), "1");
        assert_eq!(q_plus_t().to_string(), "q + t");
        assert_eq!((q_plus_t() * q_plus_t()).to_string(), "q^2 + 2*q*t + t^2");
        let p = P::from_terms([((2, 1), -3), ((0, 0), 5), ((0, 4), 1)]);
        assert_eq!(p.to_string(), "t^4 - 3*q^2*t + 5");
        assert_eq!((-P::q()).to_string(), "-q");
    }

    #[test]
    fn parse_round_trip() {
        let p: P = "q^2*t^2 + q^3 + t^3 + 2*q*t".parse().unwrap();
        assert_eq!(p, P::from_terms([((2, 2), 1), ((3, 0), 1), ((0, 3), 1), ((1, 1), 2)]));
        let r: P = "-q - 3*t^2 + 7".parse().unwrap();
        assert_eq!(r.to_string(), "-3*t^2 - q + 7");
        assert_eq!("0".parse::<P>().unwrap(), P::zero());
        assert!("q +".parse::<P>().is_err());
        assert!("x".parse::<P>().is_err());
    }

    #[test]
    fn swap_and_symmetry() {
        assert_eq!(q_plus_t().swap_qt(), q_plus_t());
        assert!(q_plus_t().is_symmetric());
        let p = P::monomial(1, 2, 1);
        assert!(!p.is_symmetric());
        assert_eq!(p.swap_qt(), P::monomial(1, 1, 2));
    }

    #[test]
    fn zero_coefficients_vanish() {
        let p = P::q() - P::q();
        assert!(p.is_zero());
        assert_eq!(p, P::zero());
    }

    #[test]
    fn division_by_one_minus() {
        let one_minus_q = P::one() - P::q();
        let one_minus_t = P::one() - P::t();
        let m = P::from_terms([((3, 1), 2), ((0, 2), -1), ((1, 1), 7)]);
        let prod = &(&m * &one_minus_q) * &one_minus_t;
        let back = prod
            .div_one_minus(Variable::Q)
            .and_then(|p| p.div_one_minus(Variable::T))
            .unwrap();
        assert_eq!(back, m);
        assert_eq!(P::zero().div_one_minus(Variable::Q).unwrap(), P::zero());
        assert_eq!(
            P::q().div_one_minus(Variable::Q),
            Err(Error::NotDivisible { variable: 'q' })
        );
        assert_eq!(
            P::q().div_one_minus(Variable::T),
            Err(Error::NotDivisible { variable: 't' })
        );
    }

    #[test]
    fn evaluation_is_exact() {
        let big = q_plus_t().pow(40);
        assert_eq!(big.evaluate_i64(1, 1), BigInt::from(2).pow(40));
        assert_eq!(big.evaluate_i64(1, -1), BigInt::zero());
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(((0u32..5, 0u32..5), -4i64..5), 0..8).prop_map(P::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, P::zero());
            prop_assert_eq!(&a * &P::one(), a.clone());
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in -3i64..4, y in -3i64..4) {
            prop_assert_eq!((&a * &b).evaluate_i64(x, y), a.evaluate_i64(x, y) * b.evaluate_i64(x, y));
            prop_assert_eq!((&a + &b).evaluate_i64(x, y), a.evaluate_i64(x, y) + b.evaluate_i64(x, y));
            prop_assert_eq!(a.swap_qt().evaluate_i64(x, y), a.evaluate_i64(y, x));
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<P>().unwrap(), a);
        }

        #[test]
        fn swap_is_an_involution(a in arb_poly()) {
            prop_assert_eq!(a.swap_qt().swap_qt(), a.clone());
            prop_assert_eq!((&a + &a.swap_qt()).is_symmetric(), true);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly()) {
            let one_minus_q = P::one() - P::q();
            prop_assert_eq!((&a * &one_minus_q).div_one_minus(Variable::Q).unwrap(), a.clone());
            let one_minus_t = P::one() - P::t();
            prop_assert_eq!((&a * &one_minus_t).div_one_minus(Variable::T).unwrap(), a);
        }
    }
}
