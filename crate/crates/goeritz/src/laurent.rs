//! Exact Laurent polynomials in the bracket variable `A`, the twist
//! polynomials `P_n`, and substitution into the Jones variable via
//! `t^(1/2) = A^(-2)`.
//!
//! Coefficients are arbitrary-precision integers: bracket-type coefficients
//! grow with crossing number and fixed-width arithmetic would corrupt
//! silently.

use crate::error::Error;
use crate::zeta::GaussInt;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial in `A` with integer coefficients.
///
/// Stored as a sorted map from exponent to coefficient; no zero coefficient
/// is ever kept, so equality of values is equality of representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// The monomial `c · A^exp`.
    pub fn monomial(c: i64, exp: i64) -> Self {
        Self::monomial_big(BigInt::from(c), exp)
    }

    pub fn monomial_big(c: BigInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `(-A)^k`, the unit that appears in every writhe normalization.
    pub fn neg_a_pow(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(sign, k)
    }

    /// The loop value `δ = -A^(-2) - A^2`.
    pub fn circle() -> Self {
        Self::from_terms(&[(-2, -1), (2, -1)])
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms(pairs: &[(i64, i64)]) -> Self {
        let mut p = LaurentPoly::zero();
        for &(e, c) in pairs {
            p.add_term(e, &BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// Coefficient of `A^exp` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterate terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by the monomial `c · A^exp` in place.
    pub fn mul_monomial(&self, c: i64, exp: i64) -> Self {
        if c == 0 {
            return LaurentPoly::zero();
        }
        let c = BigInt::from(c);
        let terms = self
            .terms
            .iter()
            .map(|(&e, k)| (e + exp, k * &c))
            .collect();
        LaurentPoly { terms }
    }

    pub fn scale(&self, c: i64) -> Self {
        self.mul_monomial(c, 0)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `t^(1/2) = A^(-2)`, i.e. `A^(2k) ↦ t^(-k/2)`.
    ///
    /// Fails with [`Error::OddExponent`] when any odd power of `A` is
    /// present, which signals a writhe or normalization bug upstream.
    pub fn substitute_half_t(&self) -> Result<HalfTLaurent, Error> {
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            if e.rem_euclid(2) != 0 {
                return Err(Error::OddExponent(e));
            }
            terms.insert(-e / 2, c.clone());
        }
        Ok(HalfTLaurent { terms })
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, &(-c));
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(&e, c)| (e, -c)).collect();
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// The twist polynomial `P_n`.
///
/// `P_0 = 0` and otherwise `P_n = Σ_{j=1..|n|} (-1)^(j-1) A^(sgn(n)(|n|-4j+2))`.
/// These arise from resolving a twist region of `n` crossings.
pub fn p_n(n: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    let s = n.signum();
    for j in 1..=n.abs() {
        let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
        p.add_term(s * (n.abs() - 4 * j + 2), &BigInt::from(sign));
    }
    p
}

fn fmt_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, body: Option<String>) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    match body {
        None => write!(f, "{}", abs),
        Some(b) => {
            if abs.is_one() {
                write!(f, "{}", b)
            } else {
                write!(f, "{}{}", abs, b)
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical rendering: terms in increasing exponent order,
    /// e.g. `-A^-5 - A^3 + A^7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in &self.terms {
            let body = match e {
                0 => None,
                1 => Some("A".to_string()),
                _ => Some(format!("A^{}", e)),
            };
            fmt_term(f, first, c, body)?;
            first = false;
        }
        Ok(())
    }
}

/// A Laurent polynomial in `t^(1/2)` with integer coefficients.
///
/// Exponents are stored in units of `t^(1/2)`, so links with half-integer
/// Jones exponents are exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HalfTLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl HalfTLaurent {
    pub fn zero() -> Self {
        HalfTLaurent::default()
    }

    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(0, BigInt::one());
        HalfTLaurent { terms }
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    /// Iterate `(k, coefficient)` pairs meaning `coefficient · t^(k/2)`.
    pub fn half_terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Exact evaluation at `t = -1` via `t^(1/2) = i`, in Gaussian integers.
    pub fn eval_minus_one(&self) -> GaussInt {
        let mut acc = GaussInt::zero();
        for (&k, c) in &self.terms {
            acc = acc.add(&GaussInt::i_pow(k).scale(c));
        }
        acc
    }
}

impl fmt::Display for HalfTLaurent {
    /// Terms in increasing exponent order; integer powers render as `t^k`,
    /// half-integer powers as `t^(k/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&u, c) in &self.terms {
            let body = if u == 0 {
                None
            } else if u.rem_euclid(2) == 0 {
                match u / 2 {
                    1 => Some("t".to_string()),
                    k => Some(format!("t^{}", k)),
                }
            } else {
                Some(format!("t^({}/2)", u))
            };
            fmt_term(f, first, c, body)?;
            first = false;
        }
        Ok(())
    }
}
