//! Exact arithmetic at the eighth root of unity `ζ = e^(iπ/4)`.
//!
//! Elements of `ℤ[ζ]` are represented in `ℤ[x]/(x⁴+1)`; squared moduli land
//! in `ℤ[√2]` via `√2 = ζ - ζ³`, and evaluation of Jones-type polynomials at
//! `t = -1` lands in the Gaussian integers via `t^(1/2) = i`.

use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;

/// An element `c0 + c1·x + c2·x² + c3·x³` of `ℤ[x]/(x⁴+1)`, with `x = ζ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Zeta8 {
    pub coeffs: [BigInt; 4],
}

impl Zeta8 {
    pub fn zero() -> Self {
        Zeta8::default()
    }

    pub fn from_int(c: i64) -> Self {
        let mut z = Zeta8::zero();
        z.coeffs[0] = BigInt::from(c);
        z
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `ζ^k` for any integer `k`, reduced via `x⁴ = -1`.
    pub fn zeta_pow(k: i64) -> Self {
        let r = k.rem_euclid(8) as usize;
        let mut z = Zeta8::zero();
        let sign = if r < 4 { 1 } else { -1 };
        z.coeffs[r % 4] = BigInt::from(sign);
        z
    }

    fn add_monomial(&mut self, exp: i64, c: &BigInt) {
        let r = exp.rem_euclid(8) as usize;
        if r < 4 {
            self.coeffs[r] += c;
        } else {
            self.coeffs[r - 4] -= c;
        }
    }

    pub fn add(&self, rhs: &Zeta8) -> Zeta8 {
        let mut out = self.clone();
        for i in 0..4 {
            out.coeffs[i] += &rhs.coeffs[i];
        }
        out
    }

    pub fn mul(&self, rhs: &Zeta8) -> Zeta8 {
        let mut out = Zeta8::zero();
        for i in 0..4 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &rhs.coeffs[j];
                out.add_monomial((i + j) as i64, &prod);
            }
        }
        out
    }

    pub fn neg(&self) -> Zeta8 {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            *c = -std::mem::take(c);
        }
        out
    }

    /// Complex conjugation: `x ↦ -x³` (since `ζ̄ = ζ⁻¹ = -ζ³`).
    pub fn conj(&self) -> Zeta8 {
        let mut out = Zeta8::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            // conj(x^i) = (-x^3)^i = (-1)^i x^{3i}
            let sign = if i % 2 == 0 { c.clone() } else { -c };
            out.add_monomial(3 * i as i64, &sign);
        }
        out
    }

    /// `z·z̄` as an element of `ℤ[√2]`.
    ///
    /// The product of an element with its conjugate is real, hence has no
    /// `x²` component and opposite `x`/`x³` components; it equals
    /// `p + q(x - x³) = p + q√2`.
    pub fn modulus_squared(&self) -> ZSqrt2 {
        let prod = self.mul(&self.conj());
        debug_assert!(prod.coeffs[2].is_zero());
        debug_assert_eq!(prod.coeffs[1], -&prod.coeffs[3]);
        ZSqrt2 {
            int: prod.coeffs[0].clone(),
            sqrt2: prod.coeffs[1].clone(),
        }
    }
}

impl fmt::Display for Zeta8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sep = if first {
                if c.is_negative() { "-" } else { "" }
            } else if c.is_negative() {
                " - "
            } else {
                " + "
            };
            let abs = c.abs();
            match i {
                0 => write!(f, "{}{}", sep, abs)?,
                1 if abs == BigInt::from(1) => write!(f, "{}z", sep)?,
                1 => write!(f, "{}{}z", sep, abs)?,
                _ if abs == BigInt::from(1) => write!(f, "{}z^{}", sep, i)?,
                _ => write!(f, "{}{}z^{}", sep, abs, i)?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Exact evaluation of a Laurent polynomial at `A = ζ`.
///
/// This is a ring homomorphism `ℤ[A^±1] → ℤ[ζ]`.
pub fn eval_zeta8(p: &LaurentPoly) -> Zeta8 {
    let mut out = Zeta8::zero();
    for (e, c) in p.terms() {
        out.add_monomial(e, c);
    }
    out
}

/// An element `int + sqrt2·√2` of `ℤ[√2]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZSqrt2 {
    pub int: BigInt,
    pub sqrt2: BigInt,
}

impl ZSqrt2 {
    pub fn new(int: i64, sqrt2: i64) -> Self {
        ZSqrt2 {
            int: BigInt::from(int),
            sqrt2: BigInt::from(sqrt2),
        }
    }

    pub fn from_bigint(int: BigInt) -> Self {
        ZSqrt2 {
            int,
            sqrt2: BigInt::zero(),
        }
    }

    pub fn is_integer(&self) -> bool {
        self.sqrt2.is_zero()
    }

    pub fn mul(&self, rhs: &ZSqrt2) -> ZSqrt2 {
        ZSqrt2 {
            int: &self.int * &rhs.int + BigInt::from(2) * &self.sqrt2 * &rhs.sqrt2,
            sqrt2: &self.int * &rhs.sqrt2 + &self.sqrt2 * &rhs.int,
        }
    }
}

impl fmt::Display for ZSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt2.is_zero() {
            write!(f, "{}", self.int)
        } else {
            write!(f, "{} + {}*sqrt(2)", self.int, self.sqrt2)
        }
    }
}

/// A Gaussian integer `re + im·i`, used for evaluation at `t = -1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn zero() -> Self {
        GaussInt::default()
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        let mut g = GaussInt::zero();
        match k.rem_euclid(4) {
            0 => g.re = BigInt::from(1),
            1 => g.im = BigInt::from(1),
            2 => g.re = BigInt::from(-1),
            _ => g.im = BigInt::from(-1),
        }
        g
    }

    pub fn add(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }

    pub fn scale(&self, c: &BigInt) -> GaussInt {
        GaussInt {
            re: &self.re * c,
            im: &self.im * c,
        }
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `|z|` when the squared modulus is a perfect square, else `None`.
    pub fn modulus_if_integer(&self) -> Option<BigInt> {
        let n = self.norm();
        let r = n.sqrt();
        if &r * &r == n {
            Some(r)
        } else {
            None
        }
    }
}
