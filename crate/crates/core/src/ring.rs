//! Scalar rings: F2, Z4 and R = Z4 + uZ4 with u^2 = 0.
//!
//! All three share the [`Scalar`] trait so that polynomial and residue
//! arithmetic can be written once.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Commutative finite ring of coefficients.
pub trait Scalar:
    Copy
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const ZERO: Self;
    const ONE: Self;

    fn is_unit(self) -> bool;

    /// Multiplicative inverse, `None` for non-units.
    fn inverse(self) -> Option<Self>;

    /// Reduction of an integer into the ring (the canonical map Z -> ring).
    fn from_int(v: i64) -> Self;

    fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Every element of the ring, in a fixed order.
    fn elements() -> Vec<Self>;
}

/// Element of the prime field F2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F2(u8);

impl F2 {
    pub const fn new(v: u8) -> Self {
        F2(v & 1)
    }

    pub const fn value(self) -> u8 {
        self.0
    }
}

/// Integer residue modulo 4.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Z4(u8);

impl Z4 {
    pub const fn new(v: u8) -> Self {
        Z4(v & 3)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub fn to_f2(self) -> F2 {
        F2::new(self.0)
    }
}

/// Element `a0 + u*a1` of R = Z4 + uZ4, u^2 = 0. Both parts are kept in 0..=3.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RElem {
    a0: u8,
    a1: u8,
}

impl RElem {
    pub const U: RElem = RElem { a0: 0, a1: 1 };

    pub const fn new(a0: u8, a1: u8) -> Self {
        RElem {
            a0: a0 & 3,
            a1: a1 & 3,
        }
    }

    pub const fn from_z4(a: Z4) -> Self {
        RElem { a0: a.0, a1: 0 }
    }

    /// Z4 part (reduction modulo u).
    pub const fn a0(self) -> u8 {
        self.a0
    }

    /// Coefficient of u.
    pub const fn a1(self) -> u8 {
        self.a1
    }

    pub const fn project_z4(self) -> Z4 {
        Z4(self.a0)
    }

    pub const fn project_f2(self) -> F2 {
        F2(self.a0 & 1)
    }

    /// Checked inverse; `NonUnit` when the Z4 part is even.
    pub fn try_inverse(self) -> Result<Self> {
        self.inverse().ok_or(Error::NonUnit(self.to_string()))
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for F2 {
    type Output = F2;
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}
#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for F2 {
    type Output = F2;
    fn sub(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for F2 {
    type Output = F2;
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}
impl Neg for F2 {
    type Output = F2;
    fn neg(self) -> F2 {
        self
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}
impl Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((self.0 + 4 - rhs.0) & 3)
    }
}
impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}
impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4((4 - self.0) & 3)
    }
}

impl Add for RElem {
    type Output = RElem;
    fn add(self, rhs: RElem) -> RElem {
        RElem::new(self.a0 + rhs.a0, self.a1 + rhs.a1)
    }
}
impl Sub for RElem {
    type Output = RElem;
    fn sub(self, rhs: RElem) -> RElem {
        RElem::new(self.a0 + 4 - rhs.a0, self.a1 + 4 - rhs.a1)
    }
}
impl Mul for RElem {
    type Output = RElem;
    fn mul(self, rhs: RElem) -> RElem {
        // (a + ub)(c + ud) = ac + u(ad + bc)
        RElem::new(self.a0 * rhs.a0, self.a0 * rhs.a1 + self.a1 * rhs.a0)
    }
}
impl Neg for RElem {
    type Output = RElem;
    fn neg(self) -> RElem {
        RElem::new(4 - self.a0, 4 - self.a1)
    }
}

impl Scalar for F2 {
    const ZERO: Self = F2(0);
    const ONE: Self = F2(1);

    fn is_unit(self) -> bool {
        self.0 == 1
    }
    fn inverse(self) -> Option<Self> {
        self.is_unit().then_some(self)
    }
    fn from_int(v: i64) -> Self {
        F2(v.rem_euclid(2) as u8)
    }
    fn elements() -> Vec<Self> {
        vec![F2(0), F2(1)]
    }
}

impl Scalar for Z4 {
    const ZERO: Self = Z4(0);
    const ONE: Self = Z4(1);

    fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }
    fn inverse(self) -> Option<Self> {
        // 1 and 3 are their own inverses
        self.is_unit().then_some(self)
    }
    fn from_int(v: i64) -> Self {
        Z4(v.rem_euclid(4) as u8)
    }
    fn elements() -> Vec<Self> {
        (0..4).map(Z4).collect()
    }
}

impl Scalar for RElem {
    const ZERO: Self = RElem { a0: 0, a1: 0 };
    const ONE: Self = RElem { a0: 1, a1: 0 };

    fn is_unit(self) -> bool {
        self.a0 & 1 == 1
    }
    fn inverse(self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        // (a + ub)^-1 = a^-1 - u b a^-2, and a^-1 = a, a^-2 = 1 in Z4
        Some(RElem::new(self.a0, 4 - self.a1))
    }
    fn from_int(v: i64) -> Self {
        RElem::new(v.rem_euclid(4) as u8, 0)
    }
    fn elements() -> Vec<Self> {
        (0..16).map(|i| RElem::new(i & 3, i >> 2)).collect()
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
impl fmt::Debug for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
impl fmt::Debug for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Renders as `a0+a1u` with zero parts elided: `2+3u`, `u`, `0`.
impl fmt::Display for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upart = match self.a1 {
            0 => String::new(),
            1 => "u".to_string(),
            k => format!("{k}u"),
        };
        match (self.a0, self.a1) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{a}"),
            (0, _) => write!(f, "{upart}"),
            (a, _) => write!(f, "{a}+{upart}"),
        }
    }
}
impl fmt::Debug for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Z4 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not a Z4 element: {s:?}")))?;
        Ok(Z4::from_int(v))
    }
}

impl FromStr for F2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an F2 element: {s:?}")))?;
        Ok(F2::from_int(v))
    }
}

/// Accepts sums of integer and u-terms: `2+3u`, `u`, `3*u`, `1-u`, `0`.
impl FromStr for RElem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not an element of Z4+uZ4: {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut acc = RElem::ZERO;
        for (sign, term) in split_signed_terms(&s).ok_or_else(bad)? {
            let value = if let Some(coef) = term.strip_suffix('u') {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let c: i64 = if coef.is_empty() {
                    1
                } else {
                    coef.parse().map_err(|_| bad())?
                };
                RElem::new(0, c.rem_euclid(4) as u8)
            } else {
                let c: i64 = term.parse().map_err(|_| bad())?;
                RElem::from_int(c)
            };
            acc = acc + if sign { -value } else { value };
        }
        Ok(acc)
    }
}

/// Splits `a+b-c` into `[(false,"a"), (false,"b"), (true,"c")]` at top-level
/// (outside parentheses) signs. The bool is `true` for a negated term.
pub(crate) fn split_signed_terms(s: &str) -> Option<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            b'+' | b'-' if depth == 0 => {
                if i == start {
                    // leading sign of the first term
                    if i != 0 {
                        return None;
                    }
                    neg = b == b'-';
                    start = i + 1;
                    continue;
                }
                out.push((neg, &s[start..i]));
                neg = b == b'-';
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 || start >= s.len() {
        return None;
    }
    out.push((neg, &s[start..]));
    Some(out)
}
