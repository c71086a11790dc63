//! Dense polynomials over a [`Scalar`] ring and residues modulo x^n + 1 or x^n - 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{split_signed_terms, RElem, Scalar, F2, Z4};

/// Polynomial with coefficient `i` of `x^i` at index `i`; trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

pub type PolyF2 = Poly<F2>;
pub type PolyZ4 = Poly<Z4>;
pub type PolyR = Poly<RElem>;

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| S::from_int(v)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::ONE)
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: S, degree: usize) -> Self {
        let mut coeffs = vec![S::ZERO; degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x^n + sign`, e.g. `x^n + 1` with `sign = 1`.
    pub fn x_pow_plus(n: usize, sign: i64) -> Self {
        let mut coeffs = vec![S::ZERO; n + 1];
        coeffs[n] = S::ONE;
        coeffs[0] = coeffs[0] + S::from_int(sign);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).copied().unwrap_or(S::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> S {
        self.coeffs.last().copied().unwrap_or(S::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == S::ONE
    }

    pub fn scale(&self, c: S) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|&a| f(a)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|&a| -a).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Coefficient reversal `x^deg * g(1/x)`.
    pub fn reciprocal(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Substitution x -> -x.
    pub fn phi_negate(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &a)| if i % 2 == 1 { -a } else { a })
                .collect(),
        )
    }

    /// `f(x^2)` as a polynomial in x.
    pub fn compose_square(&self) -> Self {
        let mut out = vec![S::ZERO; self.coeffs.len() * 2];
        for (i, &a) in self.coeffs.iter().enumerate() {
            out[2 * i] = a;
        }
        Self::new(out)
    }

    /// Division with remainder; the divisor's leading coefficient must be a unit.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead_inv = divisor
            .leading()
            .inverse()
            .ok_or_else(|| Error::NonMonicDivisor(divisor.to_string()))?;
        let dd = divisor
            .degree()
            .expect("unit leading coefficient implies nonzero");
        let mut rem = self.coeffs.clone();
        let Some(fd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if fd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![S::ZERO; fd - dd + 1];
        for k in (0..=fd - dd).rev() {
            let c = rem[k + dd] * lead_inv;
            if c.is_zero() {
                continue;
            }
            quot[k] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j] - c * b;
            }
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn divides(&self, f: &Self) -> Result<bool> {
        Ok(f.divmod(self)?.1.is_zero())
    }
}

impl PolyZ4 {
    pub fn to_f2(&self) -> PolyF2 {
        self.map(|c| c.to_f2())
    }

    pub fn to_r(&self) -> PolyR {
        self.map(RElem::from_z4)
    }

    /// Rendering with 3 written as -1 and no `*`: `x^4+2x^2-x+1`.
    pub fn to_signed_string(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let (sign, mag) = match c.value() {
                0 => continue,
                3 => ('-', 1),
                v => ('+', v),
            };
            if sign == '-' || !out.is_empty() {
                out.push(sign);
            }
            match (i, mag) {
                (0, m) => out.push_str(&m.to_string()),
                (_, 1) => {}
                (_, m) => out.push_str(&m.to_string()),
            }
            match i {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{i}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl PolyF2 {
    /// Lift with coefficients in {0, 1}.
    pub fn to_z4(&self) -> PolyZ4 {
        self.map(|c| Z4::new(c.value()))
    }
}

impl PolyR {
    /// Splits `f = g + u p` into its Z4 parts `(g, p)`.
    pub fn split_u(&self) -> (PolyZ4, PolyZ4) {
        (self.map(|c| c.project_z4()), self.map(|c| Z4::new(c.a1())))
    }

    /// `g + u p`.
    pub fn from_parts(g: &PolyZ4, p: &PolyZ4) -> PolyR {
        let len = g.coeffs.len().max(p.coeffs.len());
        PolyR::new(
            (0..len)
                .map(|i| RElem::new(g.coeff(i).value(), p.coeff(i).value()))
                .collect(),
        )
    }
}

fn needs_parens(text: &str) -> bool {
    text.contains('+')
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn write_terms<S: Scalar>(f: &mut fmt::Formatter<'_>, coeffs: &[S]) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, "+")?;
        }
        first = false;
        let text = c.to_string();
        let coef = if needs_parens(&text) {
            format!("({text})")
        } else {
            text
        };
        match (i, coef.as_str()) {
            (0, _) => write!(f, "{coef}")?,
            (1, "1") => write!(f, "x")?,
            (1, _) => write!(f, "{coef}*x")?,
            (_, "1") => write!(f, "x^{i}")?,
            (_, _) => write!(f, "{coef}*x^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Parses `c*x^i` terms joined by `+` (or `-`), coefficients with a u-part in
/// parentheses: `(2+u)*x^2+3*x+1`. The `*` may be omitted.
impl<S: Scalar + FromStr<Err = Error>> FromStr for Poly<S> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a polynomial: {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut acc = Poly::zero();
        for (neg, term) in split_signed_terms(&s).ok_or_else(bad)? {
            let (coef, exp) = match find_top_level(term, 'x') {
                Some(pos) => {
                    let coef = term[..pos].strip_suffix('*').unwrap_or(&term[..pos]);
                    let rest = &term[pos + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse::<usize>().ok())
                            .ok_or_else(bad)?
                    };
                    (coef, exp)
                }
                None => (term, 0),
            };
            let coef = coef
                .strip_prefix('(')
                .and_then(|c| c.strip_suffix(')'))
                .unwrap_or(coef);
            let c: S = if coef.is_empty() {
                S::ONE
            } else {
                coef.parse()?
            };
            let c = if neg { -c } else { c };
            acc = acc.add(&Poly::monomial(c, exp));
        }
        Ok(acc)
    }
}

fn find_top_level(s: &str, needle: char) -> Option<usize> {
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == needle && depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Which quotient `x^n + 1` (negacyclic) or `x^n - 1` (cyclic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Modulus {
    /// x^n + 1
    Nega,
    /// x^n - 1
    Cyclic,
}

impl Modulus {
    /// Value of x^n in the quotient.
    fn wrap_sign<S: Scalar>(self) -> S {
        match self {
            Modulus::Nega => -S::ONE,
            Modulus::Cyclic => S::ONE,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Modulus::Nega => Modulus::Cyclic,
            Modulus::Cyclic => Modulus::Nega,
        }
    }
}

/// Element of S[x]/(x^n +- 1), always stored with exactly `n` coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue<S> {
    n: usize,
    modulus: Modulus,
    coeffs: Vec<S>,
}

impl<S: Scalar> Residue<S> {
    pub fn zero(n: usize, modulus: Modulus) -> Self {
        assert!(n > 0, "residue length must be positive");
        Residue {
            n,
            modulus,
            coeffs: vec![S::ZERO; n],
        }
    }

    pub fn one(n: usize, modulus: Modulus) -> Self {
        Self::constant(S::ONE, n, modulus)
    }

    pub fn constant(c: S, n: usize, modulus: Modulus) -> Self {
        let mut r = Self::zero(n, modulus);
        r.coeffs[0] = c;
        r
    }

    pub fn x(n: usize, modulus: Modulus) -> Self {
        Self::from_poly(&Poly::monomial(S::ONE, 1), n, modulus)
    }

    /// `(x+1)^k`.
    pub fn xp1_pow(k: usize, n: usize, modulus: Modulus) -> Self {
        Self::from_poly(&Poly::from_ints(&[1, 1]), n, modulus).pow(k)
    }

    /// Reduces an arbitrary polynomial.
    pub fn from_poly(p: &Poly<S>, n: usize, modulus: Modulus) -> Self {
        Self::from_coeffs(p.coeffs().to_vec(), n, modulus)
    }

    /// Reduces a coefficient vector of any length.
    pub fn from_coeffs(coeffs: Vec<S>, n: usize, modulus: Modulus) -> Self {
        let mut r = Self::zero(n, modulus);
        let sign: S = modulus.wrap_sign();
        for (i, c) in coeffs.into_iter().enumerate() {
            let mut c = c;
            for _ in 0..i / n {
                c = c * sign;
            }
            r.coeffs[i % n] = r.coeffs[i % n] + c;
        }
        r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> S {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn to_poly(&self) -> Poly<S> {
        Poly::new(self.coeffs.clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T) -> Residue<T> {
        Residue {
            n: self.n,
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|&c| f(c)).collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.modulus != other.modulus {
            return Err(Error::MixedRings(format!(
                "n={} {:?} vs n={} {:?}",
                self.n, self.modulus, other.n, other.modulus
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// Product with signed wraparound.
    pub fn res_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.n;
        let sign: S = self.modulus.wrap_sign();
        let mut out = vec![S::ZERO; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = i + j;
                let prod = a * b;
                if k < n {
                    out[k] = out[k] + prod;
                } else {
                    out[k - n] = out[k - n] + prod * sign;
                }
            }
        }
        Ok(Residue {
            n,
            modulus: self.modulus,
            coeffs: out,
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(S, S) -> S) -> Self {
        Residue {
            n: self.n,
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Panicking product for residues already known to share a ring.
    pub fn mul(&self, other: &Self) -> Self {
        self.res_mul(other).expect("residues from the same ring")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("residues from the same ring")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("residues from the same ring")
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c)
    }

    pub fn scale(&self, c: S) -> Self {
        self.map(|a| a * c)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.n, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplication by x^k (cyclic or negacyclic shift).
    pub fn shift(&self, k: usize) -> Self {
        let n = self.n;
        let sign: S = self.modulus.wrap_sign();
        let mut out = vec![S::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let mut c = c;
            let j = i + k;
            for _ in 0..j / n {
                c = c * sign;
            }
            out[j % n] = c;
        }
        Residue {
            n,
            modulus: self.modulus,
            coeffs: out,
        }
    }

    /// Coefficients `f_j` with `f = sum_j f_j (x+1)^j`, `j < n`.
    pub fn to_xp1_basis(&self) -> Vec<S> {
        let mut cur = self.coeffs.clone();
        let mut out = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let (q, r) = divide_by_xp1(&cur);
            out.push(r);
            cur = q;
        }
        out
    }

    /// Inverse of [`Residue::to_xp1_basis`].
    pub fn from_xp1_basis(basis: &[S], n: usize, modulus: Modulus) -> Self {
        let xp1 = Poly::from_ints(&[1, 1]);
        let mut acc = Poly::zero();
        for &c in basis.iter().rev() {
            acc = acc.mul(&xp1).add(&Poly::constant(c));
        }
        Self::from_poly(&acc, n, modulus)
    }

    /// Image under x -> -x; maps S[x]/(x^n-1) onto S[x]/(x^n+1) and back for odd n.
    pub fn phi_negate(&self) -> Result<Self> {
        if self.n.is_multiple_of(2) {
            return Err(Error::EvenLength(self.n));
        }
        let mut r = self.to_poly().phi_negate();
        if r.is_zero() {
            r = Poly::zero();
        }
        Ok(Self::from_poly(&r, self.n, self.modulus.flip()))
    }

    /// Image under the automorphism x -> x^{-1}.
    pub fn reciprocal_image(&self) -> Self {
        let n = self.n;
        let sign: S = self.modulus.wrap_sign();
        let mut out = vec![S::ZERO; n];
        out[0] = self.coeffs[0];
        for i in 1..n {
            // x^{-i} = x^{n-i} * (x^n)^{-1}, and x^n = +-1 is its own inverse
            out[n - i] = self.coeffs[i] * sign;
        }
        Residue {
            n,
            modulus: self.modulus,
            coeffs: out,
        }
    }
}

/// `a = (x+1) q + r`; `a` given by coefficients of increasing degree.
fn divide_by_xp1<S: Scalar>(a: &[S]) -> (Vec<S>, S) {
    if a.is_empty() {
        return (Vec::new(), S::ZERO);
    }
    let d = a.len() - 1;
    let mut q = vec![S::ZERO; d];
    let mut carry = S::ZERO;
    let mut rem = S::ZERO;
    for i in (0..=d).rev() {
        let v = a[i] - carry;
        if i == 0 {
            rem = v;
        } else {
            q[i - 1] = v;
            carry = v;
        }
    }
    (q, rem)
}

impl Residue<RElem> {
    pub fn from_z4_parts(g: &Residue<Z4>, p: &Residue<Z4>) -> Self {
        assert_eq!(g.n, p.n);
        Residue {
            n: g.n,
            modulus: g.modulus,
            coeffs: g
                .coeffs
                .iter()
                .zip(&p.coeffs)
                .map(|(a, b)| RElem::new(a.value(), b.value()))
                .collect(),
        }
    }

    pub fn split_u(&self) -> (Residue<Z4>, Residue<Z4>) {
        (self.map(|c| c.project_z4()), self.map(|c| Z4::new(c.a1())))
    }
}

impl Residue<Z4> {
    pub fn to_r(&self) -> Residue<RElem> {
        self.map(RElem::from_z4)
    }
}

impl Residue<F2> {
    pub fn to_z4(&self) -> Residue<Z4> {
        self.map(|c| Z4::new(c.value()))
    }
}

impl<S: Scalar> fmt::Display for Residue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

impl<S: Scalar> fmt::Debug for Residue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = match self.modulus {
            Modulus::Nega => "+",
            Modulus::Cyclic => "-",
        };
        write!(f, "[{self} mod x^{}{m}1]", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xp1(n: usize) -> Residue<RElem> {
        Residue::xp1_pow(1, n, Modulus::Nega)
    }

    #[test]
    fn res_mul_examples() {
        let a = xp1(2);
        let sq = a.mul(&a);
        assert_eq!(
            sq,
            Residue::from_poly(&"2*x".parse().unwrap(), 2, Modulus::Nega)
        );

        let x = Residue::<RElem>::x(2, Modulus::Nega);
        assert_eq!(
            x.mul(&x),
            Residue::constant(RElem::from_int(3), 2, Modulus::Nega)
        );

        assert!(xp1(4).pow(8).is_zero());
    }

    #[test]
    fn res_mul_rejects_mixed_rings() {
        let a = Residue::<Z4>::one(2, Modulus::Nega);
        let b = Residue::<Z4>::one(2, Modulus::Cyclic);
        let c = Residue::<Z4>::one(3, Modulus::Nega);
        assert!(matches!(a.res_mul(&b), Err(Error::MixedRings(_))));
        assert!(matches!(a.res_mul(&c), Err(Error::MixedRings(_))));
    }

    #[test]
    fn xp1_nilpotency() {
        for n in [2usize, 4, 8, 16] {
            let a = xp1(n);
            assert!(a.pow(2 * n).is_zero(), "n={n}");
            assert!(!a.pow(2 * n - 1).is_zero(), "n={n}");
            // (x+1)^n = 2 x^{n/2}
            let expected = Residue::x(n, Modulus::Nega)
                .pow(n / 2)
                .scale(RElem::from_int(2));
            assert_eq!(a.pow(n), expected, "n={n}");
        }
    }

    #[test]
    fn xp1_basis_examples() {
        let x = Residue::<RElem>::x(2, Modulus::Nega);
        assert_eq!(x.to_xp1_basis(), vec![RElem::from_int(3), RElem::ONE]);

        let x2 = Residue::<Z4>::from_poly(&Poly::monomial(Z4::ONE, 2), 4, Modulus::Nega);
        assert_eq!(x2.to_xp1_basis(), [1, 2, 1, 0].map(Z4::new).to_vec());

        let one = Residue::<RElem>::one(4, Modulus::Nega);
        let mut expected = vec![RElem::ZERO; 4];
        expected[0] = RElem::ONE;
        assert_eq!(one.to_xp1_basis(), expected);
    }

    #[test]
    fn reciprocal_examples() {
        let f: PolyZ4 = "3*x^2+2*x+1".parse().unwrap();
        assert_eq!(f.reciprocal(), "x^2+2*x+3".parse().unwrap());
        let g: PolyZ4 = "x+1".parse().unwrap();
        assert_eq!(g.reciprocal(), g);
        assert_eq!(
            PolyZ4::constant(Z4::new(2)).reciprocal(),
            PolyZ4::constant(Z4::new(2))
        );
    }

    #[test]
    fn phi_examples() {
        let f: PolyZ4 = "x^2+x+1".parse().unwrap();
        assert_eq!(f.phi_negate(), "x^2+3*x+1".parse().unwrap());
        let g: PolyZ4 = "x^4+2x^2-x+1".parse().unwrap();
        assert_eq!(g.phi_negate(), "x^4+2x^2+x+1".parse().unwrap());
        assert_eq!(g.phi_negate().phi_negate(), g);

        let r = Residue::from_poly(&g.to_r(), 4, Modulus::Nega);
        assert!(matches!(r.phi_negate(), Err(Error::EvenLength(4))));
        let r = Residue::from_poly(&g.to_r(), 7, Modulus::Cyclic);
        let img = r.phi_negate().unwrap();
        assert_eq!(img.modulus(), Modulus::Nega);
        assert_eq!(img.phi_negate().unwrap(), r);
    }

    #[test]
    fn divmod_examples() {
        let f = PolyZ4::x_pow_plus(15, 1);
        let g: PolyZ4 = "x^4+2x^2+x+1".parse().unwrap();
        let (_, r) = f.divmod(&g).unwrap();
        assert!(r.is_zero());

        let (q, r) = f.divmod(&PolyZ4::one()).unwrap();
        assert_eq!((q, r), (f.clone(), PolyZ4::zero()));

        let x2: PolyZ4 = "x^2".parse().unwrap();
        let twox: PolyZ4 = "2x".parse().unwrap();
        assert!(matches!(x2.divmod(&twox), Err(Error::NonMonicDivisor(_))));
    }

    #[test]
    fn text_grammar() {
        let f: PolyR = "(2+u)*x^2+3*x+1".parse().unwrap();
        assert_eq!(f.to_string(), "(2+u)*x^2+3*x+1");
        let g: PolyR = "u*x^3+2u*x+(1+u)".parse().unwrap();
        assert_eq!(g.to_string(), "u*x^3+2u*x+(1+u)");
        assert_eq!(PolyR::zero().to_string(), "0");
        assert!("x^".parse::<PolyZ4>().is_err());
        assert!("u*x".parse::<PolyZ4>().is_err());
    }

    #[test]
    fn xp1_power_n_generates_two() {
        // <(x+1)^n> = <2>: (x+1)^n = 2 x^{n/2} with x a unit
        for n in [2usize, 4, 8] {
            let lhs = xp1(n).pow(n);
            let xinv_half = Residue::<RElem>::x(n, Modulus::Nega).pow(2 * n - n / 2);
            assert_eq!(
                lhs.mul(&xinv_half),
                Residue::constant(RElem::from_int(2), n, Modulus::Nega)
            );
        }
    }

    fn arb_residue(n: usize, modulus: Modulus) -> impl Strategy<Value = Residue<RElem>> {
        proptest::collection::vec((0u8..4, 0u8..4), n).prop_map(move |v| {
            Residue::from_coeffs(
                v.into_iter().map(|(a, b)| RElem::new(a, b)).collect(),
                n,
                modulus,
            )
        })
    }

    fn arb_poly() -> impl Strategy<Value = PolyZ4> {
        proptest::collection::vec(0u8..4, 1..8)
            .prop_map(|v| PolyZ4::new(v.into_iter().map(Z4::new).collect()))
    }

    #[test]
    fn signed_rendering() {
        let f: PolyZ4 = "x^4+2*x^2+3*x+1".parse().unwrap();
        assert_eq!(f.to_signed_string(), "x^4+2x^2-x+1");
        let f: PolyZ4 = "3*x^2+3".parse().unwrap();
        assert_eq!(f.to_signed_string(), "-x^2-1");
        assert_eq!(PolyZ4::zero().to_signed_string(), "0");
    }

    proptest! {
        #[test]
        fn signed_rendering_roundtrip(f in arb_poly()) {
            prop_assert_eq!(f.to_signed_string().parse::<PolyZ4>().unwrap(), f);
        }

        #[test]
        fn xp1_basis_roundtrip(f in arb_residue(8, Modulus::Nega)) {
            let basis = f.to_xp1_basis();
            prop_assert_eq!(basis.len(), 8);
            prop_assert_eq!(Residue::from_xp1_basis(&basis, 8, Modulus::Nega), f);
        }

        #[test]
        fn phi_is_ring_isomorphism(n in prop::sample::select(vec![3usize, 7, 15]), seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let mut sample = || Residue::from_coeffs(
                (0..n).map(|_| RElem::new(rng.gen_range(0..4), rng.gen_range(0..4))).collect(),
                n, Modulus::Cyclic);
            let f = sample();
            let g = sample();
            prop_assert_eq!(f.add(&g).phi_negate().unwrap(), f.phi_negate().unwrap().add(&g.phi_negate().unwrap()));
            prop_assert_eq!(f.mul(&g).phi_negate().unwrap(), f.phi_negate().unwrap().mul(&g.phi_negate().unwrap()));
        }

        #[test]
        fn reciprocal_is_multiplicative(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!f.coeff(0).is_zero() && !g.coeff(0).is_zero());
            // the product's constant term can vanish only if a zero divisor meets another
            let prod = f.mul(&g);
            prop_assume!(prod.degree() == Some(f.degree().unwrap() + g.degree().unwrap()));
            prop_assert_eq!(prod.reciprocal(), f.reciprocal().mul(&g.reciprocal()));
        }

        #[test]
        fn poly_text_roundtrip(v in proptest::collection::vec((0u8..4, 0u8..4), 0..6)) {
            let f = PolyR::new(v.into_iter().map(|(a, b)| RElem::new(a, b)).collect());
            prop_assert_eq!(f.to_string().parse::<PolyR>().unwrap(), f);
        }
    }

    #[test]
    fn unit_iff_constant_xp1_coefficient_is_unit_n2() {
        // exhaustive over R_2 (256 elements)
        let all: Vec<Residue<RElem>> = RElem::elements()
            .into_iter()
            .flat_map(|a| RElem::elements().into_iter().map(move |b| (a, b)))
            .map(|(a, b)| Residue::from_coeffs(vec![a, b], 2, Modulus::Nega))
            .collect();
        let one = Residue::one(2, Modulus::Nega);
        for f in &all {
            let invertible = all.iter().any(|g| f.mul(g) == one);
            assert_eq!(invertible, f.to_xp1_basis()[0].is_unit(), "{f:?}");
        }
    }

    #[test]
    fn unit_iff_constant_xp1_coefficient_is_unit_n4_sampled() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let one = Residue::one(4, Modulus::Nega);
        for _ in 0..40 {
            let f = Residue::from_coeffs(
                (0..4)
                    .map(|_| RElem::new(rng.gen_range(0..4), rng.gen_range(0..4)))
                    .collect(),
                4,
                Modulus::Nega,
            );
            // a unit has finite multiplicative order dividing |units|; f^k == 1 for some k <= 2^15
            let mut p = f.clone();
            let mut invertible = false;
            for _ in 0..(1 << 15) {
                if p == one {
                    invertible = true;
                    break;
                }
                if p.is_zero() {
                    break;
                }
                p = p.mul(&f);
            }
            assert_eq!(invertible, f.to_xp1_basis()[0].is_unit(), "{f:?}");
        }
    }
}
