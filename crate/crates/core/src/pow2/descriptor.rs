use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{Modulus, PolyF2, Residue};
use crate::ring::{RElem, Scalar, F2};

/// Shape of a code of length 2^k in the classification.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CodeType {
    /// `<0>`
    T0_zero,
    /// `<1>`
    T0_unit,
    /// `<u(x+1)^m>`
    T1,
    /// `<(x+1)^s + u(x+1)^t h>`, s < n
    T2_0,
    /// `<(x+1)^s + u(x+1)^t h>`, s >= n
    T2_1,
    /// `<(x+1)^s + 2u(x+1)^t h>`
    T2_2,
    /// `<(x+1)^s + u(x+1)^t (2h1 + (x+1)^l h2)>`
    T2_3,
    /// T2_0 generator plus `u(x+1)^m`
    T3_0,
    /// T2_1 generator plus `u(x+1)^m`
    T3_1,
    /// T2_2 generator plus `u(x+1)^m`
    T3_2,
    /// T2_2 generator plus `2u(x+1)^m1`
    T3_3,
    /// T2_3 generator plus `u(x+1)^m`
    T3_4,
    /// T2_3 generator plus `2u(x+1)^m1`
    T3_5,
}

impl CodeType {
    pub const ALL: [CodeType; 13] = [
        CodeType::T0_zero,
        CodeType::T0_unit,
        CodeType::T1,
        CodeType::T2_0,
        CodeType::T2_1,
        CodeType::T2_2,
        CodeType::T2_3,
        CodeType::T3_0,
        CodeType::T3_1,
        CodeType::T3_2,
        CodeType::T3_3,
        CodeType::T3_4,
        CodeType::T3_5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CodeType::T0_zero => "T0_zero",
            CodeType::T0_unit => "T0_unit",
            CodeType::T1 => "T1",
            CodeType::T2_0 => "T2_0",
            CodeType::T2_1 => "T2_1",
            CodeType::T2_2 => "T2_2",
            CodeType::T2_3 => "T2_3",
            CodeType::T3_0 => "T3_0",
            CodeType::T3_1 => "T3_1",
            CodeType::T3_2 => "T3_2",
            CodeType::T3_3 => "T3_3",
            CodeType::T3_4 => "T3_4",
            CodeType::T3_5 => "T3_5",
        }
    }

    /// Whether the monic generator has the `u(x+1)^t h` tail with h zero or a unit.
    pub fn has_plain_tail(self) -> bool {
        matches!(
            self,
            CodeType::T2_0 | CodeType::T2_1 | CodeType::T3_0 | CodeType::T3_1
        )
    }

    pub fn has_double_tail(self) -> bool {
        matches!(self, CodeType::T2_2 | CodeType::T3_2 | CodeType::T3_3)
    }

    pub fn has_mixed_tail(self) -> bool {
        matches!(self, CodeType::T2_3 | CodeType::T3_4 | CodeType::T3_5)
    }

    /// Types with a monic generator `(x+1)^s + ...`.
    pub fn is_monic_type(self) -> bool {
        !matches!(self, CodeType::T0_zero | CodeType::T0_unit | CodeType::T1)
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for CodeType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for CodeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CodeType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown code type {s:?}")))
    }
}

/// What multiplies `u(x+1)^t` in the monic generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HClass {
    Zero,
    Unit,
    TwoTimesUnit,
    Mixed { l: usize },
}

/// Canonical parameters of a length-n negacyclic code, n = 2^k.
///
/// The polynomials `h`, `h1`, `h2` are binary and written in the basis
/// `1, (x+1), (x+1)^2, ...`: coefficient `j` multiplies `(x+1)^j`. Fields that
/// a type does not use are zero. When `h` is zero the exponent `t` carries no
/// information and is stored as 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeDescriptor {
    pub kind: CodeType,
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub m: usize,
    pub m1: usize,
    pub l: usize,
    pub h: PolyF2,
    pub h1: PolyF2,
    pub h2: PolyF2,
}

impl CodeDescriptor {
    pub fn new(kind: CodeType, n: usize) -> Self {
        CodeDescriptor {
            kind,
            n,
            s: 0,
            t: 0,
            m: 0,
            m1: 0,
            l: 0,
            h: PolyF2::zero(),
            h1: PolyF2::zero(),
            h2: PolyF2::zero(),
        }
    }

    pub fn h_class(&self) -> HClass {
        match self.kind {
            k if k.has_plain_tail() => {
                if self.h.is_zero() {
                    HClass::Zero
                } else {
                    HClass::Unit
                }
            }
            k if k.has_double_tail() => HClass::TwoTimesUnit,
            k if k.has_mixed_tail() => HClass::Mixed { l: self.l },
            _ => HClass::Zero,
        }
    }

    /// True when the u-tail of the monic generator vanishes.
    pub fn tail_is_zero(&self) -> bool {
        self.h_class() == HClass::Zero
    }

    /// `(gen1, gen2)` as elements of R_n; absent generators are zero.
    pub fn generators(&self) -> GeneratorPair {
        let n = self.n;
        let zero = Residue::zero(n, Modulus::Nega);
        let y = |k: usize| xp1(k, n);
        let u = RElem::U;
        let two_u = RElem::new(0, 2);
        let h = || from_basis(&self.h, n);
        let monic = || {
            let tail = match self.kind {
                k if k.has_plain_tail() => y(self.t).mul(&h()).scale(u),
                k if k.has_double_tail() => y(self.t).mul(&h()).scale(two_u),
                k if k.has_mixed_tail() => {
                    let inner = from_basis(&self.h1, n)
                        .scale(RElem::from_int(2))
                        .add(&y(self.l).mul(&from_basis(&self.h2, n)));
                    y(self.t).mul(&inner).scale(u)
                }
                _ => unreachable!("monic generator requested for {}", self.kind),
            };
            y(self.s).add(&tail)
        };
        let (gen1, gen2) = match self.kind {
            CodeType::T0_zero => (zero.clone(), zero),
            CodeType::T0_unit => (Residue::one(n, Modulus::Nega), zero),
            CodeType::T1 => (y(self.m).scale(u), zero),
            CodeType::T2_0 | CodeType::T2_1 | CodeType::T2_2 | CodeType::T2_3 => (monic(), zero),
            CodeType::T3_0 | CodeType::T3_1 | CodeType::T3_2 | CodeType::T3_4 => {
                (monic(), y(self.m).scale(u))
            }
            CodeType::T3_3 | CodeType::T3_5 => (monic(), y(self.m1).scale(two_u)),
        };
        GeneratorPair { gen1, gen2 }
    }

    /// Human-readable generators in powers of (x+1), e.g. `<(x+1)^2+u*(1+(x+1)), u*(x+1)>`.
    pub fn generators_text(&self) -> String {
        let y = |k: usize| match k {
            0 => "1".to_string(),
            1 => "(x+1)".to_string(),
            k => format!("(x+1)^{k}"),
        };
        let scaled = |coef: &str, factors: Vec<String>| -> String {
            let mut out = coef.to_string();
            for f in factors.into_iter().filter(|f| f != "1") {
                if out.is_empty() {
                    out = paren(&f);
                } else {
                    out = format!("{out}*{}", paren(&f));
                }
            }
            if out.is_empty() {
                "1".into()
            } else {
                out
            }
        };
        let tail = match self.kind {
            k if k.has_plain_tail() && !self.h.is_zero() => {
                Some(scaled("u", vec![y(self.t), basis_text(&self.h)]))
            }
            k if k.has_double_tail() => Some(scaled("2u", vec![y(self.t), basis_text(&self.h)])),
            k if k.has_mixed_tail() => {
                let inner = format!(
                    "{}+{}",
                    scaled("2", vec![basis_text(&self.h1)]),
                    scaled("", vec![y(self.l), basis_text(&self.h2)])
                );
                Some(scaled("u", vec![y(self.t), inner]))
            }
            _ => None,
        };
        let gen1 = match self.kind {
            CodeType::T0_zero => "0".to_string(),
            CodeType::T0_unit => "1".to_string(),
            CodeType::T1 => scaled("u", vec![y(self.m)]),
            _ => match tail {
                Some(t) => format!("{}+{t}", y(self.s)),
                None => y(self.s),
            },
        };
        match self.kind {
            CodeType::T3_0 | CodeType::T3_1 | CodeType::T3_2 | CodeType::T3_4 => {
                format!("<{gen1}, {}>", scaled("u", vec![y(self.m)]))
            }
            CodeType::T3_3 | CodeType::T3_5 => {
                format!("<{gen1}, {}>", scaled("2u", vec![y(self.m1)]))
            }
            _ => format!("<{gen1}>"),
        }
    }
}

fn paren(s: &str) -> String {
    let mut depth = 0;
    let top_level_plus = s.chars().any(|c| {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        c == '+' && depth == 0
    });
    if top_level_plus {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// `1+(x+1)^2` style rendering of a binary polynomial in the (x+1)-basis.
pub fn basis_text(h: &PolyF2) -> String {
    let terms: Vec<String> = h
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, _)| match j {
            0 => "1".to_string(),
            1 => "(x+1)".to_string(),
            j => format!("(x+1)^{j}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

pub(crate) fn xp1(k: usize, n: usize) -> Residue<RElem> {
    // (x+1)^k = 0 for k >= 2n
    if k >= 2 * n {
        return Residue::zero(n, Modulus::Nega);
    }
    Residue::xp1_pow(k, n, Modulus::Nega)
}

/// Element `sum_j h_j (x+1)^j` of R_n for a binary `h`.
pub(crate) fn from_basis(h: &PolyF2, n: usize) -> Residue<RElem> {
    let coeffs: Vec<RElem> = h
        .coeffs()
        .iter()
        .map(|c| RElem::new(c.value(), 0))
        .collect();
    let poly = crate::poly::Poly::new(coeffs);
    let xp = crate::poly::Poly::<RElem>::from_ints(&[1, 1]);
    // Horner in (x+1); degrees may exceed n, so reduce at the end
    let mut acc = crate::poly::Poly::zero();
    for &c in poly.coeffs().iter().rev() {
        acc = acc.mul(&xp).add(&crate::poly::Poly::constant(c));
    }
    Residue::from_poly(&acc, n, Modulus::Nega)
}

/// Two-generator presentation; `gen2` is zero, `u(x+1)^m` or `2u(x+1)^m1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPair {
    pub gen1: Residue<RElem>,
    pub gen2: Residue<RElem>,
}

impl GeneratorPair {
    pub fn to_vec(&self) -> Vec<Residue<RElem>> {
        [&self.gen1, &self.gen2]
            .into_iter()
            .filter(|g| !g.is_zero())
            .cloned()
            .collect()
    }
}

fn bits(p: &PolyF2) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn parse_bits(s: &str) -> Result<PolyF2> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(F2::new(0)),
            '1' => Ok(F2::new(1)),
            _ => Err(Error::Parse(format!("bad bit string {s:?}"))),
        })
        .collect::<Result<Vec<_>>>()
        .map(PolyF2::new)
}

/// `T2_1,n=2,s=2,t=0,h=11`: only the fields the type uses are written;
/// polynomials are bit strings over the (x+1)-basis, lowest power first.
impl fmt::Display for CodeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},n={}", self.kind, self.n)?;
        let k = self.kind;
        match k {
            CodeType::T0_zero | CodeType::T0_unit => return Ok(()),
            CodeType::T1 => return write!(f, ",m={}", self.m),
            _ => {}
        }
        write!(f, ",s={}", self.s)?;
        if !self.tail_is_zero() {
            write!(f, ",t={}", self.t)?;
        }
        if k.has_mixed_tail() {
            write!(f, ",l={}", self.l)?;
        }
        if matches!(
            k,
            CodeType::T3_0 | CodeType::T3_1 | CodeType::T3_2 | CodeType::T3_4
        ) {
            write!(f, ",m={}", self.m)?;
        }
        if matches!(k, CodeType::T3_3 | CodeType::T3_5) {
            write!(f, ",m1={}", self.m1)?;
        }
        if k.has_mixed_tail() {
            write!(f, ",h1={},h2={}", bits(&self.h1), bits(&self.h2))
        } else {
            write!(f, ",h={}", bits(&self.h))
        }
    }
}

impl FromStr for CodeDescriptor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(',');
        let kind: CodeType = parts.next().unwrap_or_default().parse()?;
        let mut d = CodeDescriptor::new(kind, 0);
        for part in parts {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
            let num = || {
                value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad integer in {part:?}")))
            };
            match key.trim() {
                "n" => d.n = num()?,
                "s" => d.s = num()?,
                "t" => d.t = num()?,
                "m" => d.m = num()?,
                "m1" => d.m1 = num()?,
                "l" => d.l = num()?,
                "h" => d.h = parse_bits(value.trim())?,
                "h1" => d.h1 = parse_bits(value.trim())?,
                "h2" => d.h2 = parse_bits(value.trim())?,
                other => return Err(Error::Parse(format!("unknown field {other:?}"))),
            }
        }
        if d.n == 0 {
            return Err(Error::Parse(format!("descriptor {s:?} lacks n")));
        }
        if d.tail_is_zero() {
            d.t = 0;
        }
        Ok(d)
    }
}

impl Serialize for CodeDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyR;

    fn d(s: &str) -> CodeDescriptor {
        s.parse().unwrap()
    }

    fn res(s: &str, n: usize) -> Residue<RElem> {
        Residue::from_poly(&s.parse::<PolyR>().unwrap(), n, Modulus::Nega)
    }

    #[test]
    fn t1_m0_is_u() {
        let g = d("T1,n=2,m=0").generators();
        assert_eq!(g.gen1, res("u", 2));
        assert!(g.gen2.is_zero());
        assert_eq!(d("T1,n=2,m=0").generators_text(), "<u>");
    }

    #[test]
    fn double_tail_generator() {
        let desc = d("T2_2,n=2,s=3,t=0,h=1");
        let expected = xp1(3, 2).add(&res("2u", 2));
        assert_eq!(desc.generators().gen1, expected);
        assert_eq!(desc.generators_text(), "<(x+1)^3+2u>");
    }

    #[test]
    fn text_forms() {
        assert_eq!(
            d("T2_1,n=2,s=2,t=0,h=11").generators_text(),
            "<(x+1)^2+u*(1+(x+1))>"
        );
        assert_eq!(
            d("T3_1,n=2,s=2,t=0,m=1,h=1").generators_text(),
            "<(x+1)^2+u, u*(x+1)>"
        );
        assert_eq!(d("T3_0,n=2,s=1,m=0,h=0").generators_text(), "<(x+1), u>");
        assert_eq!(
            d("T3_5,n=8,s=12,t=1,l=4,m1=3,h1=1,h2=11").generators_text(),
            "<(x+1)^12+u*(x+1)*(2+(x+1)^4*(1+(x+1))), 2u*(x+1)^3>"
        );
    }

    #[test]
    fn descriptor_text_roundtrip() {
        for s in [
            "T0_zero,n=4",
            "T1,n=4,m=3",
            "T2_1,n=2,s=2,t=0,h=11",
            "T2_3,n=4,s=6,t=0,l=3,h1=1,h2=1",
            "T3_3,n=4,s=7,t=0,m1=2,h=1",
            "T3_1,n=2,s=3,m=2,h=0",
        ] {
            assert_eq!(d(s).to_string(), s);
        }
        assert!("T9,n=2".parse::<CodeDescriptor>().is_err());
        assert!("T1,m=2".parse::<CodeDescriptor>().is_err());
    }

    #[test]
    fn basis_h_materializes() {
        // 1 + (x+1) = x + 2
        assert_eq!(from_basis(&"x+1".parse().unwrap(), 2), res("x+2", 2));
    }
}
