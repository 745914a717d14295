use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::mono::{Mono, VarId};
use super::{LocPoly, Poly};

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses the canonical text form produced by `Display` (also accepts
    /// explicit `1*` coefficients and `^1` exponents).
    fn from_str(s: &str) -> Result<Poly> {
        let mut out = Poly::zero();
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s == "0" {
            return Ok(out);
        }
        // tokenize into signed terms
        let mut rest = s;
        let mut sign = 1i32;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        }
        loop {
            let end = rest
                .char_indices()
                .find(|&(i, c)| {
                    (c == '+' || c == '-') && i > 0 && rest[..i].ends_with(' ')
                })
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let term = rest[..end].trim();
            parse_term(term, sign, &mut out)?;
            if end == rest.len() {
                break;
            }
            sign = if rest[end..].starts_with('+') { 1 } else { -1 };
            rest = rest[end + 1..].trim_start();
        }
        Ok(out)
    }
}

fn parse_term(term: &str, sign: i32, out: &mut Poly) -> Result<()> {
    let mut coef = BigInt::from(sign);
    let mut beta = 0u32;
    let mut vars: Vec<(VarId, u32)> = Vec::new();
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{term}`")));
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (
                b,
                e.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        if base == "β" || base == "beta" {
            beta += exp;
        } else if base.chars().next().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            let k = BigInt::parse_bytes(base.as_bytes(), 10)
                .ok_or_else(|| Error::Parse(format!("bad coefficient `{base}`")))?;
            for _ in 0..exp {
                coef = &coef * &k;
            }
        } else {
            let v = VarId::parse(base)?;
            match vars.iter_mut().find(|(w, _)| *w == v) {
                Some((_, e)) => *e += exp,
                None => vars.push((v, exp)),
            }
        }
    }
    out.add_term(Mono::from_exps(beta, vars), coef);
    Ok(())
}

/// One JSON term: `{coef, beta, vars}` with the coefficient as a decimal
/// string so arbitrary precision round-trips bit-exactly.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coef: String,
    pub beta: u32,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vars: BTreeMap<String, u32>,
}

/// JSON form of a polynomial: terms in monomial order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(transparent)]
pub struct PolyJson(pub Vec<TermJson>);

/// JSON form of a localized polynomial.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct LocPolyJson {
    pub num: PolyJson,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub den: BTreeMap<String, u32>,
}

impl Poly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson(
            self.terms()
                .map(|(m, c)| TermJson {
                    coef: c.to_string(),
                    beta: m.beta,
                    vars: m
                        .vars()
                        .iter()
                        .map(|&(v, e)| (v.to_string(), e))
                        .collect(),
                })
                .collect(),
        )
    }

    pub fn from_json(j: &PolyJson) -> Result<Poly> {
        let mut p = Poly::zero();
        for t in &j.0 {
            let c = BigInt::parse_bytes(t.coef.as_bytes(), 10)
                .ok_or_else(|| Error::Parse(format!("bad coefficient `{}`", t.coef)))?;
            let mut vars = Vec::new();
            for (name, &e) in &t.vars {
                vars.push((VarId::parse(name)?, e));
            }
            p.add_term(Mono::from_exps(t.beta, vars), c);
        }
        Ok(p)
    }
}

impl LocPoly {
    pub fn to_json(&self) -> LocPolyJson {
        LocPolyJson {
            num: self.num().to_json(),
            den: self.den().iter().map(|(&v, &e)| (v.to_string(), e)).collect(),
        }
    }

    pub fn from_json(j: &LocPolyJson) -> Result<LocPoly> {
        let num = Poly::from_json(&j.num)?;
        let mut den = BTreeMap::new();
        for (name, &e) in &j.den {
            den.insert(VarId::parse(name)?, e);
        }
        Ok(LocPoly::new(num, den))
    }
}

impl Poly {
    /// Helper for asserting exact coefficient values in tests and goldens.
    pub fn coeff_of_str(&self, mono: &str) -> BigInt {
        if mono == "1" {
            return self.constant();
        }
        let p: Poly = mono.parse().expect("bad monomial");
        let (m, c) = p.terms().next().expect("empty monomial");
        assert!(c.is_one(), "not a plain monomial");
        self.coeff(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_roundtrip() {
        let p: Poly = "5 + 5*β + β^2".parse().unwrap();
        assert_eq!(p.to_string(), "5 + 5*β + β^2");
        let q: Poly = "x1 + x2 + β*x1*x2".parse().unwrap();
        assert_eq!(q, Poly::var(VarId::x(1)).oplus(&Poly::var(VarId::x(2))));
        assert_eq!(q.to_string().parse::<Poly>().unwrap(), q);
        let r: Poly = "-2*a1^3*b2 + 1 - β*x1".parse().unwrap();
        assert_eq!(r.to_string().parse::<Poly>().unwrap(), r);
    }

    #[test]
    fn json_roundtrip_bit_exact() {
        let p: Poly = "123456789012345678901234567890*β^3*a1*x2^4 - 7".parse().unwrap();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        let back: PolyJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Poly::from_json(&back).unwrap(), p);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
