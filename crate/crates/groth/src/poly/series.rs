use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::mono::{Mono, VarId};
use super::{LocPoly, Poly};

/// Formal series with exact rational coefficients, truncated at a total
/// variable degree bound.  β does not count toward the truncation degree.
#[derive(Debug, Clone, Eq)]
pub struct TruncSeries {
    terms: BTreeMap<Mono, BigRational>,
    trunc: u32,
}

impl PartialEq for TruncSeries {
    fn eq(&self, other: &Self) -> bool {
        // the truncation bound is bookkeeping, not part of the value
        self.terms == other.terms
    }
}

fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncSeries {
    pub fn zero(trunc: u32) -> Self {
        TruncSeries { terms: BTreeMap::new(), trunc }
    }

    pub fn one(trunc: u32) -> Self {
        TruncSeries::from_poly(&Poly::one(), trunc)
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Mono, c: BigRational) {
        if c.is_zero() || m.var_degree() > self.trunc {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn from_poly(p: &Poly, trunc: u32) -> Self {
        let mut s = TruncSeries::zero(trunc);
        for (m, c) in p.terms() {
            s.add_term(m.clone(), BigRational::from_integer(c.clone()));
        }
        s
    }

    /// Expand a localized polynomial: each `(1+β·v)^{-1}` becomes the
    /// geometric series `Σ (−β·v)^k`.
    pub fn from_locpoly(lp: &LocPoly, trunc: u32) -> Self {
        let mut s = TruncSeries::from_poly(lp.num(), trunc);
        for (&v, &e) in lp.den() {
            let inv = TruncSeries::geom_inv_one_plus_beta_var(v, trunc);
            for _ in 0..e {
                s = s.mul(&inv);
            }
        }
        s
    }

    fn geom_inv_one_plus_beta_var(v: VarId, trunc: u32) -> TruncSeries {
        let mut s = TruncSeries::zero(trunc);
        for k in 0..=trunc {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            s.add_term(
                Mono::beta_pow(k).mul(&Mono::var_pow(v, k)),
                rat_int(sign),
            );
        }
        s
    }

    /// The series of `v̄ = −v/(1+βv) = −v + βv² − β²v³ + …`.
    pub fn bar_var(v: VarId, trunc: u32) -> TruncSeries {
        TruncSeries::from_locpoly(&LocPoly::bar(v), trunc)
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut out = TruncSeries::zero(trunc);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
            trunc: self.trunc,
        }
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut out = TruncSeries::zero(trunc);
        for (m, c) in &self.terms {
            if m.var_degree() > trunc {
                continue;
            }
            for (n, d) in &other.terms {
                if m.var_degree() + n.var_degree() > trunc {
                    continue;
                }
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> TruncSeries {
        if c.is_zero() {
            return TruncSeries::zero(self.trunc);
        }
        TruncSeries {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
            trunc: self.trunc,
        }
    }

    /// Part of variable degree zero (may still carry β powers).
    pub fn constant_part(&self) -> TruncSeries {
        TruncSeries {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.var_degree() == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            trunc: self.trunc,
        }
    }

    fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Mono::one()).map(|c| c.is_one()).unwrap_or(false)
    }

    /// √s for s with constant part exactly 1, via the Taylor series of
    /// √(1+T): 1 + T/2 − T²/8 + T³/16 − 5T⁴/128 ⋯
    pub fn sqrt(&self) -> Result<TruncSeries> {
        if !self.constant_part().is_one() {
            return Err(Error::BadConstantTerm);
        }
        let t = self.sub(&TruncSeries::one(self.trunc));
        let mut out = TruncSeries::one(self.trunc);
        let mut tk = TruncSeries::one(self.trunc);
        let mut coef = BigRational::one();
        for k in 1..=self.trunc {
            // binom(1/2, k) = binom(1/2, k-1) * (1/2 - (k-1)) / k
            coef = coef * (BigRational::new(BigInt::from(1), BigInt::from(2)) - rat_int(k as i64 - 1))
                / rat_int(k as i64);
            tk = tk.mul(&t);
            if tk.is_zero() {
                break;
            }
            out = out.add(&tk.scale(&coef));
        }
        Ok(out)
    }

    /// Inverse of a series with constant part exactly 1.
    pub fn inv(&self) -> Result<TruncSeries> {
        if !self.constant_part().is_one() {
            return Err(Error::BadConstantTerm);
        }
        let t = self.sub(&TruncSeries::one(self.trunc));
        let mut out = TruncSeries::one(self.trunc);
        let mut tk = TruncSeries::one(self.trunc);
        for k in 1..=self.trunc {
            tk = tk.mul(&t);
            if tk.is_zero() {
                break;
            }
            let sign = if k % 2 == 0 { 1 } else { -1 };
            out = out.add(&tk.scale(&rat_int(sign)));
        }
        Ok(out)
    }

    /// Exact division by β (every term must carry β).
    pub fn div_beta(&self) -> Result<TruncSeries> {
        let mut out = TruncSeries::zero(self.trunc);
        for (m, c) in &self.terms {
            if m.beta == 0 {
                return Err(Error::NotDivisible);
            }
            out.add_term(
                Mono::from_exps(m.beta - 1, m.vars().to_vec()),
                c.clone(),
            );
        }
        Ok(out)
    }

    pub fn mul_beta(&self) -> TruncSeries {
        TruncSeries {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Mono::beta_pow(1).mul(m), c.clone()))
                .collect(),
            trunc: self.trunc,
        }
    }

    /// Substitute each variable by a series (unmapped variables persist).
    pub fn subst(&self, map: &BTreeMap<VarId, TruncSeries>) -> TruncSeries {
        let mut out = TruncSeries::zero(self.trunc);
        for (m, c) in &self.terms {
            let mut term = TruncSeries::zero(self.trunc);
            term.add_term(Mono::beta_pow(m.beta), c.clone());
            for &(v, e) in m.vars() {
                for _ in 0..e {
                    match map.get(&v) {
                        None => {
                            let mut vm = TruncSeries::zero(self.trunc);
                            vm.add_term(Mono::var(v), BigRational::one());
                            term = term.mul(&vm);
                        }
                        Some(img) => term = term.mul(img),
                    }
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Drop every term containing one of the given variables with the
    /// substitution value 0 (used by weak-stability checks).
    pub fn subst_zero(&self, vars: &[VarId]) -> TruncSeries {
        TruncSeries {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            trunc: self.trunc,
        }
    }
}

impl std::fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter() {
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
        write!(f, " + O(deg {})", self.trunc + 1)
    }
}
