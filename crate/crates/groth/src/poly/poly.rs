use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::mono::{Family, Mono, VarId};
use super::LocPoly;

/// Sparse multivariate polynomial over `Z` in β and the indexed variables.
/// Invariant: no zero coefficients are stored, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::int(1)
    }

    pub fn int(c: i64) -> Self {
        Poly::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn var(v: VarId) -> Self {
        Poly::from_term(Mono::var(v), BigInt::one())
    }

    pub fn beta() -> Self {
        Poly::from_term(Mono::beta_pow(1), BigInt::one())
    }

    pub fn from_term(m: Mono, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Mono, BigInt)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Constant term (β-free, variable-free).
    pub fn constant(&self) -> BigInt {
        self.coeff(&Mono::one())
    }

    pub fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
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

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul_mono(&self, m: &Mono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul_beta(&self) -> Poly {
        self.mul_mono(&Mono::beta_pow(1))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `x ⊕ y = x + y + βxy` inside the polynomial ring.
    pub fn oplus(&self, other: &Poly) -> Poly {
        let mut r = self + other;
        r.add_assign(&(self * other).mul_beta());
        r
    }

    pub fn oplus_var(v: VarId, w: VarId) -> Poly {
        Poly::var(v).oplus(&Poly::var(w))
    }

    /// 1 + β·p
    pub fn one_plus_beta(p: &Poly) -> Poly {
        let mut r = Poly::one();
        r.add_assign(&p.mul_beta());
        r
    }

    /// Leading term in the monomial order.
    pub fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division; errors unless `self = q * quotient` exactly.
    pub fn exact_div(&self, q: &Poly) -> Result<Poly> {
        if q.is_zero() {
            return Err(Error::NotDivisible);
        }
        let (ltm, ltc) = q.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.div(ltm).ok_or(Error::NotDivisible)?;
            let (qc, r) = num_integer::Integer::div_rem(&c, ltc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let t = Poly::from_term(qm, qc);
            rem = &rem - &(q * &t);
            quot.add_assign(&t);
        }
        Ok(quot)
    }

    pub fn divisible_by(&self, q: &Poly) -> bool {
        self.exact_div(q).is_ok()
    }

    /// Exact division by an integer.
    pub fn exact_div_int(&self, k: &BigInt) -> Result<Poly> {
        if k.is_zero() {
            return Err(Error::NotDivisible);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = num_integer::Integer::div_rem(c, k);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            terms.insert(m.clone(), q);
        }
        Ok(Poly { terms })
    }

    /// Simultaneous substitution of variables by polynomials; unmapped
    /// variables stay themselves.
    pub fn subst(&self, map: &BTreeMap<VarId, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::from_term(Mono::beta_pow(m.beta), c.clone());
            for &(v, e) in m.vars() {
                match map.get(&v) {
                    None => term = term.mul_mono(&Mono::var_pow(v, e)),
                    Some(img) => term = &term * &img.pow(e),
                }
            }
            out.add_assign(&term);
        }
        out
    }

    /// Substitution where images may be localized; the result is localized.
    /// Accumulates over a running common denominator and canonicalizes once.
    pub fn subst_loc(&self, map: &BTreeMap<VarId, LocPoly>) -> LocPoly {
        let mut acc_num = Poly::zero();
        let mut acc_den: BTreeMap<VarId, u32> = BTreeMap::new();
        for (m, c) in &self.terms {
            // raw numerator and denominator of the substituted term
            let mut num = Poly::from_term(Mono::beta_pow(m.beta), c.clone());
            let mut den: BTreeMap<VarId, u32> = BTreeMap::new();
            for &(v, e) in m.vars() {
                match map.get(&v) {
                    None => num = num.mul_mono(&Mono::var_pow(v, e)),
                    Some(img) => {
                        num = &num * &img.num().pow(e);
                        for (&w, &k) in img.den() {
                            *den.entry(w).or_insert(0) += k * e;
                        }
                    }
                }
            }
            if num.is_zero() {
                continue;
            }
            // lift both sides to the common denominator (max exponents)
            for (&w, &k) in &den {
                let have = acc_den.get(&w).copied().unwrap_or(0);
                if k > have {
                    acc_num = &acc_num * &super::loc::one_plus_beta_pow(w, k - have);
                    acc_den.insert(w, k);
                }
            }
            for (&w, &k) in &acc_den {
                let have = den.get(&w).copied().unwrap_or(0);
                if k > have {
                    num = &num * &super::loc::one_plus_beta_pow(w, k - have);
                }
            }
            acc_num.add_assign(&num);
        }
        LocPoly::new(acc_num, acc_den)
    }

    /// Substitute β itself by an integer (e.g. −1 for K-theory printing).
    pub fn subst_beta_int(&self, k: i64) -> Poly {
        let kb = BigInt::from(k);
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            for _ in 0..m.beta {
                coef *= &kb;
            }
            let stripped = Mono::from_exps(0, m.vars().to_vec());
            out.add_term(stripped, coef);
        }
        out
    }

    /// Substitute every variable of a family by one integer.
    pub fn subst_family_int(&self, fam: Family, k: i64) -> Poly {
        let kb = BigInt::from(k);
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut vars = Vec::new();
            for &(v, e) in m.vars() {
                if v.family == fam {
                    for _ in 0..e {
                        coef *= &kb;
                    }
                } else {
                    vars.push((v, e));
                }
            }
            if !coef.is_zero() {
                out.add_term(Mono::from_exps(m.beta, vars), coef);
            }
        }
        out
    }

    pub fn subst_var_int(&self, var: VarId, k: i64) -> Poly {
        let mut map = BTreeMap::new();
        map.insert(var, Poly::int(k));
        self.subst(&map)
    }

    /// Swap two variables (used for symmetry checks).
    pub fn swap_vars(&self, v: VarId, w: VarId) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let vars = m
                .vars()
                .iter()
                .map(|&(u, e)| {
                    if u == v {
                        (w, e)
                    } else if u == w {
                        (v, e)
                    } else {
                        (u, e)
                    }
                })
                .collect();
            out.add_term(Mono::from_exps(m.beta, vars), c.clone());
        }
        out
    }

    pub fn contains_family(&self, fam: Family) -> bool {
        self.terms
            .keys()
            .any(|m| m.vars().iter().any(|&(v, _)| v.family == fam))
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn vars_present(&self) -> Vec<VarId> {
        let mut set = std::collections::BTreeSet::new();
        for m in self.terms.keys() {
            for &(v, _) in m.vars() {
                set.insert(v);
            }
        }
        set.into_iter().collect()
    }

    pub fn max_var_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.var_degree()).max().unwrap_or(0)
    }

    pub fn max_family_degree(&self, fam: Family) -> u32 {
        self.terms
            .keys()
            .map(|m| m.family_degree(fam))
            .max()
            .unwrap_or(0)
    }

    /// Degree in the grading `deg v = 1`, `deg β = −1`, if homogeneous.
    pub fn homogeneous_grade(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let first = it.next()?.grade();
        it.all(|m| m.grade() == first).then_some(first)
    }

    /// All integer coefficients nonnegative?
    pub fn coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Group terms by their pure-x monomial: x^μ -> Σ (rest).
    pub fn collect_by_x(&self) -> BTreeMap<Mono, Poly> {
        let mut out: BTreeMap<Mono, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (xm, rest) = m.split_x();
            out.entry(xm).or_default().add_term(rest, c.clone());
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = Poly::zero();
        for (m, c) in &small.terms {
            for (n, d) in &big.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}
