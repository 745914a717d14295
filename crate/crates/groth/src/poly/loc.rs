use std::collections::BTreeMap;




use crate::error::{Error, Result};

use super::mono::VarId;
use super::Poly;

/// Localized polynomial `num / ∏ (1+β·v)^{e_v}`.  Canonical form: `num` is not
/// divisible by `(1+β·v)` for any `v` with `e_v > 0`, which makes structural
/// equality semantic equality (the `(1+β·v)` are pairwise coprime
/// irreducibles).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LocPoly {
    num: Poly,
    den: BTreeMap<VarId, u32>,
}

fn one_plus_beta_var(v: VarId) -> Poly {
    Poly::one_plus_beta(&Poly::var(v))
}

fn den_poly(den: &BTreeMap<VarId, u32>) -> Poly {
    let mut p = Poly::one();
    for (&v, &e) in den {
        p = &p * &one_plus_beta_var(v).pow(e);
    }
    p
}

impl LocPoly {
    pub fn zero() -> Self {
        LocPoly::default()
    }

    pub fn one() -> Self {
        LocPoly::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Self {
        LocPoly { num, den: BTreeMap::new() }
    }

    pub fn var(v: VarId) -> Self {
        LocPoly::from_poly(Poly::var(v))
    }

    pub fn int(c: i64) -> Self {
        LocPoly::from_poly(Poly::int(c))
    }

    /// `v̄ = ⊖v = −v/(1+βv)`.
    pub fn bar(v: VarId) -> Self {
        LocPoly::new(-&Poly::var(v), [(v, 1)].into())
    }

    pub fn new(num: Poly, den: BTreeMap<VarId, u32>) -> Self {
        let mut lp = LocPoly { num, den };
        lp.canonicalize();
        lp
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &BTreeMap<VarId, u32> {
        &self.den
    }

    pub fn den_as_poly(&self) -> Poly {
        den_poly(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    /// Plain polynomial if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_empty().then_some(&self.num)
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let vars: Vec<VarId> = self.den.keys().copied().collect();
        for v in vars {
            let f = one_plus_beta_var(v);
            while self.den.get(&v).copied().unwrap_or(0) > 0 {
                match self.num.exact_div(&f) {
                    Ok(q) => {
                        self.num = q;
                        let e = self.den.get_mut(&v).unwrap();
                        *e -= 1;
                        if *e == 0 {
                            self.den.remove(&v);
                            break;
                        }
                    }
                    Err(_) => break,
                }
            }
        }
    }

    pub fn add(&self, other: &LocPoly) -> LocPoly {
        // common denominator = max of exponents
        let mut den = self.den.clone();
        for (&v, &e) in &other.den {
            let cur = den.entry(v).or_insert(0);
            *cur = (*cur).max(e);
        }
        let lift = |lp: &LocPoly| -> Poly {
            let mut p = lp.num.clone();
            for (&v, &e) in &den {
                let have = lp.den.get(&v).copied().unwrap_or(0);
                if e > have {
                    p = &p * &one_plus_beta_var(v).pow(e - have);
                }
            }
            p
        };
        let num = &lift(self) + &lift(other);
        LocPoly::new(num, den)
    }

    pub fn sub(&self, other: &LocPoly) -> LocPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LocPoly {
        LocPoly { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &LocPoly) -> LocPoly {
        let mut den = self.den.clone();
        for (&v, &e) in &other.den {
            *den.entry(v).or_insert(0) += e;
        }
        LocPoly::new(&self.num * &other.num, den)
    }

    pub fn mul_poly(&self, p: &Poly) -> LocPoly {
        LocPoly::new(&self.num * p, self.den.clone())
    }

    pub fn mul_beta(&self) -> LocPoly {
        LocPoly { num: self.num.mul_beta(), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> LocPoly {
        let mut acc = LocPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `p ⊕ q = p + q + βpq`.
    pub fn oplus(&self, other: &LocPoly) -> LocPoly {
        self.add(other).add(&self.mul(other).mul_beta())
    }

    /// `1 + β·p`.
    pub fn one_plus_beta(&self) -> LocPoly {
        LocPoly::one().add(&self.mul_beta())
    }

    /// Invert `1+β·q` inside the permitted denominator monoid: the numerator
    /// of `1+β·q` must factor as `∏(1+β·v)^{e_v}`.
    pub fn invert_one_plus_beta(q: &LocPoly) -> Result<LocPoly> {
        let opb = q.one_plus_beta();
        // opb = P / D with P = ∏(1+βv)^{f_v} required; inverse is D / P.
        let mut rem = opb.num.clone();
        let mut factors: BTreeMap<VarId, u32> = BTreeMap::new();
        loop {
            if rem.is_one() {
                break;
            }
            let vars = rem.vars_present();
            let mut progressed = false;
            for v in vars {
                let f = one_plus_beta_var(v);
                while let Ok(qt) = rem.exact_div(&f) {
                    rem = qt;
                    *factors.entry(v).or_insert(0) += 1;
                    progressed = true;
                }
            }
            if !progressed {
                return Err(Error::DenominatorNotSupported(q.to_string()));
            }
        }
        Ok(LocPoly::new(den_poly(&opb.den), factors))
    }

    /// `p ⊖ q = (p−q)/(1+βq)`.
    pub fn ominus(&self, other: &LocPoly) -> Result<LocPoly> {
        let inv = LocPoly::invert_one_plus_beta(other)?;
        Ok(self.sub(other).mul(&inv))
    }

    /// Exact division; the quotient must again lie in the localized ring.
    pub fn div(&self, other: &LocPoly) -> Result<LocPoly> {
        if other.is_zero() {
            return Err(Error::NotDivisible);
        }
        let num = (&self.num * &other.den_as_poly()).exact_div(&other.num)?;
        Ok(LocPoly::new(num, self.den.clone()))
    }

    /// Simultaneous substitution; every image of a denominator variable must
    /// keep `1+β·image` inside the permitted monoid.
    pub fn subst(&self, map: &BTreeMap<VarId, LocPoly>) -> Result<LocPoly> {
        let mut out = self.num.subst_loc(map);
        for (&v, &e) in &self.den {
            let img = map.get(&v).cloned().unwrap_or_else(|| LocPoly::var(v));
            let inv = LocPoly::invert_one_plus_beta(&img)?;
            out = out.mul(&inv.pow(e));
        }
        Ok(out)
    }

    /// Grading as for [`Poly::homogeneous_grade`]; the `(1+β·v)` units all
    /// have grade 0, so only the numerator matters.
    pub fn homogeneous_grade(&self) -> Option<i64> {
        self.num.homogeneous_grade()
    }
}

impl From<Poly> for LocPoly {
    fn from(p: Poly) -> Self {
        LocPoly::from_poly(p)
    }
}

impl std::fmt::Display for LocPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        let mut first = true;
        for (&v, &e) in &self.den {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "(1+β*{v})")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            first = false;
        }
        write!(f, ")")
    }
}

/// Convenience: `(1+β·v)^e` as an explicit polynomial.
pub(crate) fn one_plus_beta_pow(v: VarId, e: u32) -> Poly {
    one_plus_beta_var(v).pow(e)
}
