//! The IdCoxeter algebra `Id_β(W)`: elements are finite maps `u_w ↦ coeff`
//! multiplied through the β-Demazure rule `u_i² = β·u_i` plus braid
//! relations, and the `h_i(x) = 1 + x·u_i` factor calculus all generating
//! functions are built from.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::poly::{LocPoly, Poly, TruncSeries};
use crate::weyl::{GroupElt, SimpleRef, WeylType};

/// Coefficient ring abstraction: enough structure for IdCoxeter products.
pub trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn mul_beta(&self) -> Self;
    fn neg(&self) -> Self;
}

impl Coeff for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn mul_beta(&self) -> Self {
        self.mul_beta()
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for LocPoly {
    fn zero() -> Self {
        LocPoly::zero()
    }
    fn one() -> Self {
        LocPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn mul_beta(&self) -> Self {
        self.mul_beta()
    }
    fn neg(&self) -> Self {
        self.neg()
    }
}

impl Coeff for TruncSeries {
    fn zero() -> Self {
        // truncation degree is fixed per computation; zero adapts on add
        TruncSeries::zero(u32::MAX)
    }
    fn one() -> Self {
        TruncSeries::one(u32::MAX)
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn mul_beta(&self) -> Self {
        self.mul_beta()
    }
    fn neg(&self) -> Self {
        self.neg()
    }
}

/// One `h_i(x) = 1 + x·u_i` factor.
#[derive(Debug, Clone)]
pub struct HFactor<C> {
    pub gen: SimpleRef,
    pub arg: C,
}

impl<C> HFactor<C> {
    pub fn new(gen: SimpleRef, arg: C) -> Self {
        HFactor { gen, arg }
    }
}

/// Element of `Id_β(W)` with coefficients in `C`; no zero coefficients
/// stored.
#[derive(Debug, Clone, PartialEq)]
pub struct HeckeElt<C> {
    typ: WeylType,
    terms: BTreeMap<GroupElt, C>,
}

impl<C: Coeff> HeckeElt<C> {
    pub fn zero(typ: WeylType) -> Self {
        HeckeElt { typ, terms: BTreeMap::new() }
    }

    pub fn one(typ: WeylType) -> Self {
        HeckeElt::from_term(GroupElt::identity(typ), C::one())
    }

    pub fn from_term(w: GroupElt, c: C) -> Self {
        let typ = w.typ();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        HeckeElt { typ, terms }
    }

    pub fn typ(&self) -> WeylType {
        self.typ
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElt, &C)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElt> {
        self.terms.keys()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: GroupElt, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.typ, other.typ);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_with(|c| c.neg()))
    }

    pub fn scale(&self, c: &C) -> Self {
        self.scale_with(|k| k.mul(c))
    }

    pub fn scale_with(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = HeckeElt::zero(self.typ);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn coefficient_of(&self, w: &GroupElt) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Multiply by one generator: `c·u_w ↦ c·u_{ws}` when the length goes up,
    /// else `βc·u_w` (mirrored on the left).
    pub fn mul_gen(&self, s: SimpleRef, right: bool) -> Result<Self> {
        let mut out = HeckeElt::zero(self.typ);
        for (w, c) in &self.terms {
            let ascends = if right { w.right_ascends(s) } else { w.left_ascends(s) };
            if ascends {
                let ws = if right { w.apply_right(s)? } else { w.apply_left(s)? };
                out.add_term(ws, c.clone());
            } else {
                out.add_term(w.clone(), c.mul_beta());
            }
        }
        Ok(out)
    }

    /// Right-multiply by `h_s(v) = 1 + v·u_s`.
    pub fn mul_h(&self, s: SimpleRef, v: &C) -> Result<Self> {
        Ok(self.add(&self.mul_gen(s, true)?.scale(v)))
    }

    /// Left-to-right product of `h` factors starting from 1.
    pub fn product_chain(typ: WeylType, factors: &[HFactor<C>]) -> Result<Self> {
        let mut acc = HeckeElt::one(typ);
        for f in factors {
            acc = acc.mul_h(f.gen, &f.arg)?;
        }
        Ok(acc)
    }

    /// Right-multiply by `u_w` through a reduced word.
    pub fn mul_u(&self, w: &GroupElt) -> Result<Self> {
        let mut acc = self.clone();
        for s in w.reduced_word() {
            acc = acc.mul_gen(s, true)?;
        }
        Ok(acc)
    }

    /// Bilinear product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.typ, other.typ);
        let mut out = HeckeElt::zero(self.typ);
        for (w, c) in &other.terms {
            let part = self.mul_u(w)?.scale(c);
            out = out.add(&part);
        }
        Ok(out)
    }
}

impl HeckeElt<Poly> {
    pub fn h(typ: WeylType, s: SimpleRef, v: Poly) -> Result<Self> {
        HeckeElt::one(typ).mul_h(s, &v)
    }

    pub fn map_loc(&self) -> HeckeElt<LocPoly> {
        let mut out = HeckeElt::zero(self.typ);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), LocPoly::from_poly(c.clone()));
        }
        out
    }
}

impl HeckeElt<LocPoly> {
    pub fn h_loc(typ: WeylType, s: SimpleRef, v: LocPoly) -> Result<Self> {
        HeckeElt::one(typ).mul_h(s, &v)
    }
}

#[derive(Debug, Serialize)]
pub struct HeckeTermJson {
    pub window: Vec<i32>,
    pub length: u32,
    pub coefficient: crate::poly::LocPolyJson,
}

impl HeckeElt<LocPoly> {
    /// JSON dump sorted by (length, window lex).
    pub fn to_json(&self) -> Vec<HeckeTermJson> {
        let mut rows: Vec<_> = self.terms.iter().collect();
        rows.sort_by_key(|(w, _)| (w.length(), w.window().to_vec()));
        rows.into_iter()
            .map(|(w, c)| HeckeTermJson {
                window: w.window().to_vec(),
                length: w.length(),
                coefficient: c.to_json(),
            })
            .collect()
    }
}
