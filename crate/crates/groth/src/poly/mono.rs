use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Variable family.  The total variable order is `β`, then the `a` family by
/// index, then `b`, then `x`; the derived `Ord` gives exactly that once β is
/// handled separately in [`Mono`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    X,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'a',
            Family::B => 'b',
            Family::X => 'x',
        }
    }
}

/// One indexed variable, e.g. `a3` or `x1`.  Indices start at 1; β is a
/// distinguished symbol kept out of this type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub family: Family,
    pub index: u32,
}

impl VarId {
    pub fn new(family: Family, index: u32) -> Self {
        assert!(index >= 1, "variable index must be >= 1");
        VarId { family, index }
    }

    pub fn a(i: u32) -> Self {
        VarId::new(Family::A, i)
    }

    pub fn b(i: u32) -> Self {
        VarId::new(Family::B, i)
    }

    pub fn x(i: u32) -> Self {
        VarId::new(Family::X, i)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (fam, rest) = match s.chars().next() {
            Some('a') => (Family::A, &s[1..]),
            Some('b') => (Family::B, &s[1..]),
            Some('x') => (Family::X, &s[1..]),
            _ => return Err(Error::Parse(format!("bad variable `{s}`"))),
        };
        let index: u32 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable index `{s}`")))?;
        if index == 0 {
            return Err(Error::Parse(format!("variable index must be >= 1: `{s}`")));
        }
        Ok(VarId::new(fam, index))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

/// Monomial: a β-exponent plus a sorted, duplicate-free, zero-free exponent
/// list over [`VarId`].  Ordered graded-lexicographically with β smallest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    pub beta: u32,
    vars: Vec<(VarId, u32)>,
}

impl Mono {
    pub fn one() -> Self {
        Mono::default()
    }

    pub fn beta_pow(k: u32) -> Self {
        Mono { beta: k, vars: Vec::new() }
    }

    pub fn var(v: VarId) -> Self {
        Mono { beta: 0, vars: vec![(v, 1)] }
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        if e == 0 {
            Mono::one()
        } else {
            Mono { beta: 0, vars: vec![(v, e)] }
        }
    }

    pub fn from_exps(beta: u32, mut vars: Vec<(VarId, u32)>) -> Self {
        vars.retain(|&(_, e)| e > 0);
        vars.sort_unstable_by_key(|&(v, _)| v);
        for w in vars.windows(2) {
            assert!(w[0].0 != w[1].0, "duplicate variable in monomial");
        }
        Mono { beta, vars }
    }

    pub fn vars(&self) -> &[(VarId, u32)] {
        &self.vars
    }

    pub fn exp(&self, v: VarId) -> u32 {
        self.vars
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.vars[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.beta == 0 && self.vars.is_empty()
    }

    /// Total degree counting every exponent (β included) — used only for the
    /// monomial order.
    pub fn order_degree(&self) -> u64 {
        self.beta as u64 + self.var_degree() as u64
    }

    /// Total degree over the variables, β excluded.
    pub fn var_degree(&self) -> u32 {
        self.vars.iter().map(|&(_, e)| e).sum()
    }

    /// Degree in the grading `deg v = +1`, `deg β = −1`.
    pub fn grade(&self) -> i64 {
        self.var_degree() as i64 - self.beta as i64
    }

    /// Total degree over one family only.
    pub fn family_degree(&self, fam: Family) -> u32 {
        self.vars
            .iter()
            .filter(|&&(v, _)| v.family == fam)
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() && j < other.vars.len() {
            match self.vars[i].0.cmp(&other.vars[j].0) {
                Ordering::Less => {
                    vars.push(self.vars[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    vars.push(other.vars[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    vars.push((self.vars[i].0, self.vars[i].1 + other.vars[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        vars.extend_from_slice(&self.vars[i..]);
        vars.extend_from_slice(&other.vars[j..]);
        Mono { beta: self.beta + other.beta, vars }
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.beta <= other.beta && self.vars.iter().all(|&(v, e)| e <= other.exp(v))
    }

    pub fn div(&self, other: &Mono) -> Option<Mono> {
        if !other.divides(self) {
            return None;
        }
        let mut vars = Vec::with_capacity(self.vars.len());
        for &(v, e) in &self.vars {
            let r = e - other.exp(v);
            if r > 0 {
                vars.push((v, r));
            }
        }
        Some(Mono { beta: self.beta - other.beta, vars })
    }

    /// Split off the x-part: returns (pure-x monomial, the rest incl. β).
    pub fn split_x(&self) -> (Mono, Mono) {
        let (xs, rest): (Vec<_>, Vec<_>) =
            self.vars.iter().partition(|&&(v, _)| v.family == Family::X);
        (
            Mono { beta: 0, vars: xs },
            Mono { beta: self.beta, vars: rest },
        )
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        // Graded, then lex scanned from the largest variable down, with β the
        // smallest variable of all: among monomials of equal total degree the
        // one with a larger exponent on the larger variable wins, so
        // β < a1 < a2 < ... < b1 < ... < x1 < ... in degree one.
        self.order_degree()
            .cmp(&other.order_degree())
            .then_with(|| {
                let (mut i, mut j) = (self.vars.len(), other.vars.len());
                loop {
                    match (i, j) {
                        (0, 0) => return self.beta.cmp(&other.beta),
                        (0, _) => return Ordering::Less,
                        (_, 0) => return Ordering::Greater,
                        _ => {
                            let (va, ea) = self.vars[i - 1];
                            let (vb, eb) = other.vars[j - 1];
                            match va.cmp(&vb) {
                                Ordering::Greater => return Ordering::Greater,
                                Ordering::Less => return Ordering::Less,
                                Ordering::Equal => {
                                    if ea != eb {
                                        return ea.cmp(&eb);
                                    }
                                    i -= 1;
                                    j -= 1;
                                }
                            }
                        }
                    }
                }
            })
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        if self.beta > 0 {
            write!(f, "β")?;
            if self.beta > 1 {
                write!(f, "^{}", self.beta)?;
            }
            first = false;
        }
        for &(v, e) in &self.vars {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_graded_then_lex_with_beta_smallest() {
        let a1 = Mono::var(VarId::a(1));
        let a2 = Mono::var(VarId::a(2));
        let b1 = Mono::var(VarId::b(1));
        let x1 = Mono::var(VarId::x(1));
        let beta = Mono::beta_pow(1);
        assert!(beta < a1);
        assert!(a1 < a2);
        assert!(a2 < b1);
        assert!(b1 < x1);
        assert!(Mono::var_pow(VarId::a(1), 2) > x1); // degree first
        assert!(beta.mul(&x1) > Mono::var_pow(VarId::a(1), 2)); // equal degree, x wins
    }

    #[test]
    fn mul_div_roundtrip() {
        let m = Mono::from_exps(2, vec![(VarId::a(1), 1), (VarId::x(2), 3)]);
        let n = Mono::from_exps(1, vec![(VarId::x(2), 1), (VarId::b(1), 2)]);
        let p = m.mul(&n);
        assert_eq!(p.div(&n).unwrap(), m);
        assert_eq!(p.exp(VarId::x(2)), 4);
        assert!(!n.divides(&m));
    }
}
