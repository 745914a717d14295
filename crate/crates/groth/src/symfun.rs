//! K-theoretic factorial Schur P/Q functions `GP_λ(x_1..x_n|b)` and
//! `GQ_λ(x_1..x_n|b)` computed by the literal symmetrized-orbit definition,
//! β-supersymmetry testing, and expansion of β-supersymmetric polynomials in
//! the GP (or GQ) basis by triangular elimination.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{Family, LocPoly, Mono, Poly, VarId};
use crate::weyl::StrictPartition;

/// Factorial parameter sequence: none (`b=0`), the standard `(b_1, b_2, …)`,
/// or the type-B shifted `(0, b_1, b_2, …)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactParam {
    Zero,
    Std,
    Shifted,
}

impl FactParam {
    fn param(self, k: u32) -> Poly {
        match self {
            FactParam::Zero => Poly::zero(),
            FactParam::Std => Poly::var(VarId::b(k)),
            FactParam::Shifted => {
                if k == 1 {
                    Poly::zero()
                } else {
                    Poly::var(VarId::b(k - 1))
                }
            }
        }
    }
}

const ORBIT_GUARD: u32 = 5;

fn xv(i: u32) -> VarId {
    VarId::x(i)
}

/// `[x|b]^k = (x⊕b_1)⋯(x⊕b_k)`.
fn bracket_p(x: &Poly, k: u32, b: FactParam) -> Poly {
    let mut p = Poly::one();
    for j in 1..=k {
        p = &p * &x.oplus(&b.param(j));
    }
    p
}

/// `[[x|b]]^k = (x⊕x)(x⊕b_1)⋯(x⊕b_{k-1})`.
fn bracket_q(x: &Poly, k: u32, b: FactParam) -> Poly {
    let mut p = x.oplus(x);
    for j in 1..k {
        p = &p * &x.oplus(&b.param(j));
    }
    p
}

fn permutations(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n as usize];
    fn rec(n: u32, cur: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if cur.len() == n as usize {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v as usize - 1] {
                used[v as usize - 1] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v as usize - 1] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

fn factorial(k: u32) -> BigInt {
    (1..=k as u64).map(BigInt::from).product::<BigInt>().max(BigInt::one())
}

/// The shared orbit-sum engine.  Each permuted term is a rational function
/// with denominator `∏ (x_{σ(i)} − x_{σ(j)})`; all terms are put over the
/// full Vandermonde product, summed, and divided back out exactly, then by
/// `(n−r)!`.
fn symmetrize(
    lambda: &StrictPartition,
    n: u32,
    b: FactParam,
    bracket: impl Fn(&Poly, u32, FactParam) -> Poly + Sync,
) -> Result<Poly> {
    let r = lambda.len() as u32;
    if r > n {
        return Err(Error::LengthExceedsN);
    }
    if n > ORBIT_GUARD {
        return Err(Error::TooLarge(format!("orbit sum guard is n <= {ORBIT_GUARD}")));
    }
    if r == 0 {
        return Ok(Poly::one());
    }
    // full Vandermonde ∏_{i<j}(x_i − x_j)
    let mut vandermonde = Poly::one();
    for i in 1..=n {
        for j in i + 1..=n {
            vandermonde = &vandermonde * &(&Poly::var(xv(i)) - &Poly::var(xv(j)));
        }
    }

    let perms = permutations(n);
    let total = par::map_reduce(
        &perms,
        Poly::zero,
        |sigma| {
            let at = |i: u32| sigma[i as usize - 1];
            let mut num = Poly::one();
            for (idx, &part) in lambda.parts().iter().enumerate() {
                let x = Poly::var(xv(at(idx as u32 + 1)));
                num = &num * &bracket(&x, part, b);
            }
            // (x_i ⊕ x_j)(1+βx_j) numerator factors and the denominator pairs
            let mut pairs = std::collections::BTreeSet::new();
            let mut neg = 0u32;
            for i in 1..=r {
                for j in i + 1..=n {
                    let (si, sj) = (at(i), at(j));
                    let op = Poly::oplus_var(xv(si), xv(sj));
                    num = &num * &(&op * &Poly::one_plus_beta(&Poly::var(xv(sj))));
                    if si < sj {
                        pairs.insert((si, sj));
                    } else {
                        pairs.insert((sj, si));
                        neg += 1;
                    }
                }
            }
            // multiply by the uncovered Vandermonde factors
            for i in 1..=n {
                for j in i + 1..=n {
                    if !pairs.contains(&(i, j)) {
                        num = &num * &(&Poly::var(xv(i)) - &Poly::var(xv(j)));
                    }
                }
            }
            if neg % 2 == 1 {
                num = -&num;
            }
            num
        },
        |a, b| &a + &b,
    );

    let quot = total.exact_div(&vandermonde)?;
    quot.exact_div_int(&factorial(n - r))
}

/// `GP_λ(x_1..x_n | b)`.
pub fn gp(lambda: &StrictPartition, n: u32, b: FactParam) -> Result<Poly> {
    symmetrize(lambda, n, b, bracket_p)
}

/// `GQ_λ(x_1..x_n | b)`.
pub fn gq(lambda: &StrictPartition, n: u32, b: FactParam) -> Result<Poly> {
    symmetrize(lambda, n, b, bracket_q)
}

/// The factorial `GP_λ(x|b)` has only mod-2 stability and is defined through
/// its even limit: at odd rank the value is the rank-`n+1` polynomial with
/// `x_{n+1} = 0`.
pub fn gp_even(lambda: &StrictPartition, n: u32, b: FactParam) -> Result<Poly> {
    if n.is_multiple_of(2) {
        gp(lambda, n, b)
    } else {
        Ok(gp(lambda, n + 1, b)?.subst_var_int(VarId::x(n + 1), 0))
    }
}

/// Symmetric under every adjacent swap of `x_1..x_n`?
pub fn is_symmetric(f: &Poly, n: u32) -> bool {
    (1..n).all(|i| f.swap_vars(xv(i), xv(i + 1)) == *f)
}

/// β-supersymmetry: symmetric and `f(t, t̄, x_3, …) = f(0, 0, x_3, …)` with
/// symbolic `t` (a fresh x-variable, bars cleared through the localized
/// ring).
pub fn is_beta_supersymmetric(f: &Poly, n: u32) -> bool {
    if n < 2 || !is_symmetric(f, n) {
        return false;
    }
    let t = xv(n + 1);
    let mut cancel = BTreeMap::new();
    cancel.insert(xv(1), LocPoly::var(t));
    cancel.insert(xv(2), LocPoly::bar(t));
    let lhs = f.subst_loc(&cancel);
    let rhs = LocPoly::from_poly(f.subst_var_int(xv(1), 0).subst_var_int(xv(2), 0));
    lhs == rhs
}

/// Expansion of a β-supersymmetric polynomial in the basis family; the
/// coefficients live in `Z[β]` (plus any non-x variables of `f`).
#[derive(Debug, Clone, PartialEq)]
pub struct GpExpansion {
    pub terms: BTreeMap<StrictPartition, Poly>,
}

impl GpExpansion {
    pub fn get(&self, lambda: &StrictPartition) -> Poly {
        self.terms.get(lambda).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(l, c)| {
                    serde_json::json!({
                        "partition": l.parts(),
                        "coef": c.to_string(),
                    })
                })
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GpBasis {
    P,
    Q,
}

/// Expand `f` in `GP_λ(x_1..x_n)` (or `GQ`) by lowest-degree triangular
/// elimination: the minimal-x-degree part of `GX_λ` is the classical Schur
/// P/Q polynomial with unitriangular (for Q: `2^{ℓ(λ)}`-triangular) leading
/// monomial `x^λ` in dominance order.
pub fn expand_in_basis(f: &Poly, n: u32, basis: GpBasis) -> Result<GpExpansion> {
    let build = |l: &StrictPartition| match basis {
        GpBasis::P => gp(l, n, FactParam::Zero),
        GpBasis::Q => gq(l, n, FactParam::Zero),
    };
    let mut rem = f.clone();
    let mut terms = BTreeMap::new();
    let max_deg = f.max_family_degree(Family::X);
    for d in 0..=max_deg {
        if d == 0 {
            // degree-zero part: coefficient of GX_∅ = 1
            let by_x = rem.collect_by_x();
            if let Some(c) = by_x.get(&Mono::one()) {
                if !c.is_zero() {
                    terms.insert(StrictPartition::empty(), c.clone());
                    rem = &rem - c;
                }
            }
            continue;
        }
        // descending lex = a linear extension of dominance
        for l in StrictPartition::all_of_size(d, n as usize) {
            let mono = Mono::from_exps(
                0,
                l.parts()
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (xv(i as u32 + 1), p))
                    .collect(),
            );
            let by_x = rem.collect_by_x();
            let Some(c) = by_x.get(&mono) else { continue };
            if c.is_zero() {
                continue;
            }
            let mut coef = c.clone();
            if basis == GpBasis::Q {
                coef = coef.exact_div_int(&BigInt::from(1i64 << l.len())).map_err(|_| Error::NotInSpan)?;
            }
            let g = build(&l)?;
            rem = &rem - &(&g * &coef);
            terms.insert(l, coef);
        }
        // the whole degree level must now be gone
        let dirty = rem
            .collect_by_x()
            .keys()
            .any(|m| m.var_degree() == d && !m.is_one());
        if dirty {
            return Err(Error::NotInSpan);
        }
    }
    if !rem.is_zero() {
        return Err(Error::NotInSpan);
    }
    Ok(GpExpansion { terms })
}

pub fn expand_in_gp(f: &Poly, n: u32) -> Result<GpExpansion> {
    expand_in_basis(f, n, GpBasis::P)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec())
    }

    fn oplus_chain(vs: &[Poly]) -> Poly {
        let mut it = vs.iter();
        let first = it.next().unwrap().clone();
        it.fold(first, |acc, v| acc.oplus(v))
    }

    #[test]
    fn gp1_is_oplus_sum() {
        for n in 1..=4u32 {
            let expect = oplus_chain(&(1..=n).map(|i| Poly::var(xv(i))).collect::<Vec<_>>());
            assert_eq!(gp(&lam(&[1]), n, FactParam::Zero).unwrap(), expect);
        }
    }

    #[test]
    fn gq1_is_doubled_oplus_sum() {
        for n in 1..=4u32 {
            let expect = oplus_chain(
                &(1..=n)
                    .map(|i| Poly::var(xv(i)).oplus(&Poly::var(xv(i))))
                    .collect::<Vec<_>>(),
            );
            assert_eq!(gq(&lam(&[1]), n, FactParam::Zero).unwrap(), expect);
        }
    }

    #[test]
    fn gp_empty_is_one() {
        assert_eq!(gp(&StrictPartition::empty(), 3, FactParam::Std).unwrap(), Poly::one());
        assert!(gp(&lam(&[2, 1]), 1, FactParam::Zero).is_err());
    }

    #[test]
    fn gp_gq_are_beta_supersymmetric() {
        for l in [lam(&[1]), lam(&[2]), lam(&[2, 1]), lam(&[3, 1])] {
            let p = gp(&l, 3, FactParam::Zero).unwrap();
            assert!(is_beta_supersymmetric(&p, 3), "GP_{l}");
            let q = gq(&l, 3, FactParam::Zero).unwrap();
            assert!(is_beta_supersymmetric(&q, 3), "GQ_{l}");
        }
        // non-symmetric input
        assert!(!is_beta_supersymmetric(&Poly::var(xv(1)), 2));
    }

    #[test]
    fn gq1_expansion_example_2() {
        // GQ_1 = 2 GP_1 + β GP_2
        let q = gq(&lam(&[1]), 3, FactParam::Zero).unwrap();
        let e = expand_in_gp(&q, 3).unwrap();
        assert_eq!(e.get(&lam(&[1])), Poly::int(2));
        assert_eq!(e.get(&lam(&[2])), Poly::beta());
        assert_eq!(e.terms.len(), 2);
    }

    #[test]
    fn expansion_is_identity_on_gp_combinations() {
        // 3·GP_{2,1} − β·GP_{3} + GP_∅
        let f = {
            let mut p = gp(&lam(&[2, 1]), 3, FactParam::Zero).unwrap().scale(&BigInt::from(3));
            p.add_assign(&-&gp(&lam(&[3]), 3, FactParam::Zero).unwrap().mul_beta());
            p.add_assign(&Poly::one());
            p
        };
        let e = expand_in_gp(&f, 3).unwrap();
        assert_eq!(e.get(&lam(&[2, 1])), Poly::int(3));
        assert_eq!(e.get(&lam(&[3])), -&Poly::beta());
        assert_eq!(e.get(&StrictPartition::empty()), Poly::one());
        assert_eq!(e.terms.len(), 3);
        // GP_λ expands to itself
        let g = gp(&lam(&[2]), 3, FactParam::Zero).unwrap();
        let e = expand_in_gp(&g, 3).unwrap();
        assert_eq!(e.get(&lam(&[2])), Poly::one());
        assert_eq!(e.terms.len(), 1);
    }

    #[test]
    fn not_in_span_detected() {
        // x1 x2 x3 symmetric but not supersymmetric / not in the GP span
        let f = &(&Poly::var(xv(1)) * &Poly::var(xv(2))) * &Poly::var(xv(3));
        assert_eq!(expand_in_gp(&f, 3), Err(Error::NotInSpan));
    }
}
