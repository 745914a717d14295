//! Generating functions in `Id_β(W)` and the named polynomial families they
//! expand into: the commuting blocks `A_i^{(n)}(x)`, the palindromic
//! `F^B/C/D_n(x)`, type-A (double) Grothendieck products, the first-kind
//! double Grothendieck generating function, and the √-based second kind.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::hecke::{HFactor, HeckeElt};
use crate::poly::{Family, LocPoly, Poly, TruncSeries, VarId};
use crate::weyl::{GroupElt, SimpleRef, WeylLetter, WeylType};

/// Default cap on the rank of generating-function builds; `GROTH_GUARD`
/// overrides it.
pub fn rank_guard() -> u32 {
    std::env::var("GROTH_GUARD")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(4)
}

pub fn check_rank(typ: WeylType) -> Result<()> {
    let cap = rank_guard();
    if typ.rank > cap {
        return Err(Error::TooLarge(format!("rank {} exceeds guard {cap}", typ.rank)));
    }
    Ok(())
}

fn s(i: u32) -> SimpleRef {
    SimpleRef::S(i)
}

/// `A_i^{(n)}(v) = h_{n-1}(v) h_{n-2}(v) ⋯ h_i(v)` as a factor list.
pub fn a_block_factors(i: u32, n: u32, v: &Poly) -> Result<Vec<HFactor<Poly>>> {
    if i < 1 || i > n.saturating_sub(1) {
        return Err(Error::BadIndex);
    }
    Ok((i..n).rev().map(|k| HFactor::new(s(k), v.clone())).collect())
}

pub fn build_a_block(typ: WeylType, i: u32, v: &Poly) -> Result<HeckeElt<Poly>> {
    HeckeElt::product_chain(typ, &a_block_factors(i, typ.rank, v)?)
}

/// The palindromic factor list of `F^X_n(v)`.
pub fn f_factors(letter: WeylLetter, n: u32, v: &Poly) -> Vec<HFactor<Poly>> {
    let mut fs: Vec<HFactor<Poly>> = Vec::new();
    match letter {
        WeylLetter::B => {
            fs.extend((1..n).rev().map(|k| HFactor::new(s(k), v.clone())));
            fs.push(HFactor::new(SimpleRef::S0, v.clone()));
            fs.extend((1..n).map(|k| HFactor::new(s(k), v.clone())));
        }
        WeylLetter::C => {
            fs.extend((1..n).rev().map(|k| HFactor::new(s(k), v.clone())));
            fs.push(HFactor::new(SimpleRef::S0, v.clone()));
            fs.push(HFactor::new(SimpleRef::S0, v.clone()));
            fs.extend((1..n).map(|k| HFactor::new(s(k), v.clone())));
        }
        WeylLetter::D => {
            fs.extend((2..n).rev().map(|k| HFactor::new(s(k), v.clone())));
            fs.push(HFactor::new(s(1), v.clone()));
            fs.push(HFactor::new(SimpleRef::S1hat, v.clone()));
            fs.extend((2..n).map(|k| HFactor::new(s(k), v.clone())));
        }
        WeylLetter::A => panic!("F^X is defined for X = B, C, D"),
    }
    fs
}

/// `F^X_n(v)` for a single argument.
pub fn build_f(typ: WeylType, v: &Poly) -> Result<HeckeElt<Poly>> {
    HeckeElt::product_chain(typ, &f_factors(typ.letter, typ.rank, v))
}

/// `F̄^X_n(x) = F^X_n(x_1) ⋯ F^X_n(x_n)` as one factor list.
pub fn fbar_factors(typ: WeylType) -> Vec<HFactor<Poly>> {
    (1..=typ.rank)
        .flat_map(|i| f_factors(typ.letter, typ.rank, &Poly::var(VarId::x(i))))
        .collect()
}

/// The K-Stanley generating function `F̄^X_n(x) = Σ F^X_w(x) u_w`.
pub fn build_fbar(typ: WeylType) -> Result<HeckeElt<Poly>> {
    check_rank(typ)?;
    HeckeElt::product_chain(typ, &fbar_factors(typ))
}

/// `G_{A_{n-1}}(v_1,…,v_{n-1}) = A_1(v_1) A_2(v_2) ⋯ A_{n-1}(v_{n-1})`.
pub fn ga_factors(n: u32, arg: impl Fn(u32) -> Poly) -> Vec<HFactor<Poly>> {
    let mut fs = Vec::new();
    for i in 1..n {
        let v = arg(i);
        fs.extend((i..n).rev().map(|k| HFactor::new(s(k), v.clone())));
    }
    fs
}

/// `G_{A_{n-1}}(v̄_1,…,v̄_{n-1})^{-1}` rewritten as an all-positive product:
/// inverting each `A_i(v̄_i) = h_{n-1}(v̄)⋯h_i(v̄)` gives `h_i(v)⋯h_{n-1}(v)`
/// and the blocks reverse.
pub fn ga_inv_bar_factors(n: u32, arg: impl Fn(u32) -> Poly) -> Vec<HFactor<Poly>> {
    let mut fs = Vec::new();
    for i in (1..n).rev() {
        let v = arg(i);
        fs.extend((i..n).map(|k| HFactor::new(s(k), v.clone())));
    }
    fs
}

/// The type-A double Grothendieck generating function
/// `G_A(b̄)^{-1} G_A(a) = Σ_w G^A_w(a,b) u_w`, built from the all-positive
/// row product `∏_{j=n-1}^{1} ∏_{i=1}^{n-j} h_{i+j-1}(a_i ⊕ b_j)`.
pub fn g_a_double_factors(n: u32) -> Vec<HFactor<Poly>> {
    let mut fs = Vec::new();
    for j in (1..n).rev() {
        for i in 1..=(n - j) {
            let arg = Poly::oplus_var(VarId::a(i), VarId::b(j));
            fs.push(HFactor::new(s(i + j - 1), arg));
        }
    }
    fs
}

pub fn build_g_a_double(n: u32) -> Result<HeckeElt<Poly>> {
    let typ = WeylType::a(n);
    if typ.order() > 100_000 {
        return Err(Error::TooLarge(format!("|S_{n}| too large")));
    }
    HeckeElt::product_chain(typ, &g_a_double_factors(n))
}

/// Single-alphabet type-A Grothendieck generating function `G_{A_{n-1}}(a)`.
pub fn build_g_a_single(n: u32, fam: Family) -> Result<HeckeElt<Poly>> {
    let typ = WeylType::a(n);
    HeckeElt::product_chain(typ, &ga_factors(n, |i| Poly::var(VarId::new(fam, i))))
}

/// First-kind factor list per Def. 8:
/// `G_A(b̄)^{-1} · F^X(x_1)⋯F^X(x_n) · G_A(a)`, every factor positive.
pub fn g_first_factors(typ: WeylType) -> Vec<HFactor<Poly>> {
    let n = typ.rank;
    let mut fs = ga_inv_bar_factors(n, |i| Poly::var(VarId::b(i)));
    fs.extend(fbar_factors(typ));
    fs.extend(ga_factors(n, |i| Poly::var(VarId::a(i))));
    fs
}

pub fn build_g_first(typ: WeylType) -> Result<HeckeElt<Poly>> {
    check_rank(typ)?;
    assert!(typ.letter != WeylLetter::A, "use build_g_a_double for type A");
    HeckeElt::product_chain(typ, &g_first_factors(typ))
}

/// A fully expanded family table: `w ↦ polynomial`.
#[derive(Debug, Clone)]
pub struct GTable {
    typ: WeylType,
    terms: BTreeMap<GroupElt, Poly>,
}

impl GTable {
    pub fn from_hecke(e: HeckeElt<Poly>) -> Self {
        GTable {
            typ: e.typ(),
            terms: e.terms().map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// First-kind double Grothendieck table `G^X_{n,w}(a,b;x)`.
    pub fn first_kind(typ: WeylType) -> Result<Self> {
        Ok(GTable::from_hecke(build_g_first(typ)?))
    }

    /// Type-A double table `G^{A_{n-1}}_w(a,b)`.
    pub fn a_double(n: u32) -> Result<Self> {
        Ok(GTable::from_hecke(build_g_a_double(n)?))
    }

    /// K-Stanley table `F^X_w(x_1..x_n)`.
    pub fn stanley(typ: WeylType) -> Result<Self> {
        Ok(GTable::from_hecke(build_fbar(typ)?))
    }

    pub fn typ(&self) -> WeylType {
        self.typ
    }

    pub fn get(&self, w: &GroupElt) -> Poly {
        self.terms.get(w).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElt, &Poly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &GroupElt> {
        self.terms.keys()
    }
}

/// Second-kind expansion `G^X_n(a,b) = G^X_n(b̄)^{-1} G^X_n(a)` with
/// truncated-series coefficients, where `G^X_n(a) = √F(ā_1)⋯√F(ā_n)·G_A(a)`
/// and the inverse uses `√F(b)^{-1} = √F(b̄)` plus the positive form of
/// `G_A(b̄)^{-1}`.
pub fn build_g_second(typ: WeylType, trunc: u32) -> Result<HeckeElt<TruncSeries>> {
    check_rank(typ)?;
    assert!(typ.letter != WeylLetter::A);
    let n = typ.rank;

    let mut acc: HeckeElt<TruncSeries> = hecke_series_one(typ, trunc);
    // G_A(b̄)^{-1}
    for f in ga_inv_bar_factors(n, |i| Poly::var(VarId::b(i))) {
        acc = acc.mul_h(f.gen, &TruncSeries::from_poly(&f.arg, trunc))?;
    }
    // √F(b̄_n) ⋯ √F(b̄_1)
    for i in (1..=n).rev() {
        let root = sqrt_f_series(typ, TruncSeries::bar_var(VarId::b(i), trunc), trunc)?;
        acc = acc.mul(&root)?;
    }
    // √F(ā_1) ⋯ √F(ā_n)
    for i in 1..=n {
        let root = sqrt_f_series(typ, TruncSeries::bar_var(VarId::a(i), trunc), trunc)?;
        acc = acc.mul(&root)?;
    }
    // G_A(a)
    for f in ga_factors(n, |i| Poly::var(VarId::a(i))) {
        acc = acc.mul_h(f.gen, &TruncSeries::from_poly(&f.arg, trunc))?;
    }
    Ok(acc)
}

pub fn hecke_series_one(typ: WeylType, trunc: u32) -> HeckeElt<TruncSeries> {
    HeckeElt::from_term(GroupElt::identity(typ), TruncSeries::one(trunc))
}

/// Generator sequence of the palindromic `F^X_n` product.
pub fn f_gen_sequence(letter: WeylLetter, n: u32) -> Vec<SimpleRef> {
    f_factors(letter, n, &Poly::one()).into_iter().map(|f| f.gen).collect()
}

/// `√(F^X_n(t))` for a series argument `t`.
pub fn sqrt_f_series(typ: WeylType, t: TruncSeries, trunc: u32) -> Result<HeckeElt<TruncSeries>> {
    let mut f = hecke_series_one(typ, trunc);
    for gen in f_gen_sequence(typ.letter, typ.rank) {
        f = f.mul_h(gen, &t)?;
    }
    hecke_sqrt(&f, typ, trunc)
}

/// √(1 + T) for a Hecke element whose identity coefficient is exactly 1 and
/// whose off-identity coefficients have positive variable degree, via the
/// Taylor series of √(1+T).
pub fn hecke_sqrt(
    e: &HeckeElt<TruncSeries>,
    typ: WeylType,
    trunc: u32,
) -> Result<HeckeElt<TruncSeries>> {
    let one = hecke_series_one(typ, trunc);
    let t = e.sub(&one);
    let mut out = one.clone();
    let mut tk = one;
    let mut coef = BigRational::one();
    for k in 1..=trunc {
        coef = coef
            * (BigRational::new(1.into(), 2.into())
                - BigRational::from_integer((k as i64 - 1).into()))
            / BigRational::from_integer((k as i64).into());
        tk = tk.mul(&t)?;
        if tk.num_terms() == 0 {
            break;
        }
        out = out.add(&tk.scale_with(|c| c.scale(&coef)));
    }
    Ok(out)
}

/// Second-kind coefficient of one element.
pub fn second_kind_coeff(typ: WeylType, trunc: u32, w: &GroupElt) -> Result<TruncSeries> {
    Ok(build_g_second(typ, trunc)?.coefficient_of(w))
}

/// The Demazure-triple expansion of Prop. 2, exact at fixed rank:
/// `G^X_w = Σ β^{ℓ(v1)+ℓ(u)+ℓ(v2)−ℓ(w)} G^A_{v1^{-1}}(b) F^X_u(x) G^A_{v2}(a)`
/// over `(v1, u, v2)` with `v1 ⋆ u ⋆ v2 = w` and `v1, v2` in the type-A
/// parabolic.
pub fn demazure_triple_expand(typ: WeylType, w: &GroupElt) -> Result<Poly> {
    check_rank(typ)?;
    let n = typ.rank;
    let ga_b = GTable::from_hecke(build_g_a_single(n, Family::B)?);
    let ga_a = GTable::from_hecke(build_g_a_single(n, Family::A)?);
    let stanley = GTable::stanley(typ)?;

    let sn = crate::weyl::enumerate(WeylType::a(n))?;
    let embed =
        |p: &GroupElt| -> GroupElt { GroupElt::new(typ, p.window().to_vec()).expect("A embeds") };

    let mut out = Poly::zero();
    for v1 in &sn {
        let v1w = embed(v1);
        let g_b = ga_b.get(&v1.inverse());
        if g_b.is_zero() {
            continue;
        }
        for v2 in &sn {
            let v2w = embed(v2);
            let g_a = ga_a.get(v2);
            if g_a.is_zero() {
                continue;
            }
            for (u, f_u) in stanley.iter() {
                if v1w.demazure(u).demazure(&v2w) != *w {
                    continue;
                }
                let excess = v1w.length() + u.length() + v2w.length() - w.length();
                let term = (&(&g_b * f_u) * &g_a).mul_mono(&crate::poly::Mono::beta_pow(excess));
                out.add_assign(&term);
            }
        }
    }
    Ok(out)
}

/// Substitute `a_i ↦ images_a[i-1]`, `b_i ↦ images_b[i-1]` in a polynomial
/// (used by the embedding identities).
pub fn rename_ab(p: &Poly, images_a: &[Poly], images_b: &[Poly]) -> Poly {
    let mut map = BTreeMap::new();
    for (i, img) in images_a.iter().enumerate() {
        map.insert(VarId::a(i as u32 + 1), img.clone());
    }
    for (i, img) in images_b.iter().enumerate() {
        map.insert(VarId::b(i as u32 + 1), img.clone());
    }
    p.subst(&map)
}

/// All-variables bar substitution `p(ā, b̄; x̄)` as a localized polynomial.
pub fn bar_all_vars(p: &Poly) -> LocPoly {
    let mut map = BTreeMap::new();
    for v in p.vars_present() {
        map.insert(v, LocPoly::bar(v));
    }
    p.subst_loc(&map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::enumerate;

    fn c2() -> WeylType {
        WeylType::c(2)
    }

    fn word(typ: WeylType, w: &[SimpleRef]) -> GroupElt {
        GroupElt::from_word(typ, w).unwrap()
    }

    #[test]
    fn f_c1_is_h0_squared() {
        let typ = WeylType::c(1);
        let f = build_f(typ, &Poly::var(VarId::x(1))).unwrap();
        let s0 = word(typ, &[SimpleRef::S0]);
        let x = Poly::var(VarId::x(1));
        assert_eq!(f.coefficient_of(&s0), x.oplus(&x));
        assert_eq!(f.coefficient_of(&GroupElt::identity(typ)), Poly::one());
    }

    #[test]
    fn f_b2_coefficients() {
        // F^B_2(x) = h1 h0 h1; coefficient of u_{s0} is x
        let typ = WeylType::b(2);
        let f = build_f(typ, &Poly::var(VarId::x(1))).unwrap();
        let s0 = word(typ, &[SimpleRef::S0]);
        assert_eq!(f.coefficient_of(&s0), Poly::var(VarId::x(1)));
    }

    #[test]
    fn a_block_inverse_chain() {
        let typ = WeylType::a(3);
        let x = VarId::x(1);
        let fwd = build_a_block(typ, 1, &Poly::var(x)).unwrap().map_loc();
        let mut inv = HeckeElt::one(typ);
        for k in 1..3u32 {
            inv = inv.mul_h(SimpleRef::S(k), &LocPoly::bar(x)).unwrap();
        }
        assert_eq!(fwd.mul(&inv).unwrap(), HeckeElt::one(typ));
    }

    #[test]
    fn g_a_double_small() {
        let g = build_g_a_double(2).unwrap();
        let s1 = word(WeylType::a(2), &[SimpleRef::S(1)]);
        assert_eq!(g.coefficient_of(&s1), Poly::oplus_var(VarId::a(1), VarId::b(1)));
        assert_eq!(g.coefficient_of(&GroupElt::identity(WeylType::a(2))), Poly::one());
    }

    #[test]
    fn example_7_specialization() {
        // w = [1,4,3,2] = s2 s3 s2; G^{A_3}_w(a,b)|_{a=1,b=0} = 5+5β+β²
        let g = GTable::a_double(4).unwrap();
        let w = GroupElt::new(WeylType::a(4), vec![1, 4, 3, 2]).unwrap();
        let p = g.get(&w).subst_family_int(Family::A, 1).subst_family_int(Family::B, 0);
        assert_eq!(p, "5 + 5*β + β^2".parse().unwrap());
    }

    #[test]
    fn first_kind_identity_coefficient() {
        let g = GTable::first_kind(c2()).unwrap();
        assert_eq!(g.get(&GroupElt::identity(c2())), Poly::one());
        for (w, p) in g.iter() {
            assert_eq!(p.homogeneous_grade(), Some(w.length() as i64), "at {w}");
            assert!(p.coeffs_nonnegative(), "at {w}");
        }
    }

    #[test]
    fn example_3_type_d() {
        // G^D_{2,w}(a,b;x) with a=b=0 at w = s1 s1hat equals (x1⊕x2)^2
        let typ = WeylType::d(2);
        let g = GTable::first_kind(typ).unwrap();
        let w = word(typ, &[SimpleRef::S(1), SimpleRef::S1hat]);
        let p = g.get(&w).subst_family_int(Family::A, 0).subst_family_int(Family::B, 0);
        let expect = Poly::oplus_var(VarId::x(1), VarId::x(2)).pow(2);
        assert_eq!(p, expect);
    }

    #[test]
    fn stanley_inverse_symmetry() {
        // F_w = F_{w^{-1}}
        let st = GTable::stanley(c2()).unwrap();
        for w in enumerate(c2()).unwrap() {
            assert_eq!(st.get(&w), st.get(&w.inverse()), "at {w}");
        }
    }

    #[test]
    fn demazure_triple_matches_extraction() {
        let g = GTable::first_kind(c2()).unwrap();
        for wrd in [vec![], vec![SimpleRef::S0], vec![SimpleRef::S(1), SimpleRef::S0]] {
            let w = word(c2(), &wrd);
            assert_eq!(demazure_triple_expand(c2(), &w).unwrap(), g.get(&w), "at {w}");
        }
    }
}
