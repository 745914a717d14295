//! The algebraic localization map `Φ^X` (restriction of a polynomial class
//! to a Weyl-group element), GKM membership, the left recurrence that pins
//! down Schubert classes, the explicit word-sum localization, and
//! Littlewood–Richardson expansion by triangular elimination.

use std::collections::BTreeMap;

use crate::divdiff::{act, act_window, psi_word, root_poly, Alphabet};
use crate::error::{Error, Result};
use crate::genfun::GTable;
use crate::par;
use crate::poly::{Family, LocPoly, Poly, VarId};
use crate::weyl::{enumerate_by_length, GroupElt, SimpleRef, WeylLetter, WeylType};

/// LR-solve rank guard (overridden by `GROTH_GUARD`).
pub fn lr_guard() -> u32 {
    std::env::var("GROTH_GUARD")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(3)
}

/// `Φ^X(f)(v)`: substitute `a_i ↦ b̄_{v(i)}` (with `b_{-k} = b̄_k`) and
/// `x_i ↦ b̄_k` when `v(i) = −k`, `x_i ↦ 0` when `v(i) > 0`.
pub fn phi_loc(f: &LocPoly, v: &GroupElt) -> Result<LocPoly> {
    let mut map: BTreeMap<VarId, LocPoly> = BTreeMap::new();
    let mut add_var = |var: VarId| {
        let i = var.index as i32;
        match var.family {
            Family::A => {
                let k = v.value(i);
                let img = if k > 0 {
                    LocPoly::bar(VarId::b(k as u32))
                } else {
                    LocPoly::var(VarId::b((-k) as u32))
                };
                map.insert(var, img);
            }
            Family::X => {
                let k = v.value(i);
                let img = if k < 0 {
                    LocPoly::bar(VarId::b((-k) as u32))
                } else {
                    LocPoly::zero()
                };
                map.insert(var, img);
            }
            Family::B => {}
        }
    };
    for var in f.num().vars_present() {
        add_var(var);
    }
    for &var in f.den().keys() {
        add_var(var);
    }
    f.subst(&map)
}

pub fn phi(f: &Poly, v: &GroupElt) -> Result<LocPoly> {
    phi_loc(&LocPoly::from_poly(f.clone()), v)
}

/// A localized class: the map `v ↦ Φ(f)(v)` over the full group.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalizedClass {
    pub typ: WeylType,
    pub values: BTreeMap<GroupElt, LocPoly>,
}

impl LocalizedClass {
    pub fn get(&self, v: &GroupElt) -> LocPoly {
        self.values.get(v).cloned().unwrap_or_else(LocPoly::zero)
    }
}

/// `Φ`-table of one polynomial over all of `W(X_n)`.
pub fn phi_table(typ: WeylType, f: &Poly) -> Result<LocalizedClass> {
    phi_table_loc(typ, &LocPoly::from_poly(f.clone()))
}

pub fn phi_table_loc(typ: WeylType, f: &LocPoly) -> Result<LocalizedClass> {
    let elts = enumerate_by_length(typ)?;
    let vals = par::map_vec(&elts, |v| phi_loc(f, v).map(|p| (v.clone(), p)));
    let mut values = BTreeMap::new();
    for r in vals {
        let (v, p) = r?;
        values.insert(v, p);
    }
    Ok(LocalizedClass { typ, values })
}

/// One positive root `α = w(α_i)` with its reflection and polynomial value
/// `α(b) = w(α_i(b))`.
#[derive(Debug, Clone)]
pub struct Root {
    pub coords: Vec<i32>,
    pub reflection: GroupElt,
    pub alpha_b: LocPoly,
}

fn simple_root_coords(typ: WeylType, s: SimpleRef) -> Vec<i32> {
    let n = typ.rank as usize;
    let mut v = vec![0; n];
    match s {
        SimpleRef::S(i) => {
            v[i as usize - 1] = 1;
            v[i as usize] = -1;
        }
        SimpleRef::S0 => {
            v[0] = match typ.letter {
                WeylLetter::B => 1,
                WeylLetter::C => 2,
                _ => unreachable!(),
            };
        }
        SimpleRef::S1hat => {
            v[0] = 1;
            v[1] = 1;
        }
    }
    v
}

fn apply_to_coords(w: &GroupElt, coords: &[i32]) -> Vec<i32> {
    let mut out = vec![0; coords.len()];
    for (k, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let img = w.value(k as i32 + 1);
        out[img.unsigned_abs() as usize - 1] += c * img.signum();
    }
    out
}

fn is_positive(coords: &[i32]) -> bool {
    coords.iter().find(|&&c| c != 0).map(|&c| c > 0).unwrap_or(false)
}

/// All positive roots of `Δ_{X_n}`, each with one `(w, i)` representative.
pub fn positive_roots(typ: WeylType) -> Result<Vec<Root>> {
    let mut seen: BTreeMap<Vec<i32>, Root> = BTreeMap::new();
    for w in enumerate_by_length(typ)? {
        for s in typ.generators() {
            let coords = apply_to_coords(&w, &simple_root_coords(typ, s));
            if !is_positive(&coords) || seen.contains_key(&coords) {
                continue;
            }
            let reflection = w.compose(&GroupElt::from_word(typ, &[s])?).compose(&w.inverse());
            let alpha_b = act_window(Alphabet::B, &w, &root_poly(typ, Alphabet::B, s))?;
            seen.insert(coords.clone(), Root { coords, reflection, alpha_b });
        }
    }
    Ok(seen.into_values().collect())
}

/// GKM membership: `f(v) − f(s_α v) ∈ α(b)·R^{b,b̄}` for every positive root
/// and every `v`, checked by exact divisibility of numerators.
pub fn gkm_check(class: &LocalizedClass) -> Result<bool> {
    let roots = positive_roots(class.typ)?;
    let pairs: Vec<(&Root, &GroupElt)> = roots
        .iter()
        .flat_map(|r| class.values.keys().map(move |v| (r, v)))
        .collect();
    let ok = par::map_vec(&pairs, |&(root, v)| {
        let sv = root.reflection.compose(v);
        let d = class.get(v).sub(&class.get(&sv));
        d.is_zero() || d.num().divisible_by(root.alpha_b.num())
    });
    Ok(ok.into_iter().all(|b| b))
}

/// Function-level divided difference on a localized class:
/// `(π_i f)(v) = (f(v) − (1+β·α_i(b))·s_i^{(b)}(f(s_i v))) / α_i(b)`.
pub fn pi_function_level(class: &LocalizedClass, s: SimpleRef) -> Result<LocalizedClass> {
    let typ = class.typ;
    let alpha = root_poly(typ, Alphabet::B, s);
    let opb = alpha.one_plus_beta();
    let mut values = BTreeMap::new();
    let si = GroupElt::from_word(typ, &[s])?;
    for v in class.values.keys() {
        let sv = si.compose(v);
        let moved = act(typ, Alphabet::B, s, &class.get(&sv))?;
        let num = class.get(v).sub(&opb.mul(&moved));
        values.insert(v.clone(), num.div(&alpha)?);
    }
    Ok(LocalizedClass { typ, values })
}

/// The full first-kind localization matrix `w ↦ Φ(G_w)`.
pub struct PhiMatrix {
    pub typ: WeylType,
    pub table: GTable,
    pub classes: BTreeMap<GroupElt, LocalizedClass>,
}

impl PhiMatrix {
    pub fn build(typ: WeylType) -> Result<Self> {
        let table = if typ.letter == WeylLetter::A {
            GTable::a_double(typ.rank)?
        } else {
            GTable::first_kind(typ)?
        };
        PhiMatrix::from_table(typ, table)
    }

    pub fn from_table(typ: WeylType, table: GTable) -> Result<Self> {
        let ws: Vec<GroupElt> = enumerate_by_length(typ)?;
        let built = par::map_vec(&ws, |w| {
            phi_table(typ, &table.get(w)).map(|c| (w.clone(), c))
        });
        let mut classes = BTreeMap::new();
        for r in built {
            let (w, c) = r?;
            classes.insert(w, c);
        }
        Ok(PhiMatrix { typ, table, classes })
    }

    pub fn class(&self, w: &GroupElt) -> &LocalizedClass {
        &self.classes[w]
    }

    pub fn value(&self, w: &GroupElt, v: &GroupElt) -> LocPoly {
        self.classes[w].get(v)
    }
}

/// The Prop. 10 recurrence for `ψ^w = Φ(G_w)`: `ψ^w(e) = δ_{w,e}` and for
/// `v > s_i v`, the two-case left recursion.
pub fn recurrence_check(m: &PhiMatrix, w: &GroupElt) -> Result<bool> {
    let typ = m.typ;
    let e = GroupElt::identity(typ);
    let psi_w = m.class(w);
    let expect_e = if w.is_identity() { LocPoly::one() } else { LocPoly::zero() };
    if psi_w.get(&e) != expect_e {
        return Ok(false);
    }
    for s in typ.generators() {
        let si = GroupElt::from_word(typ, &[s])?;
        let alpha = root_poly(typ, Alphabet::B, s);
        let siw = si.compose(w);
        let up = siw.length() > w.length();
        for v in psi_w.values.keys() {
            let sv = si.compose(v);
            if sv.length() >= v.length() {
                continue; // only v > s_i v
            }
            let moved = act(typ, Alphabet::B, s, &psi_w.get(&sv))?;
            let rhs = if up {
                moved
            } else {
                let moved2 = act(typ, Alphabet::B, s, &m.value(&siw, &sv))?;
                alpha.one_plus_beta().mul(&moved).add(&alpha.mul(&moved2))
            };
            if psi_w.get(v) != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Prop. 11 word-sum localization: scan a reduced word of `v`, selecting a
/// Hecke subword multiplying to `w`; selected letters contribute the
/// b-action of the prefix applied to `α_{i_k}(b)`.
pub fn localize_words(typ: WeylType, w: &GroupElt, v: &GroupElt) -> Result<LocPoly> {
    let word = v.reduced_word();
    let mut acc = LocPoly::zero();
    // DFS state: position, demazure product of selected letters, walking
    // group element, coefficient
    struct Frame {
        k: usize,
        sel: GroupElt,
        walk: GroupElt,
        coef: LocPoly,
        count: u32,
    }
    let mut stack = vec![Frame {
        k: 0,
        sel: GroupElt::identity(typ),
        walk: GroupElt::identity(typ),
        coef: LocPoly::one(),
        count: 0,
    }];
    while let Some(f) = stack.pop() {
        if f.k == word.len() {
            if &f.sel == w {
                let excess = f.count - w.length();
                acc = acc.add(&f.coef.mul_beta_pow(excess));
            }
            continue;
        }
        let s = word[f.k];
        let walk_next = f.walk.compose(&GroupElt::from_word(typ, &[s])?);
        // skip s
        stack.push(Frame {
            k: f.k + 1,
            sel: f.sel.clone(),
            walk: walk_next.clone(),
            coef: f.coef.clone(),
            count: f.count,
        });
        // select s
        let sel = f.sel.demazure_gen(s);
        if sel.bruhat_leq(w) {
            let alpha = act_window(Alphabet::B, &f.walk, &root_poly(typ, Alphabet::B, s))?;
            stack.push(Frame {
                k: f.k + 1,
                sel,
                walk: walk_next,
                coef: f.coef.mul(&alpha),
                count: f.count + 1,
            });
        }
    }
    Ok(acc)
}

impl LocPoly {
    fn mul_beta_pow(&self, e: u32) -> LocPoly {
        let mut out = self.clone();
        for _ in 0..e {
            out = out.mul_beta();
        }
        out
    }
}

/// Littlewood–Richardson expansion `G_u·G_v = Σ c^w_{u,v}·G_w` by triangular
/// elimination against the localization matrix.
pub fn lr_expand(m: &PhiMatrix, u: &GroupElt, v: &GroupElt) -> Result<BTreeMap<GroupElt, LocPoly>> {
    if m.typ.rank > lr_guard() {
        return Err(Error::TooLarge(format!(
            "lr rank {} exceeds guard {}",
            m.typ.rank,
            lr_guard()
        )));
    }
    let product = &m.table.get(u) * &m.table.get(v);
    let phi_product = phi_table(m.typ, &product)?;
    lr_solve(m, &phi_product)
}

/// Solve `target = Σ c_w Φ(G_w)` on the whole table, in (length, window)
/// order.
pub fn lr_solve(
    m: &PhiMatrix,
    target: &LocalizedClass,
) -> Result<BTreeMap<GroupElt, LocPoly>> {
    let order = enumerate_by_length(m.typ)?;
    let mut coeffs: BTreeMap<GroupElt, LocPoly> = BTreeMap::new();
    for z in &order {
        let mut r = target.get(z);
        for (w, c) in &coeffs {
            if c.is_zero() {
                continue;
            }
            r = r.sub(&c.mul(&m.value(w, z)));
        }
        if r.is_zero() {
            continue;
        }
        let diag = m.value(z, z);
        if diag.is_zero() {
            return Err(Error::NonTriangular);
        }
        let c = r.div(&diag).map_err(|_| Error::ResidualNonzero)?;
        coeffs.insert(z.clone(), c);
    }
    // residual must vanish everywhere (holds by construction at solved
    // points; re-verify to catch division slips)
    for z in &order {
        let mut r = target.get(z);
        for (w, c) in &coeffs {
            r = r.sub(&c.mul(&m.value(w, z)));
        }
        if !r.is_zero() {
            return Err(Error::ResidualNonzero);
        }
    }
    Ok(coeffs)
}

/// Prop. 16 interpolation: `F = Σ_v (ψ^{(a)}_v(F)|_e)·G_v` for `F` free of
/// x; returns the coefficient of every `v ∈ W(X_n)`.
pub fn interpolate(typ: WeylType, f: &Poly) -> Result<BTreeMap<GroupElt, LocPoly>> {
    if f.contains_family(Family::X) {
        return Err(Error::UnsupportedXAction);
    }
    let e = GroupElt::identity(typ);
    let mut out = BTreeMap::new();
    for v in enumerate_by_length(typ)? {
        let psi_f = psi_word(typ, Alphabet::A, &v, &LocPoly::from_poly(f.clone()))?;
        let at_e = phi_loc(&psi_f, &e)?;
        if !at_e.is_zero() {
            out.insert(v, at_e);
        }
    }
    Ok(out)
}

/// JSON row for the `lr` CLI output.
pub fn lr_json(
    u: &GroupElt,
    v: &GroupElt,
    coeffs: &BTreeMap<GroupElt, LocPoly>,
) -> serde_json::Value {
    let mut terms: Vec<_> = coeffs.iter().collect();
    terms.sort_by_key(|(w, _)| (w.length(), w.window().to_vec()));
    serde_json::json!({
        "u": u.window(),
        "v": v.window(),
        "terms": terms
            .into_iter()
            .map(|(w, c)| serde_json::json!({"w": w.window(), "coef": c.to_json()}))
            .collect::<Vec<_>>(),
    })
}
