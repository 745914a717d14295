//! The two combinatorial models: compatible-sequence sums for type-A double
//! Grothendieck polynomials and the K-Stanley functions `F^{B,C,D}_w`, and
//! pipe-dream / extended-EYD state sums over the fixed words `Δ^X_n`.
//! Both are cross-validated against the generating-function expansions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::poly::{Mono, Poly, VarId};
use crate::weyl::{GroupElt, SimpleRef, WeylLetter, WeylType};

/// Hecke word: a generator sequence whose IdCoxeter product is
/// `β^{ℓ(ã)−ℓ(w)} u_w`, i.e. whose Demazure product is `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeWord {
    pub letters: Vec<SimpleRef>,
}

impl HeckeWord {
    pub fn len(&self) -> u32 {
        self.letters.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Number of h-factors in the rank-n Stanley product — the natural cap for
/// Hecke-word enumeration.
pub fn stanley_word_cap(typ: WeylType) -> u32 {
    let n = typ.rank;
    match typ.letter {
        WeylLetter::B => n * (2 * n - 1),
        WeylLetter::C => n * 2 * n,
        WeylLetter::D => n * (2 * n - 2),
        WeylLetter::A => n * (n - 1) / 2,
    }
}

/// All Hecke words for `w` of length at most `cap`.
pub fn hecke_words(w: &GroupElt, cap: u32) -> Vec<HeckeWord> {
    let typ = w.typ();
    let gens = typ.generators();
    let mut out = Vec::new();
    let mut letters = Vec::new();
    fn rec(
        w: &GroupElt,
        cur: &GroupElt,
        cap: u32,
        gens: &[SimpleRef],
        letters: &mut Vec<SimpleRef>,
        out: &mut Vec<HeckeWord>,
    ) {
        if cur == w {
            out.push(HeckeWord { letters: letters.clone() });
        }
        if letters.len() as u32 == cap {
            return;
        }
        let remaining = cap - letters.len() as u32;
        for &s in gens {
            let next = cur.demazure_gen(s);
            // prune: must stay under w and be able to climb the rest
            if !next.bruhat_leq(w) || w.length() - next.length() > remaining - 1 {
                continue;
            }
            letters.push(s);
            rec(w, &next, cap, gens, letters, out);
            letters.pop();
        }
    }
    rec(w, &GroupElt::identity(typ), cap, &gens, &mut letters, &mut out);
    out
}

/// All weakly increasing sequences over `1..=n` of length `len` compatible
/// with the word, per the type-dependent interlacing constraints.  Out of
/// range neighbours of the triple condition are treated as `n`, which makes
/// the boundary cases vacuous.
pub fn compatible_seqs(word: &HeckeWord, typ: WeylType, n: u32) -> Vec<Vec<u32>> {
    let l = word.letters.len();
    let flat: Vec<u32> = word.letters.iter().map(|s| s.flat()).collect();
    let ok = |b: &[u32]| -> bool {
        match typ.letter {
            WeylLetter::A => {
                for i in 1..l {
                    if flat[i - 1] <= flat[i] && b[i - 1] >= b[i] {
                        return false;
                    }
                }
                (0..l).all(|i| b[i] <= flat[i])
            }
            WeylLetter::B | WeylLetter::C | WeylLetter::D => {
                for i in 1..l.saturating_sub(1) {
                    if flat[i - 1] <= flat[i] && flat[i] >= flat[i + 1] && b[i - 1] >= b[i + 1] {
                        return false;
                    }
                }
                if typ.letter == WeylLetter::D {
                    for i in 0..l.saturating_sub(1) {
                        if word.letters[i] == word.letters[i + 1]
                            && matches!(word.letters[i], SimpleRef::S(1) | SimpleRef::S1hat)
                            && b[i] >= b[i + 1]
                        {
                            return false;
                        }
                    }
                }
                if typ.letter == WeylLetter::B {
                    // h_0 appears once per block, so a block may not repeat 0
                    for i in 0..l.saturating_sub(1) {
                        if word.letters[i] == SimpleRef::S0
                            && word.letters[i + 1] == SimpleRef::S0
                            && b[i] >= b[i + 1]
                        {
                            return false;
                        }
                    }
                }
                true
            }
        }
    };
    let mut out = Vec::new();
    let mut cur = vec![0u32; l];
    fn rec(
        idx: usize,
        lo: u32,
        n: u32,
        cur: &mut Vec<u32>,
        ok: &dyn Fn(&[u32]) -> bool,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == cur.len() {
            if ok(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for v in lo..=n {
            cur[idx] = v;
            rec(idx + 1, v, n, cur, ok, out);
        }
    }
    if l == 0 {
        return vec![Vec::new()];
    }
    rec(0, 1, n, &mut cur, &ok, &mut out);
    out
}

fn distinct_count(b: &[u32]) -> u32 {
    let mut set = std::collections::BTreeSet::new();
    for &v in b {
        set.insert(v);
    }
    set.len() as u32
}

fn gamma(word: &HeckeWord, b: &[u32]) -> u32 {
    (1..b.len())
        .filter(|&i| word.letters[i - 1] == word.letters[i] && b[i - 1] == b[i])
        .count() as u32
}

fn count_zeros(word: &HeckeWord) -> u32 {
    word.letters.iter().filter(|&&s| s == SimpleRef::S0).count() as u32
}

fn count_ones(word: &HeckeWord) -> u32 {
    word.letters
        .iter()
        .filter(|&&s| matches!(s, SimpleRef::S(1) | SimpleRef::S1hat))
        .count() as u32
}

fn pow2_rational(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

/// Prop. 17 compatible-sequence sum for `F^X_w(x_1..x_n)`, X = B, C, D.
///
/// Type-D terms legitimately carry `2^{-1}` from mixed `1/1̂` valleys (the
/// two flattened variants sum to an integer); type B and C terms must have
/// nonnegative exponents, and the final sum must always be integral.
pub fn stanley_via_compat(w: &GroupElt, cap: u32) -> Result<Poly> {
    let typ = w.typ();
    let n = typ.rank;
    let words = hecke_words(w, cap);
    let parts = par::map_vec(&words, |word| -> Result<BTreeMap<Mono, BigRational>> {
        let mut acc: BTreeMap<Mono, BigRational> = BTreeMap::new();
        let beta_pow = word.len() - w.length();
        for b in compatible_seqs(word, typ, n) {
            let e = distinct_count(&b) as i64
                - gamma(word, &b) as i64
                - match typ.letter {
                    WeylLetter::B => count_zeros(word) as i64,
                    WeylLetter::C => 0,
                    WeylLetter::D => count_ones(word) as i64,
                    WeylLetter::A => unreachable!(),
                };
            if e < 0 && typ.letter != WeylLetter::D {
                return Err(Error::NegativeTwoPower);
            }
            let mut vars: BTreeMap<VarId, u32> = BTreeMap::new();
            for &bi in &b {
                *vars.entry(VarId::x(bi)).or_insert(0) += 1;
            }
            let mono = Mono::from_exps(beta_pow, vars.into_iter().collect());
            let cur = acc.entry(mono).or_insert_with(BigRational::zero);
            *cur += pow2_rational(e);
        }
        Ok(acc)
    });
    let mut total: BTreeMap<Mono, BigRational> = BTreeMap::new();
    for part in parts {
        for (m, c) in part? {
            let cur = total.entry(m).or_insert_with(BigRational::zero);
            *cur += c;
        }
    }
    let mut out = Poly::zero();
    for (m, c) in total {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return Err(Error::NegativeTwoPower);
        }
        out.add_term(m, c.to_integer());
    }
    Ok(out)
}

/// Prop. 17 compatible-sequence sum for the type-A double Grothendieck
/// polynomial `G^A_w(x_1..x_n; y_1..y_n)`, `w ∈ S_{n+1}`; the second
/// alphabet is emitted as `b`.
pub fn groth_a_via_compat(w: &GroupElt, n: u32) -> Result<Poly> {
    assert_eq!(w.typ().letter, WeylLetter::A);
    assert_eq!(w.typ().rank, n + 1);
    let cap = n * (n + 1) / 2;
    let words = hecke_words(w, cap);
    let sum = par::map_reduce(
        &words,
        Poly::zero,
        |word| {
            let mut acc = Poly::zero();
            let beta_pow = word.len() - w.length();
            for b in compatible_seqs(word, w.typ(), n) {
                let mut term = Poly::from_term(Mono::beta_pow(beta_pow), BigInt::one());
                for (i, &bi) in b.iter().enumerate() {
                    let ai = word.letters[i].flat();
                    term = &term * &Poly::oplus_var(VarId::x(bi), VarId::b(ai - bi + 1));
                }
                acc.add_assign(&term);
            }
            acc
        },
        |a, b| &a + &b,
    );
    Ok(sum)
}

/// Single-alphabet type-A Grothendieck polynomial by compatible sequences
/// (the double sum with the second alphabet set to zero), emitted in the
/// requested family.
pub fn groth_a_single_via_compat(
    v: &GroupElt,
    n: u32,
    fam: crate::poly::Family,
) -> Result<Poly> {
    assert!(n >= 1);
    let double = groth_a_via_compat(v, n - 1)?;
    let zeroed = double.subst_family_int(crate::poly::Family::B, 0);
    let mut map: BTreeMap<VarId, Poly> = BTreeMap::new();
    for i in 1..n {
        map.insert(VarId::x(i), Poly::var(VarId::new(fam, i)));
    }
    Ok(zeroed.subst(&map))
}

/// All-combinatorial route to the double Grothendieck polynomials of types
/// B/C/D: the Demazure-triple sum over `v1 ⋆ u ⋆ v2 = w` with every piece
/// computed by compatible sequences.
pub fn groth_bcd_via_compat(w: &GroupElt) -> Result<Poly> {
    let typ = w.typ();
    assert!(typ.letter != WeylLetter::A);
    let n = typ.rank;
    let sn = crate::weyl::enumerate(WeylType::a(n))?;
    let embed = |p: &GroupElt| GroupElt::new(typ, p.window().to_vec()).expect("A embeds");
    let cap = stanley_word_cap(typ);
    // F^X_u by compatible sequences, cached over the support
    let mut stanley: BTreeMap<GroupElt, Poly> = BTreeMap::new();
    let mut out = Poly::zero();
    for v1 in &sn {
        let g_b = groth_a_single_via_compat(&v1.inverse(), n, crate::poly::Family::B)?;
        if g_b.is_zero() {
            continue;
        }
        let v1w = embed(v1);
        for v2 in &sn {
            let g_a = groth_a_single_via_compat(v2, n, crate::poly::Family::A)?;
            if g_a.is_zero() {
                continue;
            }
            let v2w = embed(v2);
            for u in crate::weyl::enumerate(typ)? {
                if v1w.demazure(&u).demazure(&v2w) != *w {
                    continue;
                }
                if !stanley.contains_key(&u) {
                    stanley.insert(u.clone(), stanley_via_compat(&u, cap)?);
                }
                let excess = v1w.length() + u.length() + v2w.length() - w.length();
                let term = (&(&g_b * &stanley[&u]) * &g_a).mul_mono(&Mono::beta_pow(excess));
                out.add_assign(&term);
            }
        }
    }
    Ok(out)
}

/// One position of a fixed word `Δ^X_n`: generator, grid coordinate, weight.
#[derive(Debug, Clone)]
pub struct DeltaEntry {
    pub gen: SimpleRef,
    pub coord: (u32, u32),
    pub weight: Poly,
}

/// The fixed word `Δ^X_n` with its coordinates and weights.
#[derive(Debug, Clone)]
pub struct DeltaWord {
    pub typ: WeylType,
    pub entries: Vec<DeltaEntry>,
}

fn xvar(i: u32) -> Poly {
    Poly::var(VarId::x(i))
}

/// `p_i = x_{n+1-i}` for `i ≤ n`, `a_{i-n}` beyond; `q_j = x_j` for
/// `j ≤ n`, `b_{j-n}` beyond.
fn pq_weight(n: u32, i: u32, j: u32) -> Poly {
    let p = if i <= n { xvar(n + 1 - i) } else { Poly::var(VarId::a(i - n)) };
    let q = if j <= n { xvar(j) } else { Poly::var(VarId::b(j - n)) };
    p.oplus(&q)
}

/// Build `Δ^X_n`.  For type D the rank must be even (odd ranks are handled
/// by the callers through the `x_{2m} = 0` truncation rule).
pub fn delta(typ: WeylType) -> Result<DeltaWord> {
    let n = typ.rank;
    let mut entries = Vec::new();
    match typ.letter {
        WeylLetter::A => {
            // triangular grid for S_n: row m has (s_{n-m}, …, s_{n-1}) at
            // coordinates (i, n-m), weight a_i ⊕ b_j
            for m in 1..n {
                for i in 1..=m {
                    let j = n - m;
                    entries.push(DeltaEntry {
                        gen: SimpleRef::S(i + j - 1),
                        coord: (i, j),
                        weight: Poly::oplus_var(VarId::a(i), VarId::b(j)),
                    });
                }
            }
        }
        WeylLetter::B | WeylLetter::C => {
            for m in 1..n {
                for r in 1..=m {
                    let (i, j) = (r, 2 * n - m);
                    entries.push(DeltaEntry {
                        gen: SimpleRef::S(i + j - n - 1),
                        coord: (i, j),
                        weight: pq_weight(n, i, j),
                    });
                }
            }
            for j in (1..=n).rev() {
                for i in (n + 1 - j)..=(2 * n - j) {
                    let gen_idx = i + j - n - 1;
                    let gen = if gen_idx == 0 { SimpleRef::S0 } else { SimpleRef::S(gen_idx) };
                    let weight = if typ.letter == WeylLetter::B && i + j == n + 1 {
                        xvar(n + 1 - i)
                    } else {
                        pq_weight(n, i, j)
                    };
                    entries.push(DeltaEntry { gen, coord: (i, j), weight });
                }
            }
        }
        WeylLetter::D => {
            if !n.is_multiple_of(2) {
                return Err(Error::BadIndex);
            }
            for m in 1..n {
                for r in 1..=m {
                    let (i, j) = (r, 2 * n - m);
                    entries.push(DeltaEntry {
                        gen: SimpleRef::S(i + j - n - 1),
                        coord: (i, j),
                        weight: pq_weight(n, i, j),
                    });
                }
            }
            for j in (1..=n).rev() {
                for i in (n + 2 - j)..=(2 * n - j) {
                    let gen = if i + j > n + 2 {
                        SimpleRef::S(i + j - n - 1)
                    } else if j % 2 == 1 {
                        SimpleRef::S(1)
                    } else {
                        SimpleRef::S1hat
                    };
                    entries.push(DeltaEntry { gen, coord: (i, j), weight: pq_weight(n, i, j) });
                }
            }
        }
    }
    Ok(DeltaWord { typ, entries })
}

impl DeltaWord {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The ordered product of all `h(gen, weight)` factors — by the Yang–
    /// Baxter rewriting this equals the generating function itself.
    pub fn product(&self) -> Result<crate::hecke::HeckeElt<Poly>> {
        let factors: Vec<crate::hecke::HFactor<Poly>> = self
            .entries
            .iter()
            .map(|e| crate::hecke::HFactor::new(e.gen, e.weight.clone()))
            .collect();
        crate::hecke::HeckeElt::product_chain(self.typ, &factors)
    }
}

/// An extended excited Young diagram: a reduced subsequence (boxes) together
/// with its backward-movable positions (circles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EydPattern {
    pub boxes: Vec<usize>,
    pub circles: Vec<usize>,
}

/// All reduced subsequences of `Δ` multiplying to `w`, each with its movable
/// set: position `j` between consecutive selected positions is movable when
/// the prefix product absorbs `d_j` (i.e. `d_j` is a right descent of the
/// prefix).  Positions before the first box are never movable.
pub fn rsub(delta: &DeltaWord, w: &GroupElt) -> Vec<EydPattern> {
    let typ = delta.typ;
    let n = delta.entries.len();
    let target_len = w.length();
    let mut out = Vec::new();
    let mut boxes = Vec::new();
    fn rec(
        delta: &DeltaWord,
        w: &GroupElt,
        idx: usize,
        cur: &GroupElt,
        boxes: &mut Vec<usize>,
        out: &mut Vec<EydPattern>,
    ) {
        let remaining = (delta.entries.len() - idx) as u32;
        let need = w.length() - cur.length();
        if need > remaining {
            return;
        }
        if idx == delta.entries.len() {
            if cur == w {
                out.push(EydPattern { boxes: boxes.clone(), circles: Vec::new() });
            }
            return;
        }
        // skip position idx
        rec(delta, w, idx + 1, cur, boxes, out);
        // select position idx if it extends a reduced subword under w
        let s = delta.entries[idx].gen;
        if cur.right_ascends(s) {
            let next = cur.apply_right(s).unwrap();
            if next.bruhat_leq(w) {
                boxes.push(idx);
                rec(delta, w, idx + 1, &next, boxes, out);
                boxes.pop();
            }
        }
    }
    let _ = (n, target_len);
    rec(delta, w, 0, &GroupElt::identity(typ), &mut boxes, &mut out);
    // movable sets
    for pat in &mut out {
        let mut prefixes = Vec::with_capacity(pat.boxes.len() + 1);
        let mut acc = GroupElt::identity(typ);
        prefixes.push(acc.clone());
        for &j in &pat.boxes {
            acc = acc.apply_right(delta.entries[j].gen).unwrap();
            prefixes.push(acc.clone());
        }
        for j in 0..delta.entries.len() {
            if pat.boxes.contains(&j) {
                continue;
            }
            let p = pat.boxes.iter().filter(|&&b| b < j).count();
            if p == 0 {
                continue; // empty prefix absorbs nothing
            }
            let prefix = &prefixes[p];
            if !prefix.right_ascends(delta.entries[j].gen) {
                pat.circles.push(j);
            }
        }
    }
    out.sort_by(|a, b| a.boxes.cmp(&b.boxes));
    out
}

/// `Wt(D) = ∏_boxes wt · ∏_circles (1 + β·wt)`.
pub fn pattern_weight(delta: &DeltaWord, pat: &EydPattern) -> Poly {
    let mut w = Poly::one();
    for &j in &pat.boxes {
        w = &w * &delta.entries[j].weight;
    }
    for &j in &pat.circles {
        w = &w * &Poly::one_plus_beta(&delta.entries[j].weight);
    }
    w
}

/// The extended-EYD state sum for `G^X_{n,w}(a,b;x)` (types B, C and even-
/// rank D; type A gives `G^{A_{n-1}}_w(a,b)`).  Odd-rank D goes through the
/// next even rank with `x_{n+1} = 0`.
pub fn groth_via_eyd(w: &GroupElt) -> Result<Poly> {
    let typ = w.typ();
    if typ.letter == WeylLetter::D && typ.rank % 2 == 1 {
        let up = WeylType::d(typ.rank + 1);
        let mut window = w.window().to_vec();
        window.push(typ.rank as i32 + 1);
        let lifted = GroupElt::new(up, window)?;
        let sum = groth_via_eyd(&lifted)?;
        return Ok(sum.subst_var_int(VarId::x(typ.rank + 1), 0));
    }
    let dw = delta(typ)?;
    let pats = rsub(&dw, w);
    Ok(par::map_reduce(
        &pats,
        Poly::zero,
        |p| pattern_weight(&dw, p),
        |a, b| &a + &b,
    ))
}

/// Minimal SVG rendering of patterns on the Δ grid (presentation only).
pub fn patterns_svg(delta: &DeltaWord, pats: &[EydPattern]) -> String {
    let cell = 28;
    let max_i = delta.entries.iter().map(|e| e.coord.0).max().unwrap_or(1);
    let max_j = delta.entries.iter().map(|e| e.coord.1).max().unwrap_or(1);
    let (gw, gh) = (max_i * cell + cell, max_j * cell + cell);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n",
        gw + cell,
        (gh + cell) * pats.len().max(1) as u32
    ));
    for (pi, pat) in pats.iter().enumerate() {
        let oy = pi as u32 * (gh + cell);
        for (k, e) in delta.entries.iter().enumerate() {
            let (i, j) = e.coord;
            let x = i * cell;
            let y = oy + (max_j - j) * cell + cell / 2;
            out.push_str(&format!(
                "<rect x=\"{x}\" y=\"{y}\" width=\"{cell}\" height=\"{cell}\" fill=\"none\" stroke=\"black\"/>\n"
            ));
            let cx = x + cell / 2;
            let cy = y + cell / 2;
            if pat.boxes.contains(&k) {
                out.push_str(&format!(
                    "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"black\"/>\n",
                    cx - cell / 4,
                    cy - cell / 4,
                    cell / 2,
                    cell / 2
                ));
            } else if pat.circles.contains(&k) {
                out.push_str(&format!(
                    "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                    cell / 4
                ));
            } else {
                out.push_str(&format!(
                    "<text x=\"{cx}\" y=\"{}\" font-size=\"10\" text-anchor=\"middle\">{}</text>\n",
                    cy + 3,
                    e.gen
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

/// JSON for one pattern: box/circle coordinate lists plus the weight.
pub fn pattern_json(delta: &DeltaWord, pat: &EydPattern) -> serde_json::Value {
    let coords = |ix: &[usize]| -> Vec<[u32; 2]> {
        ix.iter()
            .map(|&j| [delta.entries[j].coord.0, delta.entries[j].coord.1])
            .collect()
    };
    serde_json::json!({
        "boxes": coords(&pat.boxes),
        "circles": coords(&pat.circles),
        "weight": pattern_weight(delta, pat).to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::GTable;

    fn word(typ: WeylType, w: &[SimpleRef]) -> GroupElt {
        GroupElt::from_word(typ, w).unwrap()
    }

    #[test]
    fn hecke_words_basics() {
        let typ = WeylType::c(2);
        let e = GroupElt::identity(typ);
        assert_eq!(hecke_words(&e, 2), vec![HeckeWord { letters: vec![] }]);
        let s0 = word(typ, &[SimpleRef::S0]);
        let ws = hecke_words(&s0, 2);
        assert_eq!(
            ws,
            vec![
                HeckeWord { letters: vec![SimpleRef::S0] },
                HeckeWord { letters: vec![SimpleRef::S0, SimpleRef::S0] },
            ]
        );
        // D2: words for s1 s1hat at cap 2 are the two commuted orders
        let d2 = WeylType::d(2);
        let w = word(d2, &[SimpleRef::S(1), SimpleRef::S1hat]);
        let ws = hecke_words(&w, 2);
        assert_eq!(ws.len(), 2);
    }

    #[test]
    fn compatible_seqs_example_3() {
        let d2 = WeylType::d(2);
        let pair = HeckeWord { letters: vec![SimpleRef::S(1), SimpleRef::S1hat] };
        let bs = compatible_seqs(&pair, d2, 2);
        assert_eq!(bs, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        let triple = HeckeWord {
            letters: vec![SimpleRef::S(1), SimpleRef::S1hat, SimpleRef::S(1)],
        };
        let bs = compatible_seqs(&triple, d2, 2);
        assert!(bs.contains(&vec![1, 1, 2]));
        assert!(bs.contains(&vec![1, 2, 2]));
        // repeated unflattened 1̂ needs a strict increase
        let rep = HeckeWord { letters: vec![SimpleRef::S1hat, SimpleRef::S1hat] };
        let bs = compatible_seqs(&rep, d2, 2);
        assert_eq!(bs, vec![vec![1, 2]]);
    }

    #[test]
    fn compatible_seqs_type_a_empty() {
        let a2 = WeylType::a(2);
        let w = HeckeWord { letters: vec![SimpleRef::S(1), SimpleRef::S(1)] };
        assert!(compatible_seqs(&w, a2, 1).is_empty());
    }

    #[test]
    fn example_3_stanley_sum() {
        // F^D_{s1 s1hat}(x1,x2) = (x1⊕x2)²
        let d2 = WeylType::d(2);
        let w = word(d2, &[SimpleRef::S(1), SimpleRef::S1hat]);
        let f = stanley_via_compat(&w, stanley_word_cap(d2)).unwrap();
        assert_eq!(f, Poly::oplus_var(VarId::x(1), VarId::x(2)).pow(2));
    }

    #[test]
    fn delta_examples() {
        // Δ^A_3 (S4): 6 positions; d4 at (1,1) has weight a1⊕b1
        let d = delta(WeylType::a(4)).unwrap();
        assert_eq!(d.len(), 6);
        assert_eq!(d.entries[3].coord, (1, 1));
        assert_eq!(d.entries[3].weight, Poly::oplus_var(VarId::a(1), VarId::b(1)));
        // Δ^C_3: d7 is s0 with weight x2⊕x2
        let d = delta(WeylType::c(3)).unwrap();
        assert_eq!(d.len(), 12);
        assert_eq!(d.entries[6].gen, SimpleRef::S0);
        assert_eq!(d.entries[6].weight, xvar(2).oplus(&xvar(2)));
        // Δ^D_4: 18 positions, d7 = s1hat with weight x3⊕x4
        let d = delta(WeylType::d(4)).unwrap();
        assert_eq!(d.len(), 18);
        assert_eq!(d.entries[6].gen, SimpleRef::S1hat);
        assert_eq!(d.entries[6].weight, xvar(3).oplus(&xvar(4)));
    }

    #[test]
    fn example_6_pattern() {
        // w = [3,1,4,2] = s2 s3 s1: D = (d2,d3,d4), B(D) = {d6}
        let typ = WeylType::a(4);
        let d = delta(typ).unwrap();
        let w = GroupElt::new(typ, vec![3, 1, 4, 2]).unwrap();
        let pats = rsub(&d, &w);
        let target = EydPattern { boxes: vec![1, 2, 3], circles: vec![5] };
        assert!(pats.contains(&target), "{pats:?}");
        let wt = pattern_weight(&d, &target);
        let expect = &(&(&Poly::oplus_var(VarId::a(1), VarId::b(2))
            * &Poly::oplus_var(VarId::a(2), VarId::b(2)))
            * &Poly::oplus_var(VarId::a(1), VarId::b(1)))
            * &Poly::one_plus_beta(&Poly::oplus_var(VarId::a(3), VarId::b(1)));
        assert_eq!(wt, expect);
    }

    #[test]
    fn example_7_five_patterns() {
        // w = [1,4,3,2]: exactly 5 patterns
        let typ = WeylType::a(4);
        let d = delta(typ).unwrap();
        let w = GroupElt::new(typ, vec![1, 4, 3, 2]).unwrap();
        let pats = rsub(&d, &w);
        assert_eq!(pats.len(), 5);
        // empty pattern for the identity, with no circles
        let e = GroupElt::identity(typ);
        let pats = rsub(&d, &e);
        assert_eq!(pats, vec![EydPattern { boxes: vec![], circles: vec![] }]);
    }

    #[test]
    fn delta_product_equals_generating_function() {
        // Lemma 9/10 rewriting: the Δ-grid product equals the Def. 8 product
        for typ in [WeylType::c(2), WeylType::b(2), WeylType::d(2)] {
            let grid = delta(typ).unwrap().product().unwrap();
            let direct = crate::genfun::build_g_first(typ).unwrap();
            assert_eq!(grid, direct, "{typ}");
        }
    }

    #[test]
    fn eyd_matches_genfun_c2() {
        let typ = WeylType::c(2);
        let g = GTable::first_kind(typ).unwrap();
        for w in crate::weyl::enumerate(typ).unwrap() {
            assert_eq!(groth_via_eyd(&w).unwrap(), g.get(&w), "at {w}");
        }
    }
}
