//! Finite Weyl groups of types A, B=C, D as (signed) permutations in window
//! notation: lengths, descents, reduced words, Bruhat order, Demazure
//! product, and the Grassmannian ↔ strict partition dictionary.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum WeylLetter {
    A,
    B,
    C,
    D,
}

impl WeylLetter {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(WeylLetter::A),
            "B" | "b" => Ok(WeylLetter::B),
            "C" | "c" => Ok(WeylLetter::C),
            "D" | "d" => Ok(WeylLetter::D),
            _ => Err(Error::Parse(format!("unknown type letter `{s}`"))),
        }
    }
}

impl fmt::Display for WeylLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            WeylLetter::A => 'A',
            WeylLetter::B => 'B',
            WeylLetter::C => 'C',
            WeylLetter::D => 'D',
        };
        write!(f, "{c}")
    }
}

/// Group type: a letter and a rank.  For type A the rank is the window size,
/// i.e. `WeylType::new(A, n)` is the symmetric group `S_n = W(A_{n-1})`.
/// B and C share the same group; the letter only matters downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeylType {
    pub letter: WeylLetter,
    pub rank: u32,
}

impl WeylType {
    pub fn new(letter: WeylLetter, rank: u32) -> Self {
        assert!(rank >= 1);
        if letter == WeylLetter::D {
            assert!(rank >= 2, "type D requires rank >= 2");
        }
        WeylType { letter, rank }
    }

    pub fn a(n: u32) -> Self {
        WeylType::new(WeylLetter::A, n)
    }

    pub fn b(n: u32) -> Self {
        WeylType::new(WeylLetter::B, n)
    }

    pub fn c(n: u32) -> Self {
        WeylType::new(WeylLetter::C, n)
    }

    pub fn d(n: u32) -> Self {
        WeylType::new(WeylLetter::D, n)
    }

    /// The simple reflections of this group, in the canonical order
    /// `0 < 1̂ < 1 < 2 < …`.
    pub fn generators(self) -> Vec<SimpleRef> {
        let mut gens = Vec::new();
        match self.letter {
            WeylLetter::A => {}
            WeylLetter::B | WeylLetter::C => gens.push(SimpleRef::S0),
            WeylLetter::D => gens.push(SimpleRef::S1hat),
        }
        for i in 1..self.rank {
            gens.push(SimpleRef::S(i));
        }
        gens
    }

    pub fn is_valid_gen(self, s: SimpleRef) -> bool {
        match s {
            SimpleRef::S0 => matches!(self.letter, WeylLetter::B | WeylLetter::C),
            SimpleRef::S1hat => self.letter == WeylLetter::D,
            SimpleRef::S(i) => i >= 1 && i < self.rank,
        }
    }

    pub fn order(self) -> u128 {
        let n = self.rank as u128;
        let fact = (1..=n).product::<u128>();
        match self.letter {
            WeylLetter::A => fact,
            WeylLetter::B | WeylLetter::C => fact << n,
            WeylLetter::D => fact << (n - 1),
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// Simple reflection index: `0` (types B/C), `1̂` (type D), or `i ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SimpleRef {
    S0,
    S1hat,
    S(u32),
}

impl SimpleRef {
    /// Flattened index for word comparisons: `1̂` counts as 1.
    pub fn flat(self) -> u32 {
        match self {
            SimpleRef::S0 => 0,
            SimpleRef::S1hat => 1,
            SimpleRef::S(i) => i,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(SimpleRef::S0),
            "1h" | "1^" | "1hat" => Ok(SimpleRef::S1hat),
            _ => s
                .parse::<u32>()
                .ok()
                .filter(|&i| i >= 1)
                .map(SimpleRef::S)
                .ok_or_else(|| Error::Parse(format!("bad generator `{s}`"))),
        }
    }
}

impl fmt::Display for SimpleRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleRef::S0 => write!(f, "0"),
            SimpleRef::S1hat => write!(f, "1h"),
            SimpleRef::S(i) => write!(f, "{i}"),
        }
    }
}

/// Group element in window notation `[w(1), …, w(n)]`; negative entries are
/// the barred values.  Type A windows are positive; type D windows carry an
/// even number of negative entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElt {
    typ: WeylType,
    window: Vec<i32>,
}

impl GroupElt {
    pub fn new(typ: WeylType, window: Vec<i32>) -> Result<Self> {
        if window.len() != typ.rank as usize {
            return Err(Error::Parse(format!(
                "window length {} does not match rank {}",
                window.len(),
                typ.rank
            )));
        }
        let mut seen = vec![false; typ.rank as usize];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > typ.rank as usize || seen[a - 1] {
                return Err(Error::Parse(format!("not a signed permutation: {window:?}")));
            }
            seen[a - 1] = true;
        }
        let negs = window.iter().filter(|&&v| v < 0).count();
        match typ.letter {
            WeylLetter::A if negs > 0 => {
                return Err(Error::Parse("type A windows must be positive".into()))
            }
            WeylLetter::D if negs % 2 != 0 => {
                return Err(Error::Parse("type D windows need an even number of bars".into()))
            }
            _ => {}
        }
        Ok(GroupElt { typ, window })
    }

    pub fn identity(typ: WeylType) -> Self {
        GroupElt {
            typ,
            window: (1..=typ.rank as i32).collect(),
        }
    }

    pub fn typ(&self) -> WeylType {
        self.typ
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for any integer `i ≠ 0` with `w(-i) = -w(i)`; entries beyond the
    /// window are fixed.
    pub fn value(&self, i: i32) -> i32 {
        let a = i.unsigned_abs() as usize;
        let v = if a <= self.window.len() {
            self.window[a - 1]
        } else {
            a as i32
        };
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    pub fn inverse(&self) -> GroupElt {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            if v > 0 {
                window[v as usize - 1] = pos;
            } else {
                window[(-v) as usize - 1] = -pos;
            }
        }
        GroupElt { typ: self.typ, window }
    }

    /// Group product: `(self·other)(i) = self(other(i))`.
    pub fn compose(&self, other: &GroupElt) -> GroupElt {
        assert_eq!(self.typ, other.typ, "same group required");
        let window = (1..=self.window.len() as i32)
            .map(|i| self.value(other.value(i)))
            .collect();
        GroupElt { typ: self.typ, window }
    }

    fn check_gen(&self, s: SimpleRef) -> Result<()> {
        if self.typ.is_valid_gen(s) {
            Ok(())
        } else {
            Err(Error::InvalidGenerator(s.to_string(), self.typ.to_string()))
        }
    }

    /// Right multiplication `w·s` (acts on positions).
    pub fn apply_right(&self, s: SimpleRef) -> Result<GroupElt> {
        self.check_gen(s)?;
        let mut w = self.window.clone();
        match s {
            SimpleRef::S(i) => w.swap(i as usize - 1, i as usize),
            SimpleRef::S0 => w[0] = -w[0],
            SimpleRef::S1hat => {
                let (a, b) = (w[0], w[1]);
                w[0] = -b;
                w[1] = -a;
            }
        }
        Ok(GroupElt { typ: self.typ, window: w })
    }

    /// Left multiplication `s·w` (acts on values).
    pub fn apply_left(&self, s: SimpleRef) -> Result<GroupElt> {
        self.check_gen(s)?;
        let map = |v: i32| -> i32 {
            match s {
                SimpleRef::S(i) => {
                    let i = i as i32;
                    if v == i {
                        i + 1
                    } else if v == i + 1 {
                        i
                    } else if v == -i {
                        -(i + 1)
                    } else if v == -(i + 1) {
                        -i
                    } else {
                        v
                    }
                }
                SimpleRef::S0 => {
                    if v == 1 {
                        -1
                    } else if v == -1 {
                        1
                    } else {
                        v
                    }
                }
                SimpleRef::S1hat => match v {
                    1 => -2,
                    2 => -1,
                    -1 => 2,
                    -2 => 1,
                    _ => v,
                },
            }
        };
        let window = self.window.iter().map(|&v| map(v)).collect();
        Ok(GroupElt { typ: self.typ, window })
    }

    /// Does `w·s` go up in length?
    pub fn right_ascends(&self, s: SimpleRef) -> bool {
        match s {
            SimpleRef::S(i) => self.window[i as usize - 1] < self.window[i as usize],
            SimpleRef::S0 => self.window[0] > 0,
            SimpleRef::S1hat => self.window[0] + self.window[1] > 0,
        }
    }

    pub fn left_ascends(&self, s: SimpleRef) -> bool {
        self.inverse().right_ascends(s)
    }

    /// Coxeter length via the window inversion formulas.
    pub fn length(&self) -> u32 {
        let w = &self.window;
        let n = w.len();
        let mut inv = 0u32;
        for i in 0..n {
            for j in i + 1..n {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        match self.typ.letter {
            WeylLetter::A => inv,
            WeylLetter::B | WeylLetter::C => {
                let negsum: u32 = w.iter().filter(|&&v| v < 0).map(|&v| v.unsigned_abs()).sum();
                inv + negsum
            }
            WeylLetter::D => {
                let negsum: u32 = w
                    .iter()
                    .filter(|&&v| v < 0)
                    .map(|&v| v.unsigned_abs() - 1)
                    .sum();
                inv + negsum
            }
        }
    }

    /// Deterministic reduced word: smallest right descent first.
    pub fn reduced_word(&self) -> Vec<SimpleRef> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        'outer: while !w.is_identity() {
            for s in self.typ.generators() {
                if !w.right_ascends(s) {
                    w = w.apply_right(s).unwrap();
                    rev.push(s);
                    continue 'outer;
                }
            }
            unreachable!("non-identity element without a right descent");
        }
        rev.reverse();
        rev
    }

    pub fn from_word(typ: WeylType, word: &[SimpleRef]) -> Result<GroupElt> {
        let mut w = GroupElt::identity(typ);
        for &s in word {
            w = w.apply_right(s)?;
        }
        Ok(w)
    }

    /// Demazure product `self ⋆ other`.
    pub fn demazure(&self, other: &GroupElt) -> GroupElt {
        let mut z = self.clone();
        for s in other.reduced_word() {
            if z.right_ascends(s) {
                z = z.apply_right(s).unwrap();
            }
        }
        z
    }

    pub fn demazure_gen(&self, s: SimpleRef) -> GroupElt {
        if self.right_ascends(s) {
            self.apply_right(s).unwrap()
        } else {
            self.clone()
        }
    }

    /// Bruhat order, by the descent recursion.
    pub fn bruhat_leq(&self, v: &GroupElt) -> bool {
        assert_eq!(self.typ, v.typ);
        if self.is_identity() {
            return true;
        }
        if self.length() > v.length() {
            return false;
        }
        // pick a right descent s of v
        let s = self
            .typ
            .generators()
            .into_iter()
            .find(|&s| !v.right_ascends(s))
            .expect("non-identity v has a descent");
        let vs = v.apply_right(s).unwrap();
        if !self.right_ascends(s) {
            self.apply_right(s).unwrap().bruhat_leq(&vs)
        } else {
            self.bruhat_leq(&vs)
        }
    }

    /// Longest element.
    pub fn longest(typ: WeylType) -> GroupElt {
        let n = typ.rank as i32;
        let window = match typ.letter {
            WeylLetter::A => (1..=n).rev().collect(),
            WeylLetter::B | WeylLetter::C => (1..=n).map(|i| -i).collect(),
            WeylLetter::D => {
                if n % 2 == 0 {
                    (1..=n).map(|i| -i).collect()
                } else {
                    std::iter::once(1).chain((2..=n).map(|i| -i)).collect()
                }
            }
        };
        GroupElt { typ, window }
    }

    /// Grassmannian = strictly increasing window (minimal coset
    /// representative for `W/S_n`).
    pub fn is_grassmannian(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    /// The strict partition `λ_X(w)` of a Grassmannian element.
    pub fn lambda(&self) -> Result<StrictPartition> {
        if !self.is_grassmannian() {
            return Err(Error::NotGrassmannian(self.to_string()));
        }
        let mut parts: Vec<u32> = self
            .window
            .iter()
            .filter(|&&v| v < 0)
            .map(|&v| v.unsigned_abs())
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if self.typ.letter == WeylLetter::D {
            for p in &mut parts {
                *p -= 1;
            }
            while parts.last() == Some(&0) {
                parts.pop();
            }
        }
        Ok(StrictPartition::new(parts))
    }

    pub fn to_text(&self) -> String {
        format!(
            "{}:[{}]",
            self.typ,
            self.window
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl FromStr for GroupElt {
    type Err = Error;

    /// Parses `C3:[2,-3,1]`.
    fn from_str(s: &str) -> Result<GroupElt> {
        let (ty, win) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `T<rank>:[..]`, got `{s}`")))?;
        let letter = WeylLetter::parse(&ty[..1])?;
        let rank: u32 = ty[1..]
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in `{ty}`")))?;
        let win = win
            .trim()
            .strip_prefix('[')
            .and_then(|w| w.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad window `{win}`")))?;
        let window = win
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad window entry `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        GroupElt::new(WeylType::new(letter, rank), window)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupEltJson {
    #[serde(rename = "type")]
    pub typ: String,
    pub rank: u32,
    pub window: Vec<i32>,
}

impl GroupElt {
    pub fn to_json(&self) -> GroupEltJson {
        GroupEltJson {
            typ: self.typ.letter.to_string(),
            rank: self.typ.rank,
            window: self.window.clone(),
        }
    }
}

/// Enumeration cap for whole-group sweeps.
pub const DEFAULT_ENUM_CAP: u128 = 1_000_000;

/// All elements of `W`, each exactly once, in a deterministic order.
pub fn enumerate(typ: WeylType) -> Result<Vec<GroupElt>> {
    if typ.order() > DEFAULT_ENUM_CAP {
        return Err(Error::TooLarge(format!("|{typ}| = {}", typ.order())));
    }
    let n = typ.rank as usize;
    let mut perms: Vec<Vec<i32>> = Vec::new();
    let mut cur: Vec<i32> = Vec::new();
    fn rec(n: usize, cur: &mut Vec<i32>, used: &mut Vec<bool>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                cur.push(v as i32);
                rec(n, cur, used, out);
                cur.pop();
                used[v - 1] = false;
            }
        }
    }
    rec(n, &mut cur, &mut vec![false; n], &mut perms);

    let mut out = Vec::new();
    for p in perms {
        match typ.letter {
            WeylLetter::A => out.push(GroupElt { typ, window: p }),
            _ => {
                for mask in 0u32..(1 << n) {
                    if typ.letter == WeylLetter::D && mask.count_ones() % 2 != 0 {
                        continue;
                    }
                    let window = p
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| if mask & (1 << i) != 0 { -v } else { v })
                        .collect();
                    out.push(GroupElt { typ, window });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Elements sorted by `(length, window)` — the order used for triangular
/// solves and JSON dumps.
pub fn enumerate_by_length(typ: WeylType) -> Result<Vec<GroupElt>> {
    let mut v = enumerate(typ)?;
    v.sort_by_key(|w| (w.length(), w.window().to_vec()));
    Ok(v)
}

/// Strict partition `λ_1 > λ_2 > … > λ_r > 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|p| p[0] > p[1]) && parts.iter().all(|&p| p > 0),
            "not strictly decreasing positive: {parts:?}"
        );
        StrictPartition(parts)
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn contains(&self, other: &StrictPartition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.0.get(i).map(|&q| q >= p).unwrap_or(false))
    }

    /// All strict partitions of `size` with at most `max_len` parts.
    pub fn all_of_size(size: u32, max_len: usize) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max_part: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if rem == 0 {
                out.push(StrictPartition(cur.clone()));
                return;
            }
            if left == 0 {
                return;
            }
            let hi = rem.min(max_part);
            for p in (1..=hi).rev() {
                cur.push(p);
                rec(rem - p, p.saturating_sub(1), left - 1, cur, out);
                cur.pop();
            }
        }
        rec(size, size, max_len, &mut cur, &mut out);
        // descending lex
        out.sort_by(|a, b| b.0.cmp(&a.0));
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> WeylType {
        WeylType::c(2)
    }

    #[test]
    fn window_generator_actions() {
        let e = GroupElt::identity(WeylType::a(3));
        assert_eq!(e.apply_right(SimpleRef::S(1)).unwrap().window(), &[2, 1, 3]);
        let e = GroupElt::identity(c2());
        assert_eq!(e.apply_right(SimpleRef::S0).unwrap().window(), &[-1, 2]);
        let e = GroupElt::identity(WeylType::d(2));
        // s1hat = s0 s1 s0 applied stepwise gives [-2, -1]
        assert_eq!(e.apply_right(SimpleRef::S1hat).unwrap().window(), &[-2, -1]);
    }

    #[test]
    fn lengths() {
        assert_eq!(GroupElt::identity(c2()).length(), 0);
        // s0 s1 s0
        let w = GroupElt::from_word(c2(), &[SimpleRef::S0, SimpleRef::S(1), SimpleRef::S0]).unwrap();
        assert_eq!(w.length(), 3);
        assert_eq!(GroupElt::longest(c2()).length(), 4);
        // exhaustive: length = reduced word length, and ±1 under generators
        for w in enumerate(c2()).unwrap() {
            let word = w.reduced_word();
            assert_eq!(word.len() as u32, w.length());
            assert_eq!(GroupElt::from_word(c2(), &word).unwrap(), w);
            for s in c2().generators() {
                let ws = w.apply_right(s).unwrap();
                let (a, b) = (w.length() as i64, ws.length() as i64);
                assert_eq!((a - b).abs(), 1);
                assert_eq!(b > a, w.right_ascends(s));
            }
        }
    }

    #[test]
    fn longest_d_odd_has_even_bars() {
        let w0 = GroupElt::longest(WeylType::d(3));
        assert_eq!(w0.window(), &[1, -2, -3]);
        assert_eq!(w0.length(), 6); // n(n-1) = 6
        for w in enumerate(WeylType::d(3)).unwrap() {
            assert!(w.length() <= 6);
            assert_eq!(w.window().iter().filter(|&&v| v < 0).count() % 2, 0);
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate(WeylType::a(3)).unwrap().len(), 6);
        assert_eq!(enumerate(c2()).unwrap().len(), 8);
        assert_eq!(enumerate(WeylType::d(3)).unwrap().len(), 24);
    }

    #[test]
    fn reduced_word_example_9() {
        // paper gives w = [2̄,4,1̄,3] = s3 s1hat s2 in D4
        let w: GroupElt = "D4:[-2,4,-1,3]".parse().unwrap();
        assert_eq!(w.length(), 3);
        let v = GroupElt::from_word(
            WeylType::d(4),
            &[SimpleRef::S(3), SimpleRef::S1hat, SimpleRef::S(2)],
        )
        .unwrap();
        assert_eq!(v, w);
        let word = w.reduced_word();
        assert_eq!(word.len(), 3);
        assert_eq!(GroupElt::from_word(WeylType::d(4), &word).unwrap(), w);
    }

    #[test]
    fn demazure_props() {
        // s0 ⋆ s0 = s0
        let s0 = GroupElt::from_word(c2(), &[SimpleRef::S0]).unwrap();
        assert_eq!(s0.demazure(&s0), s0);
        let e = GroupElt::identity(c2());
        for w in enumerate(c2()).unwrap() {
            assert_eq!(w.demazure(&e), w);
            assert_eq!(e.demazure(&w), w);
        }
        // s1 ⋆ (s1 s0) = s1 s0
        let s1 = GroupElt::from_word(c2(), &[SimpleRef::S(1)]).unwrap();
        let s1s0 = GroupElt::from_word(c2(), &[SimpleRef::S(1), SimpleRef::S0]).unwrap();
        assert_eq!(s1.demazure(&s1s0), s1s0);
        // associativity on all triples in W(C2)
        let all = enumerate(c2()).unwrap();
        for a in &all {
            for b in &all {
                let ab = a.demazure(b);
                for c in &all {
                    assert_eq!(ab.demazure(c), a.demazure(&b.demazure(c)));
                }
            }
        }
    }

    /// Brute-force Bruhat: w ≤ v iff some reduced word of v has a subword
    /// multiplying to w.
    fn bruhat_brute(w: &GroupElt, v: &GroupElt) -> bool {
        let word = v.reduced_word();
        let masks = 1u32 << word.len();
        for mask in 0..masks {
            let sub: Vec<SimpleRef> = word
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask & (1 << i) != 0)
                .map(|(_, &s)| s)
                .collect();
            if &GroupElt::from_word(w.typ(), &sub).unwrap() == w {
                return true;
            }
        }
        false
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        let all = enumerate(c2()).unwrap();
        let e = GroupElt::identity(c2());
        for w in &all {
            assert!(e.bruhat_leq(w));
            for v in &all {
                assert_eq!(w.bruhat_leq(v), bruhat_brute(w, v), "{w} vs {v}");
            }
        }
    }

    #[test]
    fn grassmannian_dictionary() {
        // w = [1̄,2,…,n] type C → λ=(1)
        let w: GroupElt = "C3:[-1,2,3]".parse().unwrap();
        assert_eq!(w.lambda().unwrap(), StrictPartition::new(vec![1]));
        assert_eq!(
            GroupElt::identity(c2()).lambda().unwrap(),
            StrictPartition::empty()
        );
        // type D, [2̄,1̄,3] → λ=(1)
        let w: GroupElt = "D3:[-2,-1,3]".parse().unwrap();
        assert_eq!(w.lambda().unwrap(), StrictPartition::new(vec![1]));
        // non-Grassmannian errors
        let w: GroupElt = "C2:[2,1]".parse().unwrap();
        assert!(w.lambda().is_err());
        // Bruhat on Grassmannians = containment of strict partitions
        for w in enumerate(WeylType::c(3)).unwrap() {
            if !w.is_grassmannian() {
                continue;
            }
            for v in enumerate(WeylType::c(3)).unwrap() {
                if !v.is_grassmannian() {
                    continue;
                }
                assert_eq!(
                    w.bruhat_leq(&v),
                    v.lambda().unwrap().contains(&w.lambda().unwrap())
                );
            }
        }
    }

    #[test]
    fn strict_partitions_enumeration() {
        let ps = StrictPartition::all_of_size(5, 3);
        assert_eq!(
            ps,
            vec![
                StrictPartition::new(vec![5]),
                StrictPartition::new(vec![4, 1]),
                StrictPartition::new(vec![3, 2]),
            ]
        );
    }
}
