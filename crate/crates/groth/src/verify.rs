//! Named verification suites shared by the CLI `verify` subcommand and the
//! acceptance tests.  Every check is exact; the only tolerance anywhere is
//! zero.

use std::collections::BTreeMap;

use crate::adjoint;
use crate::combinat;
use crate::divdiff::{self, Alphabet};
use crate::error::Result;
use crate::genfun::{self, GTable};
use crate::hecke::HeckeElt;
use crate::localization::{self, PhiMatrix};
use crate::poly::{Family, LocPoly, Poly, TruncSeries, VarId};
use crate::symfun::{self, FactParam};
use crate::weyl::{enumerate_by_length, GroupElt, SimpleRef, StrictPartition, WeylLetter, WeylType};

/// One check outcome.  `report_only` marks conjecture checks that never fail
/// the run.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub report_only: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, report_only: false, detail: detail.into() }
    }

    pub fn report(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, report_only: true, detail: detail.into() }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed || c.report_only)
}

fn word(typ: WeylType, w: &[SimpleRef]) -> GroupElt {
    GroupElt::from_word(typ, w).expect("valid word")
}

fn s(i: u32) -> SimpleRef {
    SimpleRef::S(i)
}

fn xp(i: u32) -> Poly {
    Poly::var(VarId::x(i))
}

/// Deterministic spread of `k` elements from a length-ordered list.
fn sample(elts: &[GroupElt], k: usize) -> Vec<&GroupElt> {
    assert!(elts.len() >= k && k >= 2);
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        out.push(&elts[i * (elts.len() - 1) / (k - 1)]);
    }
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// criterion 1: Yang–Baxter
// ---------------------------------------------------------------------------

fn chain(typ: WeylType, gens: &[(SimpleRef, &Poly)]) -> HeckeElt<Poly> {
    let mut e: HeckeElt<Poly> = HeckeElt::one(typ);
    for &(g, v) in gens {
        e = e.mul_h(g, v).expect("valid generator");
    }
    e
}

pub fn suite_yang_baxter() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let x = xp(1);
    let y = xp(2);
    let xy = x.oplus(&y);
    let xyy = x.oplus(&y).oplus(&y);

    // m = 2 pairs across ranks ≤ 4
    let m2: Vec<(WeylType, SimpleRef, SimpleRef)> = vec![
        (WeylType::a(4), s(1), s(3)),
        (WeylType::c(3), SimpleRef::S0, s(2)),
        (WeylType::c(4), SimpleRef::S0, s(3)),
        (WeylType::d(3), SimpleRef::S1hat, s(1)),
        (WeylType::d(4), SimpleRef::S1hat, s(3)),
    ];
    for (typ, i, j) in m2 {
        let ok = chain(typ, &[(i, &x), (j, &y)]) == chain(typ, &[(j, &y), (i, &x)]);
        checks.push(Check::new(format!("yb-m2 {typ} ({i},{j})"), ok, ""));
    }

    // m = 3: h_i(x) h_j(x⊕y) h_i(y) = h_j(y) h_i(x⊕y) h_j(x)
    let m3: Vec<(WeylType, SimpleRef, SimpleRef)> = vec![
        (WeylType::a(3), s(1), s(2)),
        (WeylType::a(4), s(2), s(3)),
        (WeylType::c(3), s(1), s(2)),
        (WeylType::d(3), SimpleRef::S1hat, s(2)),
        (WeylType::d(4), s(2), s(3)),
    ];
    for (typ, i, j) in m3 {
        let lhs = chain(typ, &[(i, &x), (j, &xy), (i, &y)]);
        let rhs = chain(typ, &[(j, &y), (i, &xy), (j, &x)]);
        checks.push(Check::new(format!("yb-m3 {typ} ({i},{j})"), lhs == rhs, ""));
    }

    // m = 4 in W(C2), both orientations:
    // h_i(x) h_j(x⊕y) h_i(x⊕y⊕y) h_j(y) = h_j(y) h_i(x⊕y⊕y) h_j(x⊕y) h_i(x)
    for (i, j) in [(SimpleRef::S0, s(1)), (s(1), SimpleRef::S0)] {
        let typ = WeylType::c(2);
        let lhs = chain(typ, &[(i, &x), (j, &xy), (i, &xyy), (j, &y)]);
        let rhs = chain(typ, &[(j, &y), (i, &xyy), (j, &xy), (i, &x)]);
        checks.push(Check::new(format!("yb-m4 {typ} ({i},{j})"), lhs == rhs, ""));
    }

    // Lemma 2: [i,j]_x [j,i]_y = [j,i]_y [i,j]_x for 1 ≤ i ≤ j ≤ n−1, n ≤ 4
    for n in 2..=4u32 {
        let typ = WeylType::a(n);
        let mut ok = true;
        for i in 1..n {
            for j in i..n {
                let up: Vec<(SimpleRef, &Poly)> = (i..=j).map(|k| (s(k), &x)).collect();
                let down: Vec<(SimpleRef, &Poly)> = (i..=j).rev().map(|k| (s(k), &y)).collect();
                let lhs = chain(typ, &[up.clone(), down.clone()].concat());
                let rhs = chain(typ, &[down, up].concat());
                ok &= lhs == rhs;
            }
        }
        checks.push(Check::new(format!("lemma2 interval commutation n={n}"), ok, ""));
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// criterion 2: commutation / inverse (Lemma 3)
// ---------------------------------------------------------------------------

pub fn suite_commutation() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for letter in [WeylLetter::B, WeylLetter::C, WeylLetter::D] {
        for n in 2..=3u32 {
            let typ = WeylType::new(letter, n);
            let fx = genfun::build_f(typ, &xp(1))?;
            let fy = genfun::build_f(typ, &xp(2))?;
            let comm = fx.mul(&fy)? == fy.mul(&fx)?;
            checks.push(Check::new(format!("lemma3 F{letter}_{n} commute"), comm, ""));

            let fxl = fx.map_loc();
            let mut fxbar = HeckeElt::one(typ);
            for gen in genfun::f_gen_sequence(letter, n) {
                fxbar = fxbar.mul_h(gen, &LocPoly::bar(VarId::x(1)))?;
            }
            let inv = fxl.mul(&fxbar)? == HeckeElt::one(typ);
            checks.push(Check::new(format!("lemma3 F{letter}_{n}(x)F(x̄)=1"), inv, ""));
        }
    }
    // Lemma 3(1): A_i blocks commute
    for n in 2..=4u32 {
        let typ = WeylType::a(n);
        let mut ok = true;
        for i in 1..n {
            let ax = genfun::build_a_block(typ, i, &xp(1))?;
            let ay = genfun::build_a_block(typ, i, &xp(2))?;
            ok &= ax.mul(&ay)? == ay.mul(&ax)?;
        }
        checks.push(Check::new(format!("lemma3 A-blocks commute n={n}"), ok, ""));
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// criterion 3: oracle equivalence, pipe dreams
// ---------------------------------------------------------------------------

pub fn suite_oracle_eyd() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    // Thm 4: all of S3 and S4 against the Lemma-8 product
    for n in [3u32, 4] {
        let table = GTable::a_double(n)?;
        let mut ok = true;
        for w in enumerate_by_length(WeylType::a(n))? {
            ok &= combinat::groth_via_eyd(&w)? == table.get(&w);
        }
        checks.push(Check::new(format!("thm4 eyd = product, S{n}"), ok, ""));
    }
    // Thm 5: all of B2, C2; 10 sampled in C3
    for typ in [WeylType::b(2), WeylType::c(2)] {
        let table = GTable::first_kind(typ)?;
        let mut ok = true;
        for w in enumerate_by_length(typ)? {
            ok &= combinat::groth_via_eyd(&w)? == table.get(&w);
        }
        checks.push(Check::new(format!("thm5 eyd = extraction, {typ}"), ok, ""));
    }
    // 10 sampled in C3, plus 10 in B3 to exercise the type-B anti-diagonal
    // weight override at a nontrivial rank
    for typ in [WeylType::c(3), WeylType::b(3)] {
        let table = GTable::first_kind(typ)?;
        let elts = enumerate_by_length(typ)?;
        let mut ok = true;
        for w in sample(&elts, 10) {
            ok &= combinat::groth_via_eyd(w)? == table.get(w);
        }
        checks.push(Check::new(format!("thm5 eyd = extraction, 10 sampled in {typ}"), ok, ""));
    }
    // Thm 6: all of D2; 10 sampled in D3 through the x-truncation rule
    {
        let typ = WeylType::d(2);
        let table = GTable::first_kind(typ)?;
        let mut ok = true;
        for w in enumerate_by_length(typ)? {
            ok &= combinat::groth_via_eyd(&w)? == table.get(&w);
        }
        checks.push(Check::new("thm6 eyd = extraction, D2", ok, ""));
    }
    {
        let typ = WeylType::d(3);
        let table = GTable::first_kind(typ)?;
        let elts = enumerate_by_length(typ)?;
        let mut ok = true;
        for w in sample(&elts, 10) {
            ok &= combinat::groth_via_eyd(w)? == table.get(w);
        }
        checks.push(Check::new("thm6 eyd = extraction, 10 sampled in D3 (odd rank)", ok, ""));
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// criterion 4: oracle equivalence, compatible sequences
// ---------------------------------------------------------------------------

pub fn suite_oracle_compat() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    {
        let typ = WeylType::c(2);
        let st = GTable::stanley(typ)?;
        let cap = combinat::stanley_word_cap(typ);
        let mut ok = true;
        for w in enumerate_by_length(typ)? {
            ok &= combinat::stanley_via_compat(&w, cap)? == st.get(&w);
        }
        checks.push(Check::new("prop17 compat = F^C_w, all of C2", ok, ""));
    }
    {
        // double type A: all w ∈ S3 with G^{A_2}(x, y)
        let table = GTable::a_double(3)?;
        let mut ok = true;
        for w in enumerate_by_length(WeylType::a(3))? {
            let via = combinat::groth_a_via_compat(&w, 2)?;
            let expect = genfun::rename_ab(&table.get(&w), &[xp(1), xp(2)], &[]);
            ok &= via == expect;
        }
        checks.push(Check::new("prop17 compat = G^A_w(x,y), all of S3", ok, ""));
    }
    {
        // Example 2: F^C_{s0}(x1..xn) = GQ_1 for n = 2, 3
        let mut ok = true;
        for n in [2u32, 3] {
            let typ = WeylType::c(n);
            let w = word(typ, &[SimpleRef::S0]);
            let f = combinat::stanley_via_compat(&w, combinat::stanley_word_cap(typ))?;
            ok &= f == symfun::gq(&StrictPartition::new(vec![1]), n, FactParam::Zero)?;
        }
        checks.push(Check::new("example2 F^C_{s0} = GQ_1", ok, ""));
        // and F^B_{s0} = GP_1
        let typ = WeylType::b(2);
        let w = word(typ, &[SimpleRef::S0]);
        let f = combinat::stanley_via_compat(&w, combinat::stanley_word_cap(typ))?;
        let ok = f == symfun::gp(&StrictPartition::new(vec![1]), 2, FactParam::Zero)?;
        checks.push(Check::new("example2 F^B_{s0} = GP_1", ok, ""));
    }
    {
        // Example 3: F^D_{s1 s1hat}(x1,x2) = (x1⊕x2)^2
        let typ = WeylType::d(2);
        let w = word(typ, &[s(1), SimpleRef::S1hat]);
        let f = combinat::stanley_via_compat(&w, combinat::stanley_word_cap(typ))?;
        let ok = f == xp(1).oplus(&xp(2)).pow(2);
        checks.push(Check::new("example3 F^D_{s1 s1hat} = (x1⊕x2)^2", ok, ""));
    }
    {
        // all-combinatorial double polynomials: Demazure triples over
        // compatible-sequence pieces reproduce the generating function
        for typ in [WeylType::c(2), WeylType::b(2), WeylType::d(2)] {
            let table = GTable::first_kind(typ)?;
            let mut ok = true;
            for w in enumerate_by_length(typ)? {
                ok &= combinat::groth_bcd_via_compat(&w)? == table.get(&w);
            }
            checks.push(Check::new(
                format!("prop2+prop17 compat triples = G^X_w, all of {typ}"),
                ok,
                "",
            ));
        }
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// criterion 5: paper example golden values
// ---------------------------------------------------------------------------

pub fn suite_golden() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    // Example 5: the LR expansion of G^C_{s0}·G^C_{s0}.  The recurrence of
    // Prop. 10 forces c_{s0} = ψ^{s0}(s0) = α^C_0(b) = b̄1⊕b̄1, and at
    // β=0, b=0 the classical Pieri rule Q1² = 2Q2 forces the next
    // coefficient to be 2, so the coefficients printed in the paper
    // ((b1⊕b1), 1, β) cannot satisfy its own Thm. 2; the frozen values below
    // are the ones the recurrence determines (see the decisions ledger).
    {
        let typ = WeylType::c(2);
        let m = PhiMatrix::build(typ)?;
        let s0 = word(typ, &[SimpleRef::S0]);
        let coeffs = localization::lr_expand(&m, &s0, &s0)?;
        let bar1 = LocPoly::bar(VarId::b(1));
        let bar2 = LocPoly::bar(VarId::b(2));
        let unit = |v: &LocPoly| v.one_plus_beta();
        let mut expect: BTreeMap<GroupElt, LocPoly> = BTreeMap::new();
        expect.insert(s0.clone(), bar1.oplus(&bar1));
        // (1+βb̄1)(1+βb̄2) + (1+βb̄1)²
        expect.insert(
            word(typ, &[s(1), SimpleRef::S0]),
            unit(&bar1).mul(&unit(&bar2)).add(&unit(&bar1).mul(&unit(&bar1))),
        );
        // β(1+βb̄1)(1+βb̄2)
        expect.insert(
            word(typ, &[SimpleRef::S0, s(1), SimpleRef::S0]),
            unit(&bar1).mul(&unit(&bar2)).mul_beta(),
        );
        checks.push(Check::new("example5 LR coefficients (recurrence-determined)", coeffs == expect, ""));

        // the paper's printed coefficients, kept as a report-only comparison
        let b1 = LocPoly::var(VarId::b(1));
        let mut printed: BTreeMap<GroupElt, LocPoly> = BTreeMap::new();
        printed.insert(s0.clone(), b1.oplus(&b1));
        printed.insert(word(typ, &[s(1), SimpleRef::S0]), LocPoly::one());
        printed.insert(
            word(typ, &[SimpleRef::S0, s(1), SimpleRef::S0]),
            LocPoly::from_poly(Poly::beta()),
        );
        checks.push(Check::report(
            "example5 coefficients as printed in the paper (erratum, see ledger)",
            coeffs == printed,
            "paper's own Prop. 10/Thm. 2 and the β=0,b=0 Pieri rule contradict the printed values",
        ));

        // independent anchor: the b-free shadow.  GQ1² = 2GQ2 + βGQ21 +
        // βGQ3 + β²GQ31 by the symmetric-function route, and the b=0
        // specialization of the localization solve must agree on the
        // rank-2-visible coefficients (λ=(1): 0, λ=(2): 2, λ=(2,1): β).
        let q1 = symfun::gq(&StrictPartition::new(vec![1]), 2, FactParam::Zero)?;
        let pieri = symfun::expand_in_basis(&(&q1 * &q1), 2, symfun::GpBasis::Q)?;
        let mut anchor = pieri.get(&StrictPartition::new(vec![2])) == Poly::int(2)
            && pieri.get(&StrictPartition::new(vec![2, 1])) == Poly::beta()
            && pieri.get(&StrictPartition::new(vec![1])) == Poly::zero();
        let at_b0 = |w: &GroupElt| -> Poly {
            let c = coeffs.get(w).cloned().unwrap_or_else(LocPoly::zero);
            c.num().subst_family_int(Family::B, 0)
        };
        anchor &= at_b0(&s0) == Poly::zero();
        anchor &= at_b0(&word(typ, &[s(1), SimpleRef::S0])) == Poly::int(2);
        anchor &= at_b0(&word(typ, &[SimpleRef::S0, s(1), SimpleRef::S0])) == Poly::beta();
        checks.push(Check::new("example5 b=0 shadow matches GQ Pieri", anchor, ""));
    }
    // Example 7: specialization 5 + 5β + β², byte-exact
    {
        let g = GTable::a_double(4)?;
        let w = GroupElt::new(WeylType::a(4), vec![1, 4, 3, 2])?;
        let p = g
            .get(&w)
            .subst_family_int(Family::A, 1)
            .subst_family_int(Family::B, 0);
        checks.push(Check::new(
            "example7 golden string",
            p.to_string() == "5 + 5*β + β^2",
            p.to_string(),
        ));
    }
    // Example 6: single-pattern weight in Δ^A_3, byte-exact canonical form
    {
        let typ = WeylType::a(4);
        let d = combinat::delta(typ)?;
        let w = GroupElt::new(typ, vec![3, 1, 4, 2])?;
        let pats = combinat::rsub(&d, &w);
        let target = combinat::EydPattern { boxes: vec![1, 2, 3], circles: vec![5] };
        let found = pats.contains(&target);
        let wt = combinat::pattern_weight(&d, &target);
        // transcription of the paper's factored form
        let factored = &(&(&Poly::oplus_var(VarId::a(1), VarId::b(2))
            * &Poly::oplus_var(VarId::a(2), VarId::b(2)))
            * &Poly::oplus_var(VarId::a(1), VarId::b(1)))
            * &Poly::one_plus_beta(&Poly::oplus_var(VarId::a(3), VarId::b(1)));
        let golden = GOLDEN_EXAMPLE_6;
        checks.push(Check::new(
            "example6 pattern + weight",
            found && wt == factored && wt.to_string() == golden.trim_end(),
            wt.to_string(),
        ));
    }
    // Example 8: single-pattern weight in Δ^C_3.  The paper's printed B(D)
    // omits the movable position d5 = s1 at {2;3} (the prefix s2 s1 s2
    // absorbs it per Def. 11, and the state sum only reproduces G^C_{3,w}
    // with it); the weight below carries the extra (1+β(x2⊕x3)) factor.
    {
        let typ = WeylType::c(3);
        let d = combinat::delta(typ)?;
        let w = GroupElt::new(typ, vec![2, -3, 1])?;
        let pats = combinat::rsub(&d, &w);
        let target = combinat::EydPattern {
            boxes: vec![0, 1, 2, 6, 10],
            circles: vec![4, 5, 8, 9],
        };
        let found = pats.contains(&target);
        let wt = combinat::pattern_weight(&d, &target);
        let op = |p: Poly, q: Poly| p.oplus(&q);
        let factored = [
            op(xp(3), Poly::var(VarId::b(2))),
            op(xp(3), Poly::var(VarId::b(1))),
            op(xp(2), Poly::var(VarId::b(1))),
            op(xp(2), xp(2)),
            op(xp(1), Poly::var(VarId::a(1))),
            Poly::one_plus_beta(&op(xp(2), xp(3))),
            Poly::one_plus_beta(&op(xp(1), xp(3))),
            Poly::one_plus_beta(&op(Poly::var(VarId::a(1)), xp(2))),
            Poly::one_plus_beta(&op(xp(1), xp(1))),
        ]
        .iter()
        .fold(Poly::one(), |acc, f| &acc * f);
        checks.push(Check::new(
            "example8 pattern + weight",
            found && wt == factored && wt.to_string() == GOLDEN_EXAMPLE_8.trim_end(),
            "",
        ));
    }
    // Example 9: single-pattern weight in Δ^D_4
    {
        let typ = WeylType::d(4);
        let d = combinat::delta(typ)?;
        let w = GroupElt::new(typ, vec![-2, 4, -1, 3])?;
        let pats = combinat::rsub(&d, &w);
        let target = combinat::EydPattern {
            boxes: vec![2, 6, 13],
            circles: vec![5, 8, 11, 12, 16],
        };
        let found = pats.contains(&target);
        let wt = combinat::pattern_weight(&d, &target);
        let op = |p: Poly, q: Poly| p.oplus(&q);
        let factored = [
            op(xp(3), Poly::var(VarId::b(2))),
            op(xp(3), xp(4)),
            op(Poly::var(VarId::a(1)), xp(2)),
            Poly::one_plus_beta(&op(xp(2), Poly::var(VarId::b(1)))),
            Poly::one_plus_beta(&op(xp(1), xp(4))),
            Poly::one_plus_beta(&op(Poly::var(VarId::a(1)), xp(3))),
            Poly::one_plus_beta(&op(xp(1), xp(2))),
            Poly::one_plus_beta(&op(Poly::var(VarId::a(2)), xp(1))),
        ]
        .iter()
        .fold(Poly::one(), |acc, f| &acc * f);
        checks.push(Check::new(
            "example9 pattern + weight",
            found && wt == factored && wt.to_string() == GOLDEN_EXAMPLE_9.trim_end(),
            "",
        ));
    }
    Ok(checks)
}

// Canonical expanded forms of the paper's single-pattern weights, frozen
// from the factored transcriptions above (Example 8 with the corrected
// movable set).
pub const GOLDEN_EXAMPLE_6: &str = include_str!("goldens/example6.txt");
pub const GOLDEN_EXAMPLE_8: &str = include_str!("goldens/example8.txt");
pub const GOLDEN_EXAMPLE_9: &str = include_str!("goldens/example9.txt");

// ---------------------------------------------------------------------------
// criterion 6: Grassmannian identification (Prop. 5)
// ---------------------------------------------------------------------------

pub fn suite_grassmannian() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for letter in [WeylLetter::B, WeylLetter::C, WeylLetter::D] {
        let typ = WeylType::new(letter, 3);
        let table = GTable::first_kind(typ)?;
        let mut count = 0;
        let mut ok = true;
        for w in enumerate_by_length(typ)? {
            if !w.is_grassmannian() {
                continue;
            }
            count += 1;
            let lam = w.lambda()?;
            // GP is evaluated through its even limit (mod-2 stability); GQ
            // is honestly stable.
            let expect = match letter {
                WeylLetter::B => symfun::gp_even(&lam, 3, FactParam::Shifted)?,
                WeylLetter::C => symfun::gq(&lam, 3, FactParam::Std)?,
                WeylLetter::D => symfun::gp_even(&lam, 3, FactParam::Std)?,
                WeylLetter::A => unreachable!(),
            };
            ok &= table.get(&w) == expect;
        }
        checks.push(Check::new(
            format!("prop5 G^{letter}_w = G{}_λ(x|b), all Grassmannian w in {typ}",
                if letter == WeylLetter::C { "Q" } else { "P" }),
            ok,
            format!("{count} Grassmannian elements"),
        ));
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// criterion 7: localization suite
// ---------------------------------------------------------------------------

pub fn suite_localization() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for typ in [WeylType::c(2), WeylType::d(2)] {
        let m = PhiMatrix::build(typ)?;
        let elts = enumerate_by_length(typ)?;

        let mut gkm = true;
        let mut recur = true;
        let mut vanish = true;
        let mut diag = true;
        let mut words = true;
        for w in &elts {
            gkm &= localization::gkm_check(m.class(w))?;
            recur &= localization::recurrence_check(&m, w)?;
            diag &= !m.value(w, w).is_zero();
            for v in &elts {
                if !w.bruhat_leq(v) && !m.value(w, v).is_zero() {
                    vanish = false;
                }
                words &= localization::localize_words(typ, w, v)? == m.value(w, v);
            }
        }
        checks.push(Check::new(format!("prop7 GKM membership, all w in {typ}"), gkm, ""));
        checks.push(Check::new(format!("prop10/thm2 recurrence, all w in {typ}"), recur, ""));
        checks.push(Check::new(format!("cor3 vanishing (w ≰ v), all pairs in {typ}"), vanish, ""));
        checks.push(Check::new(format!("diagonal nonvanishing in {typ}"), diag, ""));
        checks.push(Check::new(format!("prop11 word sum = Φ, all pairs in {typ}"), words, ""));

        // Prop 8: function-level π keeps tables in GKM
        let mut prop8 = true;
        for w in &elts {
            for g in typ.generators() {
                let moved = localization::pi_function_level(m.class(w), g)?;
                prop8 &= localization::gkm_check(&moved)?;
            }
        }
        checks.push(Check::new(format!("prop8 π_i preserves GKM in {typ}"), prop8, ""));

        // Prop 9: Φ ∘ π_i^{(b)} = π_i ∘ Φ for i ≥ 1
        let mut prop9 = true;
        for w in &elts {
            let g = m.table.get(w);
            for i in 1..typ.rank {
                let lhs = {
                    let pig = divdiff::pi(typ, Alphabet::B, s(i), &LocPoly::from_poly(g.clone()))?;
                    localization::phi_table_loc(typ, &pig)?
                };
                let rhs = localization::pi_function_level(m.class(w), s(i))?;
                prop9 &= lhs == rhs;
            }
        }
        checks.push(Check::new(format!("prop9 Φπ_i^(b) = π_iΦ (i≥1) in {typ}"), prop9, ""));
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// criterion 8: divided differences
// ---------------------------------------------------------------------------

pub fn suite_divdiff() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    // Prop. 1 relations on a monomial basis, for W(C3) and W(D3)
    let monos: Vec<LocPoly> = {
        let a = |i| LocPoly::var(VarId::a(i));
        vec![
            LocPoly::one(),
            a(1),
            a(2),
            a(3),
            a(1).mul(&a(1)),
            a(1).mul(&a(2)),
            a(1).mul(&a(3)),
            a(2).mul(&a(3)),
        ]
    };
    for typ in [WeylType::c(3), WeylType::b(3), WeylType::d(3)] {
        let mut sq = true;
        for g in typ.generators() {
            for f in &monos {
                let p = divdiff::pi(typ, Alphabet::A, g, f)?;
                sq &= divdiff::pi(typ, Alphabet::A, g, &p)? == p.mul_beta().neg();
                let q = divdiff::psi(typ, Alphabet::A, g, f)?;
                sq &= divdiff::psi(typ, Alphabet::A, g, &q)? == q.mul_beta();
                sq &= q == p.add(&f.mul_beta());
            }
        }
        checks.push(Check::new(format!("prop1 π²=−βπ, ψ²=βψ, ψ=π+β in {typ}"), sq, ""));
    }
    for (typ, i, j, m) in [
        (WeylType::c(3), SimpleRef::S0, s(1), 4),
        (WeylType::c(3), s(1), s(2), 3),
        (WeylType::c(3), SimpleRef::S0, s(2), 2),
        (WeylType::d(3), SimpleRef::S1hat, s(1), 2),
        (WeylType::d(3), SimpleRef::S1hat, s(2), 3),
        (WeylType::d(3), s(1), s(2), 3),
    ] {
        let mut ok = true;
        for f in &monos {
            let mut lhs = f.clone();
            let mut rhs = f.clone();
            for k in 0..m {
                let (l, r) = if k % 2 == 0 { (i, j) } else { (j, i) };
                lhs = divdiff::pi(typ, Alphabet::A, l, &lhs)?;
                rhs = divdiff::pi(typ, Alphabet::A, r, &rhs)?;
            }
            ok &= lhs == rhs;
        }
        checks.push(Check::new(format!("prop1 braid m={m} ({i},{j}) in {typ}"), ok, ""));
    }

    // Cor. 1 for i ≥ 1 over all w ∈ W(C2) and W(B2), both sides
    for typ in [WeylType::c(2), WeylType::b(2)] {
        let table = GTable::first_kind(typ)?;
        let mut ok = true;
        for w in enumerate_by_length(typ)? {
            let g = LocPoly::from_poly(table.get(&w));
            for i in 1..typ.rank {
                let si = word(typ, &[s(i)]);
                // a side: right multiplication
                let lhs = divdiff::pi(typ, Alphabet::A, s(i), &g)?;
                let ws = w.compose(&si);
                let rhs = if ws.length() < w.length() {
                    LocPoly::from_poly(table.get(&ws))
                } else {
                    g.mul_beta().neg()
                };
                ok &= lhs == rhs;
                // b side: left multiplication
                let lhs = divdiff::pi(typ, Alphabet::B, s(i), &g)?;
                let sw = si.compose(&w);
                let rhs = if sw.length() < w.length() {
                    LocPoly::from_poly(table.get(&sw))
                } else {
                    g.mul_beta().neg()
                };
                ok &= lhs == rhs;
            }
        }
        checks.push(Check::new(format!("cor1 recurrences (i≥1, a and b side) in {typ}"), ok, ""));
    }

    // Prop. 3 proof identities for s0 / s1hat at n = 2, as HeckeElt equalities
    checks.push(Check::new("prop3 s0 identity, B2", prop3_identity(WeylType::b(2))?, ""));
    checks.push(Check::new("prop3 s0 identity, C2", prop3_identity(WeylType::c(2))?, ""));
    checks.push(Check::new("prop3 s1hat identity, D2", prop3_identity(WeylType::d(2))?, ""));
    Ok(checks)
}

/// `s_0^{(a)}(F̄(x) G_A(a)) − F̄(x) G_A(a) = α · F̄(x) G_A(a) u_0` where the
/// action prepends `F(a_1)` (resp. `F(a_1)F(a_2)` for `s_1̂`) and bars the
/// `G_A` argument, and `α` is `a_1`, `a_1⊕a_1`, `a_1⊕a_2` for B, C, D.
fn prop3_identity(typ: WeylType) -> Result<bool> {
    assert_eq!(typ.rank, 2);
    let a1 = LocPoly::var(VarId::a(1));
    let fbar = genfun::build_fbar(typ)?.map_loc();
    let ga = HeckeElt::one(typ).mul_h(s(1), &a1)?;
    let base = fbar.mul(&ga)?;
    let (gen, alpha, prefix, ga_moved) = match typ.letter {
        WeylLetter::B => {
            let f_a1 = build_f_loc(typ, &a1)?;
            let ga_bar = HeckeElt::one(typ).mul_h(s(1), &LocPoly::bar(VarId::a(1)))?;
            (SimpleRef::S0, a1.clone(), f_a1, ga_bar)
        }
        WeylLetter::C => {
            let f_a1 = build_f_loc(typ, &a1)?;
            let ga_bar = HeckeElt::one(typ).mul_h(s(1), &LocPoly::bar(VarId::a(1)))?;
            (SimpleRef::S0, a1.oplus(&a1), f_a1, ga_bar)
        }
        WeylLetter::D => {
            let a2 = LocPoly::var(VarId::a(2));
            let f_a1 = build_f_loc(typ, &a1)?;
            let f_a2 = build_f_loc(typ, &a2)?;
            let ga_bar = HeckeElt::one(typ).mul_h(s(1), &LocPoly::bar(VarId::a(2)))?;
            (SimpleRef::S1hat, a1.oplus(&a2), f_a1.mul(&f_a2)?, ga_bar)
        }
        WeylLetter::A => unreachable!(),
    };
    let moved = fbar.mul(&prefix)?.mul(&ga_moved)?;
    let lhs = moved.sub(&base);
    let rhs = base.mul_gen(gen, true)?.scale(&alpha);
    Ok(lhs == rhs)
}

fn build_f_loc(typ: WeylType, v: &LocPoly) -> Result<HeckeElt<LocPoly>> {
    let mut f = HeckeElt::one(typ);
    for gen in genfun::f_gen_sequence(typ.letter, typ.rank) {
        f = f.mul_h(gen, v)?;
    }
    Ok(f)
}

// ---------------------------------------------------------------------------
// criterion 9: stability
// ---------------------------------------------------------------------------

pub fn suite_stability() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for letter in [WeylLetter::B, WeylLetter::C, WeylLetter::D] {
        let t2 = WeylType::new(letter, 2);
        let t3 = WeylType::new(letter, 3);
        let g2 = GTable::first_kind(t2)?;
        let g3 = GTable::first_kind(t3)?;
        let st2 = GTable::stanley(t2)?;
        let st3 = GTable::stanley(t3)?;

        let mut strong = true;
        let mut no_high_ab = true;
        let mut weak_f = true;
        for w in enumerate_by_length(t2)? {
            let mut window = w.window().to_vec();
            window.push(3);
            let w3 = GroupElt::new(t3, window)?;
            let g3w = g3.get(&w3);
            no_high_ab &= !g3w.contains_var(VarId::a(2)) && !g3w.contains_var(VarId::b(2));
            strong &= g3w.subst_var_int(VarId::x(3), 0) == g2.get(&w);
            weak_f &= st3.get(&w3).subst_var_int(VarId::x(3), 0) == st2.get(&w);
        }
        checks.push(Check::new(
            format!("prop4 strong stability (ranks 2↔3) in type {letter}"),
            strong && no_high_ab,
            "",
        ));
        checks.push(Check::new(format!("weak stability of F^{letter}_w"), weak_f, ""));

        // second kind: G_{2,w} = G_{3,w}|_{a3=b3=0} to truncation 3
        let s2 = genfun::build_g_second(t2, 3)?;
        let s3 = genfun::build_g_second(t3, 3)?;
        let mut weak2 = true;
        for w in enumerate_by_length(t2)? {
            let mut window = w.window().to_vec();
            window.push(3);
            let w3 = GroupElt::new(t3, window)?;
            let hi = s3
                .coefficient_of(&w3)
                .subst_zero(&[VarId::a(3), VarId::b(3)]);
            weak2 &= hi == s2.coefficient_of(&w);
        }
        checks.push(Check::new(
            format!("second-kind weak stability (trunc 3) in type {letter}"),
            weak2,
            "",
        ));
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// criterion 10: adjoint suite
// ---------------------------------------------------------------------------

pub fn suite_adjoint() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for letter in [WeylLetter::B, WeylLetter::C, WeylLetter::D] {
        let typ = WeylType::new(letter, 2);
        let table = GTable::first_kind(typ)?;
        let w0 = GroupElt::longest(typ);
        let mut interval = true;
        for w in enumerate_by_length(typ)? {
            interval &= adjoint::adjoint(&table, &w)? == adjoint::adjoint_relative(&table, &w, &w0)?;
        }
        checks.push(Check::new(
            format!("prop12 interval sum = ψ route, all w in {typ}"),
            interval,
            "",
        ));
        let e = GroupElt::identity(typ);
        checks.push(Check::new(
            format!("prop13 closed form H_(2,e) in type {letter}"),
            adjoint::adjoint(&table, &e)? == adjoint::adjoint_e_closed_form(typ),
            "",
        ));
        let mut tail = true;
        for w in enumerate_by_length(typ)? {
            tail &= adjoint::closed_form_tail_check(&table, &w)?;
        }
        checks.push(Check::new(format!("prop13 tail H_w = ±H_e·Ḡ_w in {typ}"), tail, ""));
        checks.push(Check::new(
            format!("prop14 factorization H = H_e·G(ā,b̄;x̄) in {typ}"),
            adjoint::genfun_factorization_check(&table)?,
            "",
        ));
        checks.push(Check::new(
            format!("prop15 π_i H = H(−u_i), i≥1 in {typ}"),
            adjoint::pi_adjoint_check(&table, s(1))?,
            "",
        ));
    }
    // Thm 3 change of parameter at n=2, type C, w ∈ {e, s0, s1 s0}
    {
        let typ = WeylType::c(2);
        let table = GTable::first_kind(typ)?;
        for wrd in [vec![], vec![SimpleRef::S0], vec![s(1), SimpleRef::S0]] {
            let w = word(typ, &wrd);
            checks.push(Check::new(
                format!("thm3 change of parameter at {w}"),
                adjoint::change_of_parameter_check(&table, &w)?,
                "",
            ));
            checks.push(Check::new(
                format!("thm3 collapse c=b at {w}"),
                adjoint::change_of_parameter_collapse_check(&table, &w)?,
                "",
            ));
        }
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// criterion 11: second definition (Example 4)
// ---------------------------------------------------------------------------

pub fn suite_second_kind() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let trunc = 3;
    let bar = |v: VarId| LocPoly::bar(v);
    let t_sum = |vars: &[VarId]| -> LocPoly {
        vars.iter().map(|&v| bar(v)).fold(LocPoly::zero(), |acc, t| acc.oplus(&t))
    };
    // G^C_{2,s0}(a,b) = ā1⊕ā2⊕b̄1⊕b̄2
    {
        let typ = WeylType::c(2);
        let got = genfun::second_kind_coeff(typ, trunc, &word(typ, &[SimpleRef::S0]))?;
        let expect = TruncSeries::from_locpoly(
            &t_sum(&[VarId::a(1), VarId::a(2), VarId::b(1), VarId::b(2)]),
            trunc,
        );
        checks.push(Check::new("example4 G^C_{2,s0} closed form", got == expect, ""));
        // identity coefficient is 1
        let e = genfun::second_kind_coeff(typ, trunc, &GroupElt::identity(typ))?;
        checks.push(Check::new("second kind: w=e gives 1", e == TruncSeries::one(trunc), ""));
    }
    // G^C_{3,s0}(a,b) = six-term version
    {
        let typ = WeylType::c(3);
        let got = genfun::second_kind_coeff(typ, trunc, &word(typ, &[SimpleRef::S0]))?;
        let expect = TruncSeries::from_locpoly(
            &t_sum(&[
                VarId::a(1),
                VarId::a(2),
                VarId::a(3),
                VarId::b(1),
                VarId::b(2),
                VarId::b(3),
            ]),
            trunc,
        );
        checks.push(Check::new("example4 G^C_{3,s0} closed form", got == expect, ""));
    }
    // G^B_{2,s0}(a,b) = (√(1+Tβ)−1)/β with T = ā1⊕ā2⊕b̄1⊕b̄2
    {
        let typ = WeylType::b(2);
        let got = genfun::second_kind_coeff(typ, trunc, &word(typ, &[SimpleRef::S0]))?;
        let t = TruncSeries::from_locpoly(
            &t_sum(&[VarId::a(1), VarId::a(2), VarId::b(1), VarId::b(2)]),
            trunc,
        );
        let expect = TruncSeries::one(trunc).add(&t.mul_beta()).sqrt()?
            .sub(&TruncSeries::one(trunc))
            .div_beta()?;
        checks.push(Check::new("example4 G^B_{2,s0} √ closed form", got == expect, ""));
    }
    // G^D_{3,s1hat}(a,b) = (√(1+Tβ)−1)/β with the six-variable T
    {
        let typ = WeylType::d(3);
        let got = genfun::second_kind_coeff(typ, trunc, &word(typ, &[SimpleRef::S1hat]))?;
        let t = TruncSeries::from_locpoly(
            &t_sum(&[
                VarId::a(1),
                VarId::a(2),
                VarId::a(3),
                VarId::b(1),
                VarId::b(2),
                VarId::b(3),
            ]),
            trunc,
        );
        let expect = TruncSeries::one(trunc).add(&t.mul_beta()).sqrt()?
            .sub(&TruncSeries::one(trunc))
            .div_beta()?;
        checks.push(Check::new("example4 G^D_{3,s1hat} √ closed form", got == expect, ""));
    }
    Ok(checks)
}

// ---------------------------------------------------------------------------
// criterion 12: grading, positivity, supersymmetry (+ report-only conjecture)
// ---------------------------------------------------------------------------

pub fn suite_grading() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let tables: Vec<(String, GTable)> = vec![
        ("A (S3)".into(), GTable::a_double(3)?),
        ("B2".into(), GTable::first_kind(WeylType::b(2))?),
        ("C2".into(), GTable::first_kind(WeylType::c(2))?),
        ("D2".into(), GTable::first_kind(WeylType::d(2))?),
    ];
    for (name, table) in &tables {
        let mut graded = true;
        let mut nonneg = true;
        for (w, p) in table.iter() {
            graded &= p.homogeneous_grade() == Some(w.length() as i64);
            nonneg &= p.coeffs_nonnegative();
        }
        checks.push(Check::new(format!("thm1 grading deg=ℓ(w), {name}"), graded, ""));
        checks.push(Check::new(format!("thm1(3) β-coefficient nonnegativity, {name}"), nonneg, ""));
    }
    // GP/GQ β-supersymmetry for |λ| ≤ 4, n ≤ 4
    let mut ss = true;
    for n in 2..=4u32 {
        for size in 1..=4u32 {
            for lam in StrictPartition::all_of_size(size, n as usize) {
                ss &= symfun::is_beta_supersymmetric(&symfun::gp(&lam, n, FactParam::Zero)?, n);
                ss &= symfun::is_beta_supersymmetric(&symfun::gq(&lam, n, FactParam::Zero)?, n);
            }
        }
    }
    checks.push(Check::new("GP/GQ β-supersymmetry, |λ|≤4, n≤4", ss, ""));
    Ok(checks)
}

/// Remark 2 conjecture: GP-expansions of `F^X_w` have nonnegative
/// β-polynomial coefficients.  Report-only.
pub fn suite_gp_positivity() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for letter in [WeylLetter::B, WeylLetter::C, WeylLetter::D] {
        let typ = WeylType::new(letter, 2);
        let st = GTable::stanley(typ)?;
        let mut violations = Vec::new();
        let mut supersym = true;
        for w in enumerate_by_length(typ)? {
            let f = st.get(&w);
            supersym &= symfun::is_beta_supersymmetric(&f, 2);
            let exp = symfun::expand_in_gp(&f, 2)?;
            for (lam, c) in &exp.terms {
                if !c.coeffs_nonnegative() {
                    violations.push(format!("{w}: coeff of GP_{lam} = {c}"));
                }
            }
        }
        checks.push(Check::new(
            format!("lemma6 F^{letter}_w β-supersymmetric (rank 2)"),
            supersym,
            "",
        ));
        checks.push(Check::report(
            format!("remark2 GP-positivity of F^{letter}_w (conjecture, rank 2)"),
            violations.is_empty(),
            if violations.is_empty() { "no violations".into() } else { violations.join("; ") },
        ));
    }
    Ok(checks)
}

/// Props. 18/19 embedding identities.
pub fn suite_embedding() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    // Prop 18 at n = 2: w ∈ {e, s1} ⊂ W(A1) ⊂ W(B2)=W(C2)
    let a3 = GTable::a_double(4)?;
    for letter in [WeylLetter::B, WeylLetter::C] {
        let typ = WeylType::new(letter, 2);
        let table = GTable::first_kind(typ)?;
        let mut ok = true;
        for wrd in [vec![], vec![s(1)]] {
            let w = word(typ, &wrd);
            // 1^2 × w shifts s1 ↦ s3 inside S4
            let lifted = word(
                WeylType::a(4),
                &wrd.iter().map(|g| s(g.flat() + 2)).collect::<Vec<_>>(),
            );
            let embedded = genfun::rename_ab(
                &a3.get(&lifted),
                &[xp(1), xp(2), Poly::var(VarId::a(1))],
                &[xp(1), xp(2), Poly::var(VarId::b(1))],
            );
            ok &= table.get(&w) == embedded;
        }
        checks.push(Check::new(format!("prop18 embedding at n=2, type {letter}"), ok, ""));
    }
    // Prop 19, type D: n=2 gives only w=e; spot-check n=4 via the two EYD
    // state sums (S8 is far too large for a full table)
    {
        let d4 = WeylType::d(4);
        let mut ok = true;
        for wrd in [vec![], vec![s(2)], vec![s(2), s(3)]] {
            let w = word(d4, &wrd);
            let lhs = combinat::groth_via_eyd(&w)?;
            let lifted = word(
                WeylType::a(8),
                &wrd.iter().map(|g| s(g.flat() + 4)).collect::<Vec<_>>(),
            );
            let rhs = genfun::rename_ab(
                &combinat::groth_via_eyd(&lifted)?,
                &[xp(1), xp(2), xp(3), xp(4), Poly::var(VarId::a(1)), Poly::var(VarId::a(2)), Poly::var(VarId::a(3))],
                &[xp(1), xp(2), xp(3), xp(4), Poly::var(VarId::b(1)), Poly::var(VarId::b(2)), Poly::var(VarId::b(3))],
            );
            ok &= lhs == rhs;
        }
        checks.push(Check::new("prop19 embedding spots, D4 vs A7", ok, ""));
    }
    Ok(checks)
}

pub type Suite = fn() -> Result<Vec<Check>>;

/// All suites by name, in acceptance order.
pub fn suites() -> Vec<(&'static str, Suite)> {
    vec![
        ("yang-baxter", suite_yang_baxter),
        ("commutation", suite_commutation),
        ("oracle-eyd", suite_oracle_eyd),
        ("oracle-compat", suite_oracle_compat),
        ("golden", suite_golden),
        ("grassmannian", suite_grassmannian),
        ("localization", suite_localization),
        ("divdiff", suite_divdiff),
        ("stability", suite_stability),
        ("adjoint", suite_adjoint),
        ("second-kind", suite_second_kind),
        ("grading", suite_grading),
        ("gp-positivity", suite_gp_positivity),
        ("embedding", suite_embedding),
    ]
}

pub fn run_suite(name: &str) -> Option<Result<Vec<Check>>> {
    suites().into_iter().find(|(n, _)| *n == name).map(|(_, f)| f())
}
