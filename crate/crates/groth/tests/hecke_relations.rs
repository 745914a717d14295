//! IdCoxeter algebra relations as element identities: `u_i² = β·u_i` and the
//! braid relations for every generator pair of W(C3) and W(D3).

use groth::hecke::HeckeElt;
use groth::poly::Poly;
use groth::weyl::{GroupElt, SimpleRef, WeylType};

fn u_product(typ: WeylType, gens: &[SimpleRef]) -> HeckeElt<Poly> {
    let mut e: HeckeElt<Poly> = HeckeElt::one(typ);
    for &s in gens {
        e = e.mul_gen(s, true).unwrap();
    }
    e
}

fn coxeter_order(typ: WeylType, s: SimpleRef, t: SimpleRef) -> u32 {
    let st = GroupElt::from_word(typ, &[s, t]).unwrap();
    let mut acc = GroupElt::identity(typ);
    for m in 1..=8 {
        acc = acc.compose(&st);
        if acc.is_identity() {
            return m;
        }
    }
    panic!("order exceeds 8");
}

#[test]
fn u_squared_and_braids() {
    for typ in [WeylType::c(3), WeylType::d(3)] {
        let gens = typ.generators();
        for &s in &gens {
            assert_eq!(
                u_product(typ, &[s, s]),
                u_product(typ, &[s]).scale(&Poly::beta()),
                "u² = βu at {s} in {typ}"
            );
        }
        for &s in &gens {
            for &t in &gens {
                if s == t {
                    continue;
                }
                let m = coxeter_order(typ, s, t);
                let lhs: Vec<SimpleRef> =
                    (0..m).map(|k| if k % 2 == 0 { s } else { t }).collect();
                let rhs: Vec<SimpleRef> =
                    (0..m).map(|k| if k % 2 == 0 { t } else { s }).collect();
                assert_eq!(
                    u_product(typ, &lhs),
                    u_product(typ, &rhs),
                    "braid m={m} for ({s},{t}) in {typ}"
                );
            }
        }
    }
}

#[test]
fn stanley_coefficient_example() {
    // coefficient of u_{s1 s1hat} in F^D_2(x1)F^D_2(x2) is (x1⊕x2)²
    let typ = WeylType::d(2);
    let f = groth::genfun::build_fbar(typ).unwrap();
    let w = GroupElt::from_word(typ, &[SimpleRef::S(1), SimpleRef::S1hat]).unwrap();
    let expect = Poly::oplus_var(groth::poly::VarId::x(1), groth::poly::VarId::x(2)).pow(2);
    assert_eq!(f.coefficient_of(&w), expect);
}
