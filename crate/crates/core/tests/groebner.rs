use std::sync::Arc;

use detideal::coeff::CoeffField;
use detideal::constructions::{hn_ideal, HNSpec, XYZ};
use detideal::groebner::{buchberger, normal_form, Ideal};
use detideal::poly::{parse_poly, Monomial, MonomialOrder, Polynomial, RingContext};
use proptest::prelude::*;

fn ring(field: CoeffField) -> Arc<RingContext> {
    RingContext::new(&["x", "y", "z"], field).unwrap()
}

fn arb_poly(ctx: Arc<RingContext>) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), -5i64..6), 1..4).prop_map(move |ts| {
        let terms = ts
            .into_iter()
            .map(|(e, c)| (Monomial::from_exponents(&e), ctx.field().from_i64(c)))
            .collect();
        Polynomial::from_terms(&ctx, terms)
    })
}

#[test]
fn hn_basis_under_weighted_order_passes_the_audit() {
    let spec = HNSpec::new([1, 1, 1], [2, 1, 1]).unwrap();
    let i = hn_ideal(&spec, CoeffField::Rationals, XYZ).unwrap();
    assert_eq!(i.ctx().default_order(), MonomialOrder::WeightedGrevlex(vec![3, 4, 5]));
    let gb = i.groebner().unwrap();
    assert!(gb.audit());
    assert!(gb.is_reduced());
}

#[test]
fn membership_forced_by_the_syzygy() {
    let a = RingContext::new(&["x", "y", "z", "w4", "X", "Y"], CoeffField::Rationals).unwrap();
    let p = |s: &str| parse_poly(s, &a).unwrap();
    let base = Ideal::new(&a, vec![p("x^2 - y*z + x*X"), p("y^2 - x*z + x*Y")]).unwrap();
    let gb = buchberger(&base, &a.default_order()).unwrap();
    let f = p("x*z^2 - x^2*y - x*y*X - x*z*Y");
    assert!(normal_form(&f, &gb).unwrap().is_zero());
    assert!(!normal_form(&p("z^2 - x*y - y*X - z*Y"), &gb).unwrap().is_zero());
}

#[test]
fn hn_is_strictly_inside_the_diagonal() {
    let r = RingContext::with_weights(&XYZ, &[3, 3, 3], CoeffField::Rationals).unwrap();
    let hn = hn_ideal(&HNSpec::new([1, 1, 1], [1, 1, 1]).unwrap(), CoeffField::Rationals, XYZ).unwrap();
    let diag = Ideal::from_strs(&r, &["x - y", "x - z"]).unwrap();
    assert!(!hn.equals(&diag).unwrap());
    assert!(hn.is_subset_of(&diag).unwrap());
    assert!(!diag.is_subset_of(&hn).unwrap());
}

#[test]
fn saturation_stabilizes() {
    let r = ring(CoeffField::Rationals);
    let i = Ideal::from_strs(&r, &["x^3*y", "x^2*z^2"]).unwrap();
    let x = parse_poly("x", &r).unwrap();
    let sat = i.saturate(&x).unwrap();
    assert!(sat.equals(&Ideal::from_strs(&r, &["y", "z^2"]).unwrap()).unwrap());
    assert!(sat.colon(&x).unwrap().equals(&sat).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduced_basis_is_unique(
        gens in prop::collection::vec(arb_poly(ring(CoeffField::prime(101).unwrap())), 1..4),
        scales in prop::collection::vec(1i64..100, 4),
        mix in -50i64..50,
    ) {
        let r = gens[0].ctx().clone();
        let mut other: Vec<Polynomial> = gens
            .iter()
            .zip(&scales)
            .map(|(g, &s)| g.scale(&r.field().from_i64(s)))
            .collect();
        other.reverse();
        if other.len() > 1 {
            let extra = other[1].scale(&r.field().from_i64(mix));
            other[0] = &other[0] + &extra;
        }
        let a = Ideal::new(&r, gens).unwrap();
        let b = Ideal::new(&r, other).unwrap();
        let ga = a.groebner().unwrap();
        prop_assert!(ga.audit());
        prop_assert_eq!(ga.elements(), b.groebner().unwrap().elements());
        let lex = a.groebner_with(&MonomialOrder::Lex).unwrap();
        prop_assert!(lex.audit());
        prop_assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn colon_laws(
        gens in prop::collection::vec(arb_poly(ring(CoeffField::prime(101).unwrap())), 1..3),
        f in arb_poly(ring(CoeffField::prime(101).unwrap())),
    ) {
        prop_assume!(!f.is_zero());
        let r = gens[0].ctx().clone();
        let f = f.map_into(&r).unwrap();
        let i = Ideal::new(&r, gens).unwrap();
        let c1 = i.colon(&f).unwrap();
        prop_assert!(i.is_subset_of(&c1).unwrap());
        for g in c1.gens() {
            prop_assert!(i.contains(&(g * &f)).unwrap());
        }
        let c2 = c1.colon(&f).unwrap();
        prop_assert!(c1.is_subset_of(&c2).unwrap());
    }

    #[test]
    fn intersection_is_contained_in_both(
        a in prop::collection::vec(arb_poly(ring(CoeffField::prime(101).unwrap())), 1..3),
        b in prop::collection::vec(arb_poly(ring(CoeffField::prime(101).unwrap())), 1..3),
    ) {
        let r = a[0].ctx().clone();
        let b: Vec<Polynomial> = b.iter().map(|g| g.map_into(&r).unwrap()).collect();
        let i = Ideal::new(&r, a).unwrap();
        let j = Ideal::new(&r, b).unwrap();
        let k = i.intersect(&j).unwrap();
        prop_assert!(k.is_subset_of(&i).unwrap());
        prop_assert!(k.is_subset_of(&j).unwrap());
        prop_assert!(i.product(&j).unwrap().is_subset_of(&k).unwrap());
    }
}
