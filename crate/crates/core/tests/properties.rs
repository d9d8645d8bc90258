//! Randomized invariants: Boolean axioms, Stone-map structure, Kuratowski
//! laws, and the agreement of the two density characterizations.

use std::collections::BTreeSet;

use proptest::prelude::*;

use stone_duality::space::{
    closure, interior, is_clopen_in, is_closed, is_dense, is_dense_by_traces, is_open,
    point_set_to_element, s_point_set,
};
use stone_duality::{Algebra, BlockElement, Element, Ideal, PointSet, PointSetBlock};

fn fc() -> Algebra {
    Algebra::fc_nat()
}

fn fin() -> Algebra {
    Algebra::finite(&["p", "q", "r"]).unwrap()
}

prop_compose! {
    fn fc_element()(cofinite in any::<bool>(), support in prop::collection::btree_set(0usize..20, 0..8)) -> Element {
        Element(vec![BlockElement::Fc { cofinite, support }])
    }
}

prop_compose! {
    fn fin_element()(bits in 0u8..8) -> Element {
        let atoms = ["p", "q", "r"];
        let set: BTreeSet<String> = atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| bits & (1 << i) != 0)
            .map(|(_, a)| a.to_string())
            .collect();
        Element(vec![BlockElement::Finite(set)])
    }
}

prop_compose! {
    fn fc_point_set()(cofinite in any::<bool>(), support in prop::collection::btree_set(0usize..20, 0..8), free in any::<bool>()) -> PointSet {
        PointSet { blocks: vec![PointSetBlock::Fc { cofinite, support, free }] }
    }
}

fn boolean_axioms(a: &Algebra, x: &Element, y: &Element, z: &Element) {
    let meet = |p: &Element, q: &Element| a.meet(p, q).unwrap();
    let join = |p: &Element, q: &Element| a.join(p, q).unwrap();
    let not = |p: &Element| a.complement(p).unwrap();

    assert_eq!(meet(x, &join(y, z)), join(&meet(x, y), &meet(x, z)));
    assert_eq!(join(x, &meet(y, z)), meet(&join(x, y), &join(x, z)));
    assert_eq!(not(&meet(x, y)), join(&not(x), &not(y)));
    assert_eq!(meet(x, &not(x)), a.bottom());
    assert_eq!(join(x, &not(x)), a.top());
    assert_eq!(not(&not(x)), *x);
    assert!(a.leq(&meet(x, y), x).unwrap());
    assert!(a.leq(x, &join(x, y)).unwrap());
}

fn stone_map_laws(a: &Algebra, x: &Element, y: &Element) {
    let full = PointSet::full(a);
    let sx = s_point_set(a, x).unwrap();
    let sy = s_point_set(a, y).unwrap();
    assert_eq!(point_set_to_element(a, &sx).unwrap(), *x);
    assert!(is_clopen_in(a, &full, &sx).unwrap());
    assert_eq!(s_point_set(a, &a.meet(x, y).unwrap()).unwrap(), sx.intersect(&sy));
    assert_eq!(s_point_set(a, &a.join(x, y).unwrap()).unwrap(), sx.union(&sy));
    assert_eq!(s_point_set(a, &a.complement(x).unwrap()).unwrap(), sx.complement(a));
    assert_eq!(a.leq(x, y).unwrap(), sx.is_subset(&sy));
}

proptest! {
    #[test]
    fn fc_boolean_axioms(x in fc_element(), y in fc_element(), z in fc_element()) {
        boolean_axioms(&fc(), &x, &y, &z);
    }

    #[test]
    fn finite_boolean_axioms(x in fin_element(), y in fin_element(), z in fin_element()) {
        boolean_axioms(&fin(), &x, &y, &z);
    }

    #[test]
    fn fc_stone_map_laws(x in fc_element(), y in fc_element()) {
        stone_map_laws(&fc(), &x, &y);
    }

    #[test]
    fn finite_stone_map_laws(x in fin_element(), y in fin_element()) {
        stone_map_laws(&fin(), &x, &y);
    }

    #[test]
    fn kuratowski_laws(p in fc_point_set(), q in fc_point_set()) {
        let a = fc();
        let cl = closure(&a, &p).unwrap();
        prop_assert!(p.is_subset(&cl));
        prop_assert!(is_closed(&a, &cl).unwrap());
        prop_assert_eq!(closure(&a, &cl).unwrap(), cl.clone());

        let int = interior(&a, &p).unwrap();
        prop_assert!(int.is_subset(&p));
        prop_assert!(is_open(&a, &int).unwrap());
        prop_assert_eq!(interior(&a, &int).unwrap(), int.clone());

        // interior and closure are De Morgan dual
        prop_assert_eq!(
            interior(&a, &p).unwrap(),
            closure(&a, &p.complement(&a)).unwrap().complement(&a)
        );
        // closure distributes over union
        prop_assert_eq!(
            closure(&a, &p.union(&q)).unwrap(),
            closure(&a, &p).unwrap().union(&closure(&a, &q).unwrap())
        );
    }

    #[test]
    fn density_characterizations_agree(p in fc_point_set()) {
        let a = fc();
        prop_assert_eq!(is_dense(&a, &p).unwrap(), is_dense_by_traces(&a, &p).unwrap());
    }

    #[test]
    fn point_set_ops_stay_canonical(p in fc_point_set(), q in fc_point_set()) {
        let a = fc();
        for r in [p.union(&q), p.intersect(&q), p.complement(&a), p.minus(&a, &q)] {
            prop_assert!(r.check(&a).is_ok());
            // canonical form: a cofinite block never lists a supported index
            prop_assert!(r.is_subset(&PointSet::full(&a)));
        }
    }

    #[test]
    fn iota_roundtrip_on_principal_ideals(g in fc_element()) {
        let a = fc();
        let j = Ideal::principal(&a, &g).unwrap();
        let u = stone_duality::ideal::iota(&j).unwrap();
        prop_assert!(is_open(&a, &u).unwrap());
        prop_assert_eq!(stone_duality::ideal::iota_inv(&a, &u).unwrap(), j);
    }

    #[test]
    fn ideal_membership_is_downward_closed(g in fc_element(), x in fc_element()) {
        let a = fc();
        let j = Ideal::principal(&a, &g).unwrap();
        let m = a.meet(&g, &x).unwrap();
        prop_assert!(j.member(&m).unwrap());
        prop_assert_eq!(j.member(&x).unwrap(), a.leq(&x, &g).unwrap());
    }
}
