use proptest::prelude::*;
use qcox_core::factor::count_reduced;
use qcox_core::graphset::{classify, graph_of, GraphTag};
use qcox_core::hurwitz::{braid_act, FactorTuple};
use qcox_core::lengths::{codim_fixed, refl_length};
use qcox_core::pqc::{enumerate_rgs, first_reduced, Route};
use qcox_core::{Element, GroupParams, Reflection};

fn params() -> impl Strategy<Value = GroupParams> {
    (1u32..=4, 1usize..=5).prop_flat_map(|(m, n)| {
        let divisors: Vec<u32> = (1..=m).filter(|p| m % p == 0).collect();
        prop::sample::select(divisors).prop_map(move |p| GroupParams::new(m, p, n).unwrap())
    })
}

fn element_of(params: GroupParams) -> impl Strategy<Value = Element> {
    let (m, p, n) = (params.m(), params.p(), params.n());
    (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(0..m, n)).prop_map(
        move |(perm, mut colors)| {
            let sum: u32 = colors.iter().sum();
            colors[n - 1] = (colors[n - 1] + m - sum % p) % m;
            Element::new(params, perm, colors).unwrap()
        },
    )
}

fn elements(k: usize) -> impl Strategy<Value = (GroupParams, Vec<Element>)> {
    params().prop_flat_map(move |p| (Just(p), prop::collection::vec(element_of(p), k)))
}

fn reflection_tuple(len: usize) -> impl Strategy<Value = FactorTuple> {
    params().prop_filter("has reflections", |p| !p.reflections().is_empty()).prop_flat_map(move |p| {
        prop::collection::vec(prop::sample::select(p.reflections()), len)
            .prop_map(move |factors| FactorTuple::new(p, factors).unwrap())
    })
}

fn mul(a: &Element, b: &Element) -> Element {
    a.multiply(b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_axioms((_, xs) in elements(3)) {
        let (a, b, c) = (&xs[0], &xs[1], &xs[2]);
        prop_assert_eq!(mul(&mul(a, b), c), mul(a, &mul(b, c)));
        prop_assert!(mul(a, &a.inverse()).is_identity());
        prop_assert!(mul(&a.inverse(), a).is_identity());
        let id = a.params().identity();
        prop_assert_eq!(&mul(a, &id), a);
        prop_assert_eq!(mul(a, b).inverse(), mul(&b.inverse(), &a.inverse()));
    }

    #[test]
    fn text_and_json_round_trip((_, xs) in elements(1)) {
        let g = &xs[0];
        prop_assert_eq!(&g.to_string().parse::<Element>().unwrap(), g);
        let json = serde_json::to_string(g).unwrap();
        prop_assert_eq!(&serde_json::from_str::<Element>(&json).unwrap(), g);
    }

    #[test]
    fn reflections_have_codimension_one(p in params()) {
        for r in p.reflections() {
            let e = r.to_element(p);
            prop_assert_eq!(codim_fixed(&e), 1);
            prop_assert_eq!(e.as_reflection(), Some(r));
            prop_assert_eq!(r.to_string().parse::<Reflection>().unwrap(), r);
        }
    }

    #[test]
    fn length_invariants((p, xs) in elements(3)) {
        prop_assume!(p.p() == 1 || p.p() == p.m());
        let (g, h, x) = (&xs[0], &xs[1], &xs[2]);
        let len = refl_length(g).unwrap();
        prop_assert_eq!(refl_length(&g.inverse()).unwrap(), len);
        prop_assert_eq!(refl_length(&g.conjugate_by(x)).unwrap(), len);
        prop_assert!(refl_length(&mul(g, h)).unwrap() <= len + refl_length(h).unwrap());
        prop_assert!(codim_fixed(g) <= len);
        let factors = first_reduced(g).unwrap();
        prop_assert_eq!(factors.len(), len);
        prop_assert_eq!(FactorTuple::new(p, factors).unwrap().product(), g.clone());
    }

    #[test]
    fn braid_relations(t in reflection_tuple(4)) {
        let s = |i: usize, inv: bool, x: &FactorTuple| braid_act(i, x, inv).unwrap();
        prop_assert_eq!(s(1, false, &s(2, false, &s(1, false, &t))), s(2, false, &s(1, false, &s(2, false, &t))));
        prop_assert_eq!(s(2, false, &s(3, false, &s(2, false, &t))), s(3, false, &s(2, false, &s(3, false, &t))));
        prop_assert_eq!(s(1, false, &s(3, false, &t)), s(3, false, &s(1, false, &t)));
        for i in 1..4 {
            prop_assert_eq!(&s(i, true, &s(i, false, &t)), &t);
            prop_assert_eq!(s(i, false, &t).product(), t.product());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn fred_is_a_class_function((p, xs) in elements(2)) {
        prop_assume!((p.p() == 1 || p.p() == p.m()) && p.n() <= 4);
        let (g, x) = (&xs[0], &xs[1]);
        prop_assert_eq!(count_reduced(g).unwrap(), count_reduced(&g.conjugate_by(x)).unwrap());
    }

    /// In `S_n` a relative generating set together with a reduced
    /// factorization is a spanning tree of reflections.
    #[test]
    fn relative_sets_complete_spanning_trees(
        perm in (2usize..=8).prop_flat_map(|n| Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    ) {
        let n = perm.len();
        let p = GroupParams::symmetric(n).unwrap();
        let g = Element::new(p, perm, vec![0; n]).unwrap();
        prop_assume!(g.colored_cycles().cycles.len() <= 4);
        let factors = first_reduced(&g).unwrap();
        for set in enumerate_rgs(&g, Route::Graph, usize::MAX).unwrap() {
            let mut all = set.clone();
            all.extend_from_slice(&factors);
            prop_assert_eq!(classify(&graph_of(&all, p)).tag, GraphTag::Tree);
        }
    }
}
