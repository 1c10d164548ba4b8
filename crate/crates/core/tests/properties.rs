mod common;

use proptest::prelude::*;
use quadglue::{
    apply_symmetry, boundary_components, canonical_form, classify_scheme, parse_scheme, schemes_equivalent,
    standard_scheme, vertex_labeling, Exponent, Scheme, SurfaceType, SymmetryGroup,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn scheme_of_len(lengths: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Scheme> {
    (lengths, any::<u64>()).prop_map(|(len, seed)| common::random_scheme(&mut ChaCha8Rng::seed_from_u64(seed), len))
}

fn invariants(scheme: &Scheme) -> (i64, bool, usize, usize) {
    let surface = classify_scheme(scheme).unwrap();
    (
        surface.euler(),
        surface.orientable(),
        surface.boundary(),
        vertex_labeling(scheme).class_count,
    )
}

proptest! {
    #[test]
    fn relabel_is_idempotent_and_normalized(w in scheme_of_len(1..=14)) {
        let r = w.relabel();
        prop_assert_eq!(r.relabel(), r.clone());
        let mut next = 0;
        for side in r.sides() {
            if side.letter.0 == next {
                prop_assert_eq!(side.exponent, Exponent::Plus);
                next += 1;
            } else {
                prop_assert!(side.letter.0 < next);
            }
        }
    }

    #[test]
    fn flip_and_permute_compose(w in scheme_of_len(1..=14), a in 0usize..14, b in 0usize..14) {
        let m = w.len();
        prop_assert_eq!(w.flip().flip(), w.clone());
        let (a, b) = (a % m, b % m);
        let twice = w.permute(a).unwrap().permute(b).unwrap();
        prop_assert_eq!(twice, w.permute((a + b) % m).unwrap());
        prop_assert_eq!(w.permute(a).unwrap().permute((m - a) % m).unwrap(), w);
    }

    #[test]
    fn canonical_form_is_group_invariant(w in scheme_of_len(1..=12)) {
        let group = SymmetryGroup::dihedral(w.len());
        let canonical = canonical_form(&w, &group).unwrap();
        for &g in group.elements() {
            let image = apply_symmetry(&w, g, &group).unwrap();
            prop_assert_eq!(canonical_form(&image, &group).unwrap(), canonical.clone());
        }
        let orbit = group.orbit(&w).unwrap();
        prop_assert_eq!(group.order() % orbit.len(), 0);
        prop_assert_eq!(&orbit[0], &canonical);
    }

    #[test]
    fn equivalence_is_an_equivalence(a in scheme_of_len(4..=4), b in scheme_of_len(4..=4), c in scheme_of_len(4..=4)) {
        let group = SymmetryGroup::dihedral(4);
        let eq = |x: &Scheme, y: &Scheme| schemes_equivalent(x, y, &group).unwrap();
        prop_assert!(eq(&a, &a));
        prop_assert_eq!(eq(&a, &b), eq(&b, &a));
        if eq(&a, &b) && eq(&b, &c) {
            prop_assert!(eq(&a, &c));
        }
        prop_assert_eq!(eq(&a, &b), common::equivalent_by_search(&a, &b, &group));
    }

    #[test]
    fn glue_consumes_two_free_letters(w in scheme_of_len(2..=14), i in 0usize..14, j in 0usize..14, orientable: bool) {
        let free: Vec<usize> = (0..w.len()).filter(|&p| w.is_free(p)).collect();
        prop_assume!(free.len() >= 2);
        let (i, j) = (free[i % free.len()], free[j % free.len()]);
        prop_assume!(i != j);
        let glued = w.glue(i, j, orientable).unwrap();
        prop_assert_eq!(glued.len(), w.len());
        prop_assert_eq!(glued.free_count() + 2, w.free_count());
        prop_assert_eq!(glued.partner(i), Some(j));
        let same = glued.sides()[i].exponent == glued.sides()[j].exponent;
        prop_assert_eq!(same, !orientable);
    }

    #[test]
    fn invariants_survive_the_dihedral_action(w in scheme_of_len(1..=12)) {
        let expected = invariants(&w);
        prop_assert_eq!(invariants(&w.relabel()), expected);
        prop_assert_eq!(invariants(&w.flip()), expected);
        for k in 0..w.len() {
            prop_assert_eq!(invariants(&w.permute(k).unwrap()), expected);
        }
        let group = SymmetryGroup::dihedral(w.len());
        for &g in group.elements() {
            prop_assert_eq!(invariants(&apply_symmetry(&w, g, &group).unwrap()), expected);
        }
    }

    #[test]
    fn boundary_bounded_by_free_letters(w in scheme_of_len(1..=14)) {
        let b = boundary_components(&w);
        prop_assert!(b <= w.free_count());
        prop_assert_eq!(b == 0, w.free_count() == 0);
    }

    #[test]
    fn genus_formula_recovers_euler(w in scheme_of_len(1..=14)) {
        let t = classify_scheme(&w).unwrap();
        let (g, b) = (t.genus() as i64, t.boundary() as i64);
        let euler = if t.orientable() { 2 - 2 * g - b } else { 2 - g - b };
        prop_assert_eq!(euler, t.euler());
        prop_assert!(t.orientable() || t.genus() >= 1);
        prop_assert_eq!(SurfaceType::new(t.euler(), t.orientable(), t.boundary()).unwrap(), t);
    }

    #[test]
    fn text_round_trip(w in scheme_of_len(1..=40)) {
        let text = w.to_string();
        let back = parse_scheme(&text).unwrap();
        prop_assert!(common::is_relabeling(w.sides(), back.sides()));
        for (x, y) in w.sides().iter().zip(back.sides()) {
            prop_assert_eq!(x.exponent, y.exponent);
        }
        prop_assert_eq!(parse_scheme(&back.to_string()).unwrap(), back);
        let r = w.relabel();
        prop_assert_eq!(parse_scheme(&r.to_string()).unwrap(), r);
    }
}

#[test]
fn standard_schemes_round_trip() {
    for g in 0..=10 {
        let t = SurfaceType::orientable_closed(g);
        assert_eq!(classify_scheme(&standard_scheme(&t).unwrap()).unwrap(), t);
    }
    for k in 1..=10 {
        let t = SurfaceType::nonorientable_closed(k).unwrap();
        assert_eq!(classify_scheme(&standard_scheme(&t).unwrap()).unwrap(), t);
    }
}
