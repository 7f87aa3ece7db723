use braidfact::braid::{
    are_conjugate, complement_to_delta_power, decompose_positive, delta_squared, BraidWord, Conjugacy, NormalForm,
};
use braidfact::free::{oracle_equal, oracle_is_trivial};
use braidfact::Budget;
use proptest::prelude::*;

fn word(max_m: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_m).prop_flat_map(move |m| {
        let letter = (1..m as i32, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
        prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(m, l).unwrap())
    })
}

fn pair(max_m: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_m).prop_flat_map(move |m| {
        let letter = (1..m as i32, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
        let w = prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(m, l).unwrap());
        (w.clone(), w)
    })
}

/// Freely reduced words of length at most `max_len`.
fn short_words(m: usize, max_len: usize) -> Vec<BraidWord> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::<i32>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for v in &layer {
            for g in 1..m as i32 {
                for l in [g, -g] {
                    if v.last() != Some(&-l) {
                        let mut x = v.clone();
                        x.push(l);
                        next.push(x);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.into_iter().map(|l| BraidWord::new(m, l).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn equality_agrees_with_artin_oracle((u, v) in pair(7, 20)) {
        prop_assert_eq!(u.equals(&v).unwrap(), oracle_equal(&u, &v).unwrap());
        let uv = u.multiply(&v.inverse()).unwrap();
        prop_assert_eq!(uv.is_trivial(), oracle_is_trivial(&uv));
    }

    #[test]
    fn inserted_inverse_pairs_do_not_change_the_element(u in word(7, 30), at in any::<prop::sample::Index>(), g in 1i32..7) {
        let m = u.strands() as i32;
        let g = (g - 1) % (m - 1) + 1;
        let mut l = u.letters().to_vec();
        let k = at.index(l.len() + 1);
        l.splice(k..k, [g, -g]);
        let v = BraidWord::new(u.strands(), l).unwrap();
        prop_assert!(u.equals(&v).unwrap());
        prop_assert!(oracle_equal(&u, &v).unwrap());
    }

    #[test]
    fn normal_form_round_trip(u in word(7, 40)) {
        let nf = u.normal_form();
        prop_assert!(nf.is_well_formed());
        prop_assert_eq!(nf.to_word().normal_form(), nf.clone());
        prop_assert_eq!(NormalForm::parse(u.strands(), &nf.to_string()).unwrap(), nf.clone());
        prop_assert!(nf.to_word().equals(&u).unwrap());
    }

    #[test]
    fn exponent_sum_is_an_invariant(u in word(6, 30)) {
        let nf = u.normal_form();
        prop_assert_eq!(nf.to_word().exponent_sum(), u.exponent_sum());
        prop_assert_eq!(nf.to_fraction_word().exponent_sum(), u.exponent_sum());
    }

    #[test]
    fn full_twist_is_central(u in word(6, 20)) {
        let d2 = delta_squared(u.strands()).unwrap();
        prop_assert!(d2.multiply(&u).unwrap().equals(&u.multiply(&d2).unwrap()).unwrap());
    }

    #[test]
    fn decomposition_identities(u in word(6, 25)) {
        let m = u.strands();
        let d2 = delta_squared(m).unwrap();
        let (k, r1) = decompose_positive(&u);
        prop_assert!(r1.is_positive());
        prop_assert!(d2.pow(k).multiply(&r1).unwrap().equals(&u).unwrap());
        let (p, r2) = complement_to_delta_power(&u);
        prop_assert!(p >= 1 && r2.is_positive());
        prop_assert!(u.multiply(&r2).unwrap().equals(&d2.pow(p as i64)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugacy_answers_are_sound((u, v) in pair(4, 6)) {
        match are_conjugate(&u, &v, &Budget::default()).unwrap() {
            Conjugacy::Yes(c) => {
                let lhs = c.multiply(&u).unwrap().multiply(&c.inverse()).unwrap();
                prop_assert!(lhs.equals(&v).unwrap());
            }
            Conjugacy::No => {
                let target = v.normal_form();
                for c in short_words(u.strands(), 4) {
                    let x = c.multiply(&u).unwrap().multiply(&c.inverse()).unwrap();
                    prop_assert_ne!(x.normal_form(), target.clone(), "conjugator {}", c);
                }
            }
            Conjugacy::Unknown => {}
        }
    }

    #[test]
    fn conjugates_are_recognised(u in word(5, 8), c in word(5, 6)) {
        let c = BraidWord::new(u.strands(), c.letters().iter().copied().filter(|l| (l.unsigned_abs() as usize) < u.strands()).collect()).unwrap();
        let v = c.multiply(&u).unwrap().multiply(&c.inverse()).unwrap();
        match are_conjugate(&u, &v, &Budget::default()).unwrap() {
            Conjugacy::Yes(w) => {
                let lhs = w.multiply(&u).unwrap().multiply(&w.inverse()).unwrap();
                prop_assert!(lhs.equals(&v).unwrap());
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }
}
