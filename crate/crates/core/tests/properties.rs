use braid_ld_core::action::{
    act_conj_sequence, act_g, act_x, braid_equal, braid_is_identity, leans_right_at, phi, phi_inv,
};
use braid_ld_core::braid::defining_relations;
use braid_ld_core::ldterm::{ld_equal, LdSequence};
use braid_ld_core::{ActionConfig, Alphabet, BraidLetter, BraidWord, FreeWord, LdTerm, Letter, Sign};
use proptest::prelude::*;

fn letter(alphabet: Alphabet, max_index: u32) -> impl Strategy<Value = Letter> {
    (0..=max_index, any::<bool>()).prop_map(move |(i, pos)| {
        Letter::new(alphabet, i, if pos { Sign::Pos } else { Sign::Neg })
    })
}

fn raw_letters(alphabet: Alphabet, max_len: usize, max_index: u32) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter(alphabet, max_index), 0..=max_len)
}

fn word(alphabet: Alphabet, max_len: usize, max_index: u32) -> impl Strategy<Value = FreeWord> {
    raw_letters(alphabet, max_len, max_index).prop_map(move |ls| FreeWord::reduce(alphabet, ls).unwrap())
}

fn braid(max_len: usize, max_index: u32) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..=max_index, any::<bool>()), 0..=max_len).prop_map(|ls| {
        ls.into_iter()
            .map(|(i, pos)| if pos { BraidLetter::pos(i) } else { BraidLetter::neg(i) })
            .collect()
    })
}

fn term(max_leaves: u32) -> impl Strategy<Value = LdTerm> {
    let leaf = Just(LdTerm::leaf());
    leaf.prop_recursive(6, max_leaves, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| LdTerm::apply(l, r))
    })
}

fn is_reduced(w: &FreeWord) -> bool {
    w.letters().windows(2).all(|p| !p[0].cancels(p[1]))
}

fn cfg() -> ActionConfig {
    ActionConfig::default()
}

proptest! {
    #[test]
    fn reduce_normal_form(ls in raw_letters(Alphabet::G, 30, 4)) {
        let r = FreeWord::reduce(Alphabet::G, ls.clone()).unwrap();
        prop_assert!(is_reduced(&r));
        prop_assert_eq!(FreeWord::reduce(Alphabet::G, r.letters().to_vec()).unwrap(), r.clone());
        prop_assert!(r.len() <= ls.len());
        prop_assert_eq!(r.len() % 2, ls.len() % 2);
    }

    #[test]
    fn word_group_laws(
        a in word(Alphabet::X, 10, 3),
        b in word(Alphabet::X, 10, 3),
        c in word(Alphabet::X, 10, 3),
    ) {
        let ab_c = a.concat(&b).unwrap().concat(&c).unwrap();
        let a_bc = a.concat(&b.concat(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(a.invert().invert(), a.clone());
        prop_assert!(a.concat(&a.invert()).unwrap().is_empty());
        prop_assert_eq!(a.concat(&FreeWord::empty(Alphabet::X)).unwrap(), a.clone());
        prop_assert!(is_reduced(&a.concat(&b).unwrap()));
    }

    #[test]
    fn braid_word_involutions_and_shift(p in braid(12, 6), a in 0u32..4, b in 0u32..4) {
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!(p.invert().invert(), p.clone());
        prop_assert!(p.concat(&p.invert()).free_cancel().is_empty());
        prop_assert_eq!(p.shift(a).shift(b), p.shift(a + b));
        prop_assert_eq!(p.shift(0), p.clone());
        prop_assert_eq!(p.shift(a).len(), p.len());
    }

    #[test]
    fn bracket_shape(p in braid(8, 4), q in braid(8, 4)) {
        let pq = p.bracket(&q);
        prop_assert_eq!(pq.len(), 2 * p.len() + q.len() + 1);
        // s(p[q]) = s(p) · s²(q) · σ2 · s²(p)⁻¹ letter for letter.
        let expected = p
            .shift(1)
            .concat(&q.shift(2))
            .concat(&BraidWord::from(vec![BraidLetter::pos(2)]))
            .concat(&p.shift(2).invert());
        prop_assert_eq!(pq.shift(1), expected);
    }

    #[test]
    fn sigma_decompose_reassembles(p in braid(15, 4), n in 1u32..=4) {
        match p.sigma_decompose(n) {
            Some(d) => {
                prop_assert_eq!(d.reassemble(), p.clone());
                prop_assert!(d.p1.letters().iter().all(|l| l.index() != n));
                prop_assert!(d.p2.letters().iter().all(|l| *l != BraidLetter::neg(n)));
            }
            None => prop_assert!(!p.is_sigma_positive(n)),
        }
    }

    #[test]
    fn action_is_a_homomorphism(a in word(Alphabet::G, 8, 5), b in word(Alphabet::G, 8, 5), p in braid(6, 4)) {
        let lhs = act_g(&a.concat(&b).unwrap(), &p, &cfg()).unwrap();
        let rhs = act_g(&a, &p, &cfg()).unwrap().concat(&act_g(&b, &p, &cfg()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_composes_left_to_right(f in word(Alphabet::G, 6, 5), p in braid(5, 4), q in braid(5, 4)) {
        let once = act_g(&f, &p.concat(&q), &cfg()).unwrap();
        let twice = act_g(&act_g(&f, &p, &cfg()).unwrap(), &q, &cfg()).unwrap();
        prop_assert_eq!(&once, &twice);
        let back = act_g(&once, &q.invert().concat(&p.invert()), &cfg()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn phi_round_trips(x in word(Alphabet::X, 12, 8), g in word(Alphabet::G, 12, 8)) {
        prop_assert_eq!(phi_inv(&phi(&x).unwrap()).unwrap(), x);
        prop_assert_eq!(phi(&phi_inv(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn commuting_square(f in word(Alphabet::X, 10, 6), p in braid(10, 6)) {
        let direct = act_x(&f, &p, &cfg()).unwrap();
        let via_g = phi_inv(&act_g(&phi(&f).unwrap(), &p, &cfg()).unwrap()).unwrap();
        prop_assert_eq!(direct, via_g);
    }

    #[test]
    fn word_times_inverse_is_identity(p in braid(10, 5)) {
        prop_assert!(braid_is_identity(&p.concat(&p.invert()), &cfg()).unwrap());
        prop_assert!(braid_equal(&p, &p.free_cancel(), &cfg()).unwrap());
    }

    #[test]
    fn braid_equal_matches_image_comparison(
        p in braid(8, 4),
        q in braid(8, 4),
        rel in 0usize..6,
        at in 0usize..9,
    ) {
        let images_agree = |a: &BraidWord, b: &BraidWord| {
            (1..=6).all(|j| {
                let gj = FreeWord::generator(Alphabet::G, j);
                act_g(&gj, a, &cfg()).unwrap() == act_g(&gj, b, &cfg()).unwrap()
            })
        };
        prop_assert_eq!(braid_equal(&p, &q, &cfg()).unwrap(), images_agree(&p, &q));
        // Splice a relation into p so the equal branch is exercised too.
        let (u, v) = &defining_relations(4)[rel];
        let cut = at.min(p.len());
        let (head, tail) = p.letters().split_at(cut);
        let head = BraidWord::from(head.to_vec());
        let tail = BraidWord::from(tail.to_vec());
        let r = head.concat(u).concat(&v.invert()).concat(&tail);
        prop_assert!(braid_equal(&p, &r, &cfg()).unwrap());
        prop_assert_eq!(braid_is_identity(&r.concat(&q.invert()), &cfg()).unwrap(), images_agree(&p, &q));
    }

    #[test]
    fn xi_identity(p in braid(10, 7)) {
        let gens: Vec<FreeWord> = (1..=8).map(|j| FreeWord::generator(Alphabet::G, j)).collect();
        let lhs = act_conj_sequence(&gens, &p.reverse(), &cfg()).unwrap();
        for (j, g) in gens.iter().enumerate() {
            prop_assert_eq!(&lhs[j], &act_g(g, &p, &cfg()).unwrap());
        }
    }

    #[test]
    fn sigma_positive_words_are_nontrivial(p in braid(12, 5), n in 1u32..=3) {
        if let Some(d) = p.sigma_decompose(n) {
            let xn = FreeWord::generator(Alphabet::X, n);
            let image = act_x(&xn, &d.reassemble(), &cfg()).unwrap();
            prop_assert!(leans_right_at(&image, n));
            prop_assert!(!braid_is_identity(&p, &cfg()).unwrap());
        }
    }

    #[test]
    fn ld_law_and_base_independence(s in term(4), t in term(4), u in term(3), r in braid(3, 3)) {
        let lhs = LdTerm::apply(s.clone(), LdTerm::apply(t.clone(), u.clone()));
        let rhs = LdTerm::apply(LdTerm::apply(s.clone(), t.clone()), LdTerm::apply(s.clone(), u));
        prop_assert!(ld_equal(&lhs, &rhs, &BraidWord::empty(), &cfg()).unwrap());
        prop_assert!(ld_equal(&lhs, &rhs, &r, &cfg()).unwrap());
        prop_assert_eq!(
            ld_equal(&s, &t, &BraidWord::empty(), &cfg()).unwrap(),
            ld_equal(&s, &t, &r, &cfg()).unwrap()
        );
    }

    #[test]
    fn chi_is_a_homomorphism(s in term(5), t in term(5), r in braid(3, 3)) {
        let st = LdTerm::apply(s.clone(), t.clone());
        prop_assert_eq!(st.chi(&r), s.chi(&r).bracket(&t.chi(&r)));
    }

    #[test]
    fn sequence_action_inverts(terms in prop::collection::vec(term(3), 1..5), p in braid(6, 4)) {
        let seq = LdSequence::new(terms, LdTerm::leaf());
        let forward = seq.act(&p, &cfg());
        if let Ok(moved) = forward {
            if let Ok(back) = moved.act(&p.invert(), &cfg()) {
                prop_assert!(back.ld_equivalent(&seq, &cfg()).unwrap());
            }
        }
    }
}

#[test]
fn relations_hold_under_the_action() {
    for (u, v) in defining_relations(6) {
        for j in 0..=8 {
            let g = FreeWord::generator(Alphabet::G, j);
            assert_eq!(act_g(&g, &u, &cfg()).unwrap(), act_g(&g, &v, &cfg()).unwrap(), "{u} vs {v} on g{j}");
        }
        assert!(braid_equal(&u, &v, &cfg()).unwrap());
    }
}

#[test]
fn positive_words_invert_through_the_sequence_action() {
    // Positive words always act, and their inverses always undo them.
    let seq = LdSequence::constant(LdTerm::leaf());
    let p = BraidWord::from_signed(&[1, 2, 1, 3, 2, 1]).unwrap();
    let moved = seq.act(&p, &cfg()).unwrap();
    let back = moved.act(&p.invert(), &cfg()).unwrap();
    assert!(back.ld_equivalent(&seq, &cfg()).unwrap());
}
