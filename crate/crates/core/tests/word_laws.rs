use branchorder_core::{Letter, Word};
use proptest::prelude::*;

fn raw_word(gens: u32, max_len: usize) -> impl Strategy<Value = Vec<(u32, i64)>> {
    prop::collection::vec((0..gens, -3i64..=3), 0..max_len)
}

fn word(gens: u32) -> impl Strategy<Value = Word> {
    raw_word(gens, 10).prop_map(Word::free_reduce)
}

fn is_reduced(w: &Word) -> bool {
    let s = w.syllables();
    s.iter().all(|x| x.exp != 0) && s.windows(2).all(|p| p[0].gen != p[1].gen)
}

proptest! {
    #[test]
    fn reduction_yields_reduced_words(raw in raw_word(3, 16)) {
        prop_assert!(is_reduced(&Word::free_reduce(raw)));
    }

    #[test]
    fn reduction_is_idempotent(w in word(3)) {
        let again = Word::free_reduce(w.syllables().iter().map(|s| (s.gen, s.exp)));
        prop_assert_eq!(again, w);
    }

    #[test]
    fn reduction_is_confluent(raw in raw_word(3, 12), split in 0usize..12) {
        // reducing a prefix first and then the whole list gives the same word
        let cut = split.min(raw.len());
        let prefix = Word::free_reduce(raw[..cut].iter().copied());
        let staged = prefix.concat(&Word::free_reduce(raw[cut..].iter().copied()));
        prop_assert_eq!(staged, Word::free_reduce(raw));
    }

    #[test]
    fn concat_is_associative(u in word(3), v in word(3), x in word(3)) {
        prop_assert_eq!(u.concat(&v).concat(&x), u.concat(&v.concat(&x)));
    }

    #[test]
    fn identity_is_neutral(u in word(3)) {
        prop_assert_eq!(u.concat(&Word::identity()), u.clone());
        prop_assert_eq!(Word::identity().concat(&u), u);
    }

    #[test]
    fn inverse_laws(u in word(3)) {
        prop_assert!(u.concat(&u.invert()).is_identity());
        prop_assert!(u.invert().concat(&u).is_identity());
        prop_assert_eq!(u.invert().invert(), u.clone());
        prop_assert_eq!(u.invert().letter_len(), u.letter_len());
    }

    #[test]
    fn inverse_reverses_products(u in word(3), v in word(3)) {
        prop_assert_eq!(u.concat(&v).invert(), v.invert().concat(&u.invert()));
    }

    #[test]
    fn conjugation_composes(u in word(3), a in word(3), b in word(3)) {
        prop_assert_eq!(u.conjugate(&a).conjugate(&b), u.conjugate(&a.concat(&b)));
        prop_assert_eq!(u.conjugate(&Word::identity()), u.clone());
        prop_assert!(Word::identity().conjugate(&a).is_identity());
    }

    #[test]
    fn powers_add(u in word(2), p in -4i64..=4, q in -4i64..=4) {
        prop_assert_eq!(u.pow(p).concat(&u.pow(q)), u.pow(p + q));
    }

    #[test]
    fn letters_round_trip(u in word(3)) {
        let letters: Vec<Letter> = u.letter_vec();
        prop_assert_eq!(letters.len(), u.letter_len());
        prop_assert_eq!(Word::from_letters(letters), u);
    }

    #[test]
    fn split_and_insert_agree(u in word(3), piece in word(3), pos in 0usize..40) {
        let pos = pos.min(u.letter_len());
        let (left, right) = u.split_at_letter(pos);
        prop_assert_eq!(left.letter_len() + right.letter_len(), u.letter_len());
        prop_assert_eq!(left.concat(&right), u.clone());
        prop_assert_eq!(u.insert_at(pos, &piece), left.concat(&piece).concat(&right));
    }

    #[test]
    fn cyclic_reduction_is_a_conjugate(u in word(3)) {
        let c = u.cyclically_reduce();
        prop_assert!(c.letter_len() <= u.letter_len());
        prop_assert_eq!(c.cyclically_reduce(), c.clone());
        let letters = c.letter_vec();
        if letters.len() > 1 {
            prop_assert_ne!(letters[0], letters.last().unwrap().inv());
        }
    }

    #[test]
    fn shortlex_is_a_total_order(u in word(2), v in word(2), x in word(2)) {
        use std::cmp::Ordering::*;
        prop_assert_eq!(u.shortlex_cmp(&v), v.shortlex_cmp(&u).reverse());
        prop_assert_eq!(u.shortlex_cmp(&v) == Equal, u == v);
        if u.shortlex_cmp(&v) != Greater && v.shortlex_cmp(&x) != Greater {
            prop_assert_ne!(u.shortlex_cmp(&x), Greater);
        }
    }
}

#[test]
fn documented_cases() {
    let a = Word::generator(0);
    let b = Word::generator(1);
    let c = Word::generator(2);
    assert!(Word::free_reduce([(0, 1), (0, -1)]).is_identity());
    assert_eq!(Word::free_reduce([(0, 2), (0, 3)]), Word::power(0, 5));
    assert!(Word::free_reduce([(1, -1), (0, 1), (0, -1), (1, 1)]).is_identity());
    assert_eq!(a.concat(&b).concat(&b.invert().concat(&c)), a.concat(&c));
    assert_eq!(
        Word::free_reduce([(0, 2), (1, -1)]).invert(),
        Word::free_reduce([(1, 1), (0, -2)])
    );
    assert_eq!(a.conjugate(&b), Word::free_reduce([(1, -1), (0, 1), (1, 1)]));
}
