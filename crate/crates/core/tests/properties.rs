use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use twisted_cubic::algebra::{parse_scalar, Field};
use twisted_cubic::elliptic::{curve, hasse_ok};
use twisted_cubic::forms::{act, j_invariant, BinaryForm, Gl2};
use twisted_cubic::incidence::{brute_decompose, classify_line, decompose};
use twisted_cubic::klein::{act_on_line, Line};

fn field(i: usize) -> Field {
    match i {
        0 => Field::prime(5),
        1 => Field::prime(7),
        2 => Field::prime(11),
        3 => Field::prime(13),
        4 => Field::new(5, 2, None),
        _ => Field::new(7, 2, None),
    }
    .unwrap()
}

fn fields() -> impl Strategy<Value = usize> {
    0usize..6
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_matches_brute_force(i in fields(), seed: u64) {
        let f = field(i);
        let mut rng = StdRng::seed_from_u64(seed);
        let l = Line::random(&f, &mut rng);
        let p = decompose(&l).unwrap();
        prop_assert_eq!(p.counts, brute_decompose(&l).counts);
        prop_assert_eq!(p.counts.iter().sum::<usize>() as u64, f.q() + 1);
    }

    #[test]
    fn line_action_is_a_group_action(i in fields(), seed: u64) {
        let f = field(i);
        let mut rng = StdRng::seed_from_u64(seed);
        let l = Line::random(&f, &mut rng);
        let (g, h) = (Gl2::random(&f, &mut rng), Gl2::random(&f, &mut rng));
        prop_assert_eq!(act_on_line(&g.compose(&h), &l), act_on_line(&g, &act_on_line(&h, &l)));
        prop_assert_eq!(act_on_line(&g.inverse(), &act_on_line(&g, &l)), l);
    }

    #[test]
    fn class_and_counts_are_invariant(i in fields(), seed: u64) {
        let f = field(i);
        let mut rng = StdRng::seed_from_u64(seed);
        let l = Line::random(&f, &mut rng);
        let m = act_on_line(&Gl2::random(&f, &mut rng), &l);
        prop_assert_eq!(classify_line(&l).unwrap(), classify_line(&m).unwrap());
        prop_assert_eq!(brute_decompose(&l).counts, brute_decompose(&m).counts);
    }

    #[test]
    fn polarity_is_an_involution(i in fields(), seed: u64) {
        let f = field(i);
        let l = Line::random(&f, &mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(l.dual().dual(), l);
        prop_assert_eq!(classify_line(&l.dual()).unwrap(), classify_line(&l).unwrap().dual());
    }

    #[test]
    fn j_is_invariant(i in fields(), seed: u64, c in proptest::collection::vec(-50i64..50, 5)) {
        let f = field(i);
        let phi = BinaryForm::from_ints(&f, &c).unwrap();
        let g = Gl2::random(&f, &mut StdRng::seed_from_u64(seed));
        match j_invariant(&phi) {
            Ok(j) => prop_assert_eq!(j_invariant(&act(&g, &phi)).unwrap(), j),
            Err(_) => prop_assert!(j_invariant(&act(&g, &phi)).is_err()),
        }
    }

    #[test]
    fn elliptic_count_matches_nu_and_eta(i in fields(), seed: u64) {
        let f = field(i);
        let mut rng = StdRng::seed_from_u64(seed);
        let l = std::iter::repeat_with(|| Line::random(&f, &mut rng)).find(|l| l.nature().generic).unwrap();
        let n = curve(&l).unwrap().count_points();
        let p = decompose(&l).unwrap();
        prop_assert_eq!(n, 2 * p.nu.unwrap() as u64 + p.eta.unwrap() as u64);
        prop_assert_eq!(n % 3, 0);
        prop_assert!(hasse_ok(n, f.q()));
    }

    #[test]
    fn fractions_parse_in_field(i in fields(), a in -100i64..100, b in 1i64..100) {
        let f = field(i);
        prop_assume!(b % f.p() as i64 != 0);
        let x = parse_scalar(&f, &format!("{a}/{b}")).unwrap();
        prop_assert_eq!(x * f.int(b), f.int(a));
    }
}
