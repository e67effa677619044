//! Randomized structural properties over the triangle system.

use num::Zero;
use proptest::prelude::*;

use chambered::coxeter::CoxeterSystem;
use chambered::fan::{chamber_locate, cone_contains, g_matrix};
use chambered::geometry::pairing;
use chambered::graph::InputGraph;
use chambered::linalg::{Int, Rat};

fn triangle() -> CoxeterSystem {
    let g = InputGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
    CoxeterSystem::from_graph(g).unwrap()
}

fn rats(coords: &[i64]) -> Vec<Rat> {
    coords.iter().map(|&x| Rat::from(Int::from(x))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pairing_is_preserved_by_every_element(
        word in prop::collection::vec(0usize..3, 0..8),
        f in prop::collection::vec(-20i64..=20, 3),
        v in prop::collection::vec(-20i64..=20, 3),
    ) {
        let sys = triangle();
        let w = sys.element_from_word(&word).unwrap();
        let fr = rats(&f);
        let vi: Vec<Int> = v.iter().map(|&x| Int::from(x)).collect();
        let lhs = pairing(&w.sigma_star().mul_vec_rat(&fr), &w.sigma().mul_vec(&vi));
        prop_assert_eq!(lhs, pairing(&fr, &vi));
    }

    #[test]
    fn located_chambers_contain_their_covectors(
        coords in prop::collection::vec(-40i64..=40, 3),
    ) {
        let sys = triangle();
        let f = rats(&coords);
        let level: Rat = f.iter().sum();
        prop_assume!(!level.is_zero());
        let hit = chamber_locate(&sys, &f).unwrap();
        prop_assert!(cone_contains(&g_matrix(&sys, &hit.element, hit.family), &f));
        prop_assert_eq!(hit.certificate.len(), hit.element.length());
        let from_certificate = sys.element_from_word(&hit.certificate).unwrap();
        prop_assert_eq!(&from_certificate, &hit.element);
    }

    #[test]
    fn inserting_a_doubled_letter_never_changes_the_element(
        word in prop::collection::vec(0usize..3, 0..7),
        at in 0usize..8,
        letter in 0usize..3,
    ) {
        let sys = triangle();
        let mut padded = word.clone();
        let at = at.min(word.len());
        padded.splice(at..at, [letter, letter]);
        let plain = sys.element_from_word(&word).unwrap();
        let doubled = sys.element_from_word(&padded).unwrap();
        prop_assert_eq!(plain, doubled);
    }
}
