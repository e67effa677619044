//! The acceptance gate: eight structural criteria, each printing one
//! PASS/FAIL line. Every check is exact; nothing here is statistical except
//! the choice of random sample points, whose seeds are fixed.

use std::collections::{HashMap, HashSet};
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chambered::coxeter::CoxeterSystem;
use chambered::fan::{
    chamber_locate, cone_contains, coverage_sample, g_matrix, interiors_disjoint,
    mutation_neighbors, Family, GMatrix,
};
use chambered::geometry::{pairing, pairing_int};
use chambered::graph::{GraphClass, InputGraph};
use chambered::linalg::{IMatrix, Int, Rat};
use chambered::oracle::{ideal_word_module, OracleContext};
use chambered::Error;

fn criterion(number: usize, name: &str, body: impl FnOnce()) {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {number} ({name}): {verdict}");
    if let Err(cause) = outcome {
        resume_unwind(cause);
    }
}

fn graph(n: usize, edges: &[(usize, usize)]) -> InputGraph {
    InputGraph::new(n, edges).unwrap()
}

fn system(g: &InputGraph) -> CoxeterSystem {
    CoxeterSystem::from_graph(g.clone()).unwrap()
}

fn a1() -> InputGraph {
    graph(2, &[(1, 2), (1, 2)])
}

fn a2() -> InputGraph {
    graph(3, &[(1, 2), (2, 3), (1, 3)])
}

fn d4() -> InputGraph {
    graph(5, &[(1, 5), (2, 5), (3, 5), (4, 5)])
}

fn e6() -> InputGraph {
    graph(7, &[(1, 2), (2, 5), (3, 4), (4, 5), (5, 6), (6, 7)])
}

fn all_four() -> Vec<(&'static str, CoxeterSystem)> {
    vec![
        ("double edge", system(&a1())),
        ("triangle", system(&a2())),
        ("four-leaf star", system(&d4())),
        ("extended hexapod", system(&e6())),
    ]
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn matrix(rows: &[&[i64]]) -> IMatrix {
    IMatrix::from_fn(rows.len(), |i, j| Int::from(rows[i][j]))
}

#[test]
fn acceptance_1_representation_axioms() {
    criterion(1, "representation axioms", || {
        for (name, sys) in all_four() {
            let n = sys.rank();
            for i in 0..n {
                assert!(
                    sys.sigma_generator(i).mul(sys.sigma_generator(i)).is_identity(),
                    "{name}: generator {i} must be an involution"
                );
                assert!(sys
                    .sigma_star_generator(i)
                    .mul(sys.sigma_star_generator(i))
                    .is_identity());
            }
            for i in 0..n {
                for j in i + 1..n {
                    let Some(order) = sys.graph().coxeter_label(i, j) else {
                        continue;
                    };
                    let prod = sys.sigma_generator(i).mul(sys.sigma_generator(j));
                    let mut acc = IMatrix::identity(n);
                    for _ in 0..order {
                        acc = acc.mul(&prod);
                    }
                    assert!(acc.is_identity(), "{name}: braid relation at ({i}, {j})");
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            let pairs: Vec<(Vec<Rat>, Vec<Int>)> = (0..100)
                .map(|_| {
                    let f =
                        (0..n).map(|_| Rat::from(Int::from(rng.gen_range(-9i64..=9)))).collect();
                    let v = (0..n).map(|_| Int::from(rng.gen_range(-9i64..=9))).collect();
                    (f, v)
                })
                .collect();
            let ball = sys.enumerate_up_to_length(6).unwrap();
            for w in &ball.elements {
                assert!(
                    w.sigma_star().transpose().mul(w.sigma()).is_identity(),
                    "{name}: the two representations must be mutually contragredient"
                );
                for (f, v) in &pairs {
                    let lhs =
                        pairing(&w.sigma_star().mul_vec_rat(f), &w.sigma().mul_vec(v));
                    assert_eq!(lhs, pairing(f, v), "{name}: pairing drifted");
                }
            }
        }
    });
}

#[test]
fn acceptance_2_null_root() {
    criterion(2, "null root", || {
        let frozen: Vec<(InputGraph, Vec<i64>)> = vec![
            (a1(), vec![1, 1]),
            (a2(), vec![1, 1, 1]),
            (d4(), vec![1, 1, 1, 1, 2]),
            (e6(), vec![1, 2, 1, 2, 3, 2, 1]),
        ];
        for (g, want) in frozen {
            let sys = system(&g);
            match sys.class() {
                GraphClass::Affine { delta } => assert_eq!(delta, &ints(&want)),
                other => panic!("expected affine classification, got {other:?}"),
            }
            let delta = sys.delta().unwrap().to_vec();
            let ball = sys.enumerate_up_to_length(3).unwrap();
            let probe: Vec<Rat> =
                (0..sys.rank()).map(|i| Rat::from(Int::from(i as i64 + 2))).collect();
            for w in &ball.elements {
                assert_eq!(w.sigma().mul_vec(&delta), delta, "null root must be fixed");
                assert_eq!(
                    pairing(&w.sigma_star().mul_vec_rat(&probe), &delta),
                    pairing(&probe, &delta),
                    "level must be preserved"
                );
            }
        }
        assert!(matches!(
            CoxeterSystem::from_graph(graph(3, &[(1, 2), (2, 3)])),
            Err(Error::DynkinGraph)
        ));
        let wild = system(&graph(2, &[(1, 2), (1, 2), (1, 2)]));
        assert!(matches!(wild.class(), GraphClass::OtherNonDynkin));
        assert!(matches!(wild.delta(), Err(Error::NotAffine)));
    });
}

#[test]
fn acceptance_3_distinct_disjoint_chambers() {
    criterion(3, "distinct chambers with disjoint interiors", || {
        let sys = system(&a2());
        let ball = sys.enumerate_up_to_length(3).unwrap();
        let mut gs: Vec<GMatrix> = Vec::new();
        for family in [Family::P, Family::R] {
            for w in &ball.elements {
                gs.push(g_matrix(&sys, w, family));
            }
        }
        assert_eq!(gs.len(), 38);
        let distinct: HashSet<&IMatrix> = gs.iter().map(|g| &g.matrix).collect();
        assert_eq!(distinct.len(), gs.len(), "all chamber matrices must differ");
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                assert!(
                    interiors_disjoint(&gs[i], &gs[j]),
                    "chambers {i} and {j} overlap"
                );
            }
        }
    });
}

#[test]
fn acceptance_4_randomized_coverage() {
    criterion(4, "randomized coverage", || {
        for g in [a1(), a2()] {
            let sys = system(&g);
            let report = coverage_sample(&sys, 1, 1000, 50).unwrap();
            assert_eq!(report.failures, 0, "{:?}", report.failure_detail);
            assert_eq!(report.located + report.discarded_level_zero, 1000);
            assert!(report.located > 0);

            // Fresh draws, independently re-verified against the cone test.
            let n = sys.rank();
            let delta = sys.delta().unwrap().to_vec();
            let mut rng = ChaCha8Rng::seed_from_u64(77);
            let mut checked = 0;
            while checked < 200 {
                let f: Vec<Rat> =
                    (0..n).map(|_| Rat::from(Int::from(rng.gen_range(-50i64..=50)))).collect();
                if pairing(&f, &delta) == Rat::from(Int::from(0)) {
                    continue;
                }
                let hit = chamber_locate(&sys, &f).unwrap();
                let g = g_matrix(&sys, &hit.element, hit.family);
                assert!(cone_contains(&g, &f), "located chamber must contain the covector");
                assert_eq!(
                    hit.certificate.len(),
                    hit.element.length(),
                    "descent certificate must be a reduced word"
                );
                checked += 1;
            }
        }
    });
}

#[test]
fn acceptance_5_half_space_split() {
    criterion(5, "half-space split", || {
        for (name, sys) in all_four() {
            let delta = sys.delta().unwrap().to_vec();
            let ball = sys.enumerate_up_to_length(5).unwrap();
            for w in &ball.elements {
                for family in [Family::P, Family::R] {
                    let g = g_matrix(&sys, w, family);
                    for j in 0..sys.rank() {
                        let level = pairing_int(&g.matrix.column(j), &delta);
                        let want = match family {
                            Family::P => delta[j].clone(),
                            Family::R => -delta[j].clone(),
                        };
                        assert_eq!(level, want, "{name}: column {j} level is wrong");
                    }
                }
            }
        }
    });
}

#[test]
fn acceptance_6_mutation_matches_weak_order() {
    criterion(6, "wall crossings match the weak order", || {
        let sys = system(&a2());
        let ball = sys.enumerate_up_to_length(5).unwrap();
        assert_eq!(ball.elements.len(), 46);
        let index: HashMap<_, usize> =
            ball.elements.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
        let mut crossings = Vec::new();
        for (k, w) in ball.elements.iter().enumerate() {
            let gp = g_matrix(&sys, w, Family::P);
            let gr = g_matrix(&sys, w, Family::R);
            for (i, neighbor, gn) in mutation_neighbors(&sys, w, Family::P) {
                let differing: Vec<usize> = (0..3)
                    .filter(|&j| gn.matrix.column(j) != gp.matrix.column(j))
                    .collect();
                assert_eq!(differing, vec![i], "crossing wall {i} must change column {i} only");
                let rn = g_matrix(&sys, &neighbor, Family::R);
                let differing_r: Vec<usize> = (0..3)
                    .filter(|&j| rn.matrix.column(j) != gr.matrix.column(j))
                    .collect();
                assert_eq!(differing_r, vec![i]);
                if neighbor.length() == w.length() + 1 && neighbor.length() <= 5 {
                    let upper = *index
                        .get(&neighbor)
                        .expect("a length-increasing crossing must stay in the ball");
                    crossings.push((k, upper, i));
                }
            }
        }
        crossings.sort_unstable();
        let hasse: Vec<(usize, usize, usize)> =
            ball.hasse_edges.iter().map(|e| (e.lower, e.upper, e.gen)).collect();
        assert_eq!(crossings, hasse, "wall-crossing graph must equal the weak order diagram");
    });
}

#[test]
fn acceptance_7_oracle_agreement() {
    criterion(7, "truncated algebra oracle agreement", || {
        let cases =
            [(a1(), 4usize), (a2(), 4), (d4(), 2)];
        for (g, max_len) in cases {
            let sys = system(&g);
            let oracle = OracleContext::new(&g, 8).unwrap();
            let ball = sys.enumerate_up_to_length(max_len).unwrap();
            for w in &ball.elements {
                let got = oracle.g_matrix(w.word()).unwrap();
                assert!(got.stabilized, "presentation must stabilize at both depths");
                let want = g_matrix(&sys, w, Family::P);
                assert_eq!(got.matrix, want.matrix, "oracle disagrees on {:?}", w.word());

                let words = sys.all_reduced_words(w);
                if words.len() > 1 {
                    for j in 0..sys.rank() {
                        let reference = ideal_word_module(oracle.algebra(), &words[0], j);
                        for alt in &words[1..] {
                            assert!(
                                ideal_word_module(oracle.algebra(), alt, j) == reference,
                                "module must not depend on the reduced word"
                            );
                        }
                    }
                }
            }
        }
    });
}

#[test]
fn acceptance_8_known_chamber_matrices() {
    criterion(8, "known chamber matrices", || {
        let triangle = a2();
        let sys = system(&triangle);
        let oracle = OracleContext::new(&triangle, 8).unwrap();
        let s1 = sys.generator(0).unwrap();
        let want = matrix(&[&[-1, 0, 0], &[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(g_matrix(&sys, &s1, Family::P).matrix, want);
        assert_eq!(oracle.g_matrix(&[0]).unwrap().matrix, want);
        let want_r = matrix(&[&[1, 0, 0], &[-1, -1, 0], &[-1, 0, -1]]);
        assert_eq!(g_matrix(&sys, &s1, Family::R).matrix, want_r);
        assert!(g_matrix(&sys, &sys.identity(), Family::P).matrix.is_identity());
        assert_eq!(oracle.g_matrix(&[]).unwrap().matrix, IMatrix::identity(3));

        let rank2 = a1();
        let sys = system(&rank2);
        let oracle = OracleContext::new(&rank2, 8).unwrap();
        let s1 = sys.generator(0).unwrap();
        let want = matrix(&[&[-1, 0], &[2, 1]]);
        assert_eq!(g_matrix(&sys, &s1, Family::P).matrix, want);
        assert_eq!(oracle.g_matrix(&[0]).unwrap().matrix, want);

        let f = vec![Rat::from(Int::from(-1)), Rat::from(Int::from(3))];
        let hit = chamber_locate(&sys, &f).unwrap();
        assert_eq!(hit.family, Family::P);
        assert_eq!(hit.element.word(), &[0]);
        assert_eq!(hit.transformed, vec![Rat::from(Int::from(1)), Rat::from(Int::from(1))]);

        let minus_e1 = vec![
            Rat::from(Int::from(-1)),
            Rat::from(Int::from(0)),
            Rat::from(Int::from(0)),
        ];
        let sys3 = system(&triangle);
        let hit = chamber_locate(&sys3, &minus_e1).unwrap();
        assert_eq!(hit.family, Family::R);
        assert!(hit.element.is_identity());
    });
}
