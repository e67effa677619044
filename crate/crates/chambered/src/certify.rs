//! Structural certification of a chamber collection: distinctness and
//! pairwise disjointness of cones, the level split between the two families,
//! agreement of wall-crossing with the weak order, randomized coverage, and
//! agreement with the truncated-algebra oracle. Each check is exact; the
//! report is a conjunction of verdicts plus the data behind them.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coxeter::CoxeterSystem;
use crate::exec;
use crate::fan::{
    coverage_sample, first_interior_overlap, g_matrix, interiors_disjoint, mutation_neighbors,
    CoverageReport, Family, GMatrix,
};
use crate::geometry::pairing_int;
use crate::linalg::IMatrix;
use crate::oracle::{ideal_word_module, OracleContext};
use crate::Error;

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Word-length radius of the certified ball.
    pub ball_length: usize,
    /// Radius of the exhaustive pairwise disjointness scan.
    pub exhaustive_pair_length: usize,
    /// Extra random pairs checked across the full ball.
    pub random_pairs: usize,
    /// Word-length radius of the oracle comparison.
    pub oracle_length: usize,
    /// Truncation degree for the oracle.
    pub trunc: usize,
    pub coverage_seed: u64,
    pub coverage_count: usize,
    pub coverage_bound: i64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            ball_length: 4,
            exhaustive_pair_length: 3,
            random_pairs: 500,
            oracle_length: 2,
            trunc: 8,
            coverage_seed: 1,
            coverage_count: 1000,
            coverage_bound: 50,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    pub rank: usize,
    pub delta: Vec<String>,
    pub backend: String,
    pub ball_length: usize,
    pub chambers: usize,
    pub distinct_g_matrices: bool,
    pub exhaustive_pair_length: usize,
    pub exhaustive_pairs: usize,
    pub random_pairs: usize,
    pub interiors_disjoint: bool,
    pub half_space_split: bool,
    pub mutation_matches_weak_order: bool,
    pub coverage: CoverageReport,
    pub oracle_length: usize,
    pub oracle_trunc: usize,
    pub oracle_elements: usize,
    pub oracle_agrees: bool,
    pub oracle_stabilized: bool,
    pub reduced_word_independent: bool,
    pub passed: bool,
}

pub fn certify(sys: &CoxeterSystem, opts: &CertifyOptions) -> Result<CertifyReport, Error> {
    let delta = sys.delta()?.to_vec();
    let n = sys.rank();
    if opts.oracle_length > opts.ball_length {
        return Err(Error::InvalidParameter(
            "oracle length cannot exceed the ball length".into(),
        ));
    }
    if opts.oracle_length + 4 > opts.trunc {
        return Err(Error::InvalidParameter(format!(
            "truncation degree {} too small for oracle length {}",
            opts.trunc, opts.oracle_length
        )));
    }
    let ball = sys.enumerate_up_to_length(opts.ball_length)?;
    let chambers: Vec<(Family, usize, GMatrix)> = {
        let mut v = Vec::with_capacity(2 * ball.elements.len());
        for family in [Family::P, Family::R] {
            for (k, w) in ball.elements.iter().enumerate() {
                v.push((family, k, g_matrix(sys, w, family)));
            }
        }
        v
    };

    // Distinctness across both families at once.
    let mut seen: HashSet<&IMatrix> = HashSet::new();
    let distinct_g_matrices = chambers.iter().all(|(_, _, g)| seen.insert(&g.matrix));

    // Exhaustive disjointness on the inner ball, random pairs over the rest.
    let inner: Vec<GMatrix> = chambers
        .iter()
        .filter(|(_, k, _)| ball.elements[*k].length() <= opts.exhaustive_pair_length)
        .map(|(_, _, g)| g.clone())
        .collect();
    let exhaustive_pairs = inner.len() * (inner.len().saturating_sub(1)) / 2;
    let mut interiors_ok = distinct_g_matrices && first_interior_overlap(&inner).is_none();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.coverage_seed ^ 0x9e3779b97f4a7c15);
    let random_pairs = if chambers.len() >= 2 { opts.random_pairs } else { 0 };
    let pairs: Vec<(usize, usize)> = (0..random_pairs)
        .map(|_| {
            let i = rng.gen_range(0..chambers.len());
            let j = (i + rng.gen_range(1..chambers.len())) % chambers.len();
            (i.min(j), i.max(j))
        })
        .collect();
    if interiors_ok {
        interiors_ok = exec::map_vec(&pairs, |&(i, j)| {
            interiors_disjoint(&chambers[i].2, &chambers[j].2)
        })
        .into_iter()
        .all(|ok| ok);
    }

    // Level split: the j-th column of a P chamber pairs with the null root
    // to exactly delta_j, an R chamber to minus delta_j.
    let half_space_split = chambers.iter().all(|(family, _, g)| {
        (0..n).all(|j| {
            let lvl = pairing_int(&g.matrix.column(j), &delta);
            match family {
                Family::P => lvl == delta[j],
                Family::R => lvl == -delta[j].clone(),
            }
        })
    });

    // Wall-crossing against the weak order: crossing wall i changes column i
    // alone, and the length-increasing crossings are exactly the cover edges.
    let index: HashMap<&crate::coxeter::Element, usize> =
        ball.elements.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut mutation_ok = true;
    let mut crossings = Vec::new();
    for (k, w) in ball.elements.iter().enumerate() {
        let gp = g_matrix(sys, w, Family::P);
        for (i, neighbor, gn) in mutation_neighbors(sys, w, Family::P) {
            let differing: Vec<usize> =
                (0..n).filter(|&j| gn.matrix.column(j) != gp.matrix.column(j)).collect();
            if differing != vec![i] {
                mutation_ok = false;
            }
            if neighbor.length() == w.length() + 1 {
                if let Some(&upper) = index.get(&neighbor) {
                    crossings.push((k, upper, i));
                } else if neighbor.length() <= opts.ball_length {
                    mutation_ok = false;
                }
            }
        }
    }
    crossings.sort_unstable();
    let hasse: Vec<(usize, usize, usize)> =
        ball.hasse_edges.iter().map(|e| (e.lower, e.upper, e.gen)).collect();
    if crossings != hasse {
        mutation_ok = false;
    }

    let coverage =
        coverage_sample(sys, opts.coverage_seed, opts.coverage_count, opts.coverage_bound)?;

    // Oracle comparison on the inner ball, plus independence of the module
    // from the chosen reduced word.
    let oracle = OracleContext::new(sys.graph(), opts.trunc)?;
    let oracle_elements: Vec<&crate::coxeter::Element> = ball
        .elements
        .iter()
        .filter(|w| w.length() <= opts.oracle_length)
        .collect();
    let mut oracle_agrees = true;
    let mut oracle_stabilized = true;
    let mut reduced_word_independent = true;
    for w in &oracle_elements {
        let expected = g_matrix(sys, w, Family::P);
        let got = oracle.g_matrix(w.word())?;
        if got.matrix != expected.matrix {
            oracle_agrees = false;
        }
        if !got.stabilized {
            oracle_stabilized = false;
        }
        let words = sys.all_reduced_words(w);
        if words.len() > 1 {
            for j in 0..n {
                let reference = ideal_word_module(oracle.algebra(), &words[0], j);
                for alt in &words[1..] {
                    if ideal_word_module(oracle.algebra(), alt, j) != reference {
                        reduced_word_independent = false;
                    }
                }
            }
        }
    }

    let passed = distinct_g_matrices
        && interiors_ok
        && half_space_split
        && mutation_ok
        && coverage.failures == 0
        && oracle_agrees
        && oracle_stabilized
        && reduced_word_independent;

    Ok(CertifyReport {
        rank: n,
        delta: delta.iter().map(|d| d.to_string()).collect(),
        backend: exec::backend().to_string(),
        ball_length: opts.ball_length,
        chambers: chambers.len(),
        distinct_g_matrices,
        exhaustive_pair_length: opts.exhaustive_pair_length,
        exhaustive_pairs,
        random_pairs,
        interiors_disjoint: interiors_ok,
        half_space_split,
        mutation_matches_weak_order: mutation_ok,
        coverage,
        oracle_length: opts.oracle_length,
        oracle_trunc: opts.trunc,
        oracle_elements: oracle_elements.len(),
        oracle_agrees,
        oracle_stabilized,
        reduced_word_independent,
        passed,
    })
}
