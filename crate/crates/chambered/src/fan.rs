//! The chamber fan in dual coordinates. Each group element w carries two
//! simplicial cones: the P-cone spanned by the columns of the dual matrix of
//! w and the R-cone spanned by their negatives. Positive-level covectors fall
//! into P-cones, negative-level covectors into R-cones, and the level-zero
//! hyperplane separates the two families.

use num::{Integer, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, Element};
use crate::exec;
use crate::fm::strict_positive_witness;
use crate::geometry::pairing;
use crate::linalg::{matrix_inverse, solve_square, IMatrix, Int, Rat};
use crate::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Family {
    P,
    R,
}

/// A g-matrix: the column span data of one chamber. Column j is the g-vector
/// of the j-th indecomposable summand.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GMatrix {
    pub family: Family,
    pub matrix: IMatrix,
}

pub fn g_matrix(sys: &CoxeterSystem, w: &Element, family: Family) -> GMatrix {
    let m = w.sigma_star();
    let matrix = match family {
        Family::P => m.clone(),
        Family::R => IMatrix::from_fn(sys.rank(), |i, j| -m.entry(i, j).clone()),
    };
    GMatrix { family, matrix }
}

/// Exact expansion of f over the cone's columns. The matrix is invertible,
/// so the coefficients are unique.
pub fn cone_coefficients(g: &GMatrix, f: &[Rat]) -> Vec<Rat> {
    solve_square(&g.matrix, f).expect("g-matrix must be invertible")
}

/// Closed-cone membership: all expansion coefficients nonnegative.
pub fn cone_contains(g: &GMatrix, f: &[Rat]) -> bool {
    cone_coefficients(g, f).iter().all(|a| !a.is_negative())
}

/// Outcome of locating a covector: the chamber (family, element), the
/// generator sequence applied during the descent, and the covector carried
/// into the fundamental domain (nonnegative for P, nonpositive for R).
#[derive(Clone, Debug)]
pub struct ChamberResult {
    pub family: Family,
    pub element: Element,
    pub certificate: Vec<usize>,
    pub transformed: Vec<Rat>,
}

fn ceil_abs(x: &Rat) -> Int {
    x.numer().abs().div_ceil(x.denom())
}

/// Locates the chamber whose closed cone contains f by greedy descent: while
/// some coordinate pairs negatively against a simple root, apply that dual
/// generator (least index first). Positive level descends directly; negative
/// level descends the negated covector and reports the R-family chamber.
pub fn chamber_locate(sys: &CoxeterSystem, f: &[Rat]) -> Result<ChamberResult, Error> {
    let n = sys.rank();
    if f.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: f.len() });
    }
    if f.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroCovector);
    }
    let delta = sys.delta()?;
    let level = pairing(f, delta);
    if level.is_zero() {
        return Err(Error::CriticalHyperplane);
    }
    let family = if level.is_positive() { Family::P } else { Family::R };
    let mut cur: Vec<Rat> = match family {
        Family::P => f.to_vec(),
        Family::R => f.iter().map(|x| -x).collect(),
    };
    // Safety net only; the descent terminates after one step per separating
    // wall. The bound scales with the coordinate size of the input.
    let max_coord = cur.iter().map(ceil_abs).max().expect("nonempty covector");
    let cap_big = Int::from(10) * (Int::from(1) + Int::from(n as u64) * max_coord);
    let cap = usize::try_from(&cap_big).unwrap_or(usize::MAX);
    let mut certificate = Vec::new();
    loop {
        let Some(i) = (0..n).find(|&i| cur[i].is_negative()) else {
            break;
        };
        if certificate.len() >= cap {
            return Err(Error::ResourceCap { cap: "chamber location steps", limit: cap });
        }
        cur = sys.sigma_star_generator(i).mul_vec_rat(&cur);
        certificate.push(i);
    }
    let element = sys
        .element_from_word(&certificate)
        .expect("descent generators are in range");
    let transformed = match family {
        Family::P => cur,
        Family::R => cur.iter().map(|x| -x).collect(),
    };
    Ok(ChamberResult { family, element, certificate, transformed })
}

/// The n chambers adjacent to (w, family); the g-matrix across wall i differs
/// from the current one in column i alone.
pub fn mutation_neighbors(
    sys: &CoxeterSystem,
    w: &Element,
    family: Family,
) -> Vec<(usize, Element, GMatrix)> {
    (0..sys.rank())
        .map(|i| {
            let neighbor = sys.right_multiply(w, i);
            let g = g_matrix(sys, &neighbor, family);
            (i, neighbor, g)
        })
        .collect()
}

/// Whether two distinct cones have disjoint interiors, decided by exact
/// elimination on the stacked inverse-row systems. Calling this on equal
/// matrices is a caller bug.
pub fn interiors_disjoint(a: &GMatrix, b: &GMatrix) -> bool {
    assert!(
        a.matrix != b.matrix,
        "interiors_disjoint requires distinct g-matrices"
    );
    let mut rows = matrix_inverse(&a.matrix).expect("g-matrix must be invertible");
    rows.extend(matrix_inverse(&b.matrix).expect("g-matrix must be invertible"));
    strict_positive_witness(&rows).is_none()
}

/// Checks all unordered pairs, returning the first overlapping pair in index
/// order if any. Pair results are computed independently, so the answer does
/// not depend on the execution backend.
pub fn first_interior_overlap(gs: &[GMatrix]) -> Option<(usize, usize)> {
    let pairs: Vec<(usize, usize)> = (0..gs.len())
        .flat_map(|i| (i + 1..gs.len()).map(move |j| (i, j)))
        .collect();
    let overlaps = exec::map_vec(&pairs, |&(i, j)| !interiors_disjoint(&gs[i], &gs[j]));
    pairs
        .into_iter()
        .zip(overlaps)
        .find(|(_, bad)| *bad)
        .map(|(p, _)| p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub requested: usize,
    pub located: usize,
    pub discarded_level_zero: usize,
    pub failures: usize,
    pub failure_detail: Option<String>,
    pub max_length: usize,
    pub max_descent_steps: usize,
}

enum DrawOutcome {
    Discarded,
    Located { length: usize, steps: usize },
    Failed(String),
}

/// Locates `count` covectors with integer coordinates drawn uniformly from
/// [-bound, bound] by a seeded deterministic generator. Level-zero draws are
/// discarded and counted. The same seed gives the same report on any backend
/// and worker count.
pub fn coverage_sample(
    sys: &CoxeterSystem,
    seed: u64,
    count: usize,
    bound: i64,
) -> Result<CoverageReport, Error> {
    if count == 0 {
        return Err(Error::InvalidParameter("coverage sample count must be at least 1".into()));
    }
    if bound < 1 {
        return Err(Error::InvalidParameter("coordinate bound must be at least 1".into()));
    }
    let delta = sys.delta()?.to_vec();
    let n = sys.rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<Vec<Rat>> = (0..count)
        .map(|_| {
            (0..n)
                .map(|_| Rat::from(Int::from(rng.gen_range(-bound..=bound))))
                .collect()
        })
        .collect();
    let outcomes = exec::map_vec(&draws, |f| {
        if pairing(f, &delta).is_zero() {
            return DrawOutcome::Discarded;
        }
        match chamber_locate(sys, f) {
            Ok(r) => DrawOutcome::Located {
                length: r.element.length(),
                steps: r.certificate.len(),
            },
            Err(e) => DrawOutcome::Failed(e.to_string()),
        }
    });
    let mut report = CoverageReport {
        requested: count,
        located: 0,
        discarded_level_zero: 0,
        failures: 0,
        failure_detail: None,
        max_length: 0,
        max_descent_steps: 0,
    };
    for o in outcomes {
        match o {
            DrawOutcome::Discarded => report.discarded_level_zero += 1,
            DrawOutcome::Located { length, steps } => {
                report.located += 1;
                report.max_length = report.max_length.max(length);
                report.max_descent_steps = report.max_descent_steps.max(steps);
            }
            DrawOutcome::Failed(msg) => {
                report.failures += 1;
                report.failure_detail.get_or_insert(msg);
            }
        }
    }
    Ok(report)
}

/// One chamber's intersection with the level-one (P) or level-minus-one (R)
/// hyperplane, kept in exact full coordinates for geometric checks.
#[derive(Clone, Debug)]
pub struct SliceGeometry {
    pub family: Family,
    pub element: Element,
    /// Column j scaled so its level is +1 (P) or -1 (R).
    pub vertices: Vec<Vec<Rat>>,
    /// Positive representatives of the n wall roots of the chamber.
    pub walls: Vec<Vec<Int>>,
}

/// Exported form: vertices in the affine chart that drops the last
/// coordinate, all entries as exact decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct SliceCell {
    pub family: Family,
    pub word: Vec<usize>,
    pub vertices: Vec<Vec<String>>,
    pub walls: Vec<Vec<String>>,
}

pub fn slice_geometry(sys: &CoxeterSystem, max_length: usize) -> Result<Vec<SliceGeometry>, Error> {
    let delta = sys.delta()?.to_vec();
    let ball = sys.enumerate_up_to_length(max_length)?;
    let mut out = Vec::new();
    for family in [Family::P, Family::R] {
        for w in &ball.elements {
            let g = g_matrix(sys, w, family);
            let vertices: Vec<Vec<Rat>> = (0..sys.rank())
                .map(|j| {
                    let col = g.matrix.column(j);
                    let scale = Rat::from(delta[j].clone());
                    col.into_iter().map(|x| Rat::from(x) / &scale).collect()
                })
                .collect();
            let walls: Vec<Vec<Int>> = (0..sys.rank())
                .map(|j| {
                    let root = w.sigma().column(j);
                    if root.iter().any(|x| x.is_negative()) {
                        root.into_iter().map(|x| -x).collect()
                    } else {
                        root
                    }
                })
                .collect();
            out.push(SliceGeometry { family, element: w.clone(), vertices, walls });
        }
    }
    Ok(out)
}

pub fn fan_slice_export(sys: &CoxeterSystem, max_length: usize) -> Result<Vec<SliceCell>, Error> {
    let n = sys.rank();
    Ok(slice_geometry(sys, max_length)?
        .into_iter()
        .map(|cell| SliceCell {
            family: cell.family,
            word: cell.element.word().iter().map(|&i| i + 1).collect(),
            vertices: cell
                .vertices
                .iter()
                .map(|v| v[..n - 1].iter().map(|x| x.to_string()).collect())
                .collect(),
            walls: cell
                .walls
                .iter()
                .map(|wv| wv.iter().map(|x| x.to_string()).collect())
                .collect(),
        })
        .collect())
}
