//! The geometric side of the representation: the pairing between dual
//! covectors and root vectors, levels against the null root, and the real
//! roots swept out by a length ball.

use std::collections::BTreeSet;

use crate::coxeter::CoxeterSystem;
use crate::linalg::{Int, Rat};
use crate::Error;

/// The simple roots and their dual basis are coordinate bases, so the
/// invariant pairing is the plain dot product.
pub fn pairing(f: &[Rat], v: &[Int]) -> Rat {
    assert_eq!(f.len(), v.len(), "pairing length mismatch");
    f.iter()
        .zip(v)
        .map(|(a, b)| a * Rat::from(b.clone()))
        .sum()
}

pub fn pairing_int(f: &[Int], v: &[Int]) -> Int {
    assert_eq!(f.len(), v.len(), "pairing length mismatch");
    f.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Level of a covector: its pairing with the null root. Only affine systems
/// have a level.
pub fn level(sys: &CoxeterSystem, f: &[Rat]) -> Result<Rat, Error> {
    let delta = sys.delta()?;
    if f.len() != sys.rank() {
        return Err(Error::DimensionMismatch { expected: sys.rank(), got: f.len() });
    }
    Ok(pairing(f, delta))
}

/// A real root produced by the representation, tagged by its sign. Every
/// root is coordinatewise nonnegative or nonpositive; anything else would
/// contradict the representation and panics.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RealRoot {
    pub coords: Vec<Int>,
    pub positive: bool,
}

fn classify_root(coords: Vec<Int>) -> RealRoot {
    let zero = Int::from(0);
    if coords.iter().all(|x| x >= &zero) {
        return RealRoot { coords, positive: true };
    }
    if coords.iter().all(|x| x <= &zero) {
        return RealRoot { coords, positive: false };
    }
    panic!("mixed-sign root {coords:?} violates the positivity dichotomy");
}

/// All distinct images of simple roots under elements of length at most L,
/// sorted by coordinates.
pub fn real_roots_up_to(sys: &CoxeterSystem, max_length: usize) -> Result<Vec<RealRoot>, Error> {
    let ball = sys.enumerate_up_to_length(max_length)?;
    let mut seen: BTreeSet<Vec<Int>> = BTreeSet::new();
    for w in &ball.elements {
        for i in 0..sys.rank() {
            seen.insert(w.sigma().column(i));
        }
    }
    Ok(seen.into_iter().map(classify_root).collect())
}
