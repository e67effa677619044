//! Input graphs (finite, loop-free, connected multigraphs) and their
//! classification into Dynkin / affine / other via the associated symmetric
//! Cartan form.

use serde::Deserialize;

use crate::linalg::{nullspace, primitive_integer_vector, IMatrix, Int, Rat};
use crate::Error;

/// Connected multigraph without loops on vertices `0..n`. Parallel edges are
/// kept with multiplicity; the multiplicity determines the Coxeter label
/// m(i,j): 2 for no edge, 3 for a single edge, infinity for two or more.
#[derive(Clone, Debug)]
pub struct InputGraph {
    n: usize,
    mult: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct GraphFile {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

/// Classification of a non-Dynkin graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphClass {
    /// Positive semidefinite form with one-dimensional kernel; `delta` is the
    /// primitive positive integer kernel generator (the null root).
    Affine { delta: Vec<Int> },
    /// Indefinite form; accepted, but level-based operations are unavailable.
    OtherNonDynkin,
}

impl InputGraph {
    /// Builds a graph from 1-based edge endpoints, validating every input
    /// invariant (size, range, no loops, connectivity).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        let mut mult = vec![vec![0usize; n]; n];
        for &(a, b) in edges {
            if a < 1 || a > n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b < 1 || b > n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            mult[a - 1][b - 1] += 1;
            mult[b - 1][a - 1] += 1;
        }
        let g = InputGraph { n, mult };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn from_json_str(s: &str) -> Result<Self, Error> {
        let file: GraphFile =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new(file.vertices, &file.edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges between i and j (0-based).
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.mult[i][j]
    }

    /// Coxeter label m(i,j); None encodes infinity.
    pub fn coxeter_label(&self, i: usize, j: usize) -> Option<u32> {
        if i == j {
            Some(1)
        } else {
            match self.mult[i][j] {
                0 => Some(2),
                1 => Some(3),
                _ => None,
            }
        }
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in 0..self.n {
                if self.mult[v][u] > 0 && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Integer symmetric Cartan form 2M: diagonal 2, off-diagonal minus the
    /// edge multiplicity.
    pub fn cartan(&self) -> IMatrix {
        IMatrix::from_fn(self.n, |i, j| {
            if i == j {
                Int::from(2)
            } else {
                -Int::from(self.mult[i][j] as i64)
            }
        })
    }

    /// Rejects Dynkin graphs (positive definite form) and classifies the rest.
    pub fn classify(&self) -> Result<GraphClass, Error> {
        let cartan = self.cartan();
        let minors = cartan.leading_principal_minors();
        if minors.iter().all(|d| d > &Int::from(0)) {
            return Err(Error::DynkinGraph);
        }
        let rows: Vec<Vec<Rat>> = (0..self.n)
            .map(|i| cartan.row(i).iter().map(|x| Rat::from(x.clone())).collect())
            .collect();
        let kernel = nullspace(rows, self.n);
        if kernel.len() == 1 {
            let delta = primitive_integer_vector(&kernel[0]);
            if delta.iter().all(|x| x > &Int::from(0)) {
                return Ok(GraphClass::Affine { delta });
            }
        }
        Ok(GraphClass::OtherNonDynkin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn double_edge_pair_is_affine_with_unit_delta() {
        let g = InputGraph::new(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(g.coxeter_label(0, 1), None);
        match g.classify().unwrap() {
            GraphClass::Affine { delta } => assert_eq!(delta, ints(&[1, 1])),
            other => panic!("expected affine, got {other:?}"),
        }
    }

    #[test]
    fn triangle_is_affine_with_unit_delta() {
        let g = InputGraph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        match g.classify().unwrap() {
            GraphClass::Affine { delta } => assert_eq!(delta, ints(&[1, 1, 1])),
            other => panic!("expected affine, got {other:?}"),
        }
    }

    #[test]
    fn four_leaf_star_delta_doubles_at_the_hub() {
        let g = InputGraph::new(5, &[(1, 5), (2, 5), (3, 5), (4, 5)]).unwrap();
        match g.classify().unwrap() {
            GraphClass::Affine { delta } => assert_eq!(delta, ints(&[1, 1, 1, 1, 2])),
            other => panic!("expected affine, got {other:?}"),
        }
    }

    #[test]
    fn extended_e6_delta_peaks_at_three() {
        let g = InputGraph::new(
            7,
            &[(1, 2), (2, 5), (3, 4), (4, 5), (5, 6), (6, 7)],
        )
        .unwrap();
        match g.classify().unwrap() {
            GraphClass::Affine { delta } => {
                assert_eq!(delta, ints(&[1, 2, 1, 2, 3, 2, 1]))
            }
            other => panic!("expected affine, got {other:?}"),
        }
    }

    #[test]
    fn path_graph_is_rejected_as_dynkin() {
        let g = InputGraph::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(matches!(g.classify(), Err(Error::DynkinGraph)));
    }

    #[test]
    fn complete_graph_on_four_vertices_is_other_non_dynkin() {
        let g = InputGraph::new(
            4,
            &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert_eq!(g.classify().unwrap(), GraphClass::OtherNonDynkin);
    }

    #[test]
    fn triple_edge_is_other_non_dynkin() {
        let g = InputGraph::new(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(g.classify().unwrap(), GraphClass::OtherNonDynkin);
    }

    #[test]
    fn input_validation_errors() {
        assert!(matches!(
            InputGraph::new(1, &[]),
            Err(Error::TooFewVertices(1))
        ));
        assert!(matches!(
            InputGraph::new(2, &[(1, 1)]),
            Err(Error::LoopEdge(1))
        ));
        assert!(matches!(
            InputGraph::new(2, &[(1, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        ));
        assert!(matches!(
            InputGraph::new(4, &[(1, 2), (3, 4)]),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn json_graph_round_trip() {
        let g = InputGraph::from_json_str(
            r#"{"vertices": 2, "edges": [[1, 2], [1, 2]]}"#,
        )
        .unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.multiplicity(0, 1), 2);
        assert!(InputGraph::from_json_str("{").is_err());
    }
}
