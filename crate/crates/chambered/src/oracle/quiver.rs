//! The doubled quiver of a multigraph: each edge becomes a pair of opposite
//! arrows, and each vertex carries the commutator relation built from those
//! pairs. This is the presentation the truncated-algebra oracle quotients by.

use crate::graph::InputGraph;

/// One arrow of the double. `dual` is the index of the opposite arrow and
/// `sign` is +1 on the chosen orientation, -1 on its reverse; the relation
/// at a vertex weights each incoming arrow by its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub start: usize,
    pub end: usize,
    pub dual: usize,
    pub sign: i64,
}

#[derive(Clone, Debug)]
pub struct DoubleQuiver {
    n: usize,
    arrows: Vec<Arrow>,
}

impl DoubleQuiver {
    pub fn from_graph(graph: &InputGraph) -> Self {
        let n = graph.n();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for _ in 0..graph.multiplicity(i, j) {
                    let k = arrows.len();
                    arrows.push(Arrow { start: i, end: j, dual: k + 1, sign: 1 });
                    arrows.push(Arrow { start: j, end: i, dual: k, sign: -1 });
                }
            }
        }
        DoubleQuiver { n, arrows }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    /// The relation at vertex v as a list of (weight, last arrow, first
    /// arrow) terms; each term is the length-two loop `last . first` at v.
    pub fn relation_at(&self, v: usize) -> Vec<(i64, usize, usize)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.end == v)
            .map(|(k, a)| (a.sign, k, a.dual))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> InputGraph {
        InputGraph::new(n, edges).unwrap()
    }

    #[test]
    fn doubling_a_double_edge() {
        let q = DoubleQuiver::from_graph(&graph(2, &[(1, 2), (1, 2)]));
        assert_eq!(q.n_arrows(), 4);
        for (k, a) in q.arrows().iter().enumerate() {
            let d = q.arrows()[a.dual];
            assert_eq!(d.dual, k);
            assert_eq!((d.start, d.end), (a.end, a.start));
            assert_eq!(a.sign * d.sign, -1);
        }
    }

    #[test]
    fn relation_terms_are_loops() {
        let q = DoubleQuiver::from_graph(&graph(3, &[(1, 2), (2, 3), (1, 3)]));
        assert_eq!(q.n_arrows(), 6);
        for v in 0..3 {
            let rel = q.relation_at(v);
            assert_eq!(rel.len(), 2); // one incoming pair per incident edge
            for (_, last, first) in rel {
                let l = q.arrows()[last];
                let f = q.arrows()[first];
                assert_eq!(l.end, v);
                assert_eq!(f.start, v);
                assert_eq!(f.end, l.start);
            }
        }
    }

    #[test]
    fn double_edge_relation_has_two_aligned_terms() {
        let q = DoubleQuiver::from_graph(&graph(2, &[(1, 2), (1, 2)]));
        for v in 0..2 {
            let sum: i64 = q.relation_at(v).iter().map(|(s, _, _)| s).sum();
            assert_eq!(sum.abs(), 2); // all incoming arrows at v share a sign
        }
    }
}
