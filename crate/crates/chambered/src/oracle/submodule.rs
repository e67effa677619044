//! Graded left submodules of finite sums of shifted projectives. The ambient
//! module is described by a shape: one (start vertex, degree shift) pair per
//! summand, whose degree-d piece is spanned by the algebra basis elements of
//! degree d - shift starting at that vertex. Submodules hold one canonical
//! echelon per degree, so equality of submodules is equality of row data.

use crate::linalg::{Echelon, Scalar};
use crate::oracle::trunc::TruncatedAlgebra;

/// Ambient shape: (start vertex, degree shift) per summand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleShape {
    pub summands: Vec<(usize, usize)>,
}

/// Coordinate layout of one graded piece: per summand, the ascending list of
/// algebra basis indices forming its block, plus the inverse lookup.
struct Layout {
    blocks: Vec<Vec<usize>>,
    inverse: Vec<Vec<usize>>,
    offsets: Vec<usize>,
    total: usize,
}

fn build_layouts<F: Scalar>(algebra: &TruncatedAlgebra<F>, shape: &ModuleShape) -> Vec<Layout> {
    (0..=algebra.max_degree())
        .map(|d| {
            let mut blocks = Vec::with_capacity(shape.summands.len());
            let mut inverse = Vec::with_capacity(shape.summands.len());
            let mut offsets = Vec::with_capacity(shape.summands.len());
            let mut total = 0;
            for &(vertex, shift) in &shape.summands {
                offsets.push(total);
                if d < shift {
                    blocks.push(Vec::new());
                    inverse.push(Vec::new());
                    continue;
                }
                let e = d - shift;
                let mut block = Vec::new();
                let mut inv = vec![usize::MAX; algebra.dim(e)];
                for i in 0..algebra.dim(e) {
                    if algebra.span(e, i).0 == vertex {
                        inv[i] = block.len();
                        block.push(i);
                    }
                }
                total += block.len();
                blocks.push(block);
                inverse.push(inv);
            }
            Layout { blocks, inverse, offsets, total }
        })
        .collect()
}

/// One minimal generator: its degree, the vertex every component ends at,
/// and its coordinates in the ambient layout of that degree.
#[derive(Clone, Debug)]
pub struct GeneratorInfo<F> {
    pub degree: usize,
    pub end_vertex: usize,
    pub vector: Vec<F>,
}

pub struct GradedSubmodule<'a, F: Scalar> {
    algebra: &'a TruncatedAlgebra<F>,
    shape: ModuleShape,
    layouts: Vec<Layout>,
    spaces: Vec<Echelon<F>>,
}

impl<'a, F: Scalar> PartialEq for GradedSubmodule<'a, F> {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.spaces == other.spaces
    }
}

impl<'a, F: Scalar> GradedSubmodule<'a, F> {
    pub fn zero(algebra: &'a TruncatedAlgebra<F>, shape: ModuleShape) -> Self {
        let layouts = build_layouts(algebra, &shape);
        let spaces = layouts.iter().map(|l| Echelon::new(l.total)).collect();
        GradedSubmodule { algebra, shape, layouts, spaces }
    }

    /// The full projective at vertex j, as a submodule of itself.
    pub fn full_projective(algebra: &'a TruncatedAlgebra<F>, j: usize) -> Self {
        let mut m = Self::zero(algebra, ModuleShape { summands: vec![(j, 0)] });
        for d in 0..=algebra.max_degree() {
            let total = m.layouts[d].total;
            for k in 0..total {
                let mut unit = vec![F::zero(); total];
                unit[k] = F::one();
                m.spaces[d].insert(unit);
            }
        }
        m
    }

    pub fn algebra(&self) -> &'a TruncatedAlgebra<F> {
        self.algebra
    }

    pub fn shape(&self) -> &ModuleShape {
        &self.shape
    }

    pub fn max_degree(&self) -> usize {
        self.algebra.max_degree()
    }

    pub fn ambient_dim(&self, d: usize) -> usize {
        self.layouts[d].total
    }

    pub fn rank(&self, d: usize) -> usize {
        self.spaces[d].rank()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|e| e.rank()).collect()
    }

    pub fn rows(&self, d: usize) -> &[Vec<F>] {
        self.spaces[d].rows()
    }

    /// Algebra basis indices forming summand t's block at degree d.
    pub fn block_indices(&self, d: usize, t: usize) -> &[usize] {
        &self.layouts[d].blocks[t]
    }

    pub fn insert(&mut self, d: usize, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.layouts[d].total);
        self.spaces[d].insert(v)
    }

    pub fn contains(&self, d: usize, v: &[F]) -> bool {
        self.spaces[d].contains(v)
    }

    /// End vertex of one ambient coordinate.
    fn coordinate_end(&self, d: usize, coord: usize) -> usize {
        let layout = &self.layouts[d];
        for (t, block) in layout.blocks.iter().enumerate() {
            let off = layout.offsets[t];
            if coord < off + block.len() {
                let e = d - self.shape.summands[t].1;
                return self.algebra.span(e, block[coord - off]).1;
            }
        }
        unreachable!("coordinate out of range");
    }

    pub fn end_projection(&self, d: usize, v: &[F], vertex: usize) -> Vec<F> {
        v.iter()
            .enumerate()
            .map(|(c, x)| {
                if self.coordinate_end(d, c) == vertex {
                    x.clone()
                } else {
                    F::zero()
                }
            })
            .collect()
    }

    /// Left action of one arrow on ambient coordinates, degree d to d+1.
    pub fn arrow_action(&self, d: usize, arrow: usize, v: &[F]) -> Vec<F> {
        let cur = &self.layouts[d];
        let next = &self.layouts[d + 1];
        let mut out = vec![F::zero(); next.total];
        for (t, &(_, shift)) in self.shape.summands.iter().enumerate() {
            if d < shift {
                continue;
            }
            let e = d - shift;
            let block = &cur.blocks[t];
            if block.is_empty() {
                continue;
            }
            let mut alg = vec![F::zero(); self.algebra.dim(e)];
            for (pos, &i) in block.iter().enumerate() {
                alg[i] = v[cur.offsets[t] + pos].clone();
            }
            let moved = self.algebra.arrow_mul(e, arrow, &alg);
            for (i, c) in moved.iter().enumerate() {
                if !c.is_zero() {
                    let pos = next.inverse[t][i];
                    assert!(pos != usize::MAX, "arrow action left the summand block");
                    out[next.offsets[t] + pos] = out[next.offsets[t] + pos].add(c);
                }
            }
        }
        out
    }

    /// Extracts summand t of a degree-d ambient vector as a dense algebra
    /// vector of degree d - shift(t).
    pub fn block_to_algebra(&self, d: usize, v: &[F], t: usize) -> Vec<F> {
        let layout = &self.layouts[d];
        let e = d - self.shape.summands[t].1;
        let mut alg = vec![F::zero(); self.algebra.dim(e)];
        for (pos, &i) in layout.blocks[t].iter().enumerate() {
            alg[i] = v[layout.offsets[t] + pos].clone();
        }
        alg
    }

    /// Places a dense algebra vector into summand t of a degree-d ambient
    /// vector. The vector must be supported on the summand's start vertex.
    pub fn algebra_to_module(&self, d: usize, t: usize, alg: &[F]) -> Vec<F> {
        let layout = &self.layouts[d];
        let mut out = vec![F::zero(); layout.total];
        for (i, c) in alg.iter().enumerate() {
            if !c.is_zero() {
                let pos = layout.inverse[t][i];
                assert!(pos != usize::MAX, "vector leaves the summand block");
                out[layout.offsets[t] + pos] = c.clone();
            }
        }
        out
    }

    /// The submodule product with the two-sided ideal generated by every
    /// vertex other than i (plus the whole positive-degree part): in each
    /// degree the span of the off-i end projections together with all arrow
    /// pushes from one degree down.
    pub fn ideal_apply(&self, i: usize) -> Self {
        let mut out = Self::zero(self.algebra, self.shape.clone());
        let n = self.algebra.n_vertices();
        for d in 0..=self.max_degree() {
            for row in self.rows(d) {
                for v in 0..n {
                    if v != i {
                        out.spaces[d].insert(self.end_projection(d, row, v));
                    }
                }
            }
            if d >= 1 {
                for row in self.rows(d - 1) {
                    for a in 0..self.algebra.quiver().n_arrows() {
                        out.spaces[d].insert(self.arrow_action(d - 1, a, row));
                    }
                }
            }
        }
        out
    }

    /// Whether every arrow maps each graded piece into the next one.
    pub fn is_arrow_closed(&self) -> bool {
        for d in 0..self.max_degree() {
            for row in self.rows(d) {
                for a in 0..self.algebra.quiver().n_arrows() {
                    if !self.contains(d + 1, &self.arrow_action(d, a, row)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Minimal generators: in each degree, the quotient of the graded piece
    /// by everything reachable from one degree down, split by end vertex.
    pub fn minimal_generators(&self) -> Vec<GeneratorInfo<F>> {
        let n = self.algebra.n_vertices();
        let mut out = Vec::new();
        for d in 0..=self.max_degree() {
            let mut reached = Echelon::new(self.layouts[d].total);
            if d >= 1 {
                for row in self.rows(d - 1) {
                    for a in 0..self.algebra.quiver().n_arrows() {
                        reached.insert(self.arrow_action(d - 1, a, row));
                    }
                }
            }
            for vertex in 0..n {
                for row in self.rows(d) {
                    let projected = self.end_projection(d, row, vertex);
                    if reached.insert(projected.clone()) {
                        out.push(GeneratorInfo { degree: d, end_vertex: vertex, vector: projected });
                    }
                }
            }
        }
        out
    }
}

/// The module obtained by applying the vertex ideals along a word (rightmost
/// letter first) to the projective at vertex j. The word must be reduced for
/// the result to depend only on the group element.
pub fn ideal_word_module<'a, F: Scalar>(
    algebra: &'a TruncatedAlgebra<F>,
    word: &[usize],
    j: usize,
) -> GradedSubmodule<'a, F> {
    let mut m = GradedSubmodule::full_projective(algebra, j);
    for &i in word.iter().rev() {
        m = m.ideal_apply(i);
    }
    m
}
