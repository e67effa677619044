//! The path algebra of the double quiver modulo the vertex relations,
//! truncated at a fixed path length. Built degree by degree: the new degree
//! is the span of (arrow, old basis element) slots modulo the rows obtained
//! by pushing each vertex relation against the basis two degrees down. Each
//! degree stores the expansion of every arrow-times-basis product, which is
//! the only multiplication primitive the quotient ever needs; general
//! products fold those tables along a basis element's arrow chain.

use crate::linalg::{Echelon, Rat, Scalar};
use crate::oracle::quiver::DoubleQuiver;

struct DegreeData<F> {
    /// (start, end) vertices per basis element.
    spans: Vec<(usize, usize)>,
    /// (arrow, lower basis index) slot each basis element descends from;
    /// empty in degree zero.
    slots: Vec<(usize, usize)>,
    /// tables[a][x]: expansion of arrow a applied to lower basis element x,
    /// in this degree's coordinates. Empty when the endpoints do not match.
    tables: Vec<Vec<Vec<F>>>,
}

pub struct TruncatedAlgebra<F: Scalar = Rat> {
    quiver: DoubleQuiver,
    max_degree: usize,
    degrees: Vec<DegreeData<F>>,
}

impl<F: Scalar> TruncatedAlgebra<F> {
    pub fn new(quiver: DoubleQuiver, max_degree: usize) -> Self {
        let n = quiver.n_vertices();
        let mut degrees = Vec::with_capacity(max_degree + 1);
        degrees.push(DegreeData {
            spans: (0..n).map(|v| (v, v)).collect(),
            slots: Vec::new(),
            tables: Vec::new(),
        });
        let mut alg = TruncatedAlgebra { quiver, max_degree, degrees };
        for d in 0..max_degree {
            let next = alg.build_degree(d);
            alg.degrees.push(next);
        }
        alg
    }

    /// Builds degree d+1 from degrees d and d-1.
    fn build_degree(&self, d: usize) -> DegreeData<F> {
        let arrows = self.quiver.arrows();
        let lower = &self.degrees[d];
        // Ambient slots (a, x) with matching endpoints, in (a, x) order.
        let mut slot_index = vec![vec![usize::MAX; lower.spans.len()]; arrows.len()];
        let mut slots = Vec::new();
        for (a, arrow) in arrows.iter().enumerate() {
            for (x, &(_, end)) in lower.spans.iter().enumerate() {
                if end == arrow.start {
                    slot_index[a][x] = slots.len();
                    slots.push((a, x));
                }
            }
        }
        let ambient = slots.len();
        // Relation rows: one per basis element two degrees down.
        let mut ech = Echelon::new(ambient);
        if d >= 1 {
            let below = &self.degrees[d - 1];
            for y in 0..below.spans.len() {
                let v = below.spans[y].1;
                let mut row = vec![F::zero(); ambient];
                for (weight, last, first) in self.quiver.relation_at(v) {
                    let w = F::from_int(weight);
                    let expansion = &lower.tables[first][y];
                    for (x, c) in expansion.iter().enumerate() {
                        if !c.is_zero() {
                            let s = slot_index[last][x];
                            row[s] = row[s].add(&w.mul(c));
                        }
                    }
                }
                ech.insert(row);
            }
        }
        let free = ech.free_columns();
        let spans = free
            .iter()
            .map(|&s| {
                let (a, x) = slots[s];
                (lower.spans[x].0, arrows[a].end)
            })
            .collect();
        let kept_slots: Vec<(usize, usize)> = free.iter().map(|&s| slots[s]).collect();
        let mut tables = vec![vec![Vec::new(); lower.spans.len()]; arrows.len()];
        for (a, arrow) in arrows.iter().enumerate() {
            for (x, &(_, end)) in lower.spans.iter().enumerate() {
                if end == arrow.start {
                    let mut unit = vec![F::zero(); ambient];
                    unit[slot_index[a][x]] = F::one();
                    tables[a][x] = ech.quotient_coords(unit, &free);
                }
            }
        }
        DegreeData { spans, slots: kept_slots, tables }
    }

    pub fn quiver(&self) -> &DoubleQuiver {
        &self.quiver
    }

    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim(&self, d: usize) -> usize {
        self.degrees[d].spans.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|dd| dd.spans.len()).collect()
    }

    /// (start, end) vertices of a basis element.
    pub fn span(&self, d: usize, idx: usize) -> (usize, usize) {
        self.degrees[d].spans[idx]
    }

    pub fn unit(&self, d: usize, idx: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim(d)];
        v[idx] = F::one();
        v
    }

    /// Arrows of a basis element in traversal order (first arrow first).
    pub fn chain(&self, d: usize, idx: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(d);
        let mut cur = (d, idx);
        while cur.0 > 0 {
            let (a, x) = self.degrees[cur.0].slots[cur.1];
            out.push(a);
            cur = (cur.0 - 1, x);
        }
        out.reverse();
        out
    }

    /// Left action of one arrow: degree d to degree d+1.
    pub fn arrow_mul(&self, d: usize, arrow: usize, v: &[F]) -> Vec<F> {
        assert!(d < self.max_degree, "arrow action would exceed the truncation degree");
        let tables = &self.degrees[d + 1].tables;
        let mut out = vec![F::zero(); self.dim(d + 1)];
        for (x, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let expansion = &tables[arrow][x];
            for (k, t) in expansion.iter().enumerate() {
                if !t.is_zero() {
                    out[k] = out[k].add(&c.mul(t));
                }
            }
        }
        out
    }

    /// Zeroes every coordinate whose basis element does not end at v.
    pub fn end_projection(&self, d: usize, v: &[F], vertex: usize) -> Vec<F> {
        v.iter()
            .enumerate()
            .map(|(i, c)| {
                if self.degrees[d].spans[i].1 == vertex {
                    c.clone()
                } else {
                    F::zero()
                }
            })
            .collect()
    }

    /// Zeroes every coordinate whose basis element does not start at v.
    pub fn start_projection(&self, d: usize, v: &[F], vertex: usize) -> Vec<F> {
        v.iter()
            .enumerate()
            .map(|(i, c)| {
                if self.degrees[d].spans[i].0 == vertex {
                    c.clone()
                } else {
                    F::zero()
                }
            })
            .collect()
    }

    /// Product (basis element of degree zd) * (element of degree ud): first
    /// traverse u, then z. Requires zd + ud within the truncation.
    pub fn basis_mul(&self, zd: usize, zi: usize, ud: usize, u: &[F]) -> Vec<F> {
        assert!(zd + ud <= self.max_degree, "product degree exceeds the truncation");
        let start = self.degrees[zd].spans[zi].0;
        let mut cur = self.end_projection(ud, u, start);
        let mut cur_d = ud;
        for a in self.chain(zd, zi) {
            cur = self.arrow_mul(cur_d, a, &cur);
            cur_d += 1;
        }
        cur
    }

    /// Bilinear product of two homogeneous elements.
    pub fn element_mul(&self, zd: usize, z: &[F], ud: usize, u: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim(zd + ud)];
        for (zi, c) in z.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = self.basis_mul(zd, zi, ud, u);
            for (k, t) in term.iter().enumerate() {
                if !t.is_zero() {
                    out[k] = out[k].add(&c.mul(t));
                }
            }
        }
        out
    }
}
