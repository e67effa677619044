//! Minimal projective presentations of ideal-word modules, computed entirely
//! inside the truncated algebra. The class [P0] - [P1] in the free abelian
//! group on the vertices is the oracle's g-vector; it is compared against the
//! matrix representation without sharing any code with it.
//!
//! Every graded piece of the truncated algebra below the truncation degree
//! agrees with the untruncated algebra, so covers and kernels computed
//! degreewise are exact there. The only blind spot is generators beyond the
//! truncation; a presentation is reported stabilized when a second run two
//! degrees higher finds the identical answer and no generator appears near
//! either horizon.

use crate::graph::InputGraph;
use crate::linalg::{nullspace, IMatrix, Int, Rat, Scalar};
use crate::oracle::quiver::DoubleQuiver;
use crate::oracle::submodule::{ideal_word_module, GradedSubmodule, ModuleShape};
use crate::oracle::trunc::TruncatedAlgebra;
use crate::Error;

/// Degrees at the top of the truncation treated as the horizon: a generator
/// landing there makes the run suspect.
pub const HORIZON_MARGIN: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    /// Multiplicity of each vertex's projective in the cover.
    pub p0: Vec<usize>,
    /// Multiplicity of each vertex's projective in the kernel cover.
    pub p1: Vec<usize>,
    /// (degree, end vertex) per cover generator, sorted.
    pub p0_generators: Vec<(usize, usize)>,
    /// (degree, end vertex) per kernel generator, sorted.
    pub p1_generators: Vec<(usize, usize)>,
    /// No generator appeared within the horizon margin.
    pub clear_of_horizon: bool,
}

impl Presentation {
    pub fn g_vector(&self) -> Vec<Int> {
        self.p0
            .iter()
            .zip(&self.p1)
            .map(|(&a, &b)| Int::from(a as i64 - b as i64))
            .collect()
    }
}

/// Minimal presentation of the ideal-word module at vertex j. The word must
/// be reduced.
pub fn minimal_presentation<F: Scalar>(
    algebra: &TruncatedAlgebra<F>,
    word: &[usize],
    j: usize,
) -> Presentation {
    let n = algebra.n_vertices();
    let top = algebra.max_degree();
    let horizon = top.saturating_sub(HORIZON_MARGIN);
    let module = ideal_word_module(algebra, word, j);
    let gens = module.minimal_generators();
    let mut clear = gens.iter().all(|g| g.degree <= horizon);

    let shape = ModuleShape {
        summands: gens.iter().map(|g| (g.end_vertex, g.degree)).collect(),
    };
    let gen_vectors: Vec<(usize, Vec<F>)> = gens
        .iter()
        .map(|g| (g.degree, module.block_to_algebra(g.degree, &g.vector, 0)))
        .collect();
    let cover = GradedSubmodule::zero(algebra, shape.clone());
    let mut kernel = GradedSubmodule::zero(algebra, shape);

    for d in 0..=top {
        let cols = cover.ambient_dim(d);
        if cols == 0 {
            continue;
        }
        // The cover map in coordinates: column (t, path p) holds p * gen_t
        // expanded in the ambient of the module.
        let mut columns: Vec<Vec<F>> = Vec::with_capacity(cols);
        for (t, &(_, shift)) in cover.shape().summands.iter().enumerate() {
            for &p in cover.block_indices(d, t) {
                let image = algebra.basis_mul(d - shift, p, shift, &gen_vectors[t].1);
                columns.push(module.algebra_to_module(d, 0, &image));
            }
        }
        let nrows = module.ambient_dim(d);
        let rows: Vec<Vec<F>> = (0..nrows)
            .map(|r| columns.iter().map(|c| c[r].clone()).collect())
            .collect();
        let kernel_basis = nullspace(rows, cols);
        assert_eq!(
            cols - kernel_basis.len(),
            module.rank(d),
            "cover must surject onto the module in every degree"
        );
        for v in kernel_basis {
            kernel.insert(d, v);
        }
    }

    let kernel_gens = kernel.minimal_generators();
    clear &= kernel_gens.iter().all(|g| g.degree <= horizon);

    let mut p0 = vec![0usize; n];
    let mut p0_generators: Vec<(usize, usize)> =
        gens.iter().map(|g| (g.degree, g.end_vertex)).collect();
    for g in &gens {
        p0[g.end_vertex] += 1;
    }
    let mut p1 = vec![0usize; n];
    let mut p1_generators: Vec<(usize, usize)> =
        kernel_gens.iter().map(|g| (g.degree, g.end_vertex)).collect();
    for g in &kernel_gens {
        p1[g.end_vertex] += 1;
    }
    p0_generators.sort_unstable();
    p1_generators.sort_unstable();
    Presentation { p0, p1, p0_generators, p1_generators, clear_of_horizon: clear }
}

/// One oracle evaluation: the presentation at the working truncation and the
/// confirmation run two degrees higher.
#[derive(Clone, Debug)]
pub struct OracleColumn {
    pub presentation: Presentation,
    pub confirmation: Presentation,
    pub stabilized: bool,
}

#[derive(Clone, Debug)]
pub struct OracleGMatrix {
    pub matrix: IMatrix,
    pub columns: Vec<OracleColumn>,
    pub stabilized: bool,
}

/// A reusable pair of truncated algebras for one graph: the working algebra
/// and the deeper confirmation algebra.
pub struct OracleContext {
    trunc: usize,
    algebra: TruncatedAlgebra<Rat>,
    confirm: TruncatedAlgebra<Rat>,
}

impl OracleContext {
    pub fn new(graph: &InputGraph, trunc: usize) -> Result<Self, Error> {
        if trunc < 4 {
            return Err(Error::InvalidParameter(
                "truncation degree must be at least 4".into(),
            ));
        }
        let quiver = DoubleQuiver::from_graph(graph);
        Ok(OracleContext {
            trunc,
            algebra: TruncatedAlgebra::new(quiver.clone(), trunc),
            confirm: TruncatedAlgebra::new(quiver, trunc + 2),
        })
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn algebra(&self) -> &TruncatedAlgebra<Rat> {
        &self.algebra
    }

    fn check_word(&self, word: &[usize]) -> Result<(), Error> {
        let n = self.algebra.n_vertices();
        if let Some(&bad) = word.iter().find(|&&i| i >= n) {
            return Err(Error::GeneratorOutOfRange { index: bad, rank: n });
        }
        if word.len() + 4 > self.trunc {
            return Err(Error::InvalidParameter(format!(
                "truncation degree {} too small for a word of length {}",
                self.trunc,
                word.len()
            )));
        }
        Ok(())
    }

    /// The oracle's g-vector data for one summand: the presentation of the
    /// ideal-word module at vertex j.
    pub fn column(&self, word: &[usize], j: usize) -> Result<OracleColumn, Error> {
        self.check_word(word)?;
        let presentation = minimal_presentation(&self.algebra, word, j);
        let confirmation = minimal_presentation(&self.confirm, word, j);
        let stabilized = presentation.clear_of_horizon
            && confirmation.clear_of_horizon
            && presentation.p0_generators == confirmation.p0_generators
            && presentation.p1_generators == confirmation.p1_generators;
        Ok(OracleColumn { presentation, confirmation, stabilized })
    }

    /// The oracle's full g-matrix for a reduced word: column j comes from the
    /// module at vertex j.
    pub fn g_matrix(&self, word: &[usize]) -> Result<OracleGMatrix, Error> {
        let n = self.algebra.n_vertices();
        let columns: Vec<OracleColumn> =
            (0..n).map(|j| self.column(word, j)).collect::<Result<_, _>>()?;
        let g: Vec<Vec<Int>> = columns.iter().map(|c| c.presentation.g_vector()).collect();
        let matrix = IMatrix::from_fn(n, |i, j| g[j][i].clone());
        let stabilized = columns.iter().all(|c| c.stabilized);
        Ok(OracleGMatrix { matrix, columns, stabilized })
    }
}
