//! Coxeter systems attached to input graphs. Group elements are held as the
//! exact integer matrix pair (action on root coordinates, action on the dual
//! coordinates); the representation is faithful, so matrix equality is group
//! equality. Words are normalized to the lexicographically least reduced word.

use std::collections::HashMap;

use crate::graph::{GraphClass, InputGraph};
use crate::linalg::{IMatrix, Int};
use crate::Error;

/// Default ceiling on how many elements an enumeration may produce.
pub const DEFAULT_ENUM_CAP: usize = 200_000;

#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    graph: InputGraph,
    class: GraphClass,
    gen_sigma: Vec<IMatrix>,
    gen_sigma_star: Vec<IMatrix>,
}

/// A group element. `word` is the canonical (lexicographically least) reduced
/// word over 0-based generator indices; its length is the Coxeter length.
#[derive(Clone, Debug)]
pub struct Element {
    word: Vec<usize>,
    sigma: IMatrix,
    sigma_star: IMatrix,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.sigma == other.sigma
    }
}

impl Eq for Element {}

impl std::hash::Hash for Element {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.sigma.hash(state);
    }
}

impl Element {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Matrix of the root-coordinate action; column j is the image of the
    /// j-th simple root.
    pub fn sigma(&self) -> &IMatrix {
        &self.sigma
    }

    /// Matrix of the dual action; column j is the image of the j-th dual
    /// basis covector.
    pub fn sigma_star(&self) -> &IMatrix {
        &self.sigma_star
    }

    /// Sort key: length first, then the canonical word.
    pub fn order_key(&self) -> (usize, Vec<usize>) {
        (self.word.len(), self.word.clone())
    }
}

/// Covering edge of the right weak order: `upper = lower * s_gen` with
/// lengths differing by one. Indices refer to `Ball::elements`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HasseEdge {
    pub lower: usize,
    pub upper: usize,
    pub gen: usize,
}

/// All elements of length at most L, sorted by (length, canonical word),
/// together with the covering edges among them.
#[derive(Clone, Debug)]
pub struct Ball {
    pub elements: Vec<Element>,
    pub hasse_edges: Vec<HasseEdge>,
}

impl CoxeterSystem {
    /// Builds the system, rejecting Dynkin graphs.
    pub fn from_graph(graph: InputGraph) -> Result<Self, Error> {
        let class = graph.classify()?;
        let n = graph.n();
        let mut gen_sigma = Vec::with_capacity(n);
        let mut gen_sigma_star = Vec::with_capacity(n);
        for i in 0..n {
            // sigma_{s_i}: alpha_j -> alpha_j + m_ij alpha_i (j != i), alpha_i -> -alpha_i
            let mut s = IMatrix::identity(n);
            for j in 0..n {
                if j == i {
                    s.set(i, i, Int::from(-1));
                } else {
                    s.set(i, j, Int::from(graph.multiplicity(i, j) as i64));
                }
            }
            gen_sigma_star.push(s.transpose());
            gen_sigma.push(s);
        }
        Ok(CoxeterSystem { graph, class, gen_sigma, gen_sigma_star })
    }

    pub fn rank(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &InputGraph {
        &self.graph
    }

    pub fn class(&self) -> &GraphClass {
        &self.class
    }

    pub fn is_affine(&self) -> bool {
        matches!(self.class, GraphClass::Affine { .. })
    }

    /// Null root of an affine system: the primitive positive integer
    /// generator of the kernel of the Cartan form.
    pub fn delta(&self) -> Result<&[Int], Error> {
        match &self.class {
            GraphClass::Affine { delta } => Ok(delta),
            GraphClass::OtherNonDynkin => Err(Error::NotAffine),
        }
    }

    pub fn sigma_generator(&self, i: usize) -> &IMatrix {
        &self.gen_sigma[i]
    }

    pub fn sigma_star_generator(&self, i: usize) -> &IMatrix {
        &self.gen_sigma_star[i]
    }

    pub fn identity(&self) -> Element {
        let n = self.rank();
        Element {
            word: Vec::new(),
            sigma: IMatrix::identity(n),
            sigma_star: IMatrix::identity(n),
        }
    }

    pub fn generator(&self, i: usize) -> Result<Element, Error> {
        self.check_generator(i)?;
        Ok(Element {
            word: vec![i],
            sigma: self.gen_sigma[i].clone(),
            sigma_star: self.gen_sigma_star[i].clone(),
        })
    }

    fn check_generator(&self, i: usize) -> Result<(), Error> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange { index: i, rank: self.rank() })
        }
    }

    /// Evaluates an arbitrary word (not necessarily reduced).
    pub fn element_from_word(&self, word: &[usize]) -> Result<Element, Error> {
        let mut w = self.identity();
        for &i in word {
            self.check_generator(i)?;
            w = self.right_multiply(&w, i);
        }
        Ok(w)
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool, Error> {
        Ok(self.element_from_word(word)?.length() == word.len())
    }

    /// w * s_i, with length bookkeeping and canonical word recomputed.
    pub fn right_multiply(&self, w: &Element, i: usize) -> Element {
        let sigma = w.sigma.mul(&self.gen_sigma[i]);
        let sigma_star = w.sigma_star.mul(&self.gen_sigma_star[i]);
        self.element_from_matrices(sigma, sigma_star)
    }

    /// s_i * w.
    pub fn left_multiply(&self, w: &Element, i: usize) -> Element {
        let sigma = self.gen_sigma[i].mul(&w.sigma);
        let sigma_star = self.gen_sigma_star[i].mul(&w.sigma_star);
        self.element_from_matrices(sigma, sigma_star)
    }

    pub fn multiply(&self, v: &Element, w: &Element) -> Element {
        self.element_from_matrices(v.sigma.mul(&w.sigma), v.sigma_star.mul(&w.sigma_star))
    }

    /// The dual matrix of w is the inverse transpose of the root matrix, so
    /// the inverse element needs two transposes and no divisions.
    pub fn inverse(&self, w: &Element) -> Element {
        self.element_from_matrices(w.sigma_star.transpose(), w.sigma.transpose())
    }

    fn element_from_matrices(&self, sigma: IMatrix, sigma_star: IMatrix) -> Element {
        let word = self.canonical_word_of(&sigma_star);
        Element { word, sigma, sigma_star }
    }

    /// ell(w s_i) < ell(w) iff sigma_w sends alpha_i to a nonpositive vector.
    pub fn is_right_descent(&self, w: &Element, i: usize) -> bool {
        (0..self.rank()).all(|k| w.sigma.entry(k, i) <= &Int::from(0))
    }

    /// ell(s_i w) < ell(w) iff column i of sigma_{w^{-1}}, which is row i of
    /// the dual matrix of w, is nonpositive.
    pub fn is_left_descent(&self, w: &Element, i: usize) -> bool {
        w.sigma_star.row(i).iter().all(|x| x <= &Int::from(0))
    }

    pub fn right_descents(&self, w: &Element) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_right_descent(w, i)).collect()
    }

    pub fn left_descents(&self, w: &Element) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_left_descent(w, i)).collect()
    }

    /// Greedy extraction of the least left descent yields the
    /// lexicographically least reduced word.
    fn canonical_word_of(&self, sigma_star: &IMatrix) -> Vec<usize> {
        let n = self.rank();
        let mut cur = sigma_star.clone();
        let mut word = Vec::new();
        while !cur.is_identity() {
            let i = (0..n)
                .find(|&i| cur.row(i).iter().all(|x| x <= &Int::from(0)))
                .expect("non-identity element must have a left descent");
            cur = self.gen_sigma_star[i].mul(&cur);
            word.push(i);
        }
        word
    }

    /// Right weak order: v <= w iff ell(v^{-1} w) = ell(w) - ell(v).
    pub fn weak_order_leq(&self, v: &Element, w: &Element) -> bool {
        if v.length() > w.length() {
            return false;
        }
        let quotient = self.element_from_matrices(
            v.sigma_star.transpose().mul(&w.sigma),
            v.sigma.transpose().mul(&w.sigma_star),
        );
        quotient.length() == w.length() - v.length()
    }

    /// All reduced words of w, lexicographically sorted.
    pub fn all_reduced_words(&self, w: &Element) -> Vec<Vec<usize>> {
        if w.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in self.left_descents(w) {
            let rest = self.left_multiply(w, i);
            for mut tail in self.all_reduced_words(&rest) {
                tail.insert(0, i);
                out.push(tail);
            }
        }
        out
    }

    pub fn enumerate_up_to_length(&self, max_length: usize) -> Result<Ball, Error> {
        self.enumerate_with_cap(max_length, DEFAULT_ENUM_CAP)
    }

    /// Breadth-first enumeration of the length ball, deduplicated by exact
    /// matrix equality. Elements come out sorted by (length, canonical word);
    /// edges are all covering pairs (w, w s_i) inside the ball.
    pub fn enumerate_with_cap(&self, max_length: usize, cap: usize) -> Result<Ball, Error> {
        let n = self.rank();
        let mut elements = vec![self.identity()];
        let mut hasse_edges = Vec::new();
        let mut layer: Vec<usize> = vec![0];
        for _ in 0..max_length {
            let mut seen: HashMap<IMatrix, usize> = HashMap::new();
            let mut kids: Vec<Element> = Vec::new();
            let mut records: Vec<(usize, usize, usize)> = Vec::new();
            for &wi in &layer {
                for i in 0..n {
                    if self.is_right_descent(&elements[wi], i) {
                        continue;
                    }
                    let child = self.right_multiply(&elements[wi], i);
                    let ki = *seen.entry(child.sigma.clone()).or_insert_with(|| {
                        kids.push(child);
                        kids.len() - 1
                    });
                    records.push((wi, i, ki));
                }
            }
            if kids.is_empty() {
                break;
            }
            if elements.len() + kids.len() > cap {
                return Err(Error::ResourceCap { cap: "max enumerated elements", limit: cap });
            }
            let mut order: Vec<usize> = (0..kids.len()).collect();
            order.sort_by(|&a, &b| kids[a].word.cmp(&kids[b].word));
            let base = elements.len();
            let mut final_index = vec![0usize; kids.len()];
            for (offset, &ki) in order.iter().enumerate() {
                final_index[ki] = base + offset;
            }
            let mut sorted_kids: Vec<Option<Element>> = kids.into_iter().map(Some).collect();
            for &ki in &order {
                elements.push(sorted_kids[ki].take().expect("each child moved once"));
            }
            for (wi, i, ki) in records {
                hasse_edges.push(HasseEdge { lower: wi, upper: final_index[ki], gen: i });
            }
            layer = (base..elements.len()).collect();
        }
        hasse_edges.sort_by_key(|e| (e.lower, e.upper, e.gen));
        Ok(Ball { elements, hasse_edges })
    }
}

impl Ball {
    pub fn of_length(&self, l: usize) -> impl Iterator<Item = &Element> {
        self.elements.iter().filter(move |w| w.length() == l)
    }
}
