//! Exact linear algebra: big-integer matrices, rational / prime-field
//! elimination, kernels, and determinants. Everything here is deterministic;
//! no floating point anywhere.

use std::fmt;
use std::hash::{Hash, Hasher};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IMatrix {
    n: usize,
    data: Vec<Int>,
}

impl IMatrix {
    pub fn zero(n: usize) -> Self {
        IMatrix { n, data: vec![Int::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = Int::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Int) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<Int> {
        (0..self.n).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> IMatrix {
        IMatrix::from_fn(self.n, |i, j| self.entry(j, i).clone())
    }

    pub fn mul(&self, other: &IMatrix) -> IMatrix {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.n, v.len(), "vector length mismatch");
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn mul_vec_rat(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.n, v.len(), "vector length mismatch");
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| Rat::from(self.entry(i, j).clone()) * &v[j])
                    .sum()
            })
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Int {
        let n = self.n;
        if n == 0 {
            return Int::one();
        }
        let mut a: Vec<Vec<Int>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    a[i][j] = q;
                }
                a[i][k] = Int::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Leading principal minors det(A[..k][..k]) for k = 1..=n.
    pub fn leading_principal_minors(&self) -> Vec<Int> {
        (1..=self.n)
            .map(|k| {
                IMatrix::from_fn(k, |i, j| self.entry(i, j).clone()).determinant()
            })
            .collect()
    }
}

impl Hash for IMatrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.data.hash(state);
    }
}

impl fmt::Debug for IMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Field of scalars for the elimination routines.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn from_int(v: i64) -> Self;
}

impl Scalar for Rat {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_int(v: i64) -> Self {
        Rat::from(Int::from(v))
    }
}

/// Prime field with p = 32003, used only for quick dimension experiments.
pub const FP_MODULUS: u64 = 32003;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp(pub u64);

impl Fp {
    fn pow(self, mut e: u64) -> Fp {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % FP_MODULUS;
            }
            base = base * base % FP_MODULUS;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl Scalar for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % FP_MODULUS)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp((self.0 + FP_MODULUS - other.0) % FP_MODULUS)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(self.0 * other.0 % FP_MODULUS)
    }
    fn neg(&self) -> Self {
        Fp((FP_MODULUS - self.0) % FP_MODULUS)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_p");
        self.pow(FP_MODULUS - 2)
    }
    fn from_int(v: i64) -> Self {
        let m = FP_MODULUS as i64;
        Fp(((v % m + m) % m) as u64)
    }
}

/// Row span kept in reduced row-echelon form. Rows are stored sorted by pivot
/// column, every pivot entry is 1 and is the only nonzero entry in its column,
/// so two equal subspaces always hold byte-identical rows.
#[derive(Clone, PartialEq, Debug)]
pub struct Echelon<F: Scalar> {
    ncols: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Eliminates all pivot coordinates from `v`; the residual is zero iff
    /// `v` lies in the span.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        assert_eq!(v.len(), self.ncols, "row length mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.sub(&c.mul(r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v.to_vec()).iter().all(|x| x.is_zero())
    }

    /// Inserts a vector, keeping reduced form. Returns true when the rank grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x = x.sub(&c.mul(r));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn insert_all<I: IntoIterator<Item = Vec<F>>>(&mut self, it: I) {
        for v in it {
            self.insert(v);
        }
    }

    /// Canonical coordinates of `v`'s class in the quotient by this span:
    /// the residual restricted to the free columns.
    pub fn quotient_coords(&self, v: Vec<F>, free: &[usize]) -> Vec<F> {
        let r = self.reduce(v);
        free.iter().map(|&c| r[c].clone()).collect()
    }
}

/// Kernel of the linear map whose matrix has the given rows (map from
/// `ncols`-space to `rows.len()`-space). Basis vectors are returned in the
/// canonical RREF order, one per free column.
pub fn nullspace<F: Scalar>(rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let mut ech = Echelon::new(ncols);
    ech.insert_all(rows);
    let free = ech.free_columns();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if !row[f].is_zero() {
                    v[p] = row[f].neg();
                }
            }
            v
        })
        .collect()
}

/// Solves the square system `a x = b` over the rationals. Returns None when
/// `a` is singular.
pub fn solve_square(a: &IMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.n();
    assert_eq!(b.len(), n, "rhs length mismatch");
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> =
                a.row(i).iter().map(|x| Rat::from(x.clone())).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for k in 0..n {
        let r = (k..n).find(|&r| !num::Zero::is_zero(&m[r][k]))?;
        m.swap(k, r);
        let inv = m[k][k].recip();
        for j in k..=n {
            let scaled = &m[k][j] * &inv;
            m[k][j] = scaled;
        }
        for i in 0..n {
            if i != k && !num::Zero::is_zero(&m[i][k]) {
                let c = m[i][k].clone();
                for j in k..=n {
                    let sub = &c * &m[k][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
    }
    Some((0..n).map(|i| m[i][n].clone()).collect())
}

/// Rows of the rational inverse of a square integer matrix, or None when
/// singular. Gauss-Jordan on the identity-augmented matrix.
pub fn matrix_inverse(a: &IMatrix) -> Option<Vec<Vec<Rat>>> {
    let n = a.n();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = a.row(i).iter().map(|x| Rat::from(x.clone())).collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    <Rat as Scalar>::one()
                } else {
                    <Rat as Scalar>::zero()
                }
            }));
            row
        })
        .collect();
    for k in 0..n {
        let r = (k..n).find(|&r| !num::Zero::is_zero(&m[r][k]))?;
        m.swap(k, r);
        let inv = m[k][k].recip();
        for j in 0..2 * n {
            let scaled = &m[k][j] * &inv;
            m[k][j] = scaled;
        }
        for i in 0..n {
            if i != k && !num::Zero::is_zero(&m[i][k]) {
                let c = m[i][k].clone();
                for j in 0..2 * n {
                    let sub = &c * &m[k][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Scales a rational vector to a primitive integer vector (cleared
/// denominators, entries coprime, first nonzero entry positive).
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<Int> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = Int::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if !gcd.is_zero() && !gcd.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &gcd;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in ints.iter_mut() {
                *x = -(x.clone());
            }
        }
    }
    ints
}
