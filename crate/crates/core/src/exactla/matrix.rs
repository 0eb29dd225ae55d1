use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use super::Rat;

/// Coefficient vector over a chosen basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<Rat>,
}

impl Vector {
    pub fn new(coords: Vec<Rat>) -> Self {
        assert!(!coords.is_empty(), "vectors live in positive-dimensional spaces");
        Vector { coords }
    }

    pub fn zeros(dim: usize) -> Self {
        Vector::new(vec![Rat::ZERO; dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Vector::zeros(dim);
        v.coords[i] = Rat::ONE;
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector::new(xs.iter().map(|&x| Rat::from_int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, s: &Rat) -> Vector {
        Vector::new(self.coords.iter().map(|x| x * s).collect())
    }
}

impl Index<usize> for Vector {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.coords[i]
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim());
        Vector::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect())
    }
}

impl From<Vec<Rat>> for Vector {
    fn from(coords: Vec<Rat>) -> Self {
        Vector::new(coords)
    }
}

type SparseCols = Vec<Vec<(usize, Rat)>>;

/// Dense row-major rational matrix. Column `j` is the image of basis vector `j`.
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
    sparse: OnceLock<Arc<SparseCols>>,
}

impl Clone for Matrix {
    fn clone(&self) -> Self {
        let sparse = OnceLock::new();
        if let Some(s) = self.sparse.get() {
            let _ = sparse.set(s.clone());
        }
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.clone(), sparse }
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for Matrix {}

impl std::hash::Hash for Matrix {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.entries.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rat>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count does not match {rows}x{cols}");
        Matrix { rows, cols, entries, sparse: OnceLock::new() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_entries(rows, cols, vec![Rat::ZERO; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { Rat::ONE } else { Rat::ZERO })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::from_entries(rows, cols, entries)
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        assert!(r > 0);
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::from_entries(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Rat::from_int(x)).collect()).collect(),
        )
    }

    /// Builds a matrix from its columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: Vec<Vec<Rat>>) -> Self {
        let cols = columns.len();
        assert!(columns.iter().all(|c| c.len() == rows), "column length mismatch");
        let mut entries = vec![Rat::ZERO; rows * cols];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, x) in col.into_iter().enumerate() {
                if !x.is_zero() {
                    entries[i * cols + j] = x;
                }
            }
        }
        Matrix::from_entries(rows, cols, entries)
    }

    /// Column vector (n x 1).
    pub fn column_vector(v: &[Rat]) -> Self {
        Matrix::from_entries(v.len(), 1, v.to_vec())
    }

    /// Row vector (1 x n).
    pub fn row_vector(v: &[Rat]) -> Self {
        Matrix::from_entries(1, v.len(), v.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rat) {
        self.sparse = OnceLock::new();
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Nonzero entries of each column, cached after the first call.
    pub fn sparse_columns(&self) -> &[Vec<(usize, Rat)>] {
        self.sparse.get_or_init(|| {
            let mut cols: SparseCols = vec![Vec::new(); self.cols];
            for i in 0..self.rows {
                for (j, x) in self.row(i).iter().enumerate() {
                    if !x.is_zero() {
                        cols[j].push((i, x.clone()));
                    }
                }
            }
            Arc::new(cols)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Rat) -> Matrix {
        Matrix::from_entries(self.rows, self.cols, self.entries.iter().map(|x| x * s).collect())
    }

    /// `self * v`, skipping zero entries.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "apply: dimension mismatch");
        let mut out = vec![Rat::ZERO; self.rows];
        let sc = self.sparse_columns();
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &sc[j] {
                out[*i] += &(a * x);
            }
        }
        out
    }

    pub fn apply_vector(&self, v: &Vector) -> Vector {
        Vector::new(self.apply(v.coords()))
    }

    /// Matrix product, skipping zero entries of the left factor.
    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matmul: dimension mismatch");
        let mut out = vec![Rat::ZERO; self.rows * rhs.cols];
        let rsc = rhs.sparse_columns();
        // out column j = self * rhs column j
        let lsc = self.sparse_columns();
        for (j, col) in rsc.iter().enumerate() {
            for (k, b) in col {
                for (i, a) in &lsc[*k] {
                    out[i * rhs.cols + j] += &(a * b);
                }
            }
        }
        Matrix::from_entries(self.rows, rhs.cols, out)
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.matmul(self);
        }
        acc
    }

    /// Indices `(i, j)` of the first differing entry in row-major order.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs)
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        )
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_entries(
            self.rows,
            self.cols,
            self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        )
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&Rat::from_int(-1))
    }
}

/// Kronecker product: `(a ⊗ b)` sends `e_i ⊗ f_j` (index `i * dim F + j`) to
/// `a(e_i) ⊗ b(f_j)`, left factor major on both sides.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (r, c) = (a.rows * b.rows, a.cols * b.cols);
    let mut entries = vec![Rat::ZERO; r * c];
    for ai in 0..a.rows {
        for aj in 0..a.cols {
            let x = a.get(ai, aj);
            if x.is_zero() {
                continue;
            }
            for bi in 0..b.rows {
                for bj in 0..b.cols {
                    let y = b.get(bi, bj);
                    if y.is_zero() {
                        continue;
                    }
                    entries[(ai * b.rows + bi) * c + aj * b.cols + bj] = x * y;
                }
            }
        }
    }
    Matrix::from_entries(r, c, entries)
}
