use super::{Matrix, Rat, Vector};
use crate::Error;

/// Full solution set of an affine system `a x = b`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution {
    pub particular: Vector,
    pub nullspace_basis: Vec<Vector>,
}

impl AffineSolution {
    pub fn dimension(&self) -> usize {
        self.nullspace_basis.len()
    }

    /// `particular + Σ params[i] · nullspace_basis[i]`.
    pub fn point(&self, params: &[Rat]) -> Vector {
        assert_eq!(params.len(), self.nullspace_basis.len());
        let mut out = self.particular.coords().to_vec();
        for (t, n) in params.iter().zip(&self.nullspace_basis) {
            if t.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(n.coords()) {
                *o += &(t * x);
            }
        }
        Vector::new(out)
    }
}

/// Reduced row echelon form of `m` in place. Pivots on the first nonzero
/// entry of each column. Returns the pivot columns in order.
fn rref(rows: &mut [Vec<Rat>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        let nz: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row.is_empty() || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for &j in &nz {
                let d = &f * &pivot_row[j];
                row[j] -= &d;
            }
        }
        rows[r] = pivot_row;
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Exact solution set of `a x = b` by Gaussian elimination.
pub fn solve_affine(a: &Matrix, b: &Vector) -> Result<AffineSolution, Error> {
    if a.rows() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "system has {} rows but right-hand side has dimension {}",
            a.rows(),
            b.dim()
        )));
    }
    let n = a.cols();
    let mut rows: Vec<Vec<Rat>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, n);
    // an all-zero coefficient row with nonzero right side means no solution
    if rows[pivots.len()..].iter().any(|r| !r[n].is_zero()) {
        return Err(Error::NoSolution);
    }
    let mut particular = vec![Rat::ZERO; n];
    for (r, &pc) in pivots.iter().enumerate() {
        particular[pc] = rows[r][n].clone();
    }
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut nullspace_basis = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Rat::ZERO; n];
        v[free] = Rat::ONE;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&rows[r][free];
        }
        nullspace_basis.push(Vector::new(v));
    }
    Ok(AffineSolution { particular: Vector::new(particular), nullspace_basis })
}

/// Rank of a matrix.
pub fn rank(a: &Matrix) -> usize {
    let mut rows: Vec<Vec<Rat>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    rref(&mut rows, a.cols()).len()
}

/// Two-sided inverse of a square matrix.
pub fn invert(a: &Matrix) -> Result<Matrix, Error> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "cannot invert a {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { Rat::ONE } else { Rat::ZERO }));
            r
        })
        .collect();
    let pivots = rref(&mut rows, n);
    if pivots.len() < n {
        return Err(Error::NotInvertible);
    }
    Ok(Matrix::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_system() {
        let s = solve_affine(&Matrix::identity(2), &Vector::from_ints(&[1, 2])).unwrap();
        assert_eq!(s.particular, Vector::from_ints(&[1, 2]));
        assert!(s.nullspace_basis.is_empty());
    }

    #[test]
    fn one_equation_two_unknowns() {
        let a = Matrix::from_int_rows(&[&[1, 1]]);
        let b = Vector::from_ints(&[3]);
        let s = solve_affine(&a, &b).unwrap();
        assert_eq!(s.particular, Vector::from_ints(&[3, 0]));
        assert_eq!(s.nullspace_basis, vec![Vector::from_ints(&[-1, 1])]);
        for t in -3..=3 {
            let x = s.point(&[Rat::from_int(t)]);
            assert_eq!(a.apply_vector(&x), b);
        }
    }

    #[test]
    fn inconsistent() {
        let a = Matrix::from_int_rows(&[&[1], &[1]]);
        assert!(matches!(solve_affine(&a, &Vector::from_ints(&[0, 1])), Err(Error::NoSolution)));
    }

    #[test]
    fn inverses() {
        assert_eq!(invert(&Matrix::identity(4)).unwrap(), Matrix::identity(4));
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(invert(&swap).unwrap(), swap);
        let sing = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(matches!(invert(&sing), Err(Error::NotInvertible)));
    }

    fn arb_system() -> impl Strategy<Value = (Matrix, Vector)> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            (
                proptest::collection::vec(-3i64..=3, r * c),
                proptest::collection::vec(-3i64..=3, c),
            )
                .prop_map(move |(a, x)| {
                    let a = Matrix::from_entries(r, c, a.into_iter().map(Rat::from_int).collect());
                    let x = Vector::from_ints(&x);
                    let b = a.apply_vector(&x);
                    (a, b)
                })
        })
    }

    proptest! {
        #[test]
        fn solutions_satisfy_system((a, b) in arb_system(),
                                    params in proptest::collection::vec(-4i64..=4, 5)) {
            let s = solve_affine(&a, &b).unwrap();
            prop_assert_eq!(a.apply_vector(&s.particular), b.clone());
            for n in &s.nullspace_basis {
                prop_assert!(a.apply_vector(n).is_zero());
            }
            let ps: Vec<Rat> = params.iter().take(s.dimension()).map(|&t| Rat::from_int(t)).collect();
            if ps.len() == s.dimension() {
                prop_assert_eq!(a.apply_vector(&s.point(&ps)), b);
            }
            // nullspace basis is independent
            if !s.nullspace_basis.is_empty() {
                let m = Matrix::from_columns(a.cols(), s.nullspace_basis.iter().map(|v| v.coords().to_vec()).collect());
                prop_assert_eq!(rank(&m), s.dimension());
            }
            prop_assert_eq!(rank(&a) + s.dimension(), a.cols());
        }
    }
}
