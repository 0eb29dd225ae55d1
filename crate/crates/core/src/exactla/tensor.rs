use std::collections::BTreeMap;

use super::{Matrix, Rat, Vector};

/// Leg name inside a [`Tensor`].
pub type Leg = &'static str;

/// Sparse element of a tensor product of spaces, with named legs.
///
/// Structure maps are applied to chosen legs by [`Tensor::apply`]; the output
/// legs are appended at the end, and [`Tensor::order`] fixes the final layout.
/// Flattening uses the global left-major index convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    legs: Vec<(Leg, usize)>,
    terms: BTreeMap<Vec<usize>, Rat>,
}

fn split(mut idx: usize, dims: &[usize], out: &mut Vec<usize>) {
    let start = out.len();
    out.resize(start + dims.len(), 0);
    for (k, d) in dims.iter().enumerate().rev() {
        out[start + k] = idx % d;
        idx /= d;
    }
}

impl Tensor {
    /// The scalar 1, with no legs.
    pub fn scalar(x: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !x.is_zero() {
            terms.insert(Vec::new(), x);
        }
        Tensor { legs: Vec::new(), terms }
    }

    pub fn zero(legs: &[(Leg, usize)]) -> Self {
        Tensor { legs: legs.to_vec(), terms: BTreeMap::new() }
    }

    /// Pure tensor of basis vectors.
    pub fn basis(legs: &[(Leg, usize)], idx: &[usize]) -> Self {
        assert_eq!(legs.len(), idx.len());
        for ((_, d), i) in legs.iter().zip(idx) {
            assert!(i < d, "basis index out of range");
        }
        let mut terms = BTreeMap::new();
        terms.insert(idx.to_vec(), Rat::ONE);
        Tensor { legs: legs.to_vec(), terms }
    }

    /// Reads a dense coordinate vector over the listed legs.
    pub fn from_dense(legs: &[(Leg, usize)], coords: &[Rat]) -> Self {
        let dims: Vec<usize> = legs.iter().map(|l| l.1).collect();
        assert_eq!(coords.len(), dims.iter().product::<usize>());
        let mut terms = BTreeMap::new();
        for (k, x) in coords.iter().enumerate() {
            if !x.is_zero() {
                let mut key = Vec::with_capacity(dims.len());
                split(k, &dims, &mut key);
                terms.insert(key, x.clone());
            }
        }
        Tensor { legs: legs.to_vec(), terms }
    }

    pub fn legs(&self) -> &[(Leg, usize)] {
        &self.legs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rat)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn pos(&self, leg: Leg) -> usize {
        self.legs
            .iter()
            .position(|l| l.0 == leg)
            .unwrap_or_else(|| panic!("no leg named {leg:?} in {:?}", self.legs))
    }

    pub fn dim_of(&self, leg: Leg) -> usize {
        self.legs[self.pos(leg)].1
    }

    /// Applies `m` to the listed legs (combined left-major, in the order
    /// given). The remaining legs keep their order; the outputs are appended.
    /// A matrix with one column may be applied to no legs (inserting a
    /// vector); a matrix with one row may produce no legs (a functional).
    pub fn apply(&self, inputs: &[Leg], m: &Matrix, outputs: &[(Leg, usize)]) -> Tensor {
        let ipos: Vec<usize> = inputs.iter().map(|l| self.pos(l)).collect();
        let in_dim: usize = ipos.iter().map(|&p| self.legs[p].1).product();
        let out_dims: Vec<usize> = outputs.iter().map(|o| o.1).collect();
        assert_eq!(m.cols(), in_dim, "apply {inputs:?}: matrix has {} columns, legs give {in_dim}", m.cols());
        assert_eq!(
            m.rows(),
            out_dims.iter().product::<usize>(),
            "apply {inputs:?}: matrix has {} rows, outputs {outputs:?}",
            m.rows()
        );
        let keep: Vec<usize> = (0..self.legs.len()).filter(|p| !ipos.contains(p)).collect();
        let mut legs: Vec<(Leg, usize)> = keep.iter().map(|&p| self.legs[p]).collect();
        for o in outputs {
            assert!(!legs.iter().any(|l| l.0 == o.0), "duplicate leg {:?}", o.0);
            legs.push(*o);
        }
        let cols = m.sparse_columns();
        let mut terms: BTreeMap<Vec<usize>, Rat> = BTreeMap::new();
        let mut key = Vec::with_capacity(legs.len());
        for (idx, x) in &self.terms {
            let mut col = 0;
            for &p in &ipos {
                col = col * self.legs[p].1 + idx[p];
            }
            for (row, coeff) in &cols[col] {
                key.clear();
                key.extend(keep.iter().map(|&p| idx[p]));
                split(*row, &out_dims, &mut key);
                let v = coeff * x;
                match terms.get_mut(&key) {
                    Some(acc) => *acc += &v,
                    None => {
                        terms.insert(key.clone(), v);
                    }
                }
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Tensor { legs, terms }
    }

    /// Inserts a vector as a new last leg.
    pub fn insert(&self, leg: (Leg, usize), v: &[Rat]) -> Tensor {
        self.apply(&[], &Matrix::column_vector(v), &[leg])
    }

    /// Inserts the canonical element Σ_i e_i ⊗ e^i as two new last legs.
    pub fn insert_identity(&self, top: Leg, bottom: Leg, dim: usize) -> Tensor {
        let mut v = vec![Rat::ZERO; dim * dim];
        for i in 0..dim {
            v[i * dim + i] = Rat::ONE;
        }
        self.apply(&[], &Matrix::column_vector(&v), &[(top, dim), (bottom, dim)])
    }

    /// Contracts two legs of equal dimension against each other.
    pub fn trace(&self, l1: Leg, l2: Leg) -> Tensor {
        let (p1, p2) = (self.pos(l1), self.pos(l2));
        assert_eq!(self.legs[p1].1, self.legs[p2].1, "trace over legs of different dimension");
        let keep: Vec<usize> = (0..self.legs.len()).filter(|&p| p != p1 && p != p2).collect();
        let legs = keep.iter().map(|&p| self.legs[p]).collect();
        let mut terms: BTreeMap<Vec<usize>, Rat> = BTreeMap::new();
        for (idx, x) in &self.terms {
            if idx[p1] != idx[p2] {
                continue;
            }
            let key: Vec<usize> = keep.iter().map(|&p| idx[p]).collect();
            *terms.entry(key).or_insert(Rat::ZERO) += x;
        }
        terms.retain(|_, v| !v.is_zero());
        Tensor { legs, terms }
    }

    /// Reorders legs; `order` must name every leg exactly once.
    pub fn order(&self, order: &[Leg]) -> Tensor {
        assert_eq!(order.len(), self.legs.len(), "order {order:?} vs legs {:?}", self.legs);
        let perm: Vec<usize> = order.iter().map(|l| self.pos(l)).collect();
        let legs = perm.iter().map(|&p| self.legs[p]).collect();
        let terms = self
            .terms
            .iter()
            .map(|(idx, x)| (perm.iter().map(|&p| idx[p]).collect(), x.clone()))
            .collect();
        Tensor { legs, terms }
    }

    pub fn rename(&self, from: Leg, to: Leg) -> Tensor {
        let p = self.pos(from);
        let mut t = self.clone();
        t.legs[p].0 = to;
        t
    }

    pub fn otimes(&self, other: &Tensor) -> Tensor {
        let mut legs = self.legs.clone();
        for l in &other.legs {
            assert!(!legs.iter().any(|m| m.0 == l.0), "duplicate leg {:?}", l.0);
            legs.push(*l);
        }
        let mut terms = BTreeMap::new();
        for (i, x) in &self.terms {
            for (j, y) in &other.terms {
                let mut k = i.clone();
                k.extend_from_slice(j);
                terms.insert(k, x * y);
            }
        }
        Tensor { legs, terms }
    }

    pub fn scale(&self, s: &Rat) -> Tensor {
        if s.is_zero() {
            return Tensor::zero(&self.legs);
        }
        Tensor {
            legs: self.legs.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.legs, other.legs, "adding tensors with different legs");
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            *terms.entry(k.clone()).or_insert(Rat::ZERO) += v;
        }
        terms.retain(|_, v| !v.is_zero());
        Tensor { legs: self.legs.clone(), terms }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    /// Dense coordinates in the current leg order.
    pub fn to_dense(&self) -> Vec<Rat> {
        let n: usize = self.legs.iter().map(|l| l.1).product();
        let mut out = vec![Rat::ZERO; n];
        for (idx, x) in &self.terms {
            let mut k = 0;
            for (i, l) in idx.iter().zip(&self.legs) {
                k = k * l.1 + i;
            }
            out[k] = x.clone();
        }
        out
    }

    pub fn to_vector(&self) -> Vector {
        Vector::new(self.to_dense())
    }

    /// Coefficient of the empty key, for tensors with no legs.
    pub fn scalar_value(&self) -> Rat {
        assert!(self.legs.is_empty(), "not a scalar");
        self.terms.get(&Vec::new()).cloned().unwrap_or(Rat::ZERO)
    }
}

/// Matrix of a linear map given by its action on basis tensors.
/// `f` receives the basis index tuple of the domain legs and must return a
/// tensor whose legs are exactly `codomain`, in order.
pub fn matrix_of(
    domain: &[usize],
    codomain: &[usize],
    f: impl Fn(&[usize]) -> Tensor + Sync,
) -> Matrix {
    use rayon::prelude::*;
    let rows: usize = codomain.iter().product();
    let cols: usize = domain.iter().product();
    let columns: Vec<Vec<Rat>> = (0..cols)
        .into_par_iter()
        .map(|j| {
            let mut idx = Vec::with_capacity(domain.len());
            split(j, domain, &mut idx);
            let t = f(&idx);
            let got: Vec<usize> = t.legs().iter().map(|l| l.1).collect();
            assert_eq!(got, codomain, "matrix_of: codomain mismatch");
            t.to_dense()
        })
        .collect();
    Matrix::from_columns(rows, columns)
}

/// Splits a flat left-major index into per-leg indices.
pub fn unflatten(idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len());
    split(idx, dims, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::kron;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn apply_matches_kron() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_int_rows(&[&[0, 1, 0], &[5, 0, -1]]);
        let k = kron(&a, &b);
        for i in 0..2 {
            for j in 0..3 {
                let t = Tensor::basis(&[("x", 2), ("y", 3)], &[i, j])
                    .apply(&["x"], &a, &[("x2", 2)])
                    .apply(&["y"], &b, &[("y2", 2)]);
                assert_eq!(t.to_dense(), k.column(i * 3 + j));
            }
        }
    }

    #[test]
    fn order_and_trace() {
        let t = Tensor::from_dense(&[("p", 2), ("q", 2)], &[r(1), r(2), r(3), r(4)]);
        assert_eq!(t.order(&["q", "p"]).to_dense(), vec![r(1), r(3), r(2), r(4)]);
        assert_eq!(t.trace("p", "q").scalar_value(), r(5));
        let id = Tensor::scalar(Rat::ONE).insert_identity("u", "v", 3);
        assert_eq!(id.trace("u", "v").scalar_value(), r(3));
    }

    #[test]
    fn snake_through_identity() {
        // (ev ⊗ id)(id ⊗ coev) on a basis vector returns it
        let x = Tensor::basis(&[("m", 3)], &[2]);
        let t = x.insert_identity("a", "b", 3).trace("m", "a");
        assert_eq!(t, Tensor::basis(&[("b", 3)], &[2]));
    }
}
