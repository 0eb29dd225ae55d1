#![allow(dead_code)]

use std::sync::Arc;

use entwine_core::corpus;
use entwine_core::{HopfAlgebraData, Matrix, Rat};

pub fn h4() -> Arc<HopfAlgebraData> {
    Arc::new(corpus::sweedler_h4())
}

pub fn kz(n: usize) -> Arc<HopfAlgebraData> {
    Arc::new(corpus::cyclic_group_algebra(n))
}

pub fn ints(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| Rat::from_int(x)).collect()
}

pub fn basis(d: usize, i: usize) -> Vec<Rat> {
    (0..d).map(|j| if i == j { Rat::ONE } else { Rat::ZERO }).collect()
}

/// H4 basis `e^a x^b` at index `2a + b`, so 1, x, e, y=ex would be
/// 0, 1, 2, 3; the library order 1, e, x, y maps through `LIB`.
const LIB: [(usize, usize); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];

/// Product of two H4 basis elements from `x e = -e x`, `x² = 0`, `e² = 1`.
pub fn h4_product(i: usize, j: usize) -> Vec<Rat> {
    let (a, b) = LIB[i];
    let (c, d) = LIB[j];
    let mut out = vec![Rat::ZERO; 4];
    if b + d >= 2 {
        return out;
    }
    let sign = if b * c % 2 == 1 { -1 } else { 1 };
    let k = LIB.iter().position(|&p| p == ((a + c) % 2, b + d)).unwrap();
    out[k] = Rat::from_int(sign);
    out
}

/// `g: C -> A` from the images of basis vectors.
pub fn hom(da: usize, images: &[Vec<Rat>]) -> Matrix {
    Matrix::from_columns(da, images.to_vec())
}

/// 𝔤(1) = e, 𝔤(e) = -e on the flip datum.
pub fn long_pivotal() -> Matrix {
    hom(4, &[basis(4, 1), ints(&[0, -1, 0, 0]), vec![Rat::ZERO; 4], vec![Rat::ZERO; 4]])
}

/// 𝔤₁(1) = 1, 𝔤₁(e) = -1 on the Yetter-Drinfeld datum.
pub fn yd_pivotal_1() -> Matrix {
    hom(4, &[basis(4, 0), ints(&[-1, 0, 0, 0]), vec![Rat::ZERO; 4], vec![Rat::ZERO; 4]])
}

/// 𝔤₂(1) = e, 𝔤₂(e) = e.
pub fn yd_pivotal_2() -> Matrix {
    hom(4, &[basis(4, 1), basis(4, 1), vec![Rat::ZERO; 4], vec![Rat::ZERO; 4]])
}

/// Deterministic pseudo-random rationals in [-3, 3] with small denominators.
pub fn random_matrix(rng: &mut impl rand::Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| Rat::new(rng.gen_range(-3..=3), rng.gen_range(1..=3)))
}

/// A basis of the space of module morphisms `m -> n`, from the linear
/// conditions `f(x·a) = f(x)·a` and `(f ⊗ C) ρ = ρ f`.
pub fn morphism_space(m: &entwine_core::EntwinedModule, n: &entwine_core::EntwinedModule) -> Vec<Matrix> {
    use entwine_core::exactla::{kron, solve_affine};
    use entwine_core::Vector;
    let e = m.datum();
    let (da, dc) = (e.da(), e.dc());
    let (dm, dn) = (m.dim(), n.dim());
    let residual = |f: &Matrix| {
        let lin = &n.action().matmul(&kron(f, &Matrix::identity(da))) - &f.matmul(m.action());
        let col = &kron(f, &Matrix::identity(dc)).matmul(m.coaction()) - &n.coaction().matmul(f);
        let mut v = lin.entries().to_vec();
        v.extend_from_slice(col.entries());
        v
    };
    let columns: Vec<Vec<Rat>> = (0..dn * dm)
        .map(|k| {
            let mut f = Matrix::zeros(dn, dm);
            f.set(k / dm, k % dm, Rat::ONE);
            residual(&f)
        })
        .collect();
    let rows = columns[0].len();
    let sys = Matrix::from_columns(rows, columns);
    let sol = solve_affine(&sys, &Vector::zeros(rows)).expect("homogeneous");
    sol.nullspace_basis
        .into_iter()
        .map(|v| Matrix::from_entries(dn, dm, v.into_coords()))
        .collect()
}

/// A pseudo-random combination of the morphism space.
pub fn random_morphism(rng: &mut impl rand::Rng, space: &[Matrix]) -> Matrix {
    let mut acc = space[0].scale(&Rat::ZERO);
    for b in space {
        acc = &acc + &b.scale(&Rat::from_int(rng.gen_range(-2..=2)));
    }
    acc
}
