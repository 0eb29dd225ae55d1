//! Built-in example structures.

use std::sync::Arc;

use crate::entwining::{DoubleQuantumGroup, EntwiningMap};
use crate::exactla::{matrix_of, Matrix, Rat, Tensor, Vector};
use crate::hopfcore::{dual_hopf, flip, BilinearForm, DualTwist, Element, Functional, HopfAlgebraData};
use crate::Error;

/// Normal form of a word in `e, x` modulo `e² = 1`, `x² = 0`, `xe = −ex`:
/// `Some((sign, word))` with `word` one of `"", "e", "x", "ex"`, or `None`
/// for zero.
pub fn h4_normalize(word: &str) -> Option<(i64, String)> {
    let mut w: Vec<char> = word.chars().collect();
    let mut sign = 1;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < w.len() {
            match (w[i], w[i + 1]) {
                ('e', 'e') => {
                    w.drain(i..i + 2);
                    changed = true;
                }
                ('x', 'x') => return None,
                ('x', 'e') => {
                    w.swap(i, i + 1);
                    sign = -sign;
                    changed = true;
                    i += 1;
                }
                _ => i += 1,
            }
        }
        if !changed {
            return Some((sign, w.into_iter().collect()));
        }
    }
}

const H4_WORDS: [&str; 4] = ["", "e", "x", "ex"];

/// Sweedler's four-dimensional Hopf algebra on the basis `1, e, x, y = ex`.
pub fn sweedler_h4() -> HopfAlgebraData {
    let idx = |w: &str| H4_WORDS.iter().position(|b| *b == w).expect("normal word");
    let mut mult = Matrix::zeros(4, 16);
    for i in 0..4 {
        for j in 0..4 {
            if let Some((s, w)) = h4_normalize(&format!("{}{}", H4_WORDS[i], H4_WORDS[j])) {
                mult.set(idx(&w), i * 4 + j, Rat::from_int(s));
            }
        }
    }
    // Δ(1)=1⊗1, Δ(e)=e⊗e, Δ(x)=x⊗1+e⊗x, Δ(y)=y⊗e+1⊗y
    let mut comult = Matrix::zeros(16, 4);
    for (col, terms) in [
        (0, vec![(0, 0)]),
        (1, vec![(1, 1)]),
        (2, vec![(2, 0), (1, 2)]),
        (3, vec![(3, 1), (0, 3)]),
    ] {
        for (a, b) in terms {
            comult.set(a * 4 + b, col, Rat::ONE);
        }
    }
    let counit = Matrix::from_int_rows(&[&[1, 1, 0, 0]]);
    // S(1)=1, S(e)=e, S(x)=−y, S(y)=x
    let antipode = Matrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    HopfAlgebraData::new(
        "H4",
        ["1", "e", "x", "y"].iter().map(|s| s.to_string()).collect(),
        mult,
        Vector::from_ints(&[1, 0, 0, 0]),
        comult,
        counit,
        antipode,
    )
    .expect("H4 structure constants")
}

/// Group algebra of the cyclic group of order `n` on the basis `g^0 … g^{n-1}`.
pub fn cyclic_group_algebra(n: usize) -> HopfAlgebraData {
    assert!(n >= 1);
    let names = (0..n).map(|k| if k == 0 { "1".to_string() } else { format!("g^{k}") }).collect();
    let mult = Matrix::from_fn(n, n * n, |r, c| if (c / n + c % n) % n == r { Rat::ONE } else { Rat::ZERO });
    let comult = Matrix::from_fn(n * n, n, |r, c| if r == c * n + c { Rat::ONE } else { Rat::ZERO });
    let counit = Matrix::from_fn(1, n, |_, _| Rat::ONE);
    let antipode = Matrix::from_fn(n, n, |r, c| if (r + c) % n == 0 { Rat::ONE } else { Rat::ZERO });
    HopfAlgebraData::new(format!("kZ{n}"), names, mult, Vector::basis(n, 0), comult, counit, antipode)
        .map(|h| if n == 1 { h.with_name("k") } else { h })
        .expect("group algebra")
}

/// The dual of the cyclic group algebra, on the dual basis `δ_g`.
pub fn cyclic_group_dual(n: usize) -> HopfAlgebraData {
    dual_hopf(&cyclic_group_algebra(n), DualTwist::Plain).expect("dual of a group algebra")
}

/// `½(1⊗1 + 1⊗g + g⊗1 − g⊗g)` on `kZ2`.
pub fn r_triangular_z2() -> Vector {
    let h = Rat::new(1, 2);
    Vector::new(vec![h.clone(), h.clone(), h.clone(), -&h])
}

/// The form on the dual of `kZ2` obtained by evaluating on the triangular
/// R-matrix.
pub fn dual_form_z2() -> BilinearForm {
    let d = Arc::new(cyclic_group_dual(2));
    BilinearForm::new(d.clone(), d, Matrix::row_vector(r_triangular_z2().coords())).expect("1x4")
}

/// `1 ⊗ 1` in `h ⊗ h`.
pub fn trivial_rmatrix(h: &HopfAlgebraData) -> Vector {
    let u = h.unit().coords();
    Tensor::scalar(Rat::ONE).insert(("a", h.dim()), u).insert(("b", h.dim()), u).to_vector()
}

/// `ε ⊗ ε` on `c ⊗ c`.
pub fn trivial_form(c: Arc<HopfAlgebraData>) -> BilinearForm {
    let e = c.counit().entries();
    let d = c.dim();
    let coords = Matrix::from_fn(1, d * d, |_, k| &e[k / d] * &e[k % d]);
    BilinearForm::new(c.clone(), c, coords).expect("square form")
}

/// The flip entwining `b ⊗ h -> h ⊗ b` (coalgebra side `b`, algebra side `h`).
pub fn long_datum(h: Arc<HopfAlgebraData>, b: Arc<HopfAlgebraData>) -> EntwiningMap {
    let phi = flip(b.dim(), h.dim());
    let name = format!("long({}, {})", h.name(), b.name());
    EntwiningMap::new(b, h, phi).expect("flip has the right shape").with_name(name)
}

/// Flip datum with `R(a ⊗ b) = β(a, b) R⁽²⁾ ⊗ R⁽¹⁾`.
pub fn long_dqg(
    h: Arc<HopfAlgebraData>,
    rmatrix: &Vector,
    b: Arc<HopfAlgebraData>,
    form: &BilinearForm,
) -> Result<DoubleQuantumGroup, Error> {
    let (dh, db) = (h.dim(), b.dim());
    if rmatrix.dim() != dh * dh || form.coords.cols() != db * db {
        return Err(Error::DimensionMismatch("R-matrix or form does not match the Hopf algebras".into()));
    }
    let r = Matrix::from_fn(dh * dh, db * db, |row, col| {
        let (i, j) = (row / dh, row % dh);
        form.coords.get(0, col) * &rmatrix[j * dh + i]
    });
    DoubleQuantumGroup::new(Arc::new(long_datum(h, b)), r)
}

/// `c ⊗ a ↦ a₂ ⊗ S(a₁) c a₃` on `h ⊗ h`.
pub fn yd_datum(h: Arc<HopfAlgebraData>) -> EntwiningMap {
    let d = h.dim();
    let hh = h.as_ref();
    let phi = matrix_of(&[d, d], &[d, d], |t| {
        Tensor::basis(&[("c", d), ("a", d)], t)
            .comul3(hh, "a", "a1", "a2", "a3")
            .anti(hh, "a1", "s")
            .mul(hh, "s", "c", "sc")
            .mul(hh, "sc", "a3", "y")
            .order(&["a2", "y"])
    });
    let name = format!("yd({})", h.name());
    EntwiningMap::new(h.clone(), h, phi).expect("square").with_name(name)
}

/// The Yetter–Drinfeld datum with `R(a ⊗ b) = 1 ⊗ ε(a) b`.
pub fn yd_dqg(h: Arc<HopfAlgebraData>) -> DoubleQuantumGroup {
    let rmap = yd_rmap(&h);
    DoubleQuantumGroup::new(Arc::new(yd_datum(h)), rmap).expect("square")
}

fn yd_rmap(h: &HopfAlgebraData) -> Matrix {
    let d = h.dim();
    let u = h.unit();
    let e = h.counit();
    Matrix::from_fn(d * d, d * d, |row, col| {
        let (i, j) = (row / d, row % d);
        let (a, b) = (col / d, col % d);
        if j == b {
            &u[i] * e.get(0, a)
        } else {
            Rat::ZERO
        }
    })
}

/// Same datum, `R(a ⊗ b) = ε(a)ε(b) 1 ⊗ 1`.
pub fn yd_dqg_trivial_r(h: Arc<HopfAlgebraData>) -> Result<DoubleQuantumGroup, Error> {
    let d = h.dim();
    let u = trivial_rmatrix(&h);
    let e = h.counit().entries().to_vec();
    let r = Matrix::from_fn(d * d, d * d, |row, col| &u[row] * &(&e[col / d] * &e[col % d]));
    DoubleQuantumGroup::new(Arc::new(yd_datum(h)), r)
}

/// `x ⊗ y ↦ y₁ ⊗ x y₂`, whose entwined modules are Hopf modules.
pub fn hopf_module_datum(h: Arc<HopfAlgebraData>) -> EntwiningMap {
    let d = h.dim();
    let hh = h.as_ref();
    let phi = matrix_of(&[d, d], &[d, d], |t| {
        Tensor::basis(&[("x", d), ("y", d)], t)
            .comul(hh, "y", "y1", "y2")
            .mul(hh, "x", "y2", "z")
            .order(&["y1", "z"])
    });
    let name = format!("hopf_module({})", h.name());
    EntwiningMap::new(h.clone(), h, phi).expect("square").with_name(name)
}

/// Drinfeld double, as the smash product of the Yetter–Drinfeld datum.
pub fn drinfeld_double(h: Arc<HopfAlgebraData>) -> HopfAlgebraData {
    let name = format!("D({})", h.name());
    crate::smash::smash_product(&yd_datum(h)).expect("the double is a Hopf algebra").with_name(name)
}

/// `e ∈ H4`.
pub fn h4_pivot(h4: Arc<HopfAlgebraData>) -> Element {
    Element::new(h4, Vector::from_ints(&[0, 1, 0, 0])).expect("dim 4")
}

/// `I − E` on H4: `1 ↦ 1`, `e ↦ −1`, `x, y ↦ 0`.
pub fn h4_copivot(h4: Arc<HopfAlgebraData>) -> Functional {
    Functional::new(h4, Matrix::from_int_rows(&[&[1, -1, 0, 0]])).expect("1x4")
}

/// Pivotal morphism of the flip datum on H4: `1 ↦ e`, `e ↦ −e`, `x, y ↦ 0`.
pub fn long_h4_pivotal() -> Matrix {
    Matrix::from_int_rows(&[&[0, 0, 0, 0], &[1, -1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]])
}

/// First pivotal morphism of the Yetter–Drinfeld datum on H4:
/// `1 ↦ 1`, `e ↦ −1`, `x, y ↦ 0`.
pub fn yd_h4_pivotal_1() -> Matrix {
    Matrix::from_int_rows(&[&[1, -1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]])
}

/// Second pivotal morphism of the Yetter–Drinfeld datum on H4:
/// `1 ↦ e`, `e ↦ e`, `x, y ↦ 0`.
pub fn yd_h4_pivotal_2() -> Matrix {
    Matrix::from_int_rows(&[&[0, 0, 0, 0], &[1, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]])
}

/// Flip double quantum group over `(kZ2, triangular R)` and its dual with
/// the dual form.
pub fn long_dqg_z2() -> DoubleQuantumGroup {
    let h = Arc::new(cyclic_group_algebra(2));
    let form = dual_form_z2();
    long_dqg(h, &r_triangular_z2(), form.host_left.clone(), &form).expect("matching dimensions")
}

/// `b ↦ ε(b) 1`, the ribbon morphism of [`long_dqg_z2`] built from the
/// coribbon character `ε` and the ribbon element `1`.
pub fn long_z2_ribbon() -> Matrix {
    let q = long_dqg_z2();
    q.datum().conv_unit()
}

/// Every built-in entwining datum, by name.
pub fn datums() -> Vec<(&'static str, EntwiningMap)> {
    let h4 = Arc::new(sweedler_h4());
    let z2 = Arc::new(cyclic_group_algebra(2));
    let z3 = Arc::new(cyclic_group_algebra(3));
    let z2d = Arc::new(cyclic_group_dual(2));
    vec![
        ("long_h4", long_datum(h4.clone(), h4.clone())),
        ("long_z2", long_datum(z2.clone(), z2d)),
        ("long_z3", long_datum(z3.clone(), z3.clone())),
        ("yd_h4", yd_datum(h4.clone())),
        ("yd_z2", yd_datum(z2.clone())),
        ("hopf_module_h4", hopf_module_datum(h4)),
        ("hopf_module_z2", hopf_module_datum(z2)),
    ]
}

/// Built-in Hopf algebras, by name.
pub fn hopf_algebras() -> Vec<(&'static str, HopfAlgebraData)> {
    vec![
        ("k", cyclic_group_algebra(1)),
        ("h4", sweedler_h4()),
        ("kz2", cyclic_group_algebra(2)),
        ("kz3", cyclic_group_algebra(3)),
        ("kz2_dual", cyclic_group_dual(2)),
    ]
}

/// Built-in double quantum groups, by name.
pub fn dqgs() -> Vec<(&'static str, DoubleQuantumGroup)> {
    vec![
        ("yd_dqg_h4", yd_dqg(Arc::new(sweedler_h4()))),
        ("yd_dqg_z2", yd_dqg(Arc::new(cyclic_group_algebra(2)))),
        ("long_dqg_z2", long_dqg_z2()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::check_hopf;

    #[test]
    fn normalizer() {
        assert_eq!(h4_normalize("xex"), None);
        assert_eq!(h4_normalize("xe"), Some((-1, "ex".into())));
        assert_eq!(h4_normalize("exe"), Some((-1, "x".into())));
        assert_eq!(h4_normalize("eeex"), Some((1, "ex".into())));
    }

    #[test]
    fn corpus_hopf_algebras_pass() {
        for (name, h) in hopf_algebras() {
            let r = check_hopf(&h);
            assert!(r.overall(), "{name}\n{r}");
        }
    }

    #[test]
    fn cyclic_antipode() {
        assert!(cyclic_group_algebra(2).antipode().is_identity());
        assert_eq!(cyclic_group_algebra(1).dim(), 1);
    }
}
