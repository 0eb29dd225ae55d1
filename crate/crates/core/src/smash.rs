//! Distributive laws and the entwined smash product `C*ᵒᵖ ⊗ A` and smash
//! coproduct `A*ᶜᵒᵖ ⊗ C`, with transport of modules and of pivotal and
//! ribbon data.
//!
//! Basis of `C*ᵒᵖ ⊗ A`: `e^p ⊗ e_a` at index `p·dim_A + a`.
//! Basis of `A*ᶜᵒᵖ ⊗ C`: `e^γ ⊗ e_c` at index `γ·dim_C + c`.

use std::sync::Arc;

use crate::emodcat::EntwinedModule;
use crate::entwining::{antipode_entwining_check, DoubleQuantumGroup, EntwiningMap};
use crate::exactla::{matrix_of, Leg, Matrix, Rat, Tensor, Vector};
use crate::hopfcore::{dual_hopf, AlgebraData, BilinearForm, DualTwist, Element, Functional, HopfAlgebraData};
use crate::pivribbon::{verify_pivotal, verify_ribbon};
use crate::report::{scan, AxiomItem, AxiomReport, Witness};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawKind {
    Algebra,
    Coalgebra,
}

/// `map: left ⊗ right -> right ⊗ left`.
#[derive(Clone, Debug, PartialEq)]
pub struct DistributiveLaw {
    pub kind: LawKind,
    pub left: Arc<HopfAlgebraData>,
    pub right: Arc<HopfAlgebraData>,
    pub map: Matrix,
}

impl DistributiveLaw {
    pub fn new(kind: LawKind, left: Arc<HopfAlgebraData>, right: Arc<HopfAlgebraData>, map: Matrix) -> Result<Self, Error> {
        let n = left.dim() * right.dim();
        if map.rows() != n || map.cols() != n {
            return Err(Error::DimensionMismatch(format!("law must be {n}x{n}")));
        }
        Ok(DistributiveLaw { kind, left, right, map })
    }
}

impl Tensor {
    fn law(&self, l: &DistributiveLaw, x: Leg, y: Leg, oy: Leg, ox: Leg) -> Tensor {
        self.apply(&[x, y], &l.map, &[(oy, l.right.dim()), (ox, l.left.dim())])
    }
}

/// The four compatibility squares of an algebra or coalgebra distributive law.
pub fn check_distributive_law(l: &DistributiveLaw) -> AxiomReport {
    let (x_, y_) = (l.left.as_ref(), l.right.as_ref());
    let (dx, dy) = (x_.dim(), y_.dim());
    let b = |legs: &[(Leg, usize)], t: &[usize]| Tensor::basis(legs, t);
    match l.kind {
        LawKind::Algebra => AxiomReport::new(vec![
            scan("mult_left", &[dx, dx, dy], |t| {
                let x = b(&[("x1", dx), ("x2", dx), ("y", dy)], t);
                let lhs = x.mul(x_, "x1", "x2", "xx").law(l, "xx", "y", "oy", "ox");
                let rhs = x
                    .law(l, "x2", "y", "y1", "x2p")
                    .law(l, "x1", "y1", "oy", "x1p")
                    .mul(x_, "x1p", "x2p", "ox");
                (lhs, rhs)
            }),
            scan("mult_right", &[dx, dy, dy], |t| {
                let x = b(&[("x", dx), ("y1", dy), ("y2", dy)], t);
                let lhs = x.mul(y_, "y1", "y2", "yy").law(l, "x", "yy", "oy", "ox");
                let rhs = x
                    .law(l, "x", "y1", "y1p", "xp")
                    .law(l, "xp", "y2", "y2p", "ox")
                    .mul(y_, "y1p", "y2p", "oy")
                    .order(&["oy", "ox"]);
                (lhs, rhs)
            }),
            scan("unit_left", &[dy], |t| {
                let x = b(&[("y", dy)], t);
                (x.unit(x_, "u").law(l, "u", "y", "oy", "ox"), x.rename("y", "oy").unit(x_, "ox"))
            }),
            scan("unit_right", &[dx], |t| {
                let x = b(&[("x", dx)], t);
                (x.unit(y_, "u").law(l, "x", "u", "oy", "ox"), x.rename("x", "ox").unit(y_, "oy").order(&["oy", "ox"]))
            }),
        ]),
        LawKind::Coalgebra => AxiomReport::new(vec![
            scan("comult_right", &[dx, dy], |t| {
                let x = b(&[("x", dx), ("y", dy)], t);
                let lhs = x.law(l, "x", "y", "yp", "xp").comul(y_, "yp", "o1", "o2").order(&["o1", "o2", "xp"]);
                let rhs = x
                    .comul(y_, "y", "y1", "y2")
                    .law(l, "x", "y1", "o1", "x1")
                    .law(l, "x1", "y2", "o2", "xp");
                (lhs, rhs)
            }),
            scan("comult_left", &[dx, dy], |t| {
                let x = b(&[("x", dx), ("y", dy)], t);
                let lhs = x.law(l, "x", "y", "oy", "xp").comul(x_, "xp", "o1", "o2");
                let rhs = x
                    .comul(x_, "x", "x1", "x2")
                    .law(l, "x2", "y", "y1", "o2")
                    .law(l, "x1", "y1", "oy", "o1")
                    .order(&["oy", "o1", "o2"]);
                (lhs, rhs)
            }),
            scan("counit_left", &[dx, dy], |t| {
                let x = b(&[("x", dx), ("y", dy)], t);
                (x.law(l, "x", "y", "oy", "xp").counit(x_, "xp"), x.counit(x_, "x").rename("y", "oy"))
            }),
            scan("counit_right", &[dx, dy], |t| {
                let x = b(&[("x", dx), ("y", dy)], t);
                (x.law(l, "x", "y", "yp", "ox").counit(y_, "yp"), x.counit(y_, "y").rename("x", "ox"))
            }),
        ]),
    }
}

/// `Φ(a ⊗ p) = Σ p(e_i^φ) e^i ⊗ a_φ`, an algebra law `A ⊗ C*ᵒᵖ -> C*ᵒᵖ ⊗ A`.
pub fn entwining_to_algebra_law(e: &EntwiningMap) -> DistributiveLaw {
    let (da, dc) = (e.da(), e.dc());
    let p = Arc::new(dual_hopf(e.c(), DualTwist::Op).expect("dual of a Hopf algebra"));
    let phi = e.phi();
    let map = Matrix::from_fn(dc * da, da * dc, |row, col| {
        let (i, ap) = (row / da, row % da);
        let (a, q) = (col / dc, col % dc);
        phi.get(ap * dc + q, i * da + a).clone()
    });
    DistributiveLaw { kind: LawKind::Algebra, left: e.a().clone(), right: p, map }
}

/// `φ(c ⊗ a) = Σ e^i^Φ(c) a_Φ ⊗ e_i`, inverse of [`entwining_to_algebra_law`].
pub fn algebra_law_to_entwining(l: &DistributiveLaw, c: Arc<HopfAlgebraData>) -> Result<EntwiningMap, Error> {
    let (da, dc) = (l.left.dim(), c.dim());
    if l.kind != LawKind::Algebra || l.right.dim() != dc {
        return Err(Error::DimensionMismatch("law does not match the coalgebra".into()));
    }
    let phi = Matrix::from_fn(da * dc, dc * da, |row, col| {
        let (ap, q) = (row / dc, row % dc);
        let (i, a) = (col / da, col % da);
        l.map.get(i * da + ap, a * dc + q).clone()
    });
    EntwiningMap::new(c, l.left.clone(), phi)
}

/// `Ψ(γ ⊗ c) = Σ γ(e_i_φ) c^φ ⊗ e^i`, a coalgebra law
/// `A*ᶜᵒᵖ ⊗ C -> C ⊗ A*ᶜᵒᵖ`.
pub fn entwining_to_coalgebra_law(e: &EntwiningMap) -> DistributiveLaw {
    let (da, dc) = (e.da(), e.dc());
    let q = Arc::new(dual_hopf(e.a(), DualTwist::Cop).expect("dual of a Hopf algebra"));
    let phi = e.phi();
    let map = Matrix::from_fn(dc * da, da * dc, |row, col| {
        let (cp, i) = (row / da, row % da);
        let (j, c) = (col / dc, col % dc);
        phi.get(j * dc + cp, c * da + i).clone()
    });
    DistributiveLaw { kind: LawKind::Coalgebra, left: q, right: e.c().clone(), map }
}

/// Inverse of [`entwining_to_coalgebra_law`].
pub fn coalgebra_law_to_entwining(l: &DistributiveLaw, a: Arc<HopfAlgebraData>) -> Result<EntwiningMap, Error> {
    let (da, dc) = (a.dim(), l.right.dim());
    if l.kind != LawKind::Coalgebra || l.left.dim() != da {
        return Err(Error::DimensionMismatch("law does not match the algebra".into()));
    }
    let phi = Matrix::from_fn(da * dc, dc * da, |row, col| {
        let (j, cp) = (row / dc, row % dc);
        let (c, i) = (col / da, col % da);
        l.map.get(cp * da + i, j * dc + c).clone()
    });
    EntwiningMap::new(l.right.clone(), a, phi)
}

/// From an algebra law `Φ: B ⊗ A -> A ⊗ B` (`left = B`, `right = A`), the
/// entwining `A*ᶜᵒᵖ ⊗ B -> B ⊗ A*ᶜᵒᵖ`, `γ ⊗ b ↦ Σ γ(e_i^Φ) b_Φ ⊗ e^i`.
pub fn algebra_law_to_dual_entwining(l: &DistributiveLaw) -> Result<EntwiningMap, Error> {
    if l.kind != LawKind::Algebra {
        return Err(Error::DimensionMismatch("expected an algebra law".into()));
    }
    let (db, da) = (l.left.dim(), l.right.dim());
    let c = Arc::new(dual_hopf(&l.right, DualTwist::Cop)?);
    let phi = Matrix::from_fn(db * da, da * db, |row, col| {
        let (bp, i) = (row / da, row % da);
        let (g, b) = (col / db, col % db);
        l.map.get(g * db + bp, b * da + i).clone()
    });
    EntwiningMap::new(c, l.left.clone(), phi)
}

/// Inverse of [`algebra_law_to_dual_entwining`]:
/// `Φ(b ⊗ a) = Σ (e^i)^φ(a) e_i ⊗ b_φ`. `a` is the algebra whose dual is
/// the coalgebra side of `e`.
pub fn dual_entwining_to_algebra_law(e: &EntwiningMap, a: Arc<HopfAlgebraData>) -> Result<DistributiveLaw, Error> {
    let (db, da) = (e.da(), e.dc());
    if a.dim() != da {
        return Err(Error::DimensionMismatch("algebra does not match the coalgebra side".into()));
    }
    let phi = e.phi();
    let map = Matrix::from_fn(da * db, db * da, |row, col| {
        let (i, bp) = (row / db, row % db);
        let (b, x) = (col / da, col % da);
        phi.get(bp * da + x, i * db + b).clone()
    });
    DistributiveLaw::new(LawKind::Algebra, e.a().clone(), a, map)
}

/// The algebra or coalgebra law of an entwining.
pub fn entwining_to_distlaw(e: &EntwiningMap, kind: LawKind) -> DistributiveLaw {
    match kind {
        LawKind::Algebra => entwining_to_algebra_law(e),
        LawKind::Coalgebra => entwining_to_coalgebra_law(e),
    }
}

/// Inverse of [`entwining_to_distlaw`]; `other` is the coalgebra `C` for an
/// algebra law and the algebra `A` for a coalgebra law.
pub fn distlaw_to_entwining(l: &DistributiveLaw, other: Arc<HopfAlgebraData>) -> Result<EntwiningMap, Error> {
    match l.kind {
        LawKind::Algebra => algebra_law_to_entwining(l, other),
        LawKind::Coalgebra => coalgebra_law_to_entwining(l, other),
    }
}

/// The algebra structure of `C*ᵒᵖ ⊗ A`:
/// `(p ⊗ a)(q ⊗ b) = Σ e^i ∗ p ⊗ a_φ b q(e_i^φ)`. Needs only the entwining
/// axioms.
pub fn smash_algebra(e: &EntwiningMap) -> AlgebraData {
    let (da, dc) = (e.da(), e.dc());
    let a_ = e.a().as_ref();
    let cstar = dual_hopf(e.c(), DualTwist::Plain).expect("dual of a Hopf algebra");
    let n = da * dc;
    let mult = matrix_of(&[dc, da, dc, da], &[dc, da], |t| {
        Tensor::basis(&[("p", dc), ("a", da), ("q", dc), ("b", da)], t)
            .insert_identity("i", "ib", dc)
            .phi(e, "i", "a", "ap", "cp")
            .trace("cp", "q")
            .mul(&cstar, "ib", "p", "o1")
            .mul(a_, "ap", "b", "o2")
    });
    let unit = Tensor::scalar(Rat::ONE)
        .insert(("p", dc), e.c().counit().entries())
        .unit(a_, "a")
        .to_vector();
    let names = smash_names(e.c(), e.a());
    AlgebraData { dim: n, basis_names: names, mult, unit }
}

fn smash_names(left: &HopfAlgebraData, right: &HopfAlgebraData) -> Vec<String> {
    let mut v = Vec::new();
    for p in left.basis_names() {
        for a in right.basis_names() {
            v.push(format!("{p}*#{a}"));
        }
    }
    v
}

/// The entwined smash product `C*ᵒᵖ ⊗ A`.
pub fn smash_product(e: &EntwiningMap) -> Result<HopfAlgebraData, Error> {
    let (da, dc) = (e.da(), e.dc());
    let (a_, c_) = (e.a().as_ref(), e.c().as_ref());
    let alg = smash_algebra(e);
    let cop = dual_hopf(c_, DualTwist::Op)?;
    let comult = matrix_of(&[dc, da], &[dc, da, dc, da], |t| {
        Tensor::basis(&[("p", dc), ("a", da)], t)
            .comul(&cop, "p", "p1", "p2")
            .comul(a_, "a", "a1", "a2")
            .order(&["p1", "a1", "p2", "a2"])
    });
    let counit = matrix_of(&[dc, da], &[], |t| {
        Tensor::basis(&[("p", dc), ("a", da)], t)
            .insert(("u", dc), c_.unit().coords())
            .trace("u", "p")
            .counit(a_, "a")
    });
    // S(p ⊗ a) = Σ p(S_C⁻¹(e_i^φ)) e^i ⊗ S_A(a)_φ
    let antipode = matrix_of(&[dc, da], &[dc, da], |t| {
        Tensor::basis(&[("p", dc), ("a", da)], t)
            .insert_identity("i", "ib", dc)
            .anti(a_, "a", "sa")
            .phi(e, "i", "sa", "ap", "cp")
            .anti_inv(c_, "cp", "z")
            .trace("z", "p")
            .order(&["ib", "ap"])
    });
    let co = crate::hopfcore::CoalgebraData::new(alg.basis_names.clone(), comult, counit)?;
    HopfAlgebraData::from_parts(format!("{}*op#{}", c_.name(), a_.name()), alg, co, antipode)
}

/// The entwined smash coproduct `A*ᶜᵒᵖ ⊗ C`, with multiplication
/// `(γ ⊗ c)(δ ⊗ d) = γ⋆δ ⊗ cd`.
pub fn smash_coproduct(e: &EntwiningMap) -> Result<HopfAlgebraData, Error> {
    let (da, dc) = (e.da(), e.dc());
    let (a_, c_) = (e.a().as_ref(), e.c().as_ref());
    let astar = dual_hopf(a_, DualTwist::Plain)?;
    let mult = matrix_of(&[da, dc, da, dc], &[da, dc], |t| {
        Tensor::basis(&[("g", da), ("c", dc), ("h", da), ("d", dc)], t)
            .mul(&astar, "g", "h", "o1")
            .mul(c_, "c", "d", "o2")
    });
    let unit = Tensor::scalar(Rat::ONE)
        .insert(("g", da), a_.counit().entries())
        .unit(c_, "c")
        .to_vector();
    // (g, x) ↦ the functional b ↦ g(x b)
    let translate = Matrix::from_fn(da, da * da, |b, col| {
        let (g, x) = (col / da, col % da);
        a_.mult().get(g, x * da + b).clone()
    });
    let comult = matrix_of(&[da, dc], &[da, dc, da, dc], |t| {
        Tensor::basis(&[("g", da), ("c", dc)], t)
            .comul(c_, "c", "c1", "c2")
            .insert_identity("i", "ib", da)
            .phi(e, "c1", "i", "ap", "cp")
            .apply(&["g", "ap"], &translate, &[("f", da)])
            .order(&["f", "cp", "ib", "c2"])
    });
    let counit = matrix_of(&[da, dc], &[], |t| {
        Tensor::basis(&[("g", da), ("c", dc)], t)
            .insert(("u", da), a_.unit().coords())
            .trace("u", "g")
            .counit(c_, "c")
    });
    // S(γ ⊗ c) = Σ γ(e_i_φ) (e^i ∘ S_A⁻¹) ⊗ S_C(c^φ)
    let pre_sinv = a_.antipode_inv().transpose();
    let antipode = matrix_of(&[da, dc], &[da, dc], |t| {
        Tensor::basis(&[("g", da), ("c", dc)], t)
            .insert_identity("i", "ib", da)
            .phi(e, "c", "i", "ap", "cp")
            .trace("ap", "g")
            .anti(c_, "cp", "y")
            .apply(&["ib"], &pre_sinv, &[("x", da)])
            .order(&["x", "y"])
    });
    let names = smash_names(a_, c_);
    HopfAlgebraData::new(format!("{}*cop#{}", a_.name(), c_.name()), names, mult, unit, comult, counit, antipode)
}

/// A right module over a Hopf algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct SmashModule {
    pub smash: Arc<HopfAlgebraData>,
    pub dim: usize,
    /// dim x dim·dim_H
    pub action: Matrix,
}

impl SmashModule {
    pub fn new(smash: Arc<HopfAlgebraData>, dim: usize, action: Matrix) -> Result<Self, Error> {
        if action.rows() != dim || action.cols() != dim * smash.dim() {
            return Err(Error::DimensionMismatch("action has the wrong shape".into()));
        }
        Ok(SmashModule { smash, dim, action })
    }
}

/// Right-module axioms.
pub fn check_smash_module(u: &SmashModule) -> AxiomReport {
    let h = u.smash.as_ref();
    let (d, dh) = (u.dim, h.dim());
    let act = |x: &Tensor, m: Leg, a: Leg, o: Leg| x.apply(&[m, a], &u.action, &[(o, d)]);
    AxiomReport::new(vec![
        scan("action_assoc", &[d, dh, dh], |t| {
            let x = Tensor::basis(&[("m", d), ("a", dh), ("b", dh)], t);
            let l = act(&act(&x, "m", "a", "ma"), "ma", "b", "o");
            let r = act(&x.mul(h, "a", "b", "ab"), "m", "ab", "o");
            (l, r)
        }),
        scan("action_unit", &[d], |t| {
            let x = Tensor::basis(&[("m", d)], t);
            (act(&x.unit(h, "u"), "m", "u", "o"), x.rename("m", "o"))
        }),
    ])
}

/// `m ↼ (p ⊗ a) = p(m₁) m₀·a`.
pub fn module_transport_to_smash(m: &EntwinedModule, smash: Arc<HopfAlgebraData>) -> Result<SmashModule, Error> {
    let e = m.datum();
    let (d, da, dc) = (m.dim(), e.da(), e.dc());
    if smash.dim() != da * dc {
        return Err(Error::DimensionMismatch("smash product does not match the datum".into()));
    }
    let action = matrix_of(&[d, dc, da], &[d], |t| {
        Tensor::basis(&[("m", d), ("p", dc), ("a", da)], t)
            .coact(m, "m", "m0", "m1")
            .trace("m1", "p")
            .act(m, "m0", "a", "o")
    });
    SmashModule::new(smash, d, action)
}

/// `u·a = u ↼ (ε_C ⊗ a)`, `u ↦ Σ (u ↼ (e^i ⊗ 1)) ⊗ e_i`.
pub fn module_transport_from_smash(u: &SmashModule, datum: Arc<EntwiningMap>) -> Result<EntwinedModule, Error> {
    let (d, da, dc) = (u.dim, datum.da(), datum.dc());
    if u.smash.dim() != da * dc {
        return Err(Error::DimensionMismatch("smash product does not match the datum".into()));
    }
    let (a_, c_) = (datum.a().clone(), datum.c().clone());
    let action = matrix_of(&[d, da], &[d], |t| {
        Tensor::basis(&[("u", d), ("a", da)], t)
            .insert(("p", dc), c_.counit().entries())
            .apply(&["u", "p", "a"], &u.action, &[("o", d)])
    });
    let coaction = matrix_of(&[d], &[d, dc], |t| {
        Tensor::basis(&[("u", d)], t)
            .insert_identity("p", "c", dc)
            .unit(&a_, "a")
            .apply(&["u", "p", "a"], &u.action, &[("o", d)])
            .order(&["o", "c"])
    });
    EntwinedModule::new(datum, d, action, coaction)
}

/// `(u ⊗ v) ↼ h = u ↼ h₁ ⊗ v ↼ h₂`.
pub fn tensor_smash_modules(u: &SmashModule, v: &SmashModule) -> SmashModule {
    let h = u.smash.as_ref();
    let dh = h.dim();
    let action = matrix_of(&[u.dim, v.dim, dh], &[u.dim, v.dim], |t| {
        Tensor::basis(&[("u", u.dim), ("v", v.dim), ("h", dh)], t)
            .comul(h, "h", "h1", "h2")
            .apply(&["u", "h1"], &u.action, &[("ou", u.dim)])
            .apply(&["v", "h2"], &v.action, &[("ov", v.dim)])
    });
    SmashModule { smash: u.smash.clone(), dim: u.dim * v.dim, action }
}

fn rejected(r: &AxiomReport) -> Error {
    Error::NotVerified(format!("failed: {}", r.failed_ids().join(", ")))
}

fn check_host(host: &HopfAlgebraData, d: &EntwiningMap) -> Result<(), Error> {
    if host.dim() != d.da() * d.dc() {
        return Err(Error::DimensionMismatch("host does not match the datum".into()));
    }
    Ok(())
}

/// `Σ e^i ⊗ g(e_i)` in `C*ᵒᵖ ⊗ A`.
pub fn hom_to_smash_element(d: &EntwiningMap, g: &Matrix) -> Vector {
    let (da, dc) = (d.da(), d.dc());
    Vector::new((0..dc * da).map(|k| g.get(k % da, k / da).clone()).collect())
}

/// `c ↦ Σ T⁽¹⁾(c) T⁽²⁾`.
pub fn smash_element_to_hom(d: &EntwiningMap, t: &Vector) -> Matrix {
    let da = d.da();
    Matrix::from_fn(da, d.dc(), |a, c| t[c * da + a].clone())
}

/// The pivot `Σ e^i ⊗ 𝔤(e_i)` of the smash product.
pub fn transport_pivot(d: &EntwiningMap, smash: &Arc<HopfAlgebraData>, g: &Matrix) -> Result<Element, Error> {
    check_host(smash, d)?;
    let r = verify_pivotal(d, g);
    if !r.overall() {
        return Err(rejected(&r));
    }
    Element::new(smash.clone(), hom_to_smash_element(d, g))
}

pub fn extract_pivot(d: &EntwiningMap, t: &Element) -> Matrix {
    smash_element_to_hom(d, &t.coords)
}

/// R-matrix of the smash product:
/// `Σ R[(a₁,a₂),(i,j)] (e^j ⊗ e_a₁) ⊗ (e^i ⊗ e_a₂)`, i.e. the first
/// tensor factor carries the first output leg of `R(e_i ⊗ e_j)` together
/// with the dual of the second input.
pub fn transport_rmatrix(q: &DoubleQuantumGroup) -> Vector {
    rmatrix_with_order(q, true)
}

pub(crate) fn rmatrix_with_order(q: &DoubleQuantumGroup, first_leg_first: bool) -> Vector {
    let e = q.datum();
    let (da, dc) = (e.da(), e.dc());
    let dh = da * dc;
    let r = q.rmap();
    let mut v = vec![Rat::ZERO; dh * dh];
    for i in 0..dc {
        for j in 0..dc {
            for a1 in 0..da {
                for a2 in 0..da {
                    let x = r.get(a1 * da + a2, i * dc + j);
                    if x.is_zero() {
                        continue;
                    }
                    let (l, rr) = if first_leg_first { (j * da + a1, i * da + a2) } else { (i * da + a2, j * da + a1) };
                    v[l * dh + rr] = x.clone();
                }
            }
        }
    }
    Vector::new(v)
}

/// R-matrix and ribbon element `Σ e^i ⊗ g(e_i)` of the smash product.
pub fn transport_ribbon(q: &DoubleQuantumGroup, smash: &Arc<HopfAlgebraData>, g: &Matrix) -> Result<(Vector, Element), Error> {
    check_host(smash, q.datum())?;
    let r = verify_ribbon(q, g);
    if !r.overall() {
        return Err(rejected(&r));
    }
    let v = Element::new(smash.clone(), hom_to_smash_element(q.datum(), g))?;
    Ok((transport_rmatrix(q), v))
}

pub fn extract_ribbon(d: &EntwiningMap, v: &Element) -> Matrix {
    smash_element_to_hom(d, &v.coords)
}

/// The copivot `γ ⊗ c ↦ γ(𝔤(c))` of the smash coproduct.
pub fn transport_copivot(d: &EntwiningMap, cosmash: &Arc<HopfAlgebraData>, g: &Matrix) -> Result<Functional, Error> {
    check_host(cosmash, d)?;
    let r = verify_pivotal(d, g);
    if !r.overall() {
        return Err(rejected(&r));
    }
    Functional::new(cosmash.clone(), hom_to_cosmash_functional(d, g))
}

fn hom_to_cosmash_functional(d: &EntwiningMap, g: &Matrix) -> Matrix {
    let dc = d.dc();
    Matrix::from_fn(1, d.da() * dc, |_, k| g.get(k / dc, k % dc).clone())
}

/// `c ↦ Σ Γ(e^i ⊗ c) e_i`.
pub fn extract_copivot(d: &EntwiningMap, f: &Functional) -> Matrix {
    let dc = d.dc();
    Matrix::from_fn(d.da(), dc, |a, c| f.coords.get(0, a * dc + c).clone())
}

/// Coquasitriangular form `(γ' ⊗ c) ⊗ (γ ⊗ d) ↦ (γ ⊗ γ')(R(c ⊗ d))` of the
/// smash coproduct.
pub fn transport_coform(q: &DoubleQuantumGroup, cosmash: &Arc<HopfAlgebraData>) -> BilinearForm {
    coform_with_order(q, cosmash, false)
}

pub(crate) fn coform_with_order(q: &DoubleQuantumGroup, cosmash: &Arc<HopfAlgebraData>, straight: bool) -> BilinearForm {
    let e = q.datum();
    let (da, dc) = (e.da(), e.dc());
    let dk = da * dc;
    let r = q.rmap();
    let coords = Matrix::from_fn(1, dk * dk, |_, k| {
        let (x, y) = (k / dk, k % dk);
        let (g1, c) = (x / dc, x % dc);
        let (g2, d) = (y / dc, y % dc);
        let row = if straight { g1 * da + g2 } else { g2 * da + g1 };
        r.get(row, c * dc + d).clone()
    });
    BilinearForm::new(cosmash.clone(), cosmash.clone(), coords).expect("square form")
}

/// Coquasitriangular form and coribbon functional `γ ⊗ c ↦ γ(g(c))`.
pub fn transport_coribbon(q: &DoubleQuantumGroup, cosmash: &Arc<HopfAlgebraData>, g: &Matrix) -> Result<(BilinearForm, Functional), Error> {
    check_host(cosmash, q.datum())?;
    let r = verify_ribbon(q, g);
    if !r.overall() {
        return Err(rejected(&r));
    }
    let f = Functional::new(cosmash.clone(), hom_to_cosmash_functional(q.datum(), g))?;
    Ok((transport_coform(q, cosmash), f))
}

pub fn extract_coribbon(d: &EntwiningMap, f: &Functional) -> Matrix {
    extract_copivot(d, f)
}

/// Anti-multiplicativity of the smash product antipode and
/// anti-comultiplicativity of the smash coproduct antipode, together with
/// the antipode identities for φ they encode.
pub fn smash_identity_checks(d: &EntwiningMap) -> AxiomReport {
    let mut items = Vec::new();
    let fail = |id: &str, e: &Error| {
        AxiomItem::fail(id, Witness { tuple: Vec::new(), lhs: Vector::zeros(1), rhs: Vector::zeros(1) }, Some(e.to_string()))
    };
    match smash_product(d) {
        Ok(h) => {
            let n = h.dim();
            items.push(scan("smash_antipode_antimultiplicative", &[n, n], |t| {
                let x = Tensor::basis(&[("x", n), ("y", n)], t);
                let l = x.mul(&h, "x", "y", "xy").anti(&h, "xy", "o");
                let r = x.anti(&h, "x", "sx").anti(&h, "y", "sy").mul(&h, "sy", "sx", "o");
                (l, r)
            }));
        }
        Err(e) => items.push(fail("smash_antipode_antimultiplicative", &e)),
    }
    match smash_coproduct(d) {
        Ok(k) => {
            let n = k.dim();
            items.push(scan("cosmash_antipode_anticomultiplicative", &[n], |t| {
                let x = Tensor::basis(&[("x", n)], t);
                let l = x.anti(&k, "x", "s").comul(&k, "s", "o1", "o2");
                let r = x.comul(&k, "x", "x1", "x2").anti(&k, "x2", "o1").anti(&k, "x1", "o2");
                (l, r)
            }));
        }
        Err(e) => items.push(fail("cosmash_antipode_anticomultiplicative", &e)),
    }
    AxiomReport::merge(vec![("", AxiomReport::new(items)), ("", antipode_entwining_check(d))])
}
