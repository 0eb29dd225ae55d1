//! Entwined pivotal and ribbon morphisms `C -> A`: verification, the
//! induced pivotal structure and twist, and a staged search.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::emodcat::{double_right_dual, EntwinedModule, ModuleMorphism};
use crate::entwining::{conv_inverse, DoubleQuantumGroup, EntwiningMap, HomCA};
use crate::exactla::{matrix_of, solve_affine, AffineSolution, Leg, Matrix, Rat, Tensor, Vector};
use crate::hopfcore::{Element, Functional};
use crate::report::{compare, scan, AxiomItem, AxiomReport, Witness};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismKind {
    Pivotal,
    Ribbon,
}

/// A candidate map `C -> A` for one of the two structures.
#[derive(Clone, Debug, PartialEq)]
pub struct MorphismCandidate {
    pub hom: HomCA,
    pub kind: MorphismKind,
}

impl MorphismCandidate {
    pub fn new(datum: Arc<EntwiningMap>, map: Matrix, kind: MorphismKind) -> Result<Self, Error> {
        Ok(MorphismCandidate { hom: HomCA::new(datum, map)?, kind })
    }

    pub fn datum(&self) -> &Arc<EntwiningMap> {
        &self.hom.datum
    }

    pub fn map(&self) -> &Matrix {
        &self.hom.map
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FinderStatus {
    Complete,
    Parametric,
    Undecided,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FinderResult {
    pub status: FinderStatus,
    pub solutions: Vec<MorphismCandidate>,
    pub family: Option<AffineSolution>,
    pub notes: String,
}

fn cb(e: &EntwiningMap, legs: &[(Leg, bool)], idx: &[usize]) -> Tensor {
    let ls: Vec<(Leg, usize)> = legs.iter().map(|&(l, is_c)| (l, if is_c { e.dc() } else { e.da() })).collect();
    Tensor::basis(&ls, idx)
}

const A: bool = false;
const C: bool = true;

fn invertibility_item(id: &str, e: &EntwiningMap, g: &Matrix) -> AxiomItem {
    match conv_inverse(e, g) {
        Ok(_) => AxiomItem::pass(id),
        Err(_) => AxiomItem::fail(
            id,
            Witness { tuple: Vec::new(), lhs: Vector::new(g.entries().to_vec()), rhs: Vector::new(e.conv_unit().entries().to_vec()) },
            Some("no convolution inverse".into()),
        ),
    }
}

fn p1(e: &EntwiningMap, g: &Matrix) -> AxiomItem {
    let (a_, c_) = (e.a().as_ref(), e.c().as_ref());
    scan("P1", &[e.dc(), e.dc()], |t| {
        let x = cb(e, &[("c", C), ("d", C)], t);
        let l = x.mul(c_, "c", "d", "cd").hom(e, g, "cd", "g").comul(a_, "g", "o1", "o2");
        let r = x.hom(e, g, "c", "o1").hom(e, g, "d", "o2");
        (l, r)
    })
}

fn p2(e: &EntwiningMap, g: &Matrix) -> AxiomItem {
    let (a_, c_) = (e.a().as_ref(), e.c().as_ref());
    let v = Tensor::scalar(Rat::ONE).unit(c_, "u").hom(e, g, "u", "g").counit(a_, "g").scalar_value();
    compare("P2", Vector::new(vec![v]), Vector::new(vec![Rat::ONE]))
}

fn p3(e: &EntwiningMap, g: &Matrix) -> AxiomItem {
    let a_ = e.a().as_ref();
    scan("P3", &[e.da(), e.dc()], |t| {
        let x = cb(e, &[("a", A), ("c", C)], t);
        let l = x.hom(e, g, "c", "g").anti(a_, "a", "s").anti(a_, "s", "ss").mul(a_, "g", "ss", "o");
        let r = x.phi(e, "c", "a", "ap", "cp").hom(e, g, "cp", "g").mul(a_, "ap", "g", "o");
        (l, r)
    })
}

fn p4(e: &EntwiningMap, g: &Matrix) -> AxiomItem {
    let c_ = e.c().as_ref();
    scan("P4", &[e.dc()], |t| {
        let x = cb(e, &[("c", C)], t).comul(c_, "c", "c1", "c2");
        let l = x.hom(e, g, "c1", "x").order(&["x", "c2"]);
        let r = x
            .hom(e, g, "c2", "g")
            .phi(e, "c1", "g", "x", "cp")
            .anti_inv(c_, "cp", "s")
            .anti_inv(c_, "s", "y");
        (l, r)
    })
}

/// Pivotal equations P1–P4 and convolution invertibility P5.
pub fn verify_pivotal(d: &EntwiningMap, g: &Matrix) -> AxiomReport {
    AxiomReport::new(vec![p1(d, g), p2(d, g), p3(d, g), p4(d, g), invertibility_item("P5", d, g)])
}

fn r1(e: &EntwiningMap, g: &Matrix) -> AxiomItem {
    let a_ = e.a().as_ref();
    scan("R1", &[e.da(), e.dc()], |t| {
        let x = cb(e, &[("a", A), ("c", C)], t);
        let l = x.hom(e, g, "c", "g").mul(a_, "g", "a", "o");
        let r = x.phi(e, "c", "a", "ap", "cp").hom(e, g, "cp", "g").mul(a_, "ap", "g", "o");
        (l, r)
    })
}

fn r2(e: &EntwiningMap, g: &Matrix) -> AxiomItem {
    let c_ = e.c().as_ref();
    scan("R2", &[e.dc()], |t| {
        let x = cb(e, &[("c", C)], t).comul(c_, "c", "c1", "c2");
        let l = x.hom(e, g, "c1", "x").order(&["x", "c2"]);
        let r = x.hom(e, g, "c2", "g").phi(e, "c1", "g", "x", "y");
        (l, r)
    })
}

fn r3(q: &DoubleQuantumGroup, g: &Matrix) -> AxiomItem {
    let e = q.datum().as_ref();
    let (a_, c_) = (e.a().as_ref(), e.c().as_ref());
    let r = q.rmap();
    scan("R3", &[e.dc(), e.dc()], |t| {
        let x = cb(e, &[("x", C), ("y", C)], t);
        let l = x.mul(c_, "x", "y", "xy").hom(e, g, "xy", "g").comul(a_, "g", "o1", "o2");
        let rr = x
            .comul3(c_, "x", "x1", "x2", "x3")
            .comul3(c_, "y", "y1", "y2", "y3")
            .hom2(e, r, "x3", "y3", "s1", "s2")
            .phi(e, "y2", "s1", "p", "y2p")
            .phi(e, "x2", "s2", "q", "x2p")
            .hom2(e, r, "y2p", "x2p", "t1", "t2")
            .hom(e, g, "x1", "gx")
            .hom(e, g, "y1", "gy")
            .mul(a_, "gx", "q", "u")
            .mul(a_, "u", "t1", "o1")
            .mul(a_, "gy", "p", "v")
            .mul(a_, "v", "t2", "o2");
        (l, rr)
    })
}

fn r4(e: &EntwiningMap, g: &Matrix) -> AxiomItem {
    let (a_, c_) = (e.a().as_ref(), e.c().as_ref());
    scan("R4", &[e.dc()], |t| {
        let x = cb(e, &[("c", C)], t);
        let l = x.hom(e, g, "c", "x");
        let r = x
            .insert_identity("i", "ib", e.da())
            .phi(e, "c", "i", "x", "cp")
            .anti(c_, "cp", "s")
            .hom(e, g, "s", "gs")
            .anti_inv(a_, "gs", "z")
            .trace("z", "ib");
        (l, r)
    })
}

/// Ribbon equations R1–R4 and convolution invertibility R5.
pub fn verify_ribbon(q: &DoubleQuantumGroup, g: &Matrix) -> AxiomReport {
    let e = q.datum().as_ref();
    AxiomReport::new(vec![r1(e, g), r2(e, g), r3(q, g), r4(e, g), invertibility_item("R5", e, g)])
}

/// `m ↦ m₀ · g(m₁)` on `M`.
pub fn sigma(g: &Matrix, m: &EntwinedModule) -> Matrix {
    let e = m.datum().as_ref();
    matrix_of(&[m.dim()], &[m.dim()], |t| {
        Tensor::basis(&[("m", m.dim())], t)
            .coact(m, "m", "m0", "m1")
            .hom(e, g, "m1", "g")
            .act(m, "m0", "g", "o")
    })
}

/// `β_M: M -> **M`, `m ↦ m₀ · 𝔤(m₁)` on the canonical basis.
pub fn pivotal_structure(d: &EntwiningMap, g: &Matrix, m: &EntwinedModule) -> Result<ModuleMorphism, Error> {
    let r = verify_pivotal(d, g);
    if !r.overall() {
        return Err(Error::NotVerified(format!("not a pivotal morphism: {}", r.failed_ids().join(", "))));
    }
    let target = double_right_dual(m);
    ModuleMorphism::new(Arc::new(m.clone()), Arc::new(target), sigma(g, m))
}

/// `θ_M(m) = m₀ · g(m₁)`.
pub fn twist(q: &DoubleQuantumGroup, g: &Matrix, m: &EntwinedModule) -> Result<ModuleMorphism, Error> {
    let r = verify_ribbon(q, g);
    if !r.overall() {
        return Err(Error::NotVerified(format!("not a ribbon morphism: {}", r.failed_ids().join(", "))));
    }
    let m = Arc::new(m.clone());
    ModuleMorphism::new(m.clone(), m.clone(), sigma(g, &m))
}

/// Recovers the morphism `C -> A` from a structure map on a standard module:
/// for `Ribbon`, `c ↦ (ε_C ⊗ A) θ(c ⊗ 1)` on `C ⊗ A`; for `Pivotal`,
/// `c ↦ (A ⊗ ε_C) β(1 ⊗ c)` on `A ⊗ C`.
pub fn nat_to_hom(d: &EntwiningMap, map: &Matrix, kind: MorphismKind) -> Result<Matrix, Error> {
    let (da, dc) = (d.da(), d.dc());
    if map.rows() != da * dc || map.cols() != da * dc {
        return Err(Error::DimensionMismatch(format!("expected a square map on a space of dimension {}", da * dc)));
    }
    let (a_, c_) = (d.a().as_ref(), d.c().as_ref());
    Ok(matrix_of(&[dc], &[da], |t| {
        let x = cb(d, &[("c", C)], t);
        match kind {
            MorphismKind::Ribbon => x
                .unit(a_, "u")
                .apply(&["c", "u"], map, &[("p", dc), ("o", da)])
                .counit(c_, "p"),
            MorphismKind::Pivotal => x
                .unit(a_, "u")
                .apply(&["u", "c"], map, &[("o", da), ("p", dc)])
                .counit(c_, "p"),
        }
    }))
}

/// `c ↦ ρ(c) κ`.
pub fn separable_candidate(d: Arc<EntwiningMap>, kappa: &Element, rho: &Functional, kind: MorphismKind) -> Result<MorphismCandidate, Error> {
    let (da, dc) = (d.da(), d.dc());
    if kappa.coords.dim() != da || rho.coords.cols() != dc {
        return Err(Error::DimensionMismatch("element or functional does not match the datum".into()));
    }
    let map = Matrix::from_fn(da, dc, |i, c| &kappa.coords[i] * rho.coords.get(0, c));
    MorphismCandidate::new(d, map, kind)
}

/// Concatenated `lhs − rhs` of the equations that are affine in the
/// unknown map (P2–P4 for pivotal, R1, R2, R4 for ribbon).
pub fn linear_residual(d: &EntwiningMap, g: &Matrix, kind: MorphismKind) -> Vec<Rat> {
    let (da, dc) = (d.da(), d.dc());
    let (a_, c_) = (d.a().as_ref(), d.c().as_ref());
    let mut out = Vec::new();
    let mut push = |l: Tensor, r: Tensor| {
        out.extend(l.sub(&r.order(&l.legs().iter().map(|x| x.0).collect::<Vec<_>>())).to_dense());
    };
    match kind {
        MorphismKind::Pivotal => {
            let one = Tensor::scalar(Rat::ONE);
            let v = one.unit(c_, "u").hom(d, g, "u", "g").counit(a_, "g");
            push(v, one);
            for a in 0..da {
                for c in 0..dc {
                    let x = cb(d, &[("a", A), ("c", C)], &[a, c]);
                    let l = x.hom(d, g, "c", "g").anti(a_, "a", "s").anti(a_, "s", "ss").mul(a_, "g", "ss", "o");
                    let r = x.phi(d, "c", "a", "ap", "cp").hom(d, g, "cp", "g").mul(a_, "ap", "g", "o");
                    push(l, r);
                }
            }
            for c in 0..dc {
                let x = cb(d, &[("c", C)], &[c]).comul(c_, "c", "c1", "c2");
                let l = x.hom(d, g, "c1", "x").order(&["x", "c2"]).rename("c2", "y");
                let r = x.hom(d, g, "c2", "g").phi(d, "c1", "g", "x", "cp").anti_inv(c_, "cp", "s").anti_inv(c_, "s", "y");
                push(l, r);
            }
        }
        MorphismKind::Ribbon => {
            for a in 0..da {
                for c in 0..dc {
                    let x = cb(d, &[("a", A), ("c", C)], &[a, c]);
                    let l = x.hom(d, g, "c", "g").mul(a_, "g", "a", "o");
                    let r = x.phi(d, "c", "a", "ap", "cp").hom(d, g, "cp", "g").mul(a_, "ap", "g", "o");
                    push(l, r);
                }
            }
            for c in 0..dc {
                let x = cb(d, &[("c", C)], &[c]).comul(c_, "c", "c1", "c2");
                let l = x.hom(d, g, "c1", "x").order(&["x", "c2"]).rename("c2", "y");
                let r = x.hom(d, g, "c2", "g").phi(d, "c1", "g", "x", "y");
                push(l, r);
            }
            for c in 0..dc {
                let x = cb(d, &[("c", C)], &[c]);
                let l = x.hom(d, g, "c", "x");
                let r = x
                    .insert_identity("i", "ib", da)
                    .phi(d, "c", "i", "x", "cp")
                    .anti(c_, "cp", "s")
                    .hom(d, g, "s", "gs")
                    .anti_inv(a_, "gs", "z")
                    .trace("z", "ib");
                push(l, r);
            }
        }
    }
    out
}

/// `lhs − rhs` of the quadratic equation (P1 or R3), over all basis pairs.
fn quadratic_residual(d: &EntwiningMap, rmap: Option<&Matrix>, g: &Matrix, kind: MorphismKind) -> Vec<Rat> {
    let (a_, c_) = (d.a().as_ref(), d.c().as_ref());
    let dc = d.dc();
    let mut out = Vec::new();
    for i in 0..dc {
        for j in 0..dc {
            let x = cb(d, &[("x", C), ("y", C)], &[i, j]);
            let l = x.mul(c_, "x", "y", "xy").hom(d, g, "xy", "g").comul(a_, "g", "o1", "o2");
            let r = match kind {
                MorphismKind::Pivotal => x.hom(d, g, "x", "o1").hom(d, g, "y", "o2"),
                MorphismKind::Ribbon => {
                    let r = rmap.expect("ribbon search needs R");
                    x.comul3(c_, "x", "x1", "x2", "x3")
                        .comul3(c_, "y", "y1", "y2", "y3")
                        .hom2(d, r, "x3", "y3", "s1", "s2")
                        .phi(d, "y2", "s1", "p", "y2p")
                        .phi(d, "x2", "s2", "q", "x2p")
                        .hom2(d, r, "y2p", "x2p", "t1", "t2")
                        .hom(d, g, "x1", "gx")
                        .hom(d, g, "y1", "gy")
                        .mul(a_, "gx", "q", "u")
                        .mul(a_, "u", "t1", "o1")
                        .mul(a_, "gy", "p", "v")
                        .mul(a_, "v", "t2", "o2")
                }
            };
            out.extend(l.sub(&r).to_dense());
        }
    }
    out
}

/// The affine system `M·vec(g) = b` collecting the linear equations, with
/// unknown `vec(g)[a·dim_C + c] = g[a, c]`.
pub fn linear_system(d: &EntwiningMap, kind: MorphismKind) -> (Matrix, Vector) {
    use rayon::prelude::*;
    let (da, dc) = (d.da(), d.dc());
    let zero = Matrix::zeros(da, dc);
    let base = linear_residual(d, &zero, kind);
    let columns: Vec<Vec<Rat>> = (0..da * dc)
        .into_par_iter()
        .map(|u| {
            let mut g = zero.clone();
            g.set(u / dc, u % dc, Rat::ONE);
            linear_residual(d, &g, kind).iter().zip(&base).map(|(x, y)| x - y).collect()
        })
        .collect();
    let b = Vector::new(base.iter().map(|x| -x).collect());
    (Matrix::from_columns(base.len(), columns), b)
}

/// Polynomial of degree at most two in the family parameters; keys are
/// sorted variable multisets.
#[derive(Clone, Debug, Default, PartialEq)]
struct Poly(BTreeMap<Vec<usize>, Rat>);

impl Poly {
    fn constant(c: Rat) -> Poly {
        let mut p = Poly::default();
        p.add_term(Vec::new(), c);
        p
    }

    fn add_term(&mut self, mut k: Vec<usize>, c: Rat) {
        if c.is_zero() {
            return;
        }
        k.sort_unstable();
        let e = self.0.entry(k.clone()).or_insert(Rat::ZERO);
        *e += &c;
        if e.is_zero() {
            self.0.remove(&k);
        }
    }

    fn add(&self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (k, v) in &o.0 {
            p.add_term(k.clone(), v.clone());
        }
        p
    }

    fn mul(&self, o: &Poly) -> Poly {
        let mut p = Poly::default();
        for (k1, v1) in &self.0 {
            for (k2, v2) in &o.0 {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                p.add_term(k, v1 * v2);
            }
        }
        p
    }

    fn degree(&self) -> usize {
        self.0.keys().map(|k| k.len()).max().unwrap_or(0)
    }

    fn vars(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.0.keys().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn coeff(&self, k: &[usize]) -> Rat {
        self.0.get(k).cloned().unwrap_or(Rat::ZERO)
    }

    /// `self / v` when every monomial contains `v`.
    fn divide(&self, v: usize) -> Option<Poly> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.0 {
            let pos = k.iter().position(|&x| x == v)?;
            let mut k = k.clone();
            k.remove(pos);
            out.insert(k, c.clone());
        }
        Some(Poly(out))
    }

    /// Replaces variable `v` by `s`.
    fn substitute(&self, v: usize, s: &Poly) -> Poly {
        let mut out = Poly::default();
        for (k, c) in &self.0 {
            let mut term = Poly::constant(c.clone());
            let mut rest = Vec::new();
            for &x in k {
                if x == v {
                    term = term.mul(s);
                } else {
                    rest.push(x);
                }
            }
            let mono = Poly(BTreeMap::from([(rest, Rat::ONE)]));
            out = out.add(&term.mul(&mono));
        }
        out
    }
}

/// Eliminates variables through linear equations, univariate quadratics
/// with rational roots, and quadratics with a variable factor `v·l`
/// (branching on `v = 0` and `l = 0`). Returns the points found (one value per parameter)
/// and whether every branch was fully resolved.
fn eliminate(polys: Vec<Poly>, assigned: BTreeMap<usize, Poly>, nvars: usize) -> (Vec<Vec<Rat>>, bool) {
    let polys: Vec<Poly> = polys.into_iter().filter(|p| !p.0.is_empty()).collect();
    if polys.iter().any(|p| p.degree() == 0) {
        return (Vec::new(), true);
    }
    if polys.is_empty() {
        // every unassigned variable is free
        let free: Vec<usize> = (0..nvars).filter(|v| !assigned.contains_key(v)).collect();
        if !free.is_empty() {
            return (Vec::new(), false);
        }
        let point = (0..nvars)
            .map(|v| resolve(&assigned, v))
            .collect::<Option<Vec<Rat>>>()
            .expect("all variables resolved");
        return (vec![point], true);
    }
    let bind = |v: usize, s: Poly| {
        let next: Vec<Poly> = polys.iter().map(|p| p.substitute(v, &s)).collect();
        let mut a2: BTreeMap<usize, Poly> = assigned.iter().map(|(k, p)| (*k, p.substitute(v, &s))).collect();
        a2.insert(v, s);
        eliminate(next, a2, nvars)
    };
    if let Some(p) = polys.iter().find(|p| p.degree() == 1) {
        let v = p.vars()[0];
        let c = p.coeff(&[v]);
        // v = −(p − c v)/c
        let mut rest = p.clone();
        rest.add_term(vec![v], -&c);
        let s = rest.mul(&Poly::constant(-&c.recip().expect("nonzero")));
        return bind(v, s);
    }
    if let Some(p) = polys.iter().find(|p| p.vars().len() == 1) {
        let v = p.vars()[0];
        let (a, b, c) = (p.coeff(&[v, v]), p.coeff(&[v]), p.coeff(&[]));
        let disc = &(&b * &b) - &(&(&Rat::from_int(4) * &a) * &c);
        let Some(sq) = disc.sqrt_exact() else {
            return (Vec::new(), false);
        };
        let two_a = &Rat::from_int(2) * &a;
        let inv = two_a.recip().expect("quadratic");
        let mut roots = vec![&(&(-&b) + &sq) * &inv];
        if !sq.is_zero() {
            roots.push(&(&(-&b) - &sq) * &inv);
        }
        let mut points = Vec::new();
        let mut done = true;
        for r in roots {
            let (ps, ok) = bind(v, Poly::constant(r));
            points.extend(ps);
            done &= ok;
        }
        return (points, done);
    }
    let factored = polys.iter().enumerate().find_map(|(i, p)| p.vars().into_iter().find_map(|v| p.divide(v).map(|l| (i, v, l))));
    if let Some((i, v, l)) = factored {
        let (mut points, mut done) = bind(v, Poly::constant(Rat::ZERO));
        let mut rest = polys.clone();
        rest[i] = l;
        let (more, ok) = eliminate(rest, assigned.clone(), nvars);
        for p in more {
            if !points.contains(&p) {
                points.push(p);
            }
        }
        done &= ok;
        return (points, done);
    }
    (Vec::new(), false)
}

fn resolve(assigned: &BTreeMap<usize, Poly>, v: usize) -> Option<Rat> {
    let p = assigned.get(&v)?;
    if p.degree() == 0 {
        Some(p.coeff(&[]))
    } else {
        None
    }
}

fn verify(d: &EntwiningMap, rmap: Option<&Matrix>, g: &Matrix, kind: MorphismKind) -> bool {
    match kind {
        MorphismKind::Pivotal => verify_pivotal(d, g).overall(),
        MorphismKind::Ribbon => {
            let q = DoubleQuantumGroup::new(Arc::new(d.clone()), rmap.expect("R").clone()).expect("shape");
            verify_ribbon(&q, g).overall()
        }
    }
}

fn find(d: &Arc<EntwiningMap>, rmap: Option<&Matrix>, kind: MorphismKind, max_params: usize) -> FinderResult {
    let (da, dc) = (d.da(), d.dc());
    let (m, b) = linear_system(d, kind);
    let to_matrix = |v: &Vector| Matrix::from_entries(da, dc, v.coords().to_vec());
    let family = match solve_affine(&m, &b) {
        Ok(f) => f,
        Err(_) => {
            return FinderResult {
                status: FinderStatus::Complete,
                solutions: Vec::new(),
                family: None,
                notes: "linear equations are inconsistent".into(),
            }
        }
    };
    let k = family.dimension();
    let candidate = |g: Matrix| MorphismCandidate { hom: HomCA { datum: d.clone(), map: g }, kind };
    if k == 0 {
        let g = to_matrix(&family.particular);
        let ok = verify(d, rmap, &g, kind);
        return FinderResult {
            status: FinderStatus::Complete,
            solutions: if ok { vec![candidate(g)] } else { Vec::new() },
            family: Some(family),
            notes: format!("linear equations have a unique solution, which {}", if ok { "verifies" } else { "fails verification" }),
        };
    }
    if k > max_params {
        return FinderResult {
            status: FinderStatus::Undecided,
            solutions: Vec::new(),
            family: Some(family),
            notes: format!("affine family of dimension {k} exceeds max_params {max_params}"),
        };
    }
    // quadratic residual along the family by exact finite differences
    let q = |t: &[Rat]| quadratic_residual(d, rmap, &to_matrix(&family.point(t)), kind);
    let zero_t = vec![Rat::ZERO; k];
    let unit_t = |i: usize, s: i64| {
        let mut t = zero_t.clone();
        t[i] = Rat::from_int(s);
        t
    };
    let q0 = q(&zero_t);
    let half = Rat::new(1, 2);
    let mut polys: Vec<Poly> = q0.iter().map(|c| Poly::constant(c.clone())).collect();
    let mut plus = Vec::with_capacity(k);
    for i in 0..k {
        let qp = q(&unit_t(i, 1));
        let qm = q(&unit_t(i, -1));
        for (r, p) in polys.iter_mut().enumerate() {
            p.add_term(vec![i], &(&qp[r] - &qm[r]) * &half);
            p.add_term(vec![i, i], &(&(&qp[r] + &qm[r]) - &(&Rat::from_int(2) * &q0[r])) * &half);
        }
        plus.push(qp);
    }
    for i in 0..k {
        for j in i + 1..k {
            let mut t = unit_t(i, 1);
            t[j] = Rat::ONE;
            let qij = q(&t);
            for (r, p) in polys.iter_mut().enumerate() {
                p.add_term(vec![i, j], &(&qij[r] - &plus[i][r]) - &(&plus[j][r] - &q0[r]));
            }
        }
    }
    let (points, resolved) = eliminate(polys, BTreeMap::new(), k);
    let mut solutions = Vec::new();
    let mut rejected = 0;
    for t in points {
        let g = to_matrix(&family.point(&t));
        if verify(d, rmap, &g, kind) {
            if !solutions.iter().any(|s: &MorphismCandidate| s.hom.map == g) {
                solutions.push(candidate(g));
            }
        } else {
            rejected += 1;
        }
    }
    let mut notes = format!("affine family of dimension {k}; {} verified solution(s)", solutions.len());
    if rejected > 0 {
        notes.push_str(&format!(", {rejected} point(s) failed invertibility"));
    }
    if !resolved {
        notes.push_str("; elimination left a positive-dimensional or irrational part");
    }
    FinderResult {
        status: if resolved { FinderStatus::Complete } else { FinderStatus::Parametric },
        solutions,
        family: Some(family),
        notes,
    }
}

/// Staged search for pivotal morphisms of a monoidal datum.
pub fn find_pivotal(d: &Arc<EntwiningMap>, max_params: usize) -> FinderResult {
    find(d, None, MorphismKind::Pivotal, max_params)
}

/// Staged search for ribbon morphisms of a double quantum group.
pub fn find_ribbon(q: &DoubleQuantumGroup, max_params: usize) -> FinderResult {
    find(q.datum(), Some(q.rmap()), MorphismKind::Ribbon, max_params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_substitution() {
        // t0² − t1 with t1 = 4 gives t0² − 4
        let mut p = Poly::default();
        p.add_term(vec![0, 0], Rat::ONE);
        p.add_term(vec![1], Rat::from_int(-1));
        let s = p.substitute(1, &Poly::constant(Rat::from_int(4)));
        assert_eq!(s.coeff(&[0, 0]), Rat::ONE);
        assert_eq!(s.coeff(&[]), Rat::from_int(-4));
        let (pts, ok) = eliminate(vec![s], BTreeMap::new(), 1);
        assert!(ok);
        assert_eq!(pts.len(), 2);
    }

    #[test]
    fn irrational_roots_are_parametric() {
        let mut p = Poly::constant(Rat::from_int(-2));
        p.add_term(vec![0, 0], Rat::ONE);
        let (pts, ok) = eliminate(vec![p], BTreeMap::new(), 1);
        assert!(pts.is_empty() && !ok);
    }
}
