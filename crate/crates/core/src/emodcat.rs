//! Entwined modules, their tensor products, duals and braidings.

use std::sync::Arc;

use crate::entwining::{DoubleQuantumGroup, EntwiningMap};
use crate::exactla::{matrix_of, Leg, Matrix, Rat, Tensor, Vector};
use crate::report::{compare, scan, AxiomItem, AxiomReport};
use crate::Error;

/// A right A-module and right C-comodule over an entwining datum.
#[derive(Clone, Debug, PartialEq)]
pub struct EntwinedModule {
    datum: Arc<EntwiningMap>,
    dim: usize,
    /// dim x dim·dim_A
    action: Matrix,
    /// dim·dim_C x dim
    coaction: Matrix,
}

impl EntwinedModule {
    /// Checks shapes only; the axioms are reported by [`check_entwined_module`].
    pub fn new(datum: Arc<EntwiningMap>, dim: usize, action: Matrix, coaction: Matrix) -> Result<Self, Error> {
        let (da, dc) = (datum.da(), datum.dc());
        if dim == 0 || action.rows() != dim || action.cols() != dim * da || coaction.rows() != dim * dc || coaction.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "module of dimension {dim} needs a {dim}x{} action and {}x{dim} coaction",
                dim * da,
                dim * dc
            )));
        }
        Ok(EntwinedModule { datum, dim, action, coaction })
    }

    pub fn datum(&self) -> &Arc<EntwiningMap> {
        &self.datum
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    /// Same comodule with a different action (used to build broken inputs).
    pub fn with_action(&self, action: Matrix) -> Result<Self, Error> {
        EntwinedModule::new(self.datum.clone(), self.dim, action, self.coaction.clone())
    }
}

impl Tensor {
    /// `m · a`.
    pub fn act(&self, m: &EntwinedModule, x: Leg, a: Leg, out: Leg) -> Tensor {
        self.apply(&[x, a], &m.action, &[(out, m.dim)])
    }

    /// `m ↦ m₀ ⊗ m₁`.
    pub fn coact(&self, m: &EntwinedModule, x: Leg, o0: Leg, o1: Leg) -> Tensor {
        self.apply(&[x], &m.coaction, &[(o0, m.dim), (o1, m.datum.dc())])
    }
}

/// Module, comodule and compatibility (E0) axioms.
pub fn check_entwined_module(m: &EntwinedModule) -> AxiomReport {
    let e = m.datum.as_ref();
    let (a_, c_) = (e.a().as_ref(), e.c().as_ref());
    let (d, da) = (m.dim, e.da());
    AxiomReport::new(vec![
        scan("action_assoc", &[d, da, da], |t| {
            let x = Tensor::basis(&[("m", d), ("a", da), ("b", da)], t);
            let l = x.act(m, "m", "a", "ma").act(m, "ma", "b", "o");
            let r = x.mul(a_, "a", "b", "ab").act(m, "m", "ab", "o");
            (l, r)
        }),
        scan("action_unit", &[d], |t| {
            let x = Tensor::basis(&[("m", d)], t);
            (x.unit(a_, "u").act(m, "m", "u", "o"), x.rename("m", "o"))
        }),
        scan("coaction_coassoc", &[d], |t| {
            let x = Tensor::basis(&[("m", d)], t).coact(m, "m", "m0", "m1");
            let l = x.coact(m, "m0", "n0", "n1").order(&["n0", "n1", "m1"]);
            let r = x.comul(c_, "m1", "n1", "n2").order(&["m0", "n1", "n2"]);
            (l, r)
        }),
        scan("coaction_counit", &[d], |t| {
            let x = Tensor::basis(&[("m", d)], t);
            (x.coact(m, "m", "m0", "m1").counit(c_, "m1"), x.rename("m", "m0"))
        }),
        scan("E0", &[d, da], |t| {
            let x = Tensor::basis(&[("m", d), ("a", da)], t);
            let l = x
                .coact(m, "m", "m0", "m1")
                .phi(e, "m1", "a", "ap", "cp")
                .act(m, "m0", "ap", "o")
                .order(&["o", "cp"]);
            let r = x.act(m, "m", "a", "u").coact(m, "u", "o", "cp");
            (l, r)
        }),
    ])
}

fn module_from(
    d: &Arc<EntwiningMap>,
    legs: &[(Leg, usize)],
    act: impl Fn(Tensor) -> Tensor + Sync,
    coact: impl Fn(Tensor) -> Tensor + Sync,
) -> EntwinedModule {
    let dims: Vec<usize> = legs.iter().map(|l| l.1).collect();
    let dim: usize = dims.iter().product();
    let mut adims = dims.clone();
    adims.push(d.da());
    let mut cdims = dims.clone();
    cdims.push(d.dc());
    let action = matrix_of(&adims, &dims, |t| {
        let mut ls = legs.to_vec();
        ls.push(("__a", d.da()));
        act(Tensor::basis(&ls, t))
    });
    let coaction = matrix_of(&dims, &cdims, |t| coact(Tensor::basis(legs, t)));
    EntwinedModule::new(d.clone(), dim, action, coaction).expect("consistent shapes")
}

/// `C ⊗ A` with `(c ⊗ a)·x = c ⊗ ax` and `c ⊗ a ↦ c₁ ⊗ a_φ ⊗ c₂^φ`.
pub fn std_module_ca(d: &Arc<EntwiningMap>) -> EntwinedModule {
    let (a_, c_) = (d.a().clone(), d.c().clone());
    let e = d.clone();
    module_from(
        d,
        &[("c", d.dc()), ("a", d.da())],
        |x| x.mul(&a_, "a", "__a", "o").order(&["c", "o"]),
        |x| x.comul(&c_, "c", "c1", "c2").phi(&e, "c2", "a", "ap", "cp").order(&["c1", "ap", "cp"]),
    )
}

/// `A ⊗ C` with `(a ⊗ c)·x = a x_φ ⊗ c^φ` and `a ⊗ c ↦ a ⊗ c₁ ⊗ c₂`.
pub fn std_module_ac(d: &Arc<EntwiningMap>) -> EntwinedModule {
    let (a_, c_) = (d.a().clone(), d.c().clone());
    let e = d.clone();
    module_from(
        d,
        &[("a", d.da()), ("c", d.dc())],
        |x| x.phi(&e, "c", "__a", "xp", "cp").mul(&a_, "a", "xp", "o").order(&["o", "cp"]),
        |x| x.comul(&c_, "c", "c1", "c2"),
    )
}

/// `M ⊗ C` for a right A-module `M` (`action` is dim x dim·dim_A), with
/// `(m ⊗ c)·a = m·a_φ ⊗ c^φ` and `m ⊗ c ↦ m ⊗ c₁ ⊗ c₂`.
pub fn extend_mc(d: &Arc<EntwiningMap>, dim: usize, action: &Matrix) -> Result<EntwinedModule, Error> {
    if dim == 0 || action.rows() != dim || action.cols() != dim * d.da() {
        return Err(Error::DimensionMismatch("A-module action has the wrong shape".into()));
    }
    let c_ = d.c().clone();
    let e = d.clone();
    Ok(module_from(
        d,
        &[("m", dim), ("c", d.dc())],
        |x| {
            x.phi(&e, "c", "__a", "ap", "cp")
                .apply(&["m", "ap"], action, &[("o", dim)])
                .order(&["o", "cp"])
        },
        |x| x.comul(&c_, "c", "c1", "c2"),
    ))
}

/// The tensor unit `k`, acted on through `ε_A` and coacted through `η_C`.
pub fn unit_module(d: &Arc<EntwiningMap>) -> EntwinedModule {
    let action = d.a().counit().clone();
    let coaction = d.c().unit_matrix();
    EntwinedModule::new(d.clone(), 1, action, coaction).expect("1-dimensional")
}

/// `M ⊗ N` with `(m ⊗ n)·a = m·a₁ ⊗ n·a₂` and coaction `m₀ ⊗ n₀ ⊗ m₁n₁`.
pub fn tensor_modules(m: &EntwinedModule, n: &EntwinedModule) -> EntwinedModule {
    assert!(Arc::ptr_eq(&m.datum, &n.datum) || m.datum == n.datum, "modules over different datums");
    let d = &m.datum;
    let (a_, c_) = (d.a().clone(), d.c().clone());
    module_from(
        d,
        &[("m", m.dim), ("n", n.dim)],
        |x| {
            x.comul(&a_, "__a", "a1", "a2")
                .act(m, "m", "a1", "om")
                .act(n, "n", "a2", "on")
        },
        |x| {
            x.coact(m, "m", "m0", "m1")
                .coact(n, "n", "n0", "n1")
                .mul(&c_, "m1", "n1", "c")
        },
    )
}

/// A-linearity and C-colinearity of `f: source -> target`.
pub fn check_morphism(source: &EntwinedModule, target: &EntwinedModule, map: &Matrix) -> AxiomReport {
    let (ds, dt) = (source.dim, target.dim);
    if map.rows() != dt || map.cols() != ds {
        let w = crate::report::Witness { tuple: Vec::new(), lhs: Vector::zeros(1), rhs: Vector::zeros(1) };
        return AxiomReport::new(vec![AxiomItem::fail("shape", w, Some(format!("map must be {dt}x{ds}")))]);
    }
    let e = source.datum.as_ref();
    AxiomReport::new(vec![
        scan("a_linear", &[ds, e.da()], |t| {
            let x = Tensor::basis(&[("m", ds), ("a", e.da())], t);
            let l = x.act(source, "m", "a", "u").apply(&["u"], map, &[("o", dt)]);
            let r = x.apply(&["m"], map, &[("f", dt)]).act(target, "f", "a", "o");
            (l, r)
        }),
        scan("c_colinear", &[ds], |t| {
            let x = Tensor::basis(&[("m", ds)], t);
            let l = x.apply(&["m"], map, &[("f", dt)]).coact(target, "f", "o", "c");
            let r = x.coact(source, "m", "m0", "c").apply(&["m0"], map, &[("o", dt)]).order(&["o", "c"]);
            (l, r)
        }),
    ])
}

/// A linear map between entwined modules that is A-linear and C-colinear.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMorphism {
    source: Arc<EntwinedModule>,
    target: Arc<EntwinedModule>,
    map: Matrix,
}

impl ModuleMorphism {
    /// Rejects maps that fail either square.
    pub fn new(source: Arc<EntwinedModule>, target: Arc<EntwinedModule>, map: Matrix) -> Result<Self, Error> {
        let r = check_morphism(&source, &target, &map);
        if !r.overall() {
            return Err(Error::NotVerified(format!("not a module morphism: {}", r.failed_ids().join(", "))));
        }
        Ok(ModuleMorphism { source, target, map })
    }

    pub fn identity(m: Arc<EntwinedModule>) -> Self {
        let map = Matrix::identity(m.dim);
        ModuleMorphism { source: m.clone(), target: m, map }
    }

    pub fn source(&self) -> &Arc<EntwinedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<EntwinedModule> {
        &self.target
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMorphism) -> ModuleMorphism {
        assert_eq!(other.target.dim, self.source.dim);
        ModuleMorphism { source: other.source.clone(), target: self.target.clone(), map: self.map.matmul(&other.map) }
    }

    pub fn is_invertible(&self) -> bool {
        self.map.is_square() && crate::exactla::invert(&self.map).is_ok()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualSide {
    Left,
    Right,
}

/// A dual object with its evaluation and coevaluation.
///
/// Left: `ev: M* ⊗ M -> k`, `coev: k -> M ⊗ M*`.
/// Right: `ev: M ⊗ *M -> k`, `coev: k -> *M ⊗ M`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualityData {
    pub dual_module: EntwinedModule,
    pub ev: Matrix,
    pub coev: Matrix,
    pub side: DualSide,
}

fn pairing(d: usize) -> (Matrix, Matrix) {
    let ev = Matrix::from_fn(1, d * d, |_, k| if k / d == k % d { Rat::ONE } else { Rat::ZERO });
    (ev.clone(), ev.transpose())
}

fn dual_module(m: &EntwinedModule, side: DualSide) -> EntwinedModule {
    let e = &m.datum;
    let (da, dc, d) = (e.da(), e.dc(), m.dim);
    let (sa, sc) = match side {
        DualSide::Left => (e.a().antipode_inv(), e.c().antipode()),
        DualSide::Right => (e.a().antipode(), e.c().antipode_inv()),
    };
    // (f·a)(m) = f(m·S'(a)), ρ(f) = f(m₀) ⊗ S''(m₁)
    let action = Matrix::from_fn(d, d * da, |j, col| {
        let (i, a) = (col / da, col % da);
        (0..da).map(|b| sa.get(b, a) * m.action.get(i, j * da + b)).sum()
    });
    let coaction = Matrix::from_fn(d * dc, d, |row, i| {
        let (j, cp) = (row / dc, row % dc);
        (0..dc).map(|c| m.coaction.get(i * dc + c, j) * sc.get(cp, c)).sum()
    });
    EntwinedModule::new(e.clone(), d, action, coaction).expect("same shapes")
}

/// `M*` with `(f·a)(m) = f(m·S⁻¹(a))` and `f ↦ f(m₀) ⊗ S(m₁)`.
pub fn left_dual(m: &EntwinedModule) -> DualityData {
    let (ev, coev) = pairing(m.dim);
    DualityData { dual_module: dual_module(m, DualSide::Left), ev, coev, side: DualSide::Left }
}

/// `*M` with `(f·a)(m) = f(m·S(a))` and `f ↦ f(m₀) ⊗ S⁻¹(m₁)`.
pub fn right_dual(m: &EntwinedModule) -> DualityData {
    let (ev, coev) = pairing(m.dim);
    DualityData { dual_module: dual_module(m, DualSide::Right), ev, coev, side: DualSide::Right }
}

pub fn dual(m: &EntwinedModule, side: DualSide) -> DualityData {
    match side {
        DualSide::Left => left_dual(m),
        DualSide::Right => right_dual(m),
    }
}

/// The dual module, ev and coev as module morphisms, and both snake
/// identities.
pub fn check_duality(m: &EntwinedModule, dd: &DualityData) -> AxiomReport {
    let dm = &dd.dual_module;
    let unit = unit_module(&m.datum);
    let (ev_src, coev_tgt) = match dd.side {
        DualSide::Left => (tensor_modules(dm, m), tensor_modules(m, dm)),
        DualSide::Right => (tensor_modules(m, dm), tensor_modules(dm, m)),
    };
    let d = m.dim;
    let ev = &dd.ev;
    let coev = &dd.coev;
    // (X ⊗ ev)(coev ⊗ X) and (ev ⊗ X')(X' ⊗ coev) on the ordered legs
    // `first`: pair the second coev leg with the input, else the input with
    // the first coev leg
    let snake = |first: bool| {
        matrix_of(&[d], &[d], |t| {
            let v = Tensor::basis(&[("v", d)], t);
            let c = v.apply(&[], coev, &[("p", d), ("q", d)]);
            if first {
                c.apply(&["q", "v"], ev, &[]).rename("p", "o")
            } else {
                c.apply(&["v", "p"], ev, &[]).rename("q", "o")
            }
        })
    };
    let mut parts = vec![
        ("dual.", check_entwined_module(dm)),
        ("ev.", check_morphism(&ev_src, &unit, ev)),
        ("coev.", check_morphism(&unit, &coev_tgt, coev)),
    ];
    let id = Matrix::identity(d);
    let (s1, s2) = match dd.side {
        DualSide::Left => (snake(true), snake(false)),
        DualSide::Right => (snake(false), snake(true)),
    };
    parts.push((
        "",
        AxiomReport::new(vec![
            compare("snake_object", Vector::new(s1.entries().to_vec()), Vector::new(id.entries().to_vec())),
            compare("snake_dual", Vector::new(s2.entries().to_vec()), Vector::new(id.entries().to_vec())),
        ]),
    ));
    AxiomReport::merge(parts)
}

/// The transpose of `f: M -> N` between the chosen duals, built from
/// evaluation and coevaluation, as a morphism `N^∨ -> M^∨`.
pub fn transpose(f: &ModuleMorphism, side: DualSide) -> Result<ModuleMorphism, Error> {
    let (ds, dt) = (f.source.dim, f.target.dim);
    let dm = dual(&f.source, side);
    let dn = dual(&f.target, side);
    let fm = &f.map;
    let map = matrix_of(&[dt], &[ds], |t| {
        let x = Tensor::basis(&[("nd", dt)], t);
        match side {
            // (ev_N ⊗ M*)(N* ⊗ f ⊗ M*)(N* ⊗ coev_M)
            DualSide::Left => x
                .apply(&[], &dm.coev, &[("m", ds), ("ms", ds)])
                .apply(&["m"], fm, &[("fm", dt)])
                .apply(&["nd", "fm"], &dn.ev, &[]),
            // (*M ⊗ ev_N)(*M ⊗ f ⊗ *N)(coev_M ⊗ *N)
            DualSide::Right => x
                .apply(&[], &dm.coev, &[("ms", ds), ("m", ds)])
                .apply(&["m"], fm, &[("fm", dt)])
                .apply(&["fm", "nd"], &dn.ev, &[]),
        }
    });
    ModuleMorphism::new(Arc::new(dn.dual_module), Arc::new(dm.dual_module), map)
}

/// The two squares relating `f` and its transpose through ev and coev.
pub fn transpose_squares(f: &ModuleMorphism, ft: &ModuleMorphism, side: DualSide) -> AxiomReport {
    let (ds, dt) = (f.source.dim, f.target.dim);
    let dm = dual(&f.source, side);
    let dn = dual(&f.target, side);
    let (fm, gm) = (&f.map, &ft.map);
    let ev_square = scan("ev_square", &[dt, ds], |t| match side {
        DualSide::Left => {
            let x = Tensor::basis(&[("n", dt), ("m", ds)], t);
            let l = x.apply(&["n"], gm, &[("g", ds)]).apply(&["g", "m"], &dm.ev, &[]);
            let r = x.apply(&["m"], fm, &[("f", dt)]).apply(&["n", "f"], &dn.ev, &[]);
            (l, r)
        }
        DualSide::Right => {
            let x = Tensor::basis(&[("n", dt), ("m", ds)], t);
            let l = x.apply(&["n"], gm, &[("g", ds)]).apply(&["m", "g"], &dm.ev, &[]);
            let r = x.apply(&["m"], fm, &[("f", dt)]).apply(&["f", "n"], &dn.ev, &[]);
            (l, r)
        }
    });
    let one = Tensor::scalar(Rat::ONE);
    let (l, r) = match side {
        DualSide::Left => (
            one.apply(&[], &dm.coev, &[("m", ds), ("x", ds)]).apply(&["m"], fm, &[("y", dt)]).order(&["y", "x"]),
            one.apply(&[], &dn.coev, &[("y", dt), ("n", dt)]).apply(&["n"], gm, &[("x", ds)]),
        ),
        DualSide::Right => (
            one.apply(&[], &dm.coev, &[("x", ds), ("m", ds)]).apply(&["m"], fm, &[("y", dt)]),
            one.apply(&[], &dn.coev, &[("n", dt), ("y", dt)]).apply(&["n"], gm, &[("x", ds)]).order(&["x", "y"]),
        ),
    };
    AxiomReport::new(vec![ev_square, compare("coev_square", l.to_vector(), r.to_vector())])
}

/// `**M`, presented on the basis of `M` through the canonical identification.
pub fn double_right_dual(m: &EntwinedModule) -> EntwinedModule {
    right_dual(&right_dual(m).dual_module).dual_module
}

/// `c(m ⊗ n) = (n₀ ⊗ m₀)·R(m₁ ⊗ n₁)`, the first leg of `R` acting on `n₀`
/// and the second on `m₀`.
pub fn braiding(m: &EntwinedModule, n: &EntwinedModule, q: &DoubleQuantumGroup) -> Matrix {
    let e = q.datum().as_ref();
    let r = q.rmap();
    matrix_of(&[m.dim, n.dim], &[n.dim, m.dim], |t| {
        Tensor::basis(&[("m", m.dim), ("n", n.dim)], t)
            .coact(m, "m", "m0", "m1")
            .coact(n, "n", "n0", "n1")
            .hom2(e, r, "m1", "n1", "r1", "r2")
            .act(n, "n0", "r1", "x")
            .act(m, "m0", "r2", "y")
    })
}

/// The braiding as a validated morphism `M ⊗ N -> N ⊗ M`.
pub fn braiding_morphism(m: &EntwinedModule, n: &EntwinedModule, q: &DoubleQuantumGroup) -> Result<ModuleMorphism, Error> {
    let map = braiding(m, n, q);
    ModuleMorphism::new(Arc::new(tensor_modules(m, n)), Arc::new(tensor_modules(n, m)), map)
}

/// `f ⊗ g` as a matrix on the left-major tensor basis.
pub fn tensor_maps(f: &Matrix, g: &Matrix) -> Matrix {
    crate::exactla::kron(f, g)
}
