mod common;

use std::sync::Arc;

use common::{basis, h4, kz, long_pivotal, yd_pivotal_1, yd_pivotal_2};
use entwine_core::corpus;
use entwine_core::emodcat::{check_entwined_module, std_module_ac, std_module_ca, tensor_modules, unit_module};
use entwine_core::entwining::{antipode_entwining_check, check_entwining};
use entwine_core::exactla::kron;
use entwine_core::hopfcore::{
    check_algebra, check_hopf, coquasitri_check, dual_hopf, flip, quasitri_check, verify_copivot,
    verify_coribbon_form, verify_pivot, verify_ribbon_element,
};
use entwine_core::pivribbon::find_ribbon;
use entwine_core::smash::*;
use entwine_core::{
    DualTwist, Element, EntwinedModule, EntwiningMap, Error, HopfAlgebraData, LawKind, Matrix, Rat,
};

fn monoidal_datums() -> Vec<(&'static str, Arc<EntwiningMap>)> {
    corpus::datums()
        .into_iter()
        .filter(|(n, _)| !n.starts_with("hopf_module"))
        .map(|(n, d)| (n, Arc::new(d)))
        .collect()
}

fn yd_h4() -> Arc<EntwiningMap> {
    Arc::new(corpus::yd_datum(h4()))
}

fn long_h4() -> Arc<EntwiningMap> {
    Arc::new(corpus::long_datum(h4(), h4()))
}

fn modules(d: &Arc<EntwiningMap>) -> Vec<EntwinedModule> {
    let (ca, ac) = (std_module_ca(d), std_module_ac(d));
    vec![unit_module(d), tensor_modules(&ca, &ac), ca, ac]
}

fn assert_same_module(x: &EntwinedModule, y: &EntwinedModule) {
    assert_eq!(x.dim(), y.dim());
    assert_eq!(x.action(), y.action());
    assert_eq!(x.coaction(), y.coaction());
}

#[test]
fn laws_round_trip_on_every_datum() {
    for (name, d) in corpus::datums() {
        for kind in [LawKind::Algebra, LawKind::Coalgebra] {
            let l = entwining_to_distlaw(&d, kind);
            assert!(check_distributive_law(&l).overall(), "{name} {kind:?}");
            let other = match kind {
                LawKind::Algebra => d.c().clone(),
                LawKind::Coalgebra => d.a().clone(),
            };
            let back = distlaw_to_entwining(&l, other).unwrap();
            assert_eq!(back.phi(), d.phi(), "{name} {kind:?}");
        }
    }
}

#[test]
fn flip_entwining_gives_flip_laws() {
    let d = corpus::long_datum(h4(), kz(3));
    let (da, dc) = (d.da(), d.dc());
    assert_eq!(entwining_to_algebra_law(&d).map, flip(da, dc));
    assert_eq!(entwining_to_coalgebra_law(&d).map, flip(da, dc));
}

#[test]
fn corrupted_law_fails_its_squares() {
    let d = corpus::yd_datum(h4());
    let mut l = entwining_to_algebra_law(&d);
    l.map = Matrix::zeros(16, 16);
    let r = check_distributive_law(&l);
    assert!(!r.passed("unit_left"));
    assert!(!r.passed("unit_right"));
}

/// `Φ(h ⊗ a) = h₁·a ⊗ h₂` for the adjoint action `h·a = h₁ a S(h₂)` of
/// H4 on itself, summed from structure constants.
fn adjoint_law(h: &HopfAlgebraData) -> Matrix {
    let n = h.dim();
    let cm = h.comult();
    let s = h.antipode();
    Matrix::from_fn(n * n, n * n, |row, col| {
        let (ao, ho) = (row / n, row % n);
        let (hh, a) = (col / n, col % n);
        let mut acc = Rat::ZERO;
        for x in 0..n {
            let w = cm.get(x * n + ho, hh);
            if w.is_zero() {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    let w2 = cm.get(p * n + q, x);
                    if w2.is_zero() {
                        continue;
                    }
                    let pa = h.mul(&h.basis_vec(p), &h.basis_vec(a));
                    let adj = h.mul(&pa, &s.column(q));
                    acc += &(w * w2) * &adj[ao];
                }
            }
        }
        acc
    })
}

#[test]
fn adjoint_action_law_converts_to_dual_entwining() {
    let h = h4();
    let n = h.dim();
    let phi_law = adjoint_law(&h);
    let l = DistributiveLaw::new(LawKind::Algebra, h.clone(), h.clone(), phi_law.clone()).unwrap();
    assert!(check_distributive_law(&l).overall());
    let e = algebra_law_to_dual_entwining(&l).unwrap();
    assert!(check_entwining(&e).overall());
    // φ(γ ⊗ k) = Σ γ(k₁·e_i) k₂ ⊗ e^i, coefficient of k' ⊗ e^i at γ ⊗ k
    let expected = Matrix::from_fn(n * n, n * n, |row, col| {
        let (kp, i) = (row / n, row % n);
        let (g, k) = (col / n, col % n);
        phi_law.get(g * n + kp, k * n + i).clone()
    });
    assert_eq!(e.phi(), &expected);
    assert_eq!(dual_entwining_to_algebra_law(&e, h.clone()).unwrap().map, phi_law);
}

#[test]
fn smash_products_are_hopf_algebras() {
    for (name, d) in monoidal_datums() {
        let s = smash_product(&d).unwrap();
        assert_eq!(s.dim(), d.da() * d.dc());
        let r = check_hopf(&s);
        assert!(r.overall(), "{name}\n{r}");
    }
}

#[test]
fn drinfeld_doubles() {
    let d = corpus::drinfeld_double(h4());
    assert_eq!(d.dim(), 16);
    assert_eq!(d.mult(), smash_product(&yd_h4()).unwrap().mult());
    let z2 = corpus::drinfeld_double(kz(2));
    let n = z2.dim();
    let fl = flip(n, n);
    assert_eq!(&z2.mult().matmul(&fl), z2.mult());
    assert_eq!(&fl.matmul(z2.comult()), z2.comult());
    let k = corpus::drinfeld_double(kz(1));
    assert_eq!(k.dim(), 1);
    assert!(check_hopf(&k).overall());
}

#[test]
fn smash_over_trivial_coalgebra_is_the_algebra() {
    let a = h4();
    let k = Arc::new(HopfAlgebraData::trivial());
    let d = EntwiningMap::new(k, a.clone(), Matrix::identity(4)).unwrap();
    let s = smash_product(&d).unwrap();
    assert_eq!(s.mult(), a.mult());
    assert_eq!(s.comult(), a.comult());
    assert_eq!(s.antipode(), a.antipode());
}

#[test]
fn flip_smash_product_is_a_tensor_product() {
    let d = long_h4();
    let (a, c) = (d.a(), d.c());
    let s = smash_product(&d).unwrap();
    assert_eq!(s.antipode(), &kron(&c.antipode_inv().transpose(), a.antipode()));
    // (p ⊗ a)(q ⊗ b) = q ∗ p ⊗ ab
    let cstar = dual_hopf(c, DualTwist::Plain).unwrap();
    let n = 4;
    for (p, x, q, y) in [(0, 1, 2, 3), (1, 2, 3, 1), (2, 2, 1, 3), (3, 0, 3, 2)] {
        let lhs = s.mul(&s.basis_vec(p * n + x), &s.basis_vec(q * n + y));
        let qp = cstar.mul(&cstar.basis_vec(q), &cstar.basis_vec(p));
        let xy = a.mul(&a.basis_vec(x), &a.basis_vec(y));
        let rhs: Vec<Rat> = qp.iter().flat_map(|u| xy.iter().map(move |v| u * v)).collect();
        assert_eq!(lhs, rhs);
    }
}

/// `(δ ⊗ a)(γ ⊗ b) = Σ γ(· a₂) ∗ δ ⊗ a₁ b` for the Hopf-module entwining.
fn hopf_module_product(h: &HopfAlgebraData, d: usize, a: usize, g: usize, b: usize) -> Vec<Rat> {
    let n = h.dim();
    let cm = h.comult();
    let mut out = vec![Rat::ZERO; n * n];
    for a1 in 0..n {
        for a2 in 0..n {
            let w = cm.get(a1 * n + a2, a);
            if w.is_zero() {
                continue;
            }
            let ab = h.mul(&h.basis_vec(a1), &h.basis_vec(b));
            for c in 0..n {
                let mut f = Rat::ZERO;
                for c1 in 0..n {
                    let w2 = cm.get(c1 * n + d, c);
                    if !w2.is_zero() {
                        f += w2 * &h.mul(&h.basis_vec(c1), &h.basis_vec(a2))[g];
                    }
                }
                for o in 0..n {
                    out[c * n + o] += &(w * &f) * &ab[o];
                }
            }
        }
    }
    out
}

#[test]
fn hopf_module_smash_algebra() {
    for h in [h4(), kz(2)] {
        let n = h.dim();
        let d = corpus::hopf_module_datum(h.clone());
        let alg = smash_algebra(&d);
        assert!(check_algebra(&alg).iter().all(|i| i.passed));
        for p in 0..n {
            for a in 0..n {
                for q in 0..n {
                    for b in 0..n {
                        let got = alg.mul(&basis(n * n, p * n + a), &basis(n * n, q * n + b));
                        assert_eq!(got, hopf_module_product(&h, p, a, q, b));
                    }
                }
            }
        }
    }
}

#[test]
fn smash_coproducts() {
    for (name, d) in monoidal_datums() {
        let k = smash_coproduct(&d).unwrap();
        let r = check_hopf(&k);
        assert!(r.overall(), "{name}\n{r}");
    }
}

#[test]
fn flip_smash_coproduct_is_the_tensor_hopf_algebra() {
    let d = long_h4();
    let (a, c) = (d.a(), d.c());
    let k = smash_coproduct(&d).unwrap();
    let ad = dual_hopf(a, DualTwist::Cop).unwrap();
    let (na, nc) = (a.dim(), c.dim());
    let n = na * nc;
    let mult = Matrix::from_fn(n, n * n, |row, col| {
        let (go, co) = (row / nc, row % nc);
        let (x, y) = (col / n, col % n);
        let (g, cc, h, dd) = (x / nc, x % nc, y / nc, y % nc);
        ad.mult().get(go, g * na + h) * c.mult().get(co, cc * nc + dd)
    });
    assert_eq!(k.mult(), &mult);
    let comult = Matrix::from_fn(n * n, n, |row, col| {
        let (x, y) = (row / n, row % n);
        let (g1, c1, g2, c2) = (x / nc, x % nc, y / nc, y % nc);
        let (g, cc) = (col / nc, col % nc);
        ad.comult().get(g1 * na + g2, g) * c.comult().get(c1 * nc + c2, cc)
    });
    assert_eq!(k.comult(), &comult);
    assert_eq!(k.antipode(), &kron(ad.antipode(), c.antipode()));
}

#[test]
fn smash_coproduct_over_trivial_algebra_is_the_coalgebra() {
    let c = h4();
    let k = Arc::new(HopfAlgebraData::trivial());
    let d = EntwiningMap::new(c.clone(), k, Matrix::identity(4)).unwrap();
    let s = smash_coproduct(&d).unwrap();
    assert_eq!(s.mult(), c.mult());
    assert_eq!(s.comult(), c.comult());
    assert_eq!(s.antipode(), c.antipode());
}

#[test]
fn module_transport_round_trips() {
    for (name, d) in monoidal_datums() {
        let s = Arc::new(smash_product(&d).unwrap());
        for m in modules(&d) {
            let u = module_transport_to_smash(&m, s.clone()).unwrap();
            assert!(check_smash_module(&u).overall(), "{name}");
            let back = module_transport_from_smash(&u, d.clone()).unwrap();
            assert!(check_entwined_module(&back).overall(), "{name}");
            assert_same_module(&back, &m);
            assert_eq!(module_transport_to_smash(&back, s.clone()).unwrap(), u);
        }
    }
}

#[test]
fn module_transport_is_monoidal() {
    for (name, d) in monoidal_datums() {
        let s = Arc::new(smash_product(&d).unwrap());
        let ms = modules(&d);
        for m in &ms[2..] {
            for n in &ms[2..] {
                let whole = module_transport_to_smash(&tensor_modules(m, n), s.clone()).unwrap();
                let parts = tensor_smash_modules(
                    &module_transport_to_smash(m, s.clone()).unwrap(),
                    &module_transport_to_smash(n, s.clone()).unwrap(),
                );
                assert_eq!(whole, parts, "{name}");
            }
        }
    }
}

#[test]
fn double_module_from_standard_module() {
    let d = yd_h4();
    let s = Arc::new(corpus::drinfeld_double(h4()));
    let u = module_transport_to_smash(&std_module_ca(&d), s).unwrap();
    assert_eq!(u.dim, 16);
    assert!(check_smash_module(&u).overall());
    let mut bad = u.clone();
    bad.action = Matrix::zeros(16, 256);
    assert!(!check_smash_module(&bad).passed("action_unit"));
}

#[test]
fn module_transport_over_trivial_coalgebra() {
    let a = kz(3);
    let k = Arc::new(HopfAlgebraData::trivial());
    let d = Arc::new(EntwiningMap::new(k, a.clone(), Matrix::identity(3)).unwrap());
    let s = Arc::new(smash_product(&d).unwrap());
    let m = std_module_ac(&d);
    let u = module_transport_to_smash(&m, s).unwrap();
    assert_eq!(&u.action, m.action());
}

#[test]
fn pivot_transport() {
    for (d, gs) in [(yd_h4(), vec![yd_pivotal_1(), yd_pivotal_2()]), (long_h4(), vec![long_pivotal()])] {
        let s = Arc::new(smash_product(&d).unwrap());
        for g in gs {
            let t = transport_pivot(&d, &s, &g).unwrap();
            let r = verify_pivot(&s, &t);
            assert!(r.overall(), "{r}");
            assert_eq!(extract_pivot(&d, &t), g);
        }
    }
}

#[test]
fn pivot_transport_over_trivial_coalgebra() {
    let a = h4();
    let k = Arc::new(HopfAlgebraData::trivial());
    let d = EntwiningMap::new(k, a.clone(), Matrix::identity(4)).unwrap();
    let s = Arc::new(smash_product(&d).unwrap());
    let kappa = corpus::h4_pivot(a);
    let g = Matrix::column_vector(kappa.coords.coords());
    let t = transport_pivot(&d, &s, &g).unwrap();
    assert_eq!(t.coords, kappa.coords);
}

#[test]
fn ribbon_transport() {
    for (name, q) in corpus::dqgs() {
        let d = q.datum().clone();
        let s = Arc::new(smash_product(&d).unwrap());
        let rm = transport_rmatrix(&q);
        assert!(quasitri_check(&s, &rm).overall(), "{name}");
        for sol in find_ribbon(&q, 4).solutions {
            let g = sol.map();
            let (r, v) = transport_ribbon(&q, &s, g).unwrap();
            let rep = verify_ribbon_element(&s, &r, &v);
            assert!(rep.overall(), "{name}\n{rep}");
            assert_eq!(&extract_ribbon(&d, &v), g);
        }
    }
    let q = corpus::long_dqg_z2();
    let s = Arc::new(smash_product(q.datum()).unwrap());
    let (_, v) = transport_ribbon(&q, &s, &corpus::long_z2_ribbon()).unwrap();
    assert_eq!(extract_ribbon(q.datum(), &v), corpus::long_z2_ribbon());
}

#[test]
fn copivot_transport() {
    for (d, gs) in [(yd_h4(), vec![yd_pivotal_1(), yd_pivotal_2()]), (long_h4(), vec![long_pivotal()])] {
        let k = Arc::new(smash_coproduct(&d).unwrap());
        for g in gs {
            let f = transport_copivot(&d, &k, &g).unwrap();
            let r = verify_copivot(&k, &f);
            assert!(r.overall(), "{r}");
            assert_eq!(extract_copivot(&d, &f), g);
        }
    }
}

#[test]
fn copivot_transport_over_trivial_algebra() {
    let c = h4();
    let k = Arc::new(HopfAlgebraData::trivial());
    let d = EntwiningMap::new(c.clone(), k, Matrix::identity(4)).unwrap();
    let s = Arc::new(smash_coproduct(&d).unwrap());
    let rho = corpus::h4_copivot(c);
    let g = rho.coords.clone();
    let f = transport_copivot(&d, &s, &g).unwrap();
    assert_eq!(f.coords, rho.coords);
}

#[test]
fn coribbon_transport() {
    for (name, q) in corpus::dqgs() {
        let d = q.datum().clone();
        let k = Arc::new(smash_coproduct(&d).unwrap());
        assert!(coquasitri_check(&k, &transport_coform(&q, &k)).overall(), "{name}");
        for sol in find_ribbon(&q, 4).solutions {
            let g = sol.map();
            let (form, f) = transport_coribbon(&q, &k, g).unwrap();
            let rep = verify_coribbon_form(&k, &form, &f);
            assert!(rep.overall(), "{name}\n{rep}");
            assert_eq!(&extract_coribbon(&d, &f), g);
        }
    }
}

#[test]
fn transports_reject_unverified_morphisms() {
    let d = yd_h4();
    let s = Arc::new(smash_product(&d).unwrap());
    let k = Arc::new(smash_coproduct(&d).unwrap());
    let eps = d.conv_unit();
    assert!(matches!(transport_pivot(&d, &s, &eps), Err(Error::NotVerified(_))));
    assert!(matches!(transport_copivot(&d, &k, &eps), Err(Error::NotVerified(_))));
    let q = corpus::yd_dqg(h4());
    assert!(matches!(transport_ribbon(&q, &s, &eps), Err(Error::NotVerified(_))));
    assert!(matches!(transport_coribbon(&q, &k, &eps), Err(Error::NotVerified(_))));
    let small = Arc::new(smash_product(&corpus::yd_datum(kz(2))).unwrap());
    assert!(matches!(transport_pivot(&d, &small, &yd_pivotal_2()), Err(Error::DimensionMismatch(_))));
}

#[test]
fn pivot_elements_match_hom_encoding() {
    let d = yd_h4();
    let g = yd_pivotal_2();
    let t = hom_to_smash_element(&d, &g);
    assert_eq!(smash_element_to_hom(&d, &t), g);
    // Σ e^i ⊗ 𝔤₂(e_i) = e^1 ⊗ e + e^e ⊗ e
    let s = Arc::new(smash_product(&d).unwrap());
    let mut expected = vec![Rat::ZERO; 16];
    expected[1] = Rat::ONE;
    expected[4 + 1] = Rat::ONE;
    assert_eq!(Element::new(s, t).unwrap().coords.coords(), &expected[..]);
}

#[test]
fn smash_identities_agree_with_antipode_identities() {
    for (name, d) in monoidal_datums() {
        let r = smash_identity_checks(&d);
        assert!(r.overall(), "{name}\n{r}");
    }
    let d = corpus::yd_datum(h4());
    let n = d.phi().rows();
    let mut checked = 0;
    for (i, j) in [(0, 0), (5, 3), (17, 40), (63, 63)] {
        let mut phi = d.phi().clone();
        phi.set(i % n, j % n, phi.get(i % n, j % n) + &Rat::ONE);
        let bad = d.with_phi(phi).unwrap();
        let direct = antipode_entwining_check(&bad);
        let merged = smash_identity_checks(&bad);
        for id in direct.failed_ids() {
            assert!(!merged.passed(id));
        }
        if !direct.overall() {
            let smash_only = ["smash_antipode_antimultiplicative", "cosmash_antipode_anticomultiplicative"];
            assert!(smash_only.iter().all(|id| !merged.passed(id)));
            assert!(!merged.overall());
            checked += 1;
        }
    }
    assert!(checked > 0);
}
