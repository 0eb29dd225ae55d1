mod common;

use std::process::ExitCode;
use std::sync::Arc;

use common::{basis, h4, ints, long_pivotal, random_matrix, yd_pivotal_1, yd_pivotal_2};
use entwine_core::corpus;
use entwine_core::emodcat::{
    braiding, check_entwined_module, check_morphism, left_dual, std_module_ac, std_module_ca, tensor_maps,
    tensor_modules, transpose, unit_module,
};
use entwine_core::entwining::{antipode_entwining_check, check_datum, check_double_quantum_group, conv_inverse};
use entwine_core::hopfcore::{check_hopf, verify_copivot, verify_pivot};
use entwine_core::pivribbon::{
    find_pivotal, find_ribbon, linear_residual, nat_to_hom, pivotal_structure, separable_candidate, sigma, twist,
    verify_pivotal, verify_ribbon,
};
use entwine_core::smash::{
    extract_copivot, extract_pivot, module_transport_from_smash, module_transport_to_smash, smash_coproduct,
    smash_identity_checks, smash_product, tensor_smash_modules, transport_copivot, transport_pivot,
};
use entwine_core::{
    DualSide, Element, EntwinedModule, EntwiningMap, Functional, HomCA, Matrix, MorphismKind, Rat, Vector,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn monoidal_datums() -> Vec<(&'static str, Arc<EntwiningMap>)> {
    corpus::datums()
        .into_iter()
        .filter(|(n, _)| !n.starts_with("hopf_module"))
        .map(|(n, d)| (n, Arc::new(d)))
        .collect()
}

fn std_modules(d: &Arc<EntwiningMap>) -> Vec<EntwinedModule> {
    let (ca, ac) = (std_module_ca(d), std_module_ac(d));
    vec![unit_module(d), tensor_modules(&ca, &ac), tensor_modules(&ac, &ca), ca, ac]
}

fn yd_h4() -> Arc<EntwiningMap> {
    Arc::new(corpus::yd_datum(h4()))
}

fn c1() -> Outcome {
    let h = h4();
    ensure(check_hopf(&h).overall(), "check_hopf(H4)")?;
    let s2 = h.antipode().pow(2);
    ensure(s2.apply(&basis(4, 2)) == ints(&[0, 0, -1, 0]), "S²(x) = −x")?;
    ensure(h.antipode().pow(4).is_identity(), "S⁴ = id")?;
    ensure(!s2.is_identity(), "S² ≠ id")
}

fn c2() -> Outcome {
    let h = h4();
    let el = |xs: &[i64]| Element::new(h.clone(), Vector::from_ints(xs)).unwrap();
    let fl = |xs: &[i64]| Functional::new(h.clone(), Matrix::row_vector(&ints(xs))).unwrap();
    ensure(verify_pivot(&h, &el(&[0, 1, 0, 0])).overall(), "e is a pivot")?;
    let r = verify_pivot(&h, &el(&[1, 0, 0, 0]));
    let w = r.failed_ids().first().and_then(|id| r.item(id)).and_then(|i| i.witness.clone());
    ensure(!r.overall() && w.map(|w| w.tuple) == Some(vec![2]), "1 fails with witness x")?;
    ensure(verify_copivot(&h, &fl(&[1, -1, 0, 0])).overall(), "I − E is a copivot")?;
    ensure(!verify_copivot(&h, &Functional::counit(h.clone())).overall(), "ε is not a copivot")
}

fn c3() -> Outcome {
    let d = yd_h4();
    ensure(check_datum(&d).overall(), "E1–E6")?;
    for m in std_modules(&d) {
        ensure(check_entwined_module(&m).passed("E0"), "E0 on standard modules")?;
    }
    let q = corpus::yd_dqg(h4());
    let r = check_double_quantum_group(&q);
    ensure(r.overall(), format!("E7–E10\n{r}"))?;
    ensure(q.rmap_conv_inverse().is_some(), "R convolution invertible")
}

fn c4() -> Outcome {
    let d = yd_h4();
    let (ca, ac) = (std_module_ca(&d), std_module_ac(&d));
    for g in [yd_pivotal_1(), yd_pivotal_2()] {
        ensure(verify_pivotal(&d, &g).overall(), "𝔤 passes")?;
        let beta = pivotal_structure(&d, &g, &ca).map_err(|e| e.to_string())?;
        ensure(beta.is_invertible(), "β invertible")?;
        ensure(check_morphism(beta.source(), beta.target(), beta.map()).overall(), "β is a morphism")?;
        for (m, n) in [(&ca, &ac), (&ac, &ca), (&ca, &ca)] {
            let whole = pivotal_structure(&d, &g, &tensor_modules(m, n)).map_err(|e| e.to_string())?;
            ensure(whole.map() == &tensor_maps(&sigma(&g, m), &sigma(&g, n)), "β monoidal")?;
        }
    }
    ensure(!verify_pivotal(&d, &d.conv_unit()).overall(), "η∘ε fails")
}

fn c5() -> Outcome {
    let d = Arc::new(corpus::long_datum(h4(), h4()));
    let g = long_pivotal();
    ensure(verify_pivotal(&d, &g).overall(), "flip pivotal morphism passes")?;
    let h = h4();
    let c = separable_candidate(d, &corpus::h4_pivot(h.clone()), &corpus::h4_copivot(h), MorphismKind::Pivotal)
        .map_err(|e| e.to_string())?;
    ensure(c.map() == &g, "equals the separable candidate")
}

fn c6() -> Outcome {
    let dd = corpus::drinfeld_double(h4());
    ensure(dd.dim() == 16 && check_hopf(&dd).overall(), "D(H4)")?;
    for (name, d) in monoidal_datums() {
        let s = Arc::new(smash_product(&d).map_err(|e| e.to_string())?);
        let ms = std_modules(&d);
        for m in &ms {
            let u = module_transport_to_smash(m, s.clone()).map_err(|e| e.to_string())?;
            let back = module_transport_from_smash(&u, d.clone()).map_err(|e| e.to_string())?;
            ensure(back.action() == m.action() && back.coaction() == m.coaction(), format!("{name} round trip"))?;
        }
        for m in &ms[3..] {
            for n in &ms[3..] {
                let whole = module_transport_to_smash(&tensor_modules(m, n), s.clone()).unwrap();
                let parts = tensor_smash_modules(
                    &module_transport_to_smash(m, s.clone()).unwrap(),
                    &module_transport_to_smash(n, s.clone()).unwrap(),
                );
                ensure(whole == parts, format!("{name} tensor"))?;
            }
        }
    }
    Ok(())
}

fn c7() -> Outcome {
    let d = yd_h4();
    let s = Arc::new(corpus::drinfeld_double(h4()));
    let t = transport_pivot(&d, &s, &yd_pivotal_2()).map_err(|e| e.to_string())?;
    ensure(verify_pivot(&s, &t).overall(), "pivot of D(H4)")?;
    ensure(extract_pivot(&d, &t) == yd_pivotal_2(), "extraction")
}

fn c8() -> Outcome {
    let q = corpus::long_dqg_z2();
    let d = q.datum().clone();
    let g = corpus::long_z2_ribbon();
    ensure(verify_ribbon(&q, &g).overall(), "ribbon morphism passes")?;
    let (ca, ac) = (std_module_ca(&d), std_module_ac(&d));
    let tw = |m: &EntwinedModule| twist(&q, &g, m).map_err(|e| e.to_string());
    for (m, n) in [(&ca, &ac), (&ac, &ca), (&ca, &ca), (&ac, &ac)] {
        let lhs = tw(&tensor_modules(m, n))?;
        let rhs = braiding(n, m, &q).matmul(&braiding(m, n, &q)).matmul(&tensor_maps(tw(m)?.map(), tw(n)?.map()));
        ensure(lhs.map() == &rhs, "twist law")?;
    }
    for m in [&ca, &ac] {
        let t = transpose(&tw(m)?, DualSide::Left).map_err(|e| e.to_string())?;
        ensure(t.map() == tw(&left_dual(m).dual_module)?.map(), "self-duality")?;
    }
    Ok(())
}

fn c9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (name, d) in monoidal_datums() {
        let (da, dc) = (d.da(), d.dc());
        let unit = HomCA::unit(d.clone());
        let (ca, ac) = (std_module_ca(&d), std_module_ac(&d));
        for _ in 0..20 {
            let mut r = || HomCA::new(d.clone(), random_matrix(&mut rng, da, dc)).unwrap();
            let (f, g, h) = (r(), r(), r());
            ensure(unit.product(&f) == f && f.product(&unit) == f, format!("{name} unit laws"))?;
            ensure(f.product(&g).product(&h) == f.product(&g.product(&h)), format!("{name} associativity"))?;
            if let Ok(fi) = conv_inverse(&d, &f.map) {
                let fi = HomCA::new(d.clone(), fi).unwrap();
                ensure(fi.product(&f) == unit && f.product(&fi) == unit, format!("{name} inverse"))?;
            }
            let back = nat_to_hom(&d, &sigma(&f.map, &ca), MorphismKind::Ribbon).map_err(|e| e.to_string())?;
            ensure(back == f.map, format!("{name} Π∘Σ"))?;
            let back = nat_to_hom(&d, &sigma(&f.map, &ac), MorphismKind::Pivotal).map_err(|e| e.to_string())?;
            ensure(back == f.map, format!("{name} P∘Q"))?;
        }
        ensure(conv_inverse(&d, &d.conv_unit()).ok() == Some(d.conv_unit()), format!("{name} unit inverse"))?;
    }
    Ok(())
}

fn c10() -> Outcome {
    for (name, d) in monoidal_datums() {
        ensure(antipode_entwining_check(&d).overall(), format!("{name} antipode identities"))?;
        ensure(smash_identity_checks(&d).overall(), format!("{name} smash identities"))?;
    }
    let d = corpus::yd_datum(h4());
    let mut phi = d.phi().clone();
    phi.set(5, 3, phi.get(5, 3) + &Rat::ONE);
    let bad = d.with_phi(phi).unwrap();
    ensure(
        !antipode_entwining_check(&bad).overall() && !smash_identity_checks(&bad).overall(),
        "corrupted φ fails both",
    )
}

fn c11() -> Outcome {
    let d = yd_h4();
    let k = Arc::new(smash_coproduct(&d).map_err(|e| e.to_string())?);
    ensure(check_hopf(&k).overall(), "codouble is Hopf")?;
    let f = transport_copivot(&d, &k, &yd_pivotal_1()).map_err(|e| e.to_string())?;
    ensure(verify_copivot(&k, &f).overall(), "copivot passes")?;
    ensure(extract_copivot(&d, &f) == yd_pivotal_1(), "extraction")
}

fn c12() -> Outcome {
    for (name, d) in corpus::datums() {
        let d = Arc::new(d);
        for s in find_pivotal(&d, 4).solutions {
            ensure(verify_pivotal(&d, s.map()).overall(), format!("{name} pivotal solution"))?;
        }
    }
    for (name, q) in corpus::dqgs() {
        for s in find_ribbon(&q, 4).solutions {
            ensure(verify_ribbon(&q, s.map()).overall(), format!("{name} ribbon solution"))?;
        }
    }
    let zero = |v: Vec<Rat>| v.iter().all(Rat::is_zero);
    let long = Arc::new(corpus::long_datum(h4(), h4()));
    ensure(zero(linear_residual(&long, &long_pivotal(), MorphismKind::Pivotal)), "flip pivotal residual")?;
    for g in [yd_pivotal_1(), yd_pivotal_2()] {
        ensure(zero(linear_residual(&yd_h4(), &g, MorphismKind::Pivotal)), "YD pivotal residual")?;
    }
    let q = corpus::long_dqg_z2();
    ensure(zero(linear_residual(q.datum(), &corpus::long_z2_ribbon(), MorphismKind::Ribbon)), "ribbon residual")
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("H4 is a Hopf algebra with S² ≠ id, S⁴ = id", c1),
        ("pivot e and copivot I − E of H4", c2),
        ("Yetter–Drinfeld datum and double quantum group on H4", c3),
        ("pivotal morphisms of the Yetter–Drinfeld datum", c4),
        ("pivotal morphism of the flip datum from a separable pair", c5),
        ("Drinfeld double and module transport", c6),
        ("pivot transport into D(H4)", c7),
        ("ribbon morphism, twist law and self-duality", c8),
        ("convolution algebra and natural transformation round trips", c9),
        ("antipode identities agree with smash identities", c10),
        ("smash coproduct and copivot transport", c11),
        ("finder soundness and linear-stage membership", c12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
