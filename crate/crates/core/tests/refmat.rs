use std::collections::BTreeMap;

use spo_core::catalog::{self, ENTRIES};
use spo_core::classify::{is_uop, Class, Witness};
use spo_core::enumerate::{enumerate_models, DEFAULT_CAP};
use spo_core::refmat::entail::{
    entails, entails_structural, extend_partial_hom, substitution_trials,
};
use spo_core::refmat::formula::Formula;
use spo_core::refmat::{
    build_refmat, representation_check, two_state_example, RefMatrix, SublatticeMode, Truth,
};

fn matrix(p: &spo_core::InvolutivePoset) -> RefMatrix {
    build_refmat(p, SublatticeMode::All, usize::MAX).unwrap()
}

fn f(s: &str) -> Formula {
    Formula::parse(s).unwrap()
}

#[test]
fn catalog_matrices_satisfy_the_definition() {
    for e in ENTRIES {
        let p = e.build().into_poset();
        if !is_uop(&p).holds {
            continue;
        }
        let m = matrix(&p);
        assert_eq!(m.check_definition(), Ok(()), "{}", e.name);
        assert_eq!(m.duplicate(), None, "{}", e.name);
    }
}

#[test]
fn representation_on_tame_catalog_entries() {
    for e in ENTRIES.iter().filter(|e| e.tame == Some(true)) {
        let m = matrix(&e.build().into_poset());
        let r = representation_check(&m);
        assert!(r.tame, "{}", e.name);
        assert!(r.holds(), "{}: {r:?}", e.name);
        assert_eq!(r.identity_iso, Some(true), "{}", e.name);
    }
}

#[test]
fn representation_on_small_spo_models() {
    for n in 2..=6 {
        for l in enumerate_models(n, &[Class::Spo], DEFAULT_CAP).unwrap() {
            let r = representation_check(&matrix(l.poset()));
            assert!(r.holds() && r.identity_iso == Some(true), "{l:?}: {r:?}");
        }
    }
}

#[test]
fn b8_comparable_pair_without_precsim() {
    let l = catalog::b8();
    let m = matrix(l.poset());
    let r = representation_check(&m);
    assert!(!r.tame);
    assert!(r.forward.holds && r.duplicate.is_none());
    let Some(Witness::Pair(x, y)) = r.converse.witness else {
        panic!("expected a pair: {r:?}");
    };
    assert!(l.leq(x, y) && !m.precsim(x, y));
    assert_eq!((l.label(x), l.label(y)), ("x".to_string(), "y".to_string()));
}

#[test]
fn blocks_only_mode_agrees_on_catalog() {
    for e in ENTRIES {
        let p = e.build().into_poset();
        if !is_uop(&p).holds {
            continue;
        }
        let all = representation_check(&matrix(&p));
        let blocks = representation_check(
            &build_refmat(&p, SublatticeMode::BlocksOnly, usize::MAX).unwrap(),
        );
        assert_eq!(all.holds(), blocks.holds(), "{}", e.name);
        assert_eq!(all.identity_iso, blocks.identity_iso, "{}", e.name);
    }
}

#[test]
fn k3_midpoint_is_half_everywhere() {
    let l = catalog::k3();
    let m = matrix(l.poset());
    let half = l.find("1/2").unwrap();
    let vals: Vec<Truth> = m.props[half].values.iter().flatten().copied().collect();
    assert!(!vals.is_empty() && vals.iter().all(|&t| t == Truth::Half));
}

#[test]
fn two_state_example_entailment() {
    let m = two_state_example();
    let cap = 1 << 16;
    assert!(entails(&m, &[f("x")], &f("or(or(x,neg(x)),y)"), cap).unwrap());
    assert!(!entails(&m, &[f("x")], &f("or(or(x,neg(x)),or(u,v))"), cap).unwrap());
    let h = BTreeMap::from([
        ("x".to_string(), m.find("a").unwrap()),
        ("u".to_string(), m.find("a").unwrap()),
        ("v".to_string(), m.find("b").unwrap()),
    ]);
    assert_eq!(extend_partial_hom(&m, &h, &f("or(u,v)")), None);
    let clause = m.check_definition().unwrap_err().clause;
    assert_eq!(clause, "(v)");
}

#[test]
fn structural_entailment_survives_substitution_on_catalog_matrices() {
    for name in ["K3", "B4", "MO2", "B", "B8"] {
        let m = matrix(catalog::get(name).unwrap().poset());
        let t = substitution_trials(&m, 25, 17, 1 << 16).unwrap();
        assert_eq!(t.violations, 0, "{name}: {:?}", t.first_failure);
        assert!(t.premises_held > 0, "{name}");
    }
}

#[test]
fn structural_relation_requires_variables_in_premises() {
    let m = matrix(catalog::k3().poset());
    assert!(entails(&m, &[f("x")], &f("or(x,neg(x))"), 1 << 10).unwrap());
    assert!(!entails_structural(&m, &[f("x")], &f("or(x,y)"), 1 << 10).unwrap());
    assert!(entails_structural(&m, &[f("x"), f("y")], &f("x"), 1 << 10).unwrap());
}
