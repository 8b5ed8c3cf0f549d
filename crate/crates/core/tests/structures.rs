mod common;

use common::{bounded_orders, permutations};
use spo_core::catalog::{self, ENTRIES};
use spo_core::classify::{Class, ClassReport, Classifier};
use spo_core::constructs::moisil_interval;
use spo_core::enumerate::{all_models, enumerate_models, DEFAULT_CAP};
use spo_core::{census, io, InvolutiveLattice, InvolutivePoset, RawStructure};

#[test]
fn lattice_promotion_iff_total_partial_operations() {
    for n in 1..=6 {
        let perms = permutations(n);
        for leq in bounded_orders(n) {
            let inv = perms.iter().find(|s| {
                (0..n).all(|x| s[s[x]] == x)
                    && (0..n).all(|x| (0..n).all(|y| !leq[x][y] || leq[s[y]][s[x]]))
            });
            let Some(inv) = inv else { continue };
            let p = InvolutivePoset::validate(RawStructure {
                leq: leq.clone(),
                inv: inv.clone(),
                bottom: 0,
                top: n - 1,
                labels: None,
            })
            .unwrap();
            let total = p.elements().all(|x| {
                p.elements()
                    .all(|y| p.partial_join(x, y).is_some() && p.partial_meet(x, y).is_some())
            });
            assert_eq!(InvolutiveLattice::try_lattice(p).is_ok(), total);
        }
    }
}

#[test]
fn lattice_laws_exhaustive() {
    for n in 1..=7 {
        for l in all_models(n, DEFAULT_CAP).unwrap() {
            for x in l.elements() {
                assert_eq!(l.meet(x, x), x);
                assert_eq!(l.join(x, x), x);
                for y in l.elements() {
                    assert_eq!(l.join(x, y), l.join(y, x));
                    assert_eq!(l.meet(x, y), l.meet(y, x));
                    assert_eq!(l.join(x, l.meet(x, y)), x);
                    assert_eq!(l.meet(x, l.join(x, y)), x);
                    assert_eq!(l.inv(l.join(x, y)), l.meet(l.inv(x), l.inv(y)));
                    for z in l.elements() {
                        assert_eq!(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
                        assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
                    }
                }
            }
        }
    }
}

#[test]
fn catalog_round_trips_through_text() {
    for e in ENTRIES {
        let l = e.build();
        let text = io::emit(l.poset());
        let back = io::parse(&text).unwrap();
        assert_eq!(io::emit(&back), text, "{}", e.name);
        assert!(l
            .elements()
            .all(|x| l.elements().all(|y| l.leq(x, y) == back.leq(x, y))));
    }
}

#[test]
fn dot_counts() {
    let count = |dot: &str, pat: &dyn Fn(&str) -> bool| dot.lines().filter(|l| pat(l)).count();
    let b8 = io::to_dot(catalog::b8().poset(), "B8");
    assert_eq!(count(&b8, &|l| l.contains("[label=")), 8);
    assert_eq!(
        count(&b8, &|l| l.contains(" -- ") && !l.contains("dashed")),
        8
    );
    assert_eq!(count(&b8, &|l| l.contains("dashed")), 4);
    let k3 = io::to_dot(catalog::k3().poset(), "K3");
    assert_eq!(
        count(&k3, &|l| l.contains(" -- ") && !l.contains("dashed")),
        2
    );
    assert_eq!(count(&k3, &|l| l.contains("1 -- 1 [style=dashed")), 1);
    assert_eq!(b8, io::to_dot(catalog::b8().poset(), "B8"));
}

#[test]
fn parse_errors() {
    assert!(io::parse("ilat 2\ncovers\n0 1\nbottom 0\ntop 1\n").is_err());
    assert!(io::parse("ilat 3\ncovers\n0 1\n1 2\n2 1\ninv 2 1 0\nbottom 0\ntop 2\n").is_err());
}

#[test]
fn class_inclusions_on_catalog_and_models() {
    let mut structures: Vec<InvolutiveLattice> = ENTRIES.iter().map(|e| e.build()).collect();
    for n in 1..=8 {
        structures.extend(all_models(n, DEFAULT_CAP).unwrap());
    }
    for l in &structures {
        let r = ClassReport::of(l.poset());
        assert_eq!(r.inclusion_violation(), None, "{l:?}");
        let imp = |a: Class, b: Class| !r.holds(a) || r.holds(b);
        assert!(imp(Class::Spo, Class::Poml) && imp(Class::Oml, Class::Spo));
        assert!(imp(Class::Kl, Class::Mpkl) && imp(Class::Mpkl, Class::Pkl));
        assert!(!r.holds(Class::Omp) || (r.holds(Class::Pmp) && r.holds(Class::Op)));
    }
}

#[test]
fn aux_identity_on_spo_models() {
    for n in 2..=8 {
        for l in enumerate_models(n, &[Class::Spo], DEFAULT_CAP).unwrap() {
            for x in l.elements() {
                let xx = l.meet(x, l.inv(x));
                for y in l.elements().filter(|&y| l.leq(x, y)) {
                    let lhs = l.meet(y, l.join(l.inv(y), xx));
                    let rhs = l.join(l.meet(y, l.inv(y)), xx);
                    assert_eq!(lhs, rhs, "{l:?} x={x} y={y}");
                }
            }
        }
    }
}

#[test]
fn interval_algebra_size_and_sharp_elements() {
    let mut omls: Vec<InvolutiveLattice> = ["B2", "B4", "MO2"]
        .iter()
        .map(|n| catalog::get(n).unwrap())
        .collect();
    for n in 2..=8 {
        omls.extend(enumerate_models(n, &[Class::Oml], DEFAULT_CAP).unwrap());
    }
    for a in &omls {
        let (m, pairs) = moisil_interval(a).unwrap();
        let comparable = a
            .elements()
            .flat_map(|x| a.elements().map(move |y| (x, y)))
            .filter(|&(x, y)| a.leq(x, y))
            .count();
        assert_eq!(m.n(), comparable);
        for e in m.elements() {
            let (x, y) = pairs[e];
            assert_eq!(m.is_sharp(e), x == y, "{a:?}");
        }
        assert!(Classifier::for_lattice(&m).holds(Class::Spo));
    }
}

#[test]
fn small_census_is_clean() {
    let c = census::classify_up_to(6, DEFAULT_CAP).unwrap();
    assert_eq!(c.counterexamples(), 0, "{:?}", c.checks);
    let tsv = io::census_tsv(&c);
    assert_eq!(tsv.lines().count(), c.rows.len() + 1);
}
